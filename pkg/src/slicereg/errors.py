"""Exception types shared across the library."""


class SliceError(Exception):
    """Base class for all library errors."""

    code = "error"


class NegativePowerAtZero(SliceError):
    code = "negative_power_at_zero"


class RealPointNotExtendable(SliceError):
    code = "real_point_not_extendable"


class RealBasePoint(SliceError):
    code = "real_base_point"


class NotAUnit(SliceError):
    code = "not_a_unit"


class NotRegular(SliceError):
    code = "not_regular"


class AllCoefficientsZero(SliceError):
    code = "all_coefficients_zero"


class StepTooLarge(SliceError):
    code = "step_too_large"


class IllConditioned(SliceError):
    code = "ill_conditioned"


class TooFewSamples(SliceError):
    code = "too_few_samples"


class ExpressionSyntaxError(SliceError):
    code = "syntax_error"

    def __init__(self, message, offset):
        super().__init__(message)
        self.offset = offset


class UnknownIdentifier(SliceError):
    code = "unknown_identifier"
