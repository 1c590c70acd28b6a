class CotorsionLabException(Exception):
    pass


class PresentationError(CotorsionLabException):
    pass


class ArgumentMismatchError(CotorsionLabException):
    pass


class ValidationError(CotorsionLabException):
    pass


class DecompositionInconclusive(CotorsionLabException):

    def __init__(self, end_dim, cap):
        super().__init__("Fitting splitting failed and End has dimension {} above the exhaustion cap {}"
                         .format(end_dim, cap))
        self.end_dim = end_dim
        self.cap = cap


class EnumerationRefused(CotorsionLabException):

    def __init__(self, dim, cap):
        super().__init__("Refusing to enumerate submodules of a module of dimension {} (cap {})".format(dim, cap))
        self.dim = dim
        self.cap = cap


# Parsing
class ExpressionError(CotorsionLabException):
    pass


class FixtureValidationError(CotorsionLabException):
    pass


class InputFileError(CotorsionLabException):
    pass


# Verdicts
class CriterionDisagreement(CotorsionLabException):
    pass


class ReplayMismatch(CotorsionLabException):
    pass


class ApproximationUnavailable(CotorsionLabException):
    pass
