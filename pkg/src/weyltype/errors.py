"""Exception hierarchy shared by every module of the package."""


class WeylError(Exception):
    """Base class for all errors raised by weyltype."""


# number field
class NotMonic(WeylError):
    pass


class RationalRootFound(WeylError):
    """The minimal polynomial has a rational root, so the extension is reducible."""

    def __init__(self, root):
        super().__init__(f"minimal polynomial has the rational root {root}")
        self.root = root


class FieldMismatch(WeylError):
    pass


# subgroups of F^n
class ZeroGenerators(WeylError):
    pass


class DegenerateGroup(WeylError):
    """The generators do not contain an F-basis of the ambient space."""


class SingularBlock(WeylError):
    pass


class ShapeMismatch(WeylError):
    pass


# the algebra
class SignatureMismatch(WeylError):
    pass


class AxisOutOfRange(WeylError):
    pass


class NotABasis(WeylError):
    pass


class ZeroElement(WeylError):
    pass


class ScalarInput(WeylError):
    pass


# isomorphisms
class TupleMismatch(WeylError):
    pass


class WitnessInvalid(WeylError):
    pass


class GeneratorCheckFailed(WeylError):
    """An identity that must hold on generators of the isomorphism was violated."""


class InvariantViolation(WeylError):
    """An internal consistency check failed; indicates a bug, not bad input."""


# text input
class ParseError(WeylError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownAxis(ParseError):
    pass


class AlphaNotInGamma(ParseError):
    pass
