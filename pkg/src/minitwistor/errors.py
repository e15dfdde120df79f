"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`MinitwistorError`.  The CLI maps :class:`InputError` subclasses to
exit status 2 and :class:`VerificationError` subclasses to exit status 1.
"""


class MinitwistorError(Exception):
    pass


class InputError(MinitwistorError, ValueError):
    """Bad input or a violated precondition."""


class VerificationError(MinitwistorError):
    """A certificate that should hold did not."""


class ZeroForm(InputError):
    pass


class DegenerateElimination(InputError):
    pass


class NotDistinct(InputError):
    pass


class SingularTransform(InputError):
    pass


class NonRealPoint(InputError):
    pass


class InvalidFamily(InputError):
    pass


class StarFails(InputError):
    pass


class NoAdmissibleTransform(VerificationError):
    pass


class Indeterminate(InputError):
    pass


class NotDoubleCover(InputError):
    pass


class MismatchedA(InputError):
    pass


class NonRealInput(InputError):
    pass


class InvalidConic(InputError):
    pass


class ConicInsideSurface(InputError):
    pass


class DegeneratePlane(InputError):
    pass


class OrbitTangentPlane(InputError):
    pass


class SymmetricConic(InputError):
    pass


class MeetsLineAtInfinity(InputError):
    pass


class NotAnticanonicalShape(VerificationError):
    pass


class CurvesCoincide(InputError):
    pass


class NotTouching(InputError):
    pass


class NoNode(InputError):
    pass


class NoConvergence(VerificationError):
    def __init__(self, message, seeds_tried=()):
        super().__init__(message)
        self.seeds_tried = list(seeds_tried)
