"""Exception hierarchy shared by every module."""


class ReflectoryError(Exception):
    pass


class DegenerateSpan(ReflectoryError):
    """Spanning vectors are zero or linearly dependent."""


class RankError(ReflectoryError):
    pass


class UnitarityError(ReflectoryError):
    pass


class ProjectorError(ReflectoryError):
    """Matrix is not (and cannot be repaired into) a Hermitian projector."""


class PoleError(ReflectoryError):
    pass


class AxisError(ReflectoryError):
    """Spectral parameter lies on (or too close to) the real or imaginary axis."""


class SupportCollision(ReflectoryError):
    """Two factors whose supports must be disjoint come within the separation margin."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class MirrorCollision(SupportCollision):
    """An element's support meets its own mirror image under z -> -conj(z)."""


class AdmissibilityError(SupportCollision):
    """An ensemble violates the pairwise/mirror separation assumptions."""


class SingularMatrix(ReflectoryError):
    def __init__(self, message, rcond=None):
        super().__init__(message)
        self.rcond = rcond


class DegenerateImage(ReflectoryError):
    """A projective map sent a representative to (numerically) zero."""


class TangencyError(ReflectoryError):
    pass
