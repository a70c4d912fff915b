"""Yang-Baxter maps, reflection maps and N-body polarization reflection maps
on Hermitian projectors, CP^{n-1} and the rational loop group."""

from reflectory._core import BACKEND, available_backends
from reflectory.errors import (AdmissibilityError, AxisError, DegenerateImage, DegenerateSpan,
                               MirrorCollision, PoleError, ProjectorError, RankError,
                               ReflectoryError, SingularMatrix, SupportCollision,
                               TangencyError, UnitarityError)
from reflectory.loop_group import (RationalLoopElement, check_loop_reflection_equation,
                                   reflection_loop, refactor, sigma_loop, yb_loop)
from reflectory.projective import (PolarizationEnsemble, b_tilde, j_delta, n_body_reflection,
                                   r_tilde, scattering_map)
from reflectory.reflection import b_map, boundary_refactor, check_reflection_equation
from reflectory.simple_elements import SimpleElement, tau
from reflectory.symplectic import check_symplecto, omega_fs, omega_orbit
from reflectory.yang_baxter import check_ybe, r21_map, yb_map

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "available_backends",
    "ReflectoryError", "AdmissibilityError", "AxisError", "DegenerateImage", "DegenerateSpan",
    "MirrorCollision", "PoleError", "ProjectorError", "RankError", "SingularMatrix",
    "SupportCollision", "TangencyError", "UnitarityError",
    "SimpleElement", "tau", "yb_map", "r21_map", "check_ybe",
    "b_map", "boundary_refactor", "check_reflection_equation",
    "PolarizationEnsemble", "j_delta", "r_tilde", "b_tilde", "n_body_reflection", "scattering_map",
    "RationalLoopElement", "refactor", "yb_loop", "sigma_loop", "reflection_loop",
    "check_loop_reflection_equation",
    "omega_orbit", "omega_fs", "check_symplecto",
]
