"""Closed-form solid-angle laws for twisted and curved creases.

A crease is characterised by its half fold angle mu (the surface normal turns
by 2*mu across it), the radius of curvature R along it, and the twist along
it.  Canonical outputs keep the exact trigonometric forms, e.g. 2*sin(dg/2)
rather than dg; small-angle forms are documented approximations only.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .curvature import TubeSpec, strip_specific_curvature
from .errors import ParameterError, ShallowRegimeWarning

# Patch extents / fold angles above these are outside the shallow-regime
# guarantee of the spherical-image construction; results are still computed.
SMALL_EXTENT_LIMIT = 0.5
SHALLOW_FOLD_LIMIT = 0.3


@dataclass(frozen=True)
class CreaseSpec:
    """Curved-crease parameters.

    R      radius of curvature along the crease; math.inf for a straight crease
    mu     half fold angle, in [0, pi/2)
    twist  twist rate along the crease (any finite value; it never enters the
           specific curvature, see crease_specific_curvature)
    """

    R: float
    mu: float
    twist: float = 0.0

    def __post_init__(self):
        if math.isnan(self.R) or self.R <= 0:
            raise ParameterError(f"crease radius R must be > 0 or inf, got {self.R}")
        if not (0 <= self.mu < math.pi / 2):
            raise ParameterError(f"half fold angle mu must lie in [0, pi/2), got {self.mu}")
        if not math.isfinite(self.twist):
            raise ParameterError(f"twist rate must be finite, got {self.twist}")

    @classmethod
    def straight(cls, mu: float, twist: float = 0.0) -> "CreaseSpec":
        """A straight crease (infinite radius along its length)."""
        return cls(R=math.inf, mu=mu, twist=twist)

    @property
    def is_straight(self) -> bool:
        return math.isinf(self.R)


@dataclass(frozen=True)
class SphericalPatchImage:
    """Spherical image of a small patch: extents, fold shift and signed area.

    The sign records the cyclic orientation of the mapped normals: negative
    for the twisted patch, positive across a curved crease.
    """

    dxi: float
    dgamma: float
    mu: float
    signed_area: float

    def __post_init__(self):
        if self.dxi < 0 or self.dgamma < 0 or self.mu < 0:
            raise ParameterError("patch image extents must be >= 0")
        if abs(self.signed_area) > 4 * math.pi:
            raise ParameterError("solid angle magnitude cannot exceed 4*pi")

    @property
    def shallow(self) -> bool:
        """Whether the inputs sit inside the small-rotation regime."""
        return (
            self.dxi <= SMALL_EXTENT_LIMIT
            and self.dgamma <= SMALL_EXTENT_LIMIT
            and self.mu <= SHALLOW_FOLD_LIMIT
        )


@dataclass(frozen=True)
class BalanceReport:
    """Strip vs crease specific-curvature balance for a creased tube."""

    strip_term: float
    crease_term: float
    residual: float
    relative_residual: float
    metadata: dict = field(default_factory=dict, compare=False)


def _check_extents(dxi: float, dgamma: float) -> None:
    if dxi < 0 or dgamma < 0:
        raise ParameterError(f"patch extents must be >= 0, got ({dxi}, {dgamma})")
    if max(dxi, dgamma) > SMALL_EXTENT_LIMIT:
        warnings.warn(
            f"patch extents ({dxi:.3g}, {dgamma:.3g}) exceed {SMALL_EXTENT_LIMIT} rad; "
            "the spherical-image construction assumes small rotations",
            ShallowRegimeWarning,
            stacklevel=3,
        )


def twisted_patch_solid_angle(dxi: float, dgamma: float) -> float:
    """Solid angle of a uniformly twisted patch: -dxi * 2*sin(dgamma/2).

    Negative orientation; tends to -dxi*dgamma for small extents.
    """
    _check_extents(dxi, dgamma)
    return -dxi * 2.0 * math.sin(dgamma / 2.0)


def twisted_crease_solid_angle(dxi: float, dgamma: float, mu: float) -> float:
    """Solid angle of a twisted patch creased along its twist axis.

    Equals the uncreased value times cos(mu); at mu = 0 it reduces exactly to
    twisted_patch_solid_angle.  Corollary: twisting along a crease does not
    change its solid angle.
    """
    _check_extents(dxi, dgamma)
    if not (0 <= mu < math.pi / 2):
        raise ParameterError(f"half fold angle mu must lie in [0, pi/2), got {mu}")
    if mu == 0.0:
        return twisted_patch_solid_angle(dxi, dgamma)
    return -dxi * 2.0 * math.sin(dgamma / 2.0) * math.cos(mu)


def curved_crease_patch_solid_angle(dxi: float, mu: float) -> float:
    """Solid angle of a patch spanning a curved crease: dxi * 2*sin(mu).

    Positive orientation.  Independent of the patch width, which is why no
    width parameter is accepted: the curvature lies entirely in the crease.
    """
    if dxi < 0:
        raise ParameterError(f"azimuthal extent must be >= 0, got {dxi}")
    if not (0 <= mu < math.pi / 2):
        raise ParameterError(f"half fold angle mu must lie in [0, pi/2), got {mu}")
    return dxi * 2.0 * math.sin(mu)


def twisted_patch_image(dxi: float, dgamma: float) -> SphericalPatchImage:
    """Spherical image record for the twisted patch."""
    return SphericalPatchImage(
        dxi=dxi, dgamma=dgamma, mu=0.0,
        signed_area=twisted_patch_solid_angle(dxi, dgamma),
    )


def twisted_crease_image(dxi: float, dgamma: float, mu: float) -> SphericalPatchImage:
    """Spherical image record for the creased twisted patch."""
    return SphericalPatchImage(
        dxi=dxi, dgamma=dgamma, mu=mu,
        signed_area=twisted_crease_solid_angle(dxi, dgamma, mu),
    )


def curved_crease_image(dxi: float, mu: float) -> SphericalPatchImage:
    """Spherical image record for a patch spanning a curved crease."""
    return SphericalPatchImage(
        dxi=dxi, dgamma=0.0, mu=mu,
        signed_area=curved_crease_patch_solid_angle(dxi, mu),
    )


def crease_specific_curvature(spec: CreaseSpec) -> float:
    """Specific Gaussian curvature of a crease: 2*sin(mu)/R.

    Solid angle per unit arc length.  Zero for a straight crease.  The twist
    rate is deliberately ignored: twisting along a crease does not change its
    solid angle.
    """
    if spec.is_straight:
        return 0.0
    return 2.0 * math.sin(spec.mu) / spec.R


def tube_crease_fold_angle(spec: TubeSpec) -> float:
    """Total fold angle 2*mu across one crease of the creased tube.

    Equals the angle subtended between adjacent lines on the smooth cylinder:
    kyy * h = (h/a) * cos^2(alpha).  The half angle mu is half the return value.
    """
    c = math.cos(spec.alpha)
    return (spec.h / spec.a) * c * c


def tube_balance(spec: TubeSpec) -> BalanceReport:
    """Balance of specific Gaussian curvature between strips and creases.

    strip_term is the (negative) strip value, crease_term the exact crease
    value 2*(sin^2(alpha)/a)*sin((h/2a)*cos^2(alpha)); their sum is the
    residual, of order (h/a)^3.
    """
    strip_term = strip_specific_curvature(spec)
    s = math.sin(spec.alpha)
    mu = 0.5 * tube_crease_fold_angle(spec)
    crease_term = 2.0 * (s * s / spec.a) * math.sin(mu)
    residual = strip_term + crease_term
    scale = max(abs(strip_term), abs(crease_term))
    relative_residual = abs(residual) / scale if scale > 0 else 0.0
    return BalanceReport(
        strip_term=strip_term,
        crease_term=crease_term,
        residual=residual,
        relative_residual=relative_residual,
        metadata={"a": spec.a, "alpha": spec.alpha, "h": spec.h, "mu": mu},
    )


def gore_crease_rate(n: int, theta: float, R: float) -> float:
    """Specific curvature of one gore-sphere seam at latitude theta.

    The seam folds by 2*mu with mu = (pi/n)*cos(theta); with arc length
    R*dtheta along the meridian this gives 2*sin((pi/n)*cos(theta))/R.
    """
    if n < 3:
        raise ParameterError(f"number of gores must be >= 3, got {n}")
    if abs(theta) > math.pi / 2:
        raise ParameterError(f"latitude must lie in [-pi/2, pi/2], got {theta}")
    if not (math.isfinite(R) and R > 0):
        raise ParameterError(f"seam radius R must be positive, got {R}")
    return 2.0 * math.sin((math.pi / n) * math.cos(theta)) / R
