"""Gaussian curvature of creased and twisted thin shells.

Closed-form results (Mohr-circle strip curvature, crease solid-angle laws,
creased-tube balance, mudguard and gore-sphere totals) next to independent
discrete oracles (mesh angle defects, numerical Gauss maps, adaptive
quadrature) that verify them.
"""

from .creases import (
    BalanceReport,
    CreaseSpec,
    SphericalPatchImage,
    crease_specific_curvature,
    curved_crease_image,
    curved_crease_patch_solid_angle,
    gore_crease_rate,
    tube_balance,
    tube_crease_fold_angle,
    twisted_crease_image,
    twisted_crease_solid_angle,
    twisted_patch_image,
    twisted_patch_solid_angle,
)
from .curvature import (
    CurvatureState,
    MohrCircle,
    TubeSpec,
    cylinder_curvatures,
    gaussian_curvature,
    mohr_circle,
    principal_curvatures,
    prismatic_curvatures,
    strip_specific_curvature,
    tube_spec_for_strips,
)
from .errors import (
    ClosureError,
    InputFormatError,
    MeshError,
    OrientationError,
    ParameterError,
    QuadratureError,
    ResolutionError,
    ShallowRegimeWarning,
)
from .oracle import (
    DefectField,
    GaussMapResult,
    angle_defect,
    crease_rate_estimate,
    gauss_map_integrate,
    gauss_map_patch,
)
from .quadrature import (
    MudguardTotal,
    QuadratureResult,
    gore_sphere_total,
    integrate,
    mudguard_closed_form,
    mudguard_total,
)
from .surfaces import (
    GoreSphereSpec,
    MudguardSpec,
    gen_curved_crease,
    gen_cylinder,
    gen_gore_sphere,
    gen_mudguard,
    gen_twisted_patch,
    gen_twisted_prismatic_tube,
    mudguard_surface,
    sphere_surface,
    twisted_patch_surface,
)
from .trimesh import TriMesh, export_obj, load_obj
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # curvature
    "CurvatureState", "MohrCircle", "TubeSpec", "cylinder_curvatures",
    "prismatic_curvatures", "mohr_circle", "principal_curvatures",
    "gaussian_curvature", "strip_specific_curvature", "tube_spec_for_strips",
    # creases
    "CreaseSpec", "SphericalPatchImage", "BalanceReport",
    "twisted_patch_solid_angle", "twisted_crease_solid_angle",
    "curved_crease_patch_solid_angle", "twisted_patch_image",
    "twisted_crease_image", "curved_crease_image",
    "crease_specific_curvature", "tube_crease_fold_angle", "tube_balance",
    "gore_crease_rate",
    # quadrature
    "QuadratureResult", "MudguardTotal", "integrate",
    "mudguard_closed_form", "mudguard_total", "gore_sphere_total",
    # meshes and generators
    "TriMesh", "export_obj", "load_obj",
    "MudguardSpec", "GoreSphereSpec", "gen_cylinder",
    "gen_twisted_prismatic_tube", "gen_twisted_patch", "gen_curved_crease",
    "gen_mudguard", "gen_gore_sphere", "twisted_patch_surface",
    "mudguard_surface", "sphere_surface",
    # oracles
    "DefectField", "GaussMapResult", "angle_defect", "crease_rate_estimate",
    "gauss_map_patch", "gauss_map_integrate",
    # verification
    "VerificationReport", "run_suite",
    # errors
    "ParameterError", "ResolutionError", "ClosureError", "MeshError",
    "OrientationError", "InputFormatError", "QuadratureError",
    "ShallowRegimeWarning",
]
