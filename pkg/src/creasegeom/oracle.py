"""Independent discrete-geometry checks: angle-defect curvature on triangle
meshes and numerical Gauss maps on smooth parametric patches.  Nothing here
uses the closed forms elsewhere in the package, so agreement between the two
routes is meaningful evidence."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import MeshError, ParameterError, ResolutionError
from .trimesh import TAG_INTERIOR, TriMesh

GAUSS_MAP_STEP_FACTOR = 1e-5


# ---------------------------------------------------------------------------
# angle defect
# ---------------------------------------------------------------------------

@dataclass
class DefectField:
    """Per-vertex angle defect of a mesh, with lumped areas and crease rates.

    defect        (V,) angle defect: 2*pi minus the angle sum at interior
                  vertices, pi minus it at topological-boundary vertices
    lumped_area   (V,) one third of each incident triangle's area
    boundary_mask (V,) topological boundary vertices
    vertex_tags   (V,) copied from the mesh
    crease_rates  defect per unit arc length for each crease id, boundary
                  chain endpoints excluded
    total_defect  sum of defect over all non-boundary vertices
    """

    defect: np.ndarray
    lumped_area: np.ndarray
    boundary_mask: np.ndarray
    vertex_tags: np.ndarray
    crease_rates: dict[int, float] = field(default_factory=dict)
    total_defect: float = 0.0

    def interior_defect_density(self) -> float:
        """Defect per unit area over untagged, non-boundary vertices."""
        sel = (~self.boundary_mask) & (self.vertex_tags == TAG_INTERIOR)
        area = float(self.lumped_area[sel].sum())
        if area == 0.0:
            raise MeshError("mesh has no interior vertices to average over")
        return math.fsum(self.defect[sel]) / area

    def crease_defect_total(self, crease_id: int) -> float:
        sel = (~self.boundary_mask) & (self.vertex_tags == crease_id)
        return math.fsum(self.defect[sel])


def angle_defect(mesh: TriMesh) -> DefectField:
    """Angle-defect field of a validated mesh.

    Validation runs first, so inconsistent winding raises OrientationError
    before any curvature is reported.
    """
    mesh.validate()
    tri = mesh.triangles
    pts = mesh.vertices[tri]  # (T, 3, 3)
    nv = mesh.num_vertices

    angle_sum = np.zeros(nv)
    for k in range(3):
        e1 = pts[:, (k + 1) % 3] - pts[:, k]
        e2 = pts[:, (k + 2) % 3] - pts[:, k]
        cross = np.linalg.norm(np.cross(e1, e2), axis=1)
        dot = np.einsum("ij,ij->i", e1, e2)
        angle_sum += np.bincount(tri[:, k], weights=np.arctan2(cross, dot), minlength=nv)

    lumped = np.zeros(nv)
    third = mesh.triangle_areas() / 3.0
    for k in range(3):
        lumped += np.bincount(tri[:, k], weights=third, minlength=nv)

    boundary = mesh.boundary_vertex_mask()
    flat = np.where(boundary, math.pi, 2.0 * math.pi)
    defect = flat - angle_sum

    rates: dict[int, float] = {}
    for cid, chain in mesh.crease_polylines.items():
        seg = np.linalg.norm(np.diff(mesh.vertices[chain], axis=0), axis=1)
        assoc = np.zeros(len(chain))
        assoc[:-1] += 0.5 * seg  # half of each interval to either endpoint
        assoc[1:] += 0.5 * seg
        keep = ~boundary[chain]
        length = float(assoc[keep].sum())
        if length == 0.0:
            raise MeshError(f"crease {cid} has no non-boundary vertices")
        rates[cid] = math.fsum(defect[chain[keep]]) / length

    return DefectField(
        defect=defect,
        lumped_area=lumped,
        boundary_mask=boundary,
        vertex_tags=mesh.vertex_tags.copy(),
        crease_rates=rates,
        total_defect=math.fsum(defect[~boundary]),
    )


def crease_rate_estimate(mesh: TriMesh, crease_id: int) -> float:
    """Discrete specific curvature (defect per arc length) of one crease."""
    field_ = angle_defect(mesh)
    try:
        return field_.crease_rates[crease_id]
    except KeyError:
        raise ParameterError(
            f"mesh has no crease polyline with id {crease_id}"
        ) from None


# ---------------------------------------------------------------------------
# numerical Gauss map
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussMapResult:
    """Signed solid angle swept by the unit normals over a parameter region."""

    value: float
    extrapolated: float
    error_estimate: float
    converged: bool
    nu: int
    nv: int


def _eval_surface(fn: Callable, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    out = np.asarray(fn(U, V), dtype=float)
    if out.shape != U.shape + (3,):
        raise ParameterError(
            f"surface function returned shape {out.shape}, expected {U.shape + (3,)}"
        )
    return out


def _grid_normals(fn, U, V, hu, hv) -> np.ndarray:
    su = _eval_surface(fn, U + hu, V) - _eval_surface(fn, U - hu, V)
    sv = _eval_surface(fn, U, V + hv) - _eval_surface(fn, U, V - hv)
    n = np.cross(su, sv)
    norm = np.linalg.norm(n, axis=-1, keepdims=True)
    if np.any(norm < 1e-300) or not np.all(np.isfinite(norm)):
        raise ParameterError("degenerate surface normal in the requested region")
    return n / norm


def _tri_solid_angles(a, b, c) -> np.ndarray:
    """Signed solid angles of spherical triangles with unit-vector corners."""
    num = np.einsum("...i,...i->...", a, np.cross(b, c))
    den = (
        1.0
        + np.einsum("...i,...i->...", a, b)
        + np.einsum("...i,...i->...", b, c)
        + np.einsum("...i,...i->...", c, a)
    )
    return 2.0 * np.arctan2(num, den)


def _swept_area(normals: np.ndarray) -> float:
    n00 = normals[:-1, :-1]
    n10 = normals[1:, :-1]
    n11 = normals[1:, 1:]
    n01 = normals[:-1, 1:]
    cells = _tri_solid_angles(n00, n10, n11) + _tri_solid_angles(n00, n11, n01)
    return float(math.fsum(cells.ravel()))


def gauss_map_patch(
    fn: Callable, u0: float, v0: float, du: float, dv: float
) -> float:
    """Signed solid angle of the normal image of one parameter cell."""
    result = gauss_map_integrate(fn, (u0, u0 + du, v0, v0 + dv), nu=4, nv=4)
    return result.value


def gauss_map_integrate(
    fn: Callable,
    region: tuple[float, float, float, float],
    nu: int = 128,
    nv: int = 128,
) -> GaussMapResult:
    """Signed area swept on the unit sphere by the normals of fn over region.

    Normals come from central differences with step 1e-5 of the parameter
    span; the swept area is tiled with spherical quads.  The same sum on the
    half- and quarter-resolution subgrids gives a Richardson error estimate
    and an O(h^2) convergence check.
    """
    u0, u1, v0, v1 = region
    if not (u1 > u0 and v1 > v0):
        raise ParameterError(f"empty parameter region {region}")
    if nu < 4 or nv < 4:
        raise ResolutionError(f"need nu, nv >= 4, got ({nu}, {nv})")
    nu += (-nu) % 4  # subsampling below needs multiples of 4
    nv += (-nv) % 4
    hu = GAUSS_MAP_STEP_FACTOR * (u1 - u0)
    hv = GAUSS_MAP_STEP_FACTOR * (v1 - v0)
    U, V = np.meshgrid(
        np.linspace(u0, u1, nu + 1), np.linspace(v0, v1, nv + 1), indexing="ij"
    )
    normals = _grid_normals(fn, U, V, hu, hv)

    fine = _swept_area(normals)
    half = _swept_area(normals[::2, ::2])
    quarter = _swept_area(normals[::4, ::4])

    scale = max(1.0, abs(fine))
    d1 = fine - half
    d2 = half - quarter
    err = abs(d1) / 3.0  # O(h^2) tiling => halving the grid quarters the error
    if abs(d1) < 1e-13 * scale:
        converged = True
    else:
        ratio = abs(d2) / abs(d1)
        converged = 2.0 <= ratio <= 8.0
    return GaussMapResult(
        value=fine,
        extrapolated=fine + d1 / 3.0,
        error_estimate=err,
        converged=converged,
        nu=nu,
        nv=nv,
    )
