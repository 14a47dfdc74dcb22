"""Parametric constructors and triangulators for the creased-shell geometries:
smooth and twisted-prismatic tubes, folded twisted patches, curved creases
with conical side strips, the mudguard surface of revolution, and gore
spheres.  All generators are deterministic given (spec, resolution)."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .creases import CreaseSpec
from .curvature import TubeSpec, tube_spec_for_strips
from .errors import (
    ClosureError,
    ParameterError,
    ResolutionError,
    ShallowRegimeWarning,
)
from .trimesh import TAG_BOUNDARY, TriMesh

TWO_PI = 2.0 * math.pi

DEFAULT_ANALYSIS_RES = 128
DEFAULT_EXPORT_RES = 32

# Azimuthal span of the open-arc crease produced by gen_curved_crease.
CREASE_ARC_SPAN = math.pi / 2


@dataclass(frozen=True)
class MudguardSpec:
    """Doubly-curved inscription of a curved crease.

    R   sweep radius of the underlying crease circle (> 0)
    r   transverse arc radius (0 < r < R/2)
    mu  half-arc angle; the transverse arc subtends the total fold angle 2*mu
    """

    R: float
    r: float
    mu: float

    def __post_init__(self):
        if not (math.isfinite(self.R) and self.R > 0):
            raise ParameterError(f"sweep radius R must be positive, got {self.R}")
        if not (math.isfinite(self.r) and self.r > 0):
            raise ParameterError(f"arc radius r must be positive, got {self.r}")
        if self.r >= 0.5 * self.R:
            raise ParameterError(
                f"arc radius r = {self.r} must be below R/2 = {0.5 * self.R}"
            )
        if not (0 < self.mu < math.pi / 2):
            raise ParameterError(f"half-arc angle mu must lie in (0, pi/2), got {self.mu}")


@dataclass(frozen=True)
class GoreSphereSpec:
    """Sphere approximated by n developable gores joined along meridian seams."""

    R: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.R) and self.R > 0):
            raise ParameterError(f"seam radius R must be positive, got {self.R}")
        if self.n < 3:
            raise ParameterError(f"number of gores must be >= 3, got {self.n}")


# ---------------------------------------------------------------------------
# grid helpers
# ---------------------------------------------------------------------------

def _grid_triangles(ids: np.ndarray, pts: np.ndarray, flip: bool = False) -> np.ndarray:
    """Triangulate a quad grid of vertex ids with positions pts (same grid
    shape plus a trailing 3), splitting each cell along its shorter diagonal
    (keeps thin twisted strips well conditioned)."""
    v00 = ids[:-1, :-1].ravel()
    v10 = ids[1:, :-1].ravel()
    v01 = ids[:-1, 1:].ravel()
    v11 = ids[1:, 1:].ravel()
    p00 = pts[:-1, :-1].reshape(-1, 3)
    p10 = pts[1:, :-1].reshape(-1, 3)
    p01 = pts[:-1, 1:].reshape(-1, 3)
    p11 = pts[1:, 1:].reshape(-1, 3)
    d_main = np.linalg.norm(p00 - p11, axis=1)
    d_anti = np.linalg.norm(p10 - p01, axis=1)
    use_main = d_main <= d_anti
    t1 = np.where(use_main[:, None],
                  np.stack([v00, v10, v11], axis=1),
                  np.stack([v00, v10, v01], axis=1))
    t2 = np.where(use_main[:, None],
                  np.stack([v00, v11, v01], axis=1),
                  np.stack([v10, v11, v01], axis=1))
    tris = np.concatenate([t1, t2])
    if flip:
        tris = tris[:, ::-1]
    return tris


def _finish(vertices, triangles, tags, polylines) -> TriMesh:
    mesh = TriMesh(
        vertices=np.asarray(vertices),
        triangles=np.asarray(triangles),
        vertex_tags=np.asarray(tags),
        crease_polylines=polylines,
    )
    boundary = mesh.boundary_vertex_mask()
    # crease tags win over the boundary tag; the oracle uses topology anyway
    mesh.vertex_tags = np.where(
        (mesh.vertex_tags == 0) & boundary, TAG_BOUNDARY, mesh.vertex_tags
    )
    return mesh


# ---------------------------------------------------------------------------
# helical band: smooth cylinder and twisted-prismatic tube
# ---------------------------------------------------------------------------

def _helical_band(a, alpha, n_strips, nu, nv, flatten):
    """Build the band of n_strips helical strips; flatten=True replaces each
    strip by straight rulings (the prismatic tube), False keeps points on the
    cylinder."""
    if nu < 3 or nv < 3:
        raise ResolutionError(f"nu and nv must be >= 3, got ({nu}, {nv})")
    if alpha >= math.pi / 2:
        raise ParameterError(
            "alpha = pi/2 (hoop-aligned lines) degenerates the strip construction"
        )
    nu += nu % 2  # the helical seam shift below needs an even count
    h = TWO_PI * a * math.cos(alpha) / n_strips
    xhat = np.array([math.sin(alpha), math.cos(alpha)])
    yhat = np.array([math.cos(alpha), -math.sin(alpha)])
    l_shift = TWO_PI * a * math.sin(alpha)
    if l_shift == 0.0:
        length, m = TWO_PI * a, 0
    else:
        length, m = 2.0 * l_shift, nu // 2
    x = np.linspace(0.0, length, nu + 1)

    def wrap(dev):
        s, z = dev[..., 0], dev[..., 1]
        return np.stack([a * np.cos(s / a), a * np.sin(s / a), z], axis=-1)

    # crease-line vertices, line j at developed offset j*h*yhat
    n_line = nu + 1
    line_pts = np.empty((n_strips, n_line, 3))
    for j in range(n_strips):
        dev = j * h * yhat[None, :] + x[:, None] * xhat[None, :]
        line_pts[j] = wrap(dev)
    verts = [line_pts.reshape(-1, 3)]
    tags = [np.repeat(np.arange(1, n_strips + 1), n_line)]
    offset = n_strips * n_line

    tris = []
    for j in range(n_strips):
        jn = (j + 1) % n_strips
        shift = m if j == n_strips - 1 else 0
        i = np.arange(shift, nu + 1)
        ids = np.empty((len(i), nv + 1), dtype=np.int64)
        ids[:, 0] = j * n_line + i
        ids[:, nv] = jn * n_line + (i - shift)
        n_int = (len(i)) * (nv - 1)
        ids[:, 1:nv] = offset + np.arange(n_int).reshape(len(i), nv - 1)
        offset += n_int

        t = (np.arange(1, nv) / nv)[None, :, None]
        p0 = line_pts[j, i][:, None, :]
        p1 = line_pts[jn, i - shift][:, None, :]
        if flatten:
            interior = (1.0 - t) * p0 + t * p1
        else:
            dev = (
                (j * h + np.arange(1, nv) / nv * h)[None, :, None] * yhat[None, None, :]
                + x[i][:, None, None] * xhat[None, None, :]
            )
            interior = wrap(dev)
        verts.append(interior.reshape(-1, 3))
        tags.append(np.zeros(n_int, dtype=np.int64))

        grid = np.empty((len(i), nv + 1, 3))
        grid[:, 0] = p0[:, 0]
        grid[:, nv] = p1[:, 0]
        grid[:, 1:nv] = interior
        tris.append(_grid_triangles(ids, grid, flip=True))

    vertices = np.concatenate(verts)
    triangles = np.concatenate(tris)
    polylines = {
        j + 1: np.arange(j * n_line, (j + 1) * n_line) for j in range(n_strips)
    }
    return _finish(vertices, triangles, np.concatenate(tags), polylines)


def gen_cylinder(spec: TubeSpec, nu: int, nv: int) -> TriMesh:
    """Open circular cylinder with helical lines at angle alpha tagged as
    zero-fold crease polylines.  The line spacing is adjusted to the nearest
    value that closes the hoop; large adjustments are warned about."""
    n_lines = max(3, round(TWO_PI * spec.a * math.cos(spec.alpha) / spec.h))
    h_eff = TWO_PI * spec.a * math.cos(spec.alpha) / n_lines
    if abs(h_eff - spec.h) > 0.05 * spec.h:
        warnings.warn(
            f"line spacing adjusted from {spec.h:.6g} to {h_eff:.6g} to close the hoop",
            ShallowRegimeWarning,
            stacklevel=2,
        )
    return _helical_band(spec.a, spec.alpha, n_lines, nu, nv, flatten=False)


def gen_twisted_prismatic_tube(
    spec: TubeSpec, n_strips: int, nu: int, nv: int
) -> TriMesh:
    """Twisted-prismatic tube: n_strips ruled strips, each flat normal to the
    creases, joined along helical crease polylines.

    The spec's strip width must equal 2*pi*a*cos(alpha)/n_strips (see
    tube_spec_for_strips); otherwise the cross-section cannot close and a
    ClosureError reporting the gap is raised.
    """
    if n_strips < 3:
        raise ParameterError(f"n_strips must be >= 3, got {n_strips}")
    h_req = TWO_PI * spec.a * math.cos(spec.alpha) / n_strips
    gap = n_strips * (spec.h - h_req) / math.cos(spec.alpha) if spec.alpha < math.pi / 2 else 0.0
    if abs(spec.h - h_req) > 1e-9 * spec.a:
        raise ClosureError(
            f"strip width {spec.h:.9g} does not close {n_strips} strips around "
            f"the hoop (need {h_req:.9g}; hoop gap {gap:.3e})",
            gap=gap,
        )
    return _helical_band(spec.a, spec.alpha, n_strips, nu, nv, flatten=True)


# ---------------------------------------------------------------------------
# twisted patch
# ---------------------------------------------------------------------------

def twisted_patch_surface(kxy: float):
    """Parametric map of the uncreased twisted surface z = kxy * x * y."""

    def fn(x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return np.stack(np.broadcast_arrays(x, y, kxy * x * y), axis=-1)

    return fn


def gen_twisted_patch(
    kxy: float, a_len: float, b_len: float, mu: float, nu: int, nv: int
) -> TriMesh:
    """Graph mesh of z = kxy*x*y over a centred a_len x b_len rectangle.

    For mu > 0 each half-plane (y > 0, y < 0) is rigidly rotated about the
    x-axis so the fold opens by 2*mu; the x-axis row is the crease.
    """
    if a_len <= 0 or b_len <= 0:
        raise ParameterError("patch side lengths must be positive")
    if not (0 <= mu < math.pi / 2):
        raise ParameterError(f"half fold angle mu must lie in [0, pi/2), got {mu}")
    if nu < 3 or nv < 3:
        raise ResolutionError(f"nu and nv must be >= 3, got ({nu}, {nv})")
    if abs(kxy) * max(a_len, b_len) > 0.3:
        warnings.warn(
            "patch is outside the shallow-twist regime (|kxy|*size > 0.3)",
            ShallowRegimeWarning,
            stacklevel=2,
        )
    nv += nv % 2  # keep the y = 0 crease row on the grid
    x = np.linspace(-a_len / 2, a_len / 2, nu + 1)
    y = np.linspace(-b_len / 2, b_len / 2, nv + 1)
    X, Y = np.meshgrid(x, y, indexing="ij")
    Z = kxy * X * Y
    if mu > 0:
        # rotate the y>0 half by -mu and the y<0 half by +mu about the x-axis
        theta = np.where(Y > 0, -mu, np.where(Y < 0, mu, 0.0))
        Y, Z = Y * np.cos(theta) - Z * np.sin(theta), Y * np.sin(theta) + Z * np.cos(theta)
    grid = np.stack([X, Y, Z], axis=-1)
    verts = grid.reshape(-1, 3)
    ids = np.arange((nu + 1) * (nv + 1)).reshape(nu + 1, nv + 1)
    tris = _grid_triangles(ids, grid)
    crease_row = ids[:, nv // 2].copy()
    tags = np.zeros(len(verts), dtype=np.int64)
    tags[crease_row] = 1
    return _finish(verts, tris, tags, {1: crease_row})


# ---------------------------------------------------------------------------
# curved crease with conical strips
# ---------------------------------------------------------------------------

def gen_curved_crease(
    spec: CreaseSpec, strip_width: float, nu: int, nv: int,
    span: float = CREASE_ARC_SPAN,
) -> TriMesh:
    """Circular-arc crease of radius R flanked by two conical strips.

    The crease lies in the z = 0 plane, which bisects the total fold angle;
    each strip leaves the crease along straight rulings inclined at mu to the
    crease's (vertical) tangent plane: d = -sin(mu)*rho_hat +/- cos(mu)*z_hat.
    At mu = 0 the two strips join into a smooth cylindrical band.
    """
    if spec.is_straight:
        raise ParameterError("gen_curved_crease needs a finite crease radius")
    if not 0 < strip_width < spec.R / 4:
        raise ParameterError(
            f"strip width must lie in (0, R/4) to avoid cone self-intersection, "
            f"got {strip_width} with R = {spec.R}"
        )
    if nu < 3 or nv < 3:
        raise ResolutionError(f"nu and nv must be >= 3, got ({nu}, {nv})")
    phi = np.linspace(0.0, span, nu + 1)
    rho_hat = np.stack([np.cos(phi), np.sin(phi), np.zeros_like(phi)], axis=-1)
    zhat = np.array([0.0, 0.0, 1.0])
    v = np.linspace(-strip_width, strip_width, 2 * nv + 1)
    side = np.sign(v)[None, :, None]
    dist = np.abs(v)[None, :, None]
    ruling = -math.sin(spec.mu) * rho_hat[:, None, :] + side * math.cos(spec.mu) * zhat
    pts = spec.R * rho_hat[:, None, :] + dist * ruling
    verts = pts.reshape(-1, 3)
    ids = np.arange((nu + 1) * (2 * nv + 1)).reshape(nu + 1, 2 * nv + 1)
    tris = _grid_triangles(ids, pts)
    crease_row = ids[:, nv].copy()
    tags = np.zeros(len(verts), dtype=np.int64)
    tags[crease_row] = 1
    return _finish(verts, tris, tags, {1: crease_row})


# ---------------------------------------------------------------------------
# mudguard surface of revolution
# ---------------------------------------------------------------------------

def mudguard_surface(spec: MudguardSpec):
    """Parametric map (phi, eps) of the mudguard: a transverse arc of radius r
    subtending 2*mu, swept about the axis, tangent to the conical strips of
    the discrete crease it inscribes."""
    c = spec.R - spec.r / math.cos(spec.mu)

    def fn(phi, eps):
        phi = np.asarray(phi, dtype=float)
        eps = np.asarray(eps, dtype=float)
        d = c + spec.r * np.cos(eps)
        return np.stack(
            np.broadcast_arrays(d * np.cos(phi), d * np.sin(phi), spec.r * np.sin(eps)),
            axis=-1,
        )

    return fn


def gen_mudguard(spec: MudguardSpec, nu: int, nv: int) -> TriMesh:
    """Mudguard band: closed in the sweep direction, open across the arc."""
    if nu < 3 or nv < 3:
        raise ResolutionError(f"nu and nv must be >= 3, got ({nu}, {nv})")
    fn = mudguard_surface(spec)
    phi = np.linspace(0.0, TWO_PI, nu + 1)[:-1]
    eps = np.linspace(-spec.mu, spec.mu, nv + 1)
    P, E = np.meshgrid(phi, eps, indexing="ij")
    grid = fn(P, E)
    verts = grid.reshape(-1, 3)
    ids = np.arange(nu * (nv + 1)).reshape(nu, nv + 1)
    wrapped = np.vstack([ids, ids[:1]])  # close the hoop
    tris = _grid_triangles(wrapped, np.concatenate([grid, grid[:1]], axis=0))
    tags = np.zeros(len(verts), dtype=np.int64)
    return _finish(verts, tris, tags, {})


# ---------------------------------------------------------------------------
# gore sphere
# ---------------------------------------------------------------------------

def gen_gore_sphere(spec: GoreSphereSpec, nu: int, nv: int) -> TriMesh:
    """Closed genus-0 mesh of n cylindrical gores joined along meridian seams.

    Each gore is bent only about its central meridian (rulings are horizontal
    chords), so gore interiors are developable; all curvature sits in the
    tagged seams and the two shared pole vertices.
    """
    if nu < 4 or nv < 2:
        raise ResolutionError(f"need nu >= 4 and nv >= 2, got ({nu}, {nv})")
    R, n = spec.R, spec.n
    beta = math.pi / n
    theta = np.linspace(-math.pi / 2, math.pi / 2, nu + 1)[1:-1]
    ni = len(theta)
    cos_t, sin_t = np.cos(theta), np.sin(theta)

    verts = [np.array([[0.0, 0.0, -R], [0.0, 0.0, R]])]
    tags = [np.zeros(2, dtype=np.int64)]
    # seam j vertices: ids 2 + j*ni + i, lying in the plane at azimuth 2*pi*j/n
    seam_base = 2
    for j in range(n):
        phi_j = TWO_PI * j / n
        rho = R * cos_t / math.cos(beta)
        verts.append(
            np.stack([rho * math.cos(phi_j), rho * math.sin(phi_j), R * sin_t], axis=-1)
        )
        tags.append(np.full(ni, j + 1, dtype=np.int64))
    offset = seam_base + n * ni

    tris = []
    interior_cols = nv - 1
    for j in range(n):
        phi_c = TWO_PI * (j + 0.5) / n
        e1 = np.array([math.cos(phi_c), math.sin(phi_c), 0.0])
        u = np.array([-math.sin(phi_c), math.cos(phi_c), 0.0])
        f = (2.0 * np.arange(1, nv) / nv - 1.0)  # interior ruling fractions
        w = f[None, :] * (R * cos_t * math.tan(beta))[:, None]
        interior = (
            (R * cos_t)[:, None, None] * e1
            + w[:, :, None] * u
            + (R * sin_t)[:, None, None] * np.array([0.0, 0.0, 1.0])
        )
        verts.append(interior.reshape(-1, 3))
        tags.append(np.zeros(ni * interior_cols, dtype=np.int64))

        ids = np.empty((ni, nv + 1), dtype=np.int64)
        ids[:, 0] = seam_base + j * ni + np.arange(ni)
        ids[:, nv] = seam_base + ((j + 1) % n) * ni + np.arange(ni)
        ids[:, 1:nv] = offset + np.arange(ni * interior_cols).reshape(ni, interior_cols)
        offset += ni * interior_cols

        grid = np.empty((ni, nv + 1, 3))
        grid[:, 0] = verts[1 + j]
        grid[:, nv] = verts[1 + (j + 1) % n]
        grid[:, 1:nv] = interior
        tris.append(_grid_triangles(ids, grid, flip=True))
        # pole fans: south pole is vertex 0 (below row i=0), north is 1
        south = np.stack(
            [np.zeros(nv, np.int64), ids[0, 1:], ids[0, :-1]], axis=1
        )
        north = np.stack(
            [np.ones(nv, np.int64), ids[-1, :-1], ids[-1, 1:]], axis=1
        )
        tris.append(south)
        tris.append(north)

    vertices = np.concatenate(verts)
    triangles = np.concatenate(tris)
    polylines = {
        j + 1: seam_base + j * ni + np.arange(ni) for j in range(n)
    }
    return _finish(vertices, triangles, np.concatenate(tags), polylines)


def sphere_surface(R: float):
    """Parametric map (phi, theta) of a smooth sphere, theta the elevation."""

    def fn(phi, theta):
        phi = np.asarray(phi, dtype=float)
        theta = np.asarray(theta, dtype=float)
        return np.stack(
            np.broadcast_arrays(
                R * np.cos(theta) * np.cos(phi),
                R * np.cos(theta) * np.sin(phi),
                R * np.sin(theta),
            ),
            axis=-1,
        )

    return fn


__all__ = [
    "MudguardSpec",
    "GoreSphereSpec",
    "gen_cylinder",
    "gen_twisted_prismatic_tube",
    "gen_twisted_patch",
    "gen_curved_crease",
    "gen_mudguard",
    "gen_gore_sphere",
    "twisted_patch_surface",
    "mudguard_surface",
    "sphere_surface",
    "tube_spec_for_strips",
]
