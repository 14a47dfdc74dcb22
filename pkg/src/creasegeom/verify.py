"""Verification suites cross-checking every closed form in the library
against an independent oracle: discrete angle defects, numerical Gauss maps,
or adaptive quadrature.  Each check is reported as a VerificationReport; a
suite passes iff every report in it passes."""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, field

from . import creases, curvature, oracle, quadrature, surfaces
from .errors import ParameterError, ShallowRegimeWarning

SUITE_NAMES = (
    "tube-balance",
    "crease-law",
    "mudguard",
    "gore",
    "twist-independence",
    "strip-curvature",
    "mohr",
)

# Canonical doubly-curved crease parameters used for the Gauss-map check.
CANONICAL_MUDGUARD = dict(R=10.0, r=0.1, mu=0.2)


@dataclass(frozen=True)
class VerificationReport:
    """One closed-form-vs-oracle comparison.

    residual is in the units named by metadata["residual_kind"]
    ("relative", "absolute" or "ratio"); passed ⇔ |residual| <= tolerance.
    """

    case_name: str
    closed_form: float
    oracle: float
    residual: float
    tolerance: float
    passed: bool
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.passed != (abs(self.residual) <= self.tolerance):
            raise ParameterError(
                f"{self.case_name}: passed flag contradicts |residual| <= tolerance"
            )

    def to_json_dict(self) -> dict:
        return {
            "case_name": self.case_name,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "metadata": self.metadata,
        }


def _report(case, closed, oracle_value, residual, tol, kind, **meta):
    return VerificationReport(
        case_name=case,
        closed_form=float(closed),
        oracle=float(oracle_value),
        residual=float(residual),
        tolerance=float(tol),
        passed=bool(abs(residual) <= tol),
        metadata={"residual_kind": kind, **meta},
    )


def _rel(case, closed, oracle_value, tol, **meta):
    scale = max(abs(closed), abs(oracle_value))
    residual = (oracle_value - closed) / scale if scale else 0.0
    return _report(case, closed, oracle_value, residual, tol, "relative", **meta)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_tube_balance() -> list[VerificationReport]:
    """Strip vs crease specific curvature across a parameter grid, plus the
    cubic scaling of the residual in the strip width."""
    reports = []
    for a in (1.0, 2.0):
        for alpha in (math.pi / 6, math.pi / 4, math.pi / 3):
            for ratio in (0.01, 0.02, 0.05):
                spec = curvature.TubeSpec(a=a, alpha=alpha, h=ratio * a)
                rep = creases.tube_balance(spec)
                bound = ((ratio * math.cos(alpha) ** 2) ** 2) / 24.0
                reports.append(
                    _report(
                        f"tube-balance a={a} alpha={alpha:.4f} h/a={ratio}",
                        -rep.strip_term,
                        rep.crease_term,
                        rep.relative_residual,
                        bound,
                        "relative",
                        a=a, alpha=alpha, h=spec.h,
                    )
                )
    # residual(h) / residual(h/2) should be ~8 (cubic in h)
    a, alpha = 1.0, math.pi / 4
    for ratio in (0.02, 0.05):
        r1 = creases.tube_balance(curvature.TubeSpec(a, alpha, ratio * a)).residual
        r2 = creases.tube_balance(curvature.TubeSpec(a, alpha, ratio * a / 2)).residual
        scaling = r1 / r2
        reports.append(
            _report(
                f"tube-balance cubic scaling h/a={ratio}",
                8.0, scaling, scaling - 8.0, 0.4, "ratio",
                a=a, alpha=alpha,
            )
        )
    return reports


def suite_crease_law(resolutions=(64, 128, 256)) -> list[VerificationReport]:
    """Discrete crease rate on the curved-crease mesh converges to 2*sin(mu)/R."""
    spec = creases.CreaseSpec(R=2.0, mu=math.pi / 6)
    exact = creases.crease_specific_curvature(spec)
    reports = []
    errors = []
    for nu in resolutions:
        mesh = surfaces.gen_curved_crease(spec, strip_width=0.3, nu=nu, nv=max(4, nu // 8))
        rate = oracle.crease_rate_estimate(mesh, 1)
        errors.append(abs(rate - exact) / exact)
        reports.append(
            _rel(
                f"crease-law rate nu={nu}", exact, rate, 0.01,
                R=spec.R, mu=spec.mu, nu=nu,
            )
        )
    for coarse, fine, e0, e1 in zip(resolutions, resolutions[1:], errors, errors[1:]):
        ratio = e1 / e0 if e0 else 0.0
        reports.append(
            _report(
                f"crease-law error contraction nu={coarse}->{fine}",
                0.0, ratio, ratio, 0.55, "ratio",
            )
        )
    return reports


def suite_mudguard(tol: float = 1e-8, gauss_res: int = 256) -> list[VerificationReport]:
    """Closed form vs quadrature on a parameter grid, vs the Gauss map of the
    generated surface at canonical parameters, and the r -> 0 limit."""
    reports = []
    for R in (1.0, 2.0, 10.0):
        for ratio in (0.001, 0.01, 0.05):
            for mu in (0.1, 0.2, 0.4):
                spec = surfaces.MudguardSpec(R=R, r=ratio * R, mu=mu)
                total = quadrature.mudguard_total(spec)
                reports.append(
                    _rel(
                        f"mudguard quadrature R={R} r/R={ratio} mu={mu}",
                        total.closed_form, total.by_quadrature.value, tol,
                        R=R, r=spec.r, mu=mu,
                        evaluations=total.by_quadrature.evaluations,
                    )
                )
    spec = surfaces.MudguardSpec(**CANONICAL_MUDGUARD)
    closed = quadrature.mudguard_closed_form(spec.R, spec.r, spec.mu)
    swept = oracle.gauss_map_integrate(
        surfaces.mudguard_surface(spec),
        (0.0, 2.0 * math.pi, -spec.mu, spec.mu),
        nu=gauss_res, nv=gauss_res,
    )
    reports.append(
        _rel(
            "mudguard gauss map canonical", closed, swept.value, 1e-3,
            converged=swept.converged, **CANONICAL_MUDGUARD,
        )
    )
    # r -> 0: the closed form approaches 4*pi*sin(mu) with O(r/R) deficit
    mu = 0.3
    limit = 4.0 * math.pi * math.sin(mu)
    for ratio in (1e-3, 1e-4):
        closed = quadrature.mudguard_closed_form(1.0, ratio, mu)
        deficit = abs(closed - limit) / limit
        reports.append(
            _report(
                f"mudguard r->0 limit r/R={ratio}",
                limit, closed, deficit, ratio, "relative", mu=mu,
            )
        )
    return reports


def suite_gore(mesh_res: tuple[int, int] = (48, 6)) -> list[VerificationReport]:
    """Seam quadrature total against 4*pi, its 1/n^2 deficit scaling, and
    Gauss-Bonnet on generated gore-sphere meshes."""
    reports = []
    four_pi = 4.0 * math.pi
    total = quadrature.gore_sphere_total(surfaces.GoreSphereSpec(R=1.0, n=1000))
    reports.append(_rel("gore total n=1000", four_pi, total, 1e-4, n=1000))

    deficits = {
        n: four_pi - quadrature.gore_sphere_total(surfaces.GoreSphereSpec(R=1.0, n=n))
        for n in (8, 16, 32, 64)
    }
    for n in (8, 16, 32):
        ratio = deficits[n] / deficits[2 * n]
        reports.append(
            _report(
                f"gore deficit scaling n={n}->{2 * n}",
                4.0, ratio, ratio - 4.0, 0.4, "ratio",
            )
        )
    nu, nv = mesh_res
    for n in (6, 8):
        mesh = surfaces.gen_gore_sphere(surfaces.GoreSphereSpec(R=1.0, n=n), nu, nv)
        total_defect = oracle.angle_defect(mesh).total_defect
        reports.append(
            _report(
                f"gore mesh gauss-bonnet n={n}",
                four_pi, total_defect, total_defect - four_pi, 1e-9, "absolute",
                nu=nu, nv=nv,
            )
        )
    return reports


def suite_twist_independence(patch_res: int = 256) -> list[VerificationReport]:
    """Twisting along a crease changes nothing: the closed form is bit-for-bit
    twist-independent, and folding the twisted patch leaves its discrete total
    defect unchanged."""
    reports = []
    base = creases.crease_specific_curvature(creases.CreaseSpec(R=2.0, mu=0.4, twist=0.0))
    worst = max(
        abs(creases.crease_specific_curvature(creases.CreaseSpec(R=2.0, mu=0.4, twist=t)) - base)
        for t in (-10.0, 0.0, 10.0)
    )
    reports.append(
        _report(
            "twist-independence closed form", base, base + worst, worst, 0.0,
            "absolute", twists=[-10.0, 0.0, 10.0],
        )
    )
    totals = {}
    for mu in (0.0, 0.2):
        mesh = surfaces.gen_twisted_patch(0.1, 1.0, 1.0, mu, patch_res, patch_res)
        totals[mu] = oracle.angle_defect(mesh).total_defect
    reports.append(
        _rel(
            "twist-independence patch defect mu=0 vs 0.2",
            totals[0.0], totals[0.2], 0.01, kxy=0.1, nu=patch_res,
        )
    )
    return reports


def suite_strip_curvature(res: int = 256) -> list[VerificationReport]:
    """Interior angle-defect density of the twisted-prismatic tube against the
    closed-form strip Gaussian curvature."""
    a, alpha, n_strips = 1.0, math.pi / 4, 12
    spec = curvature.tube_spec_for_strips(a, alpha, n_strips)
    expected = curvature.gaussian_curvature(curvature.prismatic_curvatures(spec))
    mesh = surfaces.gen_twisted_prismatic_tube(spec, n_strips, res, res)
    density = oracle.angle_defect(mesh).interior_defect_density()
    return [
        _rel(
            "strip-curvature tube density", expected, density, 0.02,
            a=a, alpha=alpha, n_strips=n_strips, nu=res, nv=res,
        )
    ]


def suite_mohr(count: int = 10_000, seed: int = 20260824) -> list[VerificationReport]:
    """Random-state property checks: Gaussian curvature by product rule vs by
    Mohr circle, and rotation invariance of the principal values."""
    rng = random.Random(seed)
    worst_k, worst_p = 0.0, 0.0
    for _ in range(count):
        state = curvature.CurvatureState(
            kxx=rng.uniform(-10.0, 10.0),
            kyy=rng.uniform(-10.0, 10.0),
            kxy=rng.uniform(-10.0, 10.0),
        )
        scale = max(1.0, state.kxx**2, state.kyy**2, state.kxy**2)
        circle = curvature.mohr_circle(state)
        by_circle = circle.center**2 - circle.radius**2
        worst_k = max(
            worst_k, abs(curvature.gaussian_curvature(state) - by_circle) / scale
        )
        p = curvature.principal_curvatures(state)
        q = curvature.principal_curvatures(state.rotated(rng.uniform(0.0, math.pi)))
        pscale = max(1.0, abs(p[0]), abs(p[1]))
        worst_p = max(worst_p, abs(p[0] - q[0]) / pscale, abs(p[1] - q[1]) / pscale)
    return [
        _report(
            "mohr gaussian-curvature identity", 0.0, worst_k, worst_k, 1e-12,
            "relative", count=count, seed=seed,
        ),
        _report(
            "mohr rotation invariance", 0.0, worst_p, worst_p, 1e-12,
            "relative", count=count, seed=seed,
        ),
    ]


_SUITES = {
    "tube-balance": suite_tube_balance,
    "crease-law": suite_crease_law,
    "mudguard": suite_mudguard,
    "gore": suite_gore,
    "twist-independence": suite_twist_independence,
    "strip-curvature": suite_strip_curvature,
    "mohr": suite_mohr,
}


def run_suite(name: str) -> list[VerificationReport]:
    """Run one named suite, or every suite for name = 'all'."""
    if name == "all":
        reports = []
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ShallowRegimeWarning)
            for suite in _SUITES.values():
                reports.extend(suite())
        return reports
    try:
        suite = _SUITES[name]
    except KeyError:
        raise ParameterError(
            f"unknown suite {name!r}; choose from all, {', '.join(_SUITES)}"
        ) from None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ShallowRegimeWarning)
        return suite()
