"""Acceptance gate: the seven criteria the library must meet, each printed as
a single pass/fail line.  Tolerances are pinned here and nowhere else."""

import math
import random
import warnings

import pytest

from creasegeom import (
    CreaseSpec,
    CurvatureState,
    GoreSphereSpec,
    MudguardSpec,
    ShallowRegimeWarning,
    TubeSpec,
    angle_defect,
    crease_rate_estimate,
    crease_specific_curvature,
    gauss_map_integrate,
    gaussian_curvature,
    gen_curved_crease,
    gen_gore_sphere,
    gen_twisted_patch,
    gen_twisted_prismatic_tube,
    gore_sphere_total,
    mohr_circle,
    mudguard_closed_form,
    mudguard_surface,
    mudguard_total,
    principal_curvatures,
    prismatic_curvatures,
    tube_balance,
    tube_spec_for_strips,
)

warnings.simplefilter("ignore", ShallowRegimeWarning)


def report(capsys, number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({title}): {detail}"
    with capsys.disabled():
        print(f"\n{line}", flush=True)
    return line


def test_criterion_1_tube_balance(capsys):
    worst = 0.0
    for a in (1.0, 2.0):
        for alpha in (math.pi / 6, math.pi / 4, math.pi / 3):
            for ratio in (0.01, 0.02, 0.05):
                rep = tube_balance(TubeSpec(a=a, alpha=alpha, h=ratio * a))
                bound = ((ratio * math.cos(alpha) ** 2) ** 2) / 24.0
                worst = max(worst, rep.relative_residual / bound)
    scalings = []
    for ratio in (0.02, 0.05):
        r1 = tube_balance(TubeSpec(1.0, math.pi / 4, ratio)).residual
        r2 = tube_balance(TubeSpec(1.0, math.pi / 4, ratio / 2)).residual
        scalings.append(r1 / r2)
    cubic_ok = all(abs(s - 8.0) <= 0.4 for s in scalings)
    ok = worst <= 1.0 and cubic_ok
    line = report(
        capsys, 1, "tube balance", ok,
        f"worst residual/bound {worst:.3f} <= 1, h-halving ratios "
        f"{[f'{s:.3f}' for s in scalings]} within 8 +/- 0.4",
    )
    assert ok, line


def test_criterion_2_crease_law(capsys):
    spec = CreaseSpec(R=2.0, mu=math.pi / 6)
    exact = crease_specific_curvature(spec)
    assert exact == pytest.approx(0.5)
    errors = []
    for nu in (64, 128, 256):
        mesh = gen_curved_crease(spec, strip_width=0.3, nu=nu, nv=max(4, nu // 8))
        rate = crease_rate_estimate(mesh, 1)
        errors.append(abs(rate - exact) / exact)
    halving = all(e1 <= 0.55 * e0 for e0, e1 in zip(errors, errors[1:]))
    ok = halving and errors[-1] <= 0.01
    line = report(
        capsys, 2, "crease law", ok,
        f"errors at nu=64/128/256: {[f'{e:.2e}' for e in errors]}, "
        f"final <= 1% and at least halving per refinement",
    )
    assert ok, line


def test_criterion_3_twist_independence(capsys):
    rates = {
        crease_specific_curvature(CreaseSpec(R=2.0, mu=0.4, twist=t))
        for t in (-10.0, 0.0, 10.0)
    }
    bitwise_ok = len(rates) == 1
    totals = {}
    for mu in (0.0, 0.2):
        mesh = gen_twisted_patch(0.1, 1.0, 1.0, mu, 256, 256)
        totals[mu] = angle_defect(mesh).total_defect
    rel = abs(totals[0.2] - totals[0.0]) / abs(totals[0.0])
    ok = bitwise_ok and rel <= 0.01
    line = report(
        capsys, 3, "twist independence", ok,
        f"closed form bit-identical across twists: {bitwise_ok}, patch defect "
        f"mu=0 vs 0.2 differs by {rel:.2e} <= 1e-2",
    )
    assert ok, line


def test_criterion_4_mudguard(capsys):
    worst_quad = 0.0
    for R in (1.0, 2.0, 10.0):
        for ratio in (0.001, 0.01, 0.05):
            for mu in (0.1, 0.2, 0.4):
                total = mudguard_total(MudguardSpec(R=R, r=ratio * R, mu=mu))
                worst_quad = max(
                    worst_quad, abs(total.residual) / total.closed_form
                )
    spec = MudguardSpec(R=10.0, r=0.1, mu=0.2)
    closed = mudguard_closed_form(spec.R, spec.r, spec.mu)
    swept = gauss_map_integrate(
        mudguard_surface(spec), (0.0, 2 * math.pi, -spec.mu, spec.mu), 256, 256
    )
    gauss_rel = abs(swept.value - closed) / closed
    limit_ok = all(
        abs(mudguard_closed_form(1.0, r, 0.3) - 4 * math.pi * math.sin(0.3))
        / (4 * math.pi * math.sin(0.3))
        <= r
        for r in (1e-2, 1e-3, 1e-4)
    )
    ok = worst_quad <= 1e-8 and gauss_rel <= 1e-3 and limit_ok
    line = report(
        capsys, 4, "mudguard", ok,
        f"quadrature vs closed form worst {worst_quad:.2e} <= 1e-8, gauss map "
        f"{gauss_rel:.2e} <= 1e-3, r->0 deficit O(r/R): {limit_ok}",
    )
    assert ok, line


def test_criterion_5_gore_sphere(capsys):
    four_pi = 4 * math.pi
    total = gore_sphere_total(GoreSphereSpec(R=1.0, n=1000))
    large_n_rel = abs(total - four_pi) / four_pi
    deficits = {
        n: four_pi - gore_sphere_total(GoreSphereSpec(R=1.0, n=n))
        for n in (8, 16, 32, 64)
    }
    ratios = [deficits[n] / deficits[2 * n] for n in (8, 16, 32)]
    scaling_ok = all(abs(r - 4.0) <= 0.4 for r in ratios)
    gb_worst = max(
        abs(angle_defect(gen_gore_sphere(GoreSphereSpec(R=1.0, n=n), 32, 4)).total_defect
            - four_pi)
        for n in (6, 8, 12)
    )
    ok = large_n_rel <= 1e-4 and scaling_ok and gb_worst <= 1e-9
    line = report(
        capsys, 5, "gore sphere", ok,
        f"n=1000 off 4pi by {large_n_rel:.2e} <= 1e-4, deficit ratios "
        f"{[f'{r:.3f}' for r in ratios]} ~ 4, Gauss-Bonnet worst {gb_worst:.2e} <= 1e-9",
    )
    assert ok, line


def test_criterion_6_strip_curvature_oracle(capsys):
    spec = tube_spec_for_strips(1.0, math.pi / 4, 12)
    expected = gaussian_curvature(prismatic_curvatures(spec))
    mesh = gen_twisted_prismatic_tube(spec, 12, 256, 256)
    density = angle_defect(mesh).interior_defect_density()
    rel = abs(density - expected) / abs(expected)
    ok = rel <= 0.02
    line = report(
        capsys, 6, "strip curvature oracle", ok,
        f"tube defect density {density:.6f} vs {expected:.6f}, "
        f"rel {rel:.2e} <= 2e-2",
    )
    assert ok, line


def test_criterion_7_mohr_property_suite(capsys):
    rng = random.Random(20260824)
    worst_k, worst_p = 0.0, 0.0
    for _ in range(10_000):
        state = CurvatureState(
            kxx=rng.uniform(-10, 10),
            kyy=rng.uniform(-10, 10),
            kxy=rng.uniform(-10, 10),
        )
        scale = max(1.0, state.kxx**2, state.kyy**2, state.kxy**2)
        circle = mohr_circle(state)
        worst_k = max(
            worst_k,
            abs(gaussian_curvature(state) - (circle.center**2 - circle.radius**2))
            / scale,
        )
        p = principal_curvatures(state)
        q = principal_curvatures(state.rotated(rng.uniform(0, math.pi)))
        pscale = max(1.0, abs(p[0]), abs(p[1]))
        worst_p = max(
            worst_p, abs(p[0] - q[0]) / pscale, abs(p[1] - q[1]) / pscale
        )
    ok = worst_k <= 1e-12 and worst_p <= 1e-12
    line = report(
        capsys, 7, "Mohr property suite", ok,
        f"10000 states: curvature identity worst {worst_k:.2e}, rotation "
        f"invariance worst {worst_p:.2e}, both <= 1e-12",
    )
    assert ok, line
