"""Solid-angle laws for creases, and the balance inside a creased tube.

Three closed forms, each the signed area swept on the unit sphere by the
surface normals of a small patch:

  twisted patch          -dxi * 2 sin(dgamma/2)        (negative)
  twisted + creased      the same, times cos(mu)       (still negative)
  across a curved crease +dxi * 2 sin(mu)              (positive)

The twisted-prismatic tube balances the two signs: flat twisted strips carry
negative curvature, the folds between them carry positive curvature, and the
totals cancel to third order in the strip width.
"""

import math

from creasegeom import (
    CreaseSpec,
    TubeSpec,
    crease_specific_curvature,
    curved_crease_patch_solid_angle,
    tube_balance,
    twisted_crease_solid_angle,
    twisted_patch_solid_angle,
)

dxi, dgamma = 0.1, 0.2
print(f"patch extents dxi = {dxi}, dgamma = {dgamma}")
print(f"  twisted patch:           {twisted_patch_solid_angle(dxi, dgamma):+.6f} sr")
for mu in (0.1, 0.2, 0.3):
    print(
        f"  creased at mu = {mu}:      "
        f"{twisted_crease_solid_angle(dxi, dgamma, mu):+.6f} sr"
        f"   (x cos mu = {math.cos(mu):.4f})"
    )
print(
    f"  curved crease, mu = 0.3: "
    f"{curved_crease_patch_solid_angle(dxi, 0.3):+.6f} sr (sign flips)"
)

print("\ntwist never enters the crease law:")
for twist in (-10.0, 0.0, 10.0):
    spec = CreaseSpec(R=2.0, mu=math.pi / 6, twist=twist)
    print(
        f"  twist {twist:+5.1f}: specific curvature "
        f"{crease_specific_curvature(spec):.12f} per unit length"
    )

print("\ncreased-tube balance (a = 1, alpha = 45 degrees):")
print(f"{'h':>6} {'strip term':>12} {'crease term':>12} {'residual':>12} {'rel':>10}")
for h in (0.1, 0.05, 0.025, 0.0125):
    rep = tube_balance(TubeSpec(a=1.0, alpha=math.pi / 4, h=h))
    print(
        f"{h:6.4f} {rep.strip_term:12.8f} {rep.crease_term:12.8f} "
        f"{rep.residual:12.3e} {rep.relative_residual:10.2e}"
    )
print(
    "\nHalving h cuts the residual by ~8: the mismatch is the third-order gap "
    "sin(x) - x\nin the fold angle, exactly as the closed forms predict."
)
