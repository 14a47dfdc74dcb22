"""Strip curvature of a creased tube, walked through on Mohr's circle.

A circular cylinder of radius a is developable: its curvature tensor in axes
aligned with helical lines at angle alpha has kxx*kyy - kxy^2 = 0.  Replace
each strip between adjacent lines by a flat ruled strip and the across-line
curvature kyy drops to zero, leaving K = -kxy^2 < 0 in every strip.  This
script prints that story for a range of line angles.
"""

import math

from creasegeom import (
    TubeSpec,
    cylinder_curvatures,
    gaussian_curvature,
    mohr_circle,
    principal_curvatures,
    prismatic_curvatures,
    strip_specific_curvature,
)

A, H = 1.0, 0.05

print(f"cylinder radius a = {A}, strip width h = {H}\n")
header = (
    f"{'alpha':>7} {'kxx':>8} {'kyy':>8} {'kxy':>8} "
    f"{'K(cyl)':>9} {'K(strip)':>9} {'hK(strip)':>10}"
)
print(header)
for deg in (0, 15, 30, 45, 60, 75):
    alpha = math.radians(deg)
    spec = TubeSpec(a=A, alpha=alpha, h=H)
    cyl = cylinder_curvatures(spec)
    strip = prismatic_curvatures(spec)
    print(
        f"{deg:>6}d {cyl.kxx:8.4f} {cyl.kyy:8.4f} {cyl.kxy:8.4f} "
        f"{gaussian_curvature(cyl):9.5f} {gaussian_curvature(strip):9.5f} "
        f"{strip_specific_curvature(spec):10.6f}"
    )

print(
    "\nThe specific curvature -(h/a^2) sin^2(alpha) cos^2(alpha) peaks at "
    "alpha = 45 degrees\nwith magnitude h/(4 a^2) = "
    f"{H / (4 * A * A):.6f}."
)

spec = TubeSpec(a=A, alpha=math.pi / 4, h=H)
circle = mohr_circle(cylinder_curvatures(spec))
k1, k2 = principal_curvatures(cylinder_curvatures(spec))
print(
    f"\nMohr circle at 45 degrees: center {circle.center:.4f}, radius "
    f"{circle.radius:.4f};\nprincipal curvatures {k1:.4f} and {k2:.4f} "
    "(the hoop and the generator of the cylinder)."
)
circle = mohr_circle(prismatic_curvatures(spec))
print(
    f"Flattening the strip moves the circle: center {circle.center:.4f}, "
    f"radius {circle.radius:.4f},\nso K = C^2 - B^2 = "
    f"{circle.center ** 2 - circle.radius ** 2:.5f} < 0."
)
