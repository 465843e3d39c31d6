"""Best k-vertex subpolygons of a few small polygons, both error measures.

Run: python3 demos/optimal_subpolygons.py [outdir]
"""
import math
import sys
from pathlib import Path

import numpy as np

from apexgon import (APERTURE, HAUSDORFF, SvgScene, brute_force_opt, optimal_subpolygon,
                     random_convex, regular_polygon, validate_polygon)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

square = validate_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
res = optimal_subpolygon(square, HAUSDORFF, 3)
print("square, k=3:", res.chosen, "error", res.error, "(sqrt(2)/2 =", math.sqrt(2) / 2, ")")

# A regular (k+1)-gon has to drop one vertex, which then sees the rest
# at its interior angle.
for k in range(3, 8):
    r = optimal_subpolygon(regular_polygon(k + 1), APERTURE, k)
    print(f"regular {k + 1}-gon, k={k}: aperture {math.degrees(r.aperture):.3f} deg")

# The candidate search and the brute-force enumeration agree exactly.
P = random_convex(13, np.random.default_rng(7))
for k in (3, 5, 8):
    a = optimal_subpolygon(P, HAUSDORFF, k)
    b = brute_force_opt(P, HAUSDORFF, k)
    print(f"random 13-gon k={k}: search {a.error:.6f} brute {b.error:.6f} chosen {a.chosen}")

scene = SvgScene()
scene.add_polygon(P.vertices, stroke="#888")
best = optimal_subpolygon(P, HAUSDORFF, 5)
scene.add_polygon(P.subpolygon(best.chosen).vertices, stroke="#1a5fb4")
scene.add_point(P[best.witness], fill="#c33")
(out / "random13_k5.svg").write_text(scene.render())
print("wrote", out / "random13_k5.svg")
