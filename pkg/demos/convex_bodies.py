"""Inscribed k-gons of smooth and polygonal convex bodies.

The tangent walk drops a vertex every time the boundary direction has
turned by 2pi/k; no boundary point then sees the k-gon at an angle
smaller than (1 - 2/k) pi.  Refining an inscribed sample and optimising
over it estimates the best achievable aperture.

Run: python3 demos/convex_bodies.py [outdir]
"""
import math
import sys
from pathlib import Path

from apexgon import Disk, Ellipse, SvgScene, estimate_alpha_Ck, min_boundary_aperture, tangent_walk_kgon

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

for body in (Disk(), Ellipse(2, 1)):
    for k in (3, 4, 6):
        Q = tangent_walk_kgon(body, k)
        a = min_boundary_aperture(body, Q)
        print(f"{body.to_dict()['kind']:8s} k={k}: walk aperture {math.degrees(a):7.3f} deg "
              f"(guarantee {math.degrees((1 - 2 / k) * math.pi):.1f})")

tr = estimate_alpha_Ck(Disk(), 4, [8, 16, 32, 64, 128])
for n, a in zip(tr.samples_n, tr.alpha_estimates):
    print(f"disk, k=4, n={n:3d}: {math.degrees(a):.6f} deg")

body = Ellipse(2, 1)
Q = tangent_walk_kgon(body, 5)
scene = SvgScene()
scene.add_polygon([tuple(p) for p in body.boundary_points(400)], stroke="#888")
scene.add_polygon(Q.vertices, stroke="#1a5fb4")
(out / "ellipse_walk_k5.svg").write_text(scene.render())
print("wrote", out / "ellipse_walk_k5.svg")
