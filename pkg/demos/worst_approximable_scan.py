"""Scan random polygons for worst-approximable instances.

Only (k+1)-gons should ever be worst-approximable; larger polygons always
have a proper subpolygon that is at least as hard to approximate.

Run: python3 demos/worst_approximable_scan.py
"""
from apexgon import APERTURE, HAUSDORFF, ScanConfig, perimeter_bound_check, regular_polygon, run_scan

for measure in (HAUSDORFF, APERTURE):
    for k in (3, 4):
        out = run_scan(ScanConfig(k, (k + 1, 10), 30, seed=1, measure=measure))
        line = " ".join(f"n={n}:{c['worst']}/{c['instances']}" for n, c in sorted(out.per_n.items()))
        print(f"{measure.value:9s} k={k}  worst/instances  {line}")

# (k+1)-gons rescaled to phi_k = 1 have perimeter at least n / sin(pi / n)
for k in range(3, 7):
    c = perimeter_bound_check(regular_polygon(k + 1), k)
    print(f"regular {k + 1}-gon: perimeter {c.perimeter:.9f} bound {c.bound:.9f}")
