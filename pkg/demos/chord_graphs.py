"""Chord graphs and the structural audit.

At an error level sigma the chord from a vertex is its longest feasible
diagonal.  For a worst-approximable polygon with sigma set to the largest
phi_k of its proper subpolygons, the chords all skip the same number of
vertices and the leftover "base" edges line up with unique witnesses.

Run: python3 demos/chord_graphs.py [outdir]
"""
import sys
import warnings
from pathlib import Path

import numpy as np

from apexgon import (HAUSDORFF, HypothesisNotEstablished, SvgScene, audit_structure,
                     build_chord_graph, is_worst_approximable, random_convex, regular_polygon)
from apexgon._tables import tables_for

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

# a random pentagon is always worst-approximable for k = 4
P = random_convex(5, np.random.default_rng(3))
v = is_worst_approximable(P, HAUSDORFF, 4)
print("worst-approximable:", v.is_worst, "phi_4 =", v.phi_k_P)
rep = audit_structure(P, HAUSDORFF, 4, v.max_proper_phi_k, established=True)
print("chord length m =", rep.chord_length_m, "base length =", rep.base_length,
      "shift r =", rep.r_shift, "all checks hold:", rep.all_hold)

# regular 10-gon (k = 3, m = 3) between the 3-skip and 4-skip levels
k, m = 3, 3
R = regular_polygon(k * m + 1)
T = tables_for(R, HAUSDORFF)
sigma = (T.D[0, m] + T.D[0, m + 1]) / 2
G = build_chord_graph(R, HAUSDORFF, sigma)
print("regular 10-gon successors:", G.successor)
with warnings.catch_warnings():
    warnings.simplefilter("ignore", HypothesisNotEstablished)
    r10 = audit_structure(R, HAUSDORFF, k, sigma)
print("bases:", [(s, t) for s, t, _ in r10.bases])

scene = SvgScene()
scene.add_polygon(R.vertices, stroke="#888")
for i, j in enumerate(G.successor):
    scene.add_chord(R[i], R[j])
for i, p in enumerate(R.vertices):
    scene.add_label(p, str(i))
(out / "chords_10gon.svg").write_text(scene.render())
print("wrote", out / "chords_10gon.svg")
