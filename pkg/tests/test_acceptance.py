"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (shown even under pytest's
output capture).  Run directly with ``python3 tests/test_acceptance.py`` to
get just the summary lines.
"""
import functools
import math
import sys
import time

import numpy as np
import pytest

from apexgon import (APERTURE, HAUSDORFF, DSigmaRegion, Disk, Ellipse, Generator,
                     HypothesisNotEstablished, PolygonBody, PreconditionViolated, ScanConfig,
                     audit_structure, brute_force_opt, d_sigma_contains, edge_length_identity_check,
                     estimate_alpha_Ck, is_worst_approximable, min_boundary_aperture,
                     optimal_subpolygon, perimeter_bound_check, psi, random_convex,
                     regular_polygon, run_scan, stick_out_radius_check, tangent_walk_kgon,
                     unit_perimeter)
from apexgon._tables import tables_for
from apexgon.measures import psi_table

_capture = None


def report(num, ok, detail, seconds):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {detail} ({seconds:.1f}s)"
    if _capture is not None:
        with _capture.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


@pytest.fixture(autouse=True)
def _show(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


def rng_for(*key):
    return np.random.default_rng([20240, *key])


# 1 -------------------------------------------------------------------------

def test_c01_aperture_tight_on_regular():
    t = time.perf_counter()
    worst = 0.0
    for k in range(3, 11):
        a = optimal_subpolygon(regular_polygon(k + 1), APERTURE, k).aperture
        worst = max(worst, abs(a - (1 - 2 / (k + 1)) * math.pi))
    dt = time.perf_counter() - t
    ok = worst <= 1e-9 and dt < 1.0
    assert report(1, ok, f"regular (k+1)-gon aperture, max deviation {worst:.1e}", dt)


# 2 -------------------------------------------------------------------------

def test_c02_hausdorff_bound():
    t = time.perf_counter()
    tight = 0.0
    for k in range(3, 11):
        P = unit_perimeter(regular_polygon(k + 1))
        e = optimal_subpolygon(P, HAUSDORFF, k).error
        tight = max(tight, abs(e - math.sin(math.pi / (k + 1)) / (k + 1)))
    slack, violations = math.inf, 0
    for i in range(500):
        rng = rng_for(2, i)
        n = int(rng.integers(3, 31))
        k = int(rng.integers(3, 9))
        P = unit_perimeter(random_convex(n, rng))
        gap = math.sin(math.pi / (k + 1)) / (k + 1) - optimal_subpolygon(P, HAUSDORFF, k).error
        slack = min(slack, gap)
        violations += gap < -1e-9
    dt = time.perf_counter() - t
    ok = tight <= 1e-9 and violations == 0 and dt < 30
    assert report(2, ok, f"tightness dev {tight:.1e}, 500 random, {violations} violations, "
                         f"min slack {slack:.2e}", dt)


# 3 -------------------------------------------------------------------------

def test_c03_aperture_guarantee():
    t = time.perf_counter()
    violations, slack = 0, math.inf
    for i in range(500):
        rng = rng_for(3, i)
        P = random_convex(int(rng.integers(3, 31)), rng)
        for k in range(3, 9):
            gap = (math.pi - optimal_subpolygon(P, APERTURE, k).error) - (1 - 2 / (k + 1)) * math.pi
            slack = min(slack, gap)
            violations += gap < -1e-9
    dt = time.perf_counter() - t
    ok = violations == 0 and dt < 30
    assert report(3, ok, f"500 random x k=3..8, {violations} violations, min slack {slack:.2e}", dt)


# 4 -------------------------------------------------------------------------

def test_c04_search_equals_brute_force():
    t = time.perf_counter()
    worst, cases = 0.0, 0
    for i in range(200):
        rng = rng_for(4, i)
        P = random_convex(int(rng.integers(5, 15)), rng)
        for m in (HAUSDORFF, APERTURE):
            for k in range(3, P.n):
                d = abs(optimal_subpolygon(P, m, k).error - brute_force_opt(P, m, k).error)
                worst = max(worst, d)
                cases += 1
    dt = time.perf_counter() - t
    ok = worst <= 1e-12 and dt < 60
    assert report(4, ok, f"{cases} cases, max |search - brute| {worst:.1e}", dt)


# 5 -------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _worst_size_scans():
    """Scans over n in [k+1, 12]; the n = k+1 cells feed criterion 6."""
    t = time.perf_counter()
    outs = [run_scan(ScanConfig(k, (k + 1, 12), 100, Generator.RANDOM_CONVEX, 5, m))
            for k in (3, 4, 5) for m in (HAUSDORFF, APERTURE)]
    return outs, time.perf_counter() - t


def test_c05_worst_size():
    outs, dt = _worst_size_scans()
    t = time.perf_counter()
    bad = sum(len(o.counterexamples) for o in outs)
    checked = sum(c["instances"] for o in outs for n, c in o.per_n.items() if n > o.config.k + 1)
    regular_ok = all(is_worst_approximable(regular_polygon(k + 1), m, k).is_worst
                     for k in (3, 4, 5) for m in (HAUSDORFF, APERTURE))
    dt += time.perf_counter() - t
    ok = bad == 0 and regular_ok and dt < 300
    assert report(5, ok, f"{checked} instances with n > k+1, {bad} worst-approximable; "
                         f"regular (k+1)-gons worst: {regular_ok}", dt)


# 6 -------------------------------------------------------------------------

def test_c06_structure_audit():
    outs, _ = _worst_size_scans()
    t = time.perf_counter()
    audited, failures = 0, []
    for o in outs:
        for P, verdict in o.worst:
            if P.n != o.config.k + 1:
                continue
            r = audit_structure(P, o.config.measure, o.config.k, verdict.max_proper_phi_k,
                                established=True)
            audited += 1
            if not (r.all_hold and r.chord_length_m == 1):
                failures.append(r.to_dict())
    # general chord length on regular (k m + 1)-gons between skip levels
    general = 0
    for k, mm in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]:
        n = k * mm + 1
        P = regular_polygon(n)
        for m in (HAUSDORFF, APERTURE):
            T = tables_for(P, m)
            sigma = (T.D[0, mm] + T.D[0, mm + 1]) / 2
            with pytest.warns(HypothesisNotEstablished):
                r = audit_structure(P, m, k, sigma)
            ok_m = (r.successor == [(i + mm) % n for i in range(n)] and r.degrees_one
                    and r.chord_length_m == mm and r.base_length == mm + 1 and r.n_eq_km_plus_1)
            general += ok_m
            if not ok_m:
                failures.append(r.to_dict())
    dt = time.perf_counter() - t
    ok = not failures and audited == 600
    assert report(6, ok, f"{audited} worst (k+1)-gons audited, {general}/10 general-m examples, "
                         f"{len(failures)} failures", dt)


# 7 -------------------------------------------------------------------------

def _monotone_violation(T):
    """Largest psi(v, s', t') - psi(v, s, t) over s <= s' < v < t' <= t."""
    n = T.shape[0]
    worst = -math.inf
    a = np.arange(1, n)
    for v in range(n):
        # A[a, b] = psi(v, v - a, v + b) for a + b <= n - 1
        A = T[v][(v - a[:, None]) % n, (v + a[None, :]) % n]
        valid = (a[:, None] + a[None, :]) <= n - 1
        A = np.where(valid, A, np.nan)
        inner = A[:, :, None, None]          # (a', b')
        outer = A[None, None, :, :]          # (a, b)
        dom = ((a[:, None, None, None] <= a[None, None, :, None])
               & (a[None, :, None, None] <= a[None, None, None, :]))
        diff = np.where(dom & valid[:, :, None, None] & valid[None, None, :, :],
                        inner - outer, -np.inf)
        worst = max(worst, float(np.nanmax(diff)))
    return worst


def test_c07_psi_monotone():
    t = time.perf_counter()
    worst = -math.inf
    for i in range(50):
        rng = rng_for(7, i)
        n = int(rng.integers(5, 11))
        P = random_convex(n, rng)
        for m in (HAUSDORFF, APERTURE):
            worst = max(worst, _monotone_violation(psi_table(P, m)))
    dt = time.perf_counter() - t
    ok = worst <= 1e-12
    assert report(7, ok, f"50 polygons n<=10, both measures, max violation {max(worst, 0):.1e}", dt)


# 8 -------------------------------------------------------------------------

def test_c08_perimeter_bound():
    t = time.perf_counter()
    violations = 0
    for i in range(1000):
        rng = rng_for(8, i)
        k = int(rng.integers(3, 9))
        c = perimeter_bound_check(random_convex(k + 1, rng), k)
        violations += not c.holds
    eq_dev, ident_dev, gsum_dev = 0.0, 0.0, 0.0
    for k in range(3, 9):
        P = regular_polygon(k + 1)
        c = perimeter_bound_check(P, k)
        eq_dev = max(eq_dev, abs(c.perimeter - c.bound))
        Pn = P.scaled(1.0 / optimal_subpolygon(P, HAUSDORFF, k).error)
        rep = edge_length_identity_check(Pn)
        ident_dev = max(ident_dev, max(rep.edge_residuals))
        gsum_dev = max(gsum_dev, abs(rep.gamma_sum - 2 * math.pi))
    dt = time.perf_counter() - t
    ok = violations == 0 and eq_dev <= 1e-9 and ident_dev <= 1e-9 and gsum_dev <= 1e-9
    assert report(8, ok, f"1000 random, {violations} violations; regular equality {eq_dev:.1e}, "
                         f"edge identity {ident_dev:.1e}, gamma sum {gsum_dev:.1e}", dt)


# 9 -------------------------------------------------------------------------

def _stick_out_instances(count, rng):
    """Vectorised rejection sampling; line is the x axis pointing in +x."""
    out = []
    while len(out) < count:
        B = 200_000
        cy = rng.uniform(0.01, 3, B); R = cy + rng.uniform(0.01, 3, B); cx = rng.uniform(-1, 1, B)
        dy = rng.uniform(0.01, 1.5, B); r = dy + rng.uniform(0.01, 1.5, B); dx = rng.uniform(-1, 1, B)
        hw, hwp = np.sqrt(R**2 - cy**2), np.sqrt(r**2 - dy**2)
        nested = (dx - hwp >= cx - hw + 1e-9) & (dx + hwp <= cx + hw - 1e-9)
        px = dx + rng.uniform(-1, 1, B) * r
        py = -rng.uniform(1e-9, 1, B) * (r - dy)
        in_dp = np.hypot(px - dx, py - dy) < r * (1 - 1e-9)
        out_d = np.hypot(px - cx, py - cy) > R * (1 + 1e-9)
        keep = np.flatnonzero(nested & in_dp & out_d)
        for j in keep[: count - len(out)]:
            out.append(((float(cx[j]), float(cy[j])), float(R[j]), (float(dx[j]), float(dy[j])),
                        float(r[j]), (float(px[j]), float(py[j]))))
    return out


def test_c09_dsigma_and_stick_out():
    t = time.perf_counter()
    rng = rng_for(9)
    disagree = 0
    for _ in range(10_000):
        p = tuple(rng.uniform(-2, 2, 2))
        q = tuple(rng.uniform(-2, 2, 2))
        sigma = float(rng.uniform(1e-3, math.pi - 1e-3))
        x = tuple(rng.uniform(-3, 3, 2))
        cross = (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0])
        oracle = cross <= 0 and psi(APERTURE, x, p, q) <= sigma
        disagree += d_sigma_contains(DSigmaRegion(p, q, sigma), x) != oracle
    smaller, precondition_failures = 0, 0
    for c, R, cp, r, p in _stick_out_instances(100_000, rng):
        try:
            smaller += stick_out_radius_check((c, R), (cp, r), ((0.0, 0.0), (1.0, 0.0)), p)
        except PreconditionViolated:
            precondition_failures += 1
    dt = time.perf_counter() - t
    checked = 100_000 - precondition_failures
    ok = disagree == 0 and smaller == checked == 100_000
    assert report(9, ok, f"D_sigma {disagree}/10000 disagreements; stick-out {smaller}/{checked} "
                         f"smaller radius", dt)


# 10 ------------------------------------------------------------------------

def test_c10_tangent_walk_and_refinement():
    t = time.perf_counter()
    bodies = [Disk(), Ellipse(2, 1)]
    for i in range(20):
        rng = rng_for(10, i)
        bodies.append(PolygonBody(random_convex(int(rng.integers(6, 25)), rng)))
    worst = math.inf
    for body in bodies:
        for k in range(3, 9):
            Q = tangent_walk_kgon(body, k)
            worst = min(worst, min_boundary_aperture(body, Q) - (1 - 2 / k) * math.pi)
    tr = estimate_alpha_Ck(Disk(), 4, [8, 16, 32, 64, 128])
    conv = abs(tr.alpha_estimates[-1] - 0.75 * math.pi)
    dt = time.perf_counter() - t
    ok = worst >= -1e-6 and conv <= 1e-3
    assert report(10, ok, f"22 bodies x k=3..8, min margin {worst:.2e}; disk k=4 at n=128 "
                          f"off by {conv:.1e}", dt)


if __name__ == "__main__":
    results = []
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c") and callable(fn):
            try:
                fn()
                results.append(True)
            except AssertionError:
                results.append(False)
    sys.exit(0 if all(results) else 1)
