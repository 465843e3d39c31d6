import math

import numpy as np
import pytest

from apexgon import (APERTURE, HAUSDORFF, Method, SizeLimit, brute_force_opt, candidate_errors,
                     feasible_cover, greedy_wrap, optimal_subpolygon, phi, phi_k, regular_polygon,
                     unit_perimeter, validate_polygon)
from conftest import rand_poly


@pytest.mark.parametrize("solver", [brute_force_opt, optimal_subpolygon])
def test_square_k3(square, solver):
    res = solver(square, HAUSDORFF, 3)
    assert res.chosen == (0, 1, 2)
    assert res.error == pytest.approx(math.sqrt(2) / 2, abs=1e-15)
    assert res.witness == 3


@pytest.mark.parametrize("solver", [brute_force_opt, optimal_subpolygon])
def test_pentagon_aperture(solver):
    res = solver(regular_polygon(5), APERTURE, 4)
    assert res.error == pytest.approx(2 * math.pi / 5, abs=1e-12)
    assert res.aperture == pytest.approx(3 * math.pi / 5, abs=1e-12)
    assert res.to_dict()["aperture_degrees"] == pytest.approx(108.0, abs=1e-9)


def test_small_polygon_trivial(square):
    res = optimal_subpolygon(square, HAUSDORFF, 5)
    assert res.chosen == (0, 1, 2, 3) and res.error == 0.0 and res.witness is None
    assert brute_force_opt(square, APERTURE, 4).error == 0.0


def test_k_below_three(square):
    with pytest.raises(ValueError):
        optimal_subpolygon(square, HAUSDORFF, 2)
    with pytest.raises(ValueError):
        brute_force_opt(square, HAUSDORFF, 2)


def test_size_limits():
    P = rand_poly(20, 0)
    with pytest.raises(SizeLimit):
        brute_force_opt(P, HAUSDORFF, 3)
    with pytest.raises(SizeLimit):
        optimal_subpolygon(P, HAUSDORFF, 3, max_n=10)


def test_unit_perimeter_pentagon():
    P = unit_perimeter(regular_polygon(5))
    val = optimal_subpolygon(P, HAUSDORFF, 4).error
    assert val == pytest.approx(math.sin(math.pi / 5) / 5, abs=1e-12)
    assert val == pytest.approx(0.1175570505, abs=1e-10)
    assert brute_force_opt(P, HAUSDORFF, 4).error == pytest.approx(val, abs=1e-15)


def test_candidates_square(square):
    c = candidate_errors(square, HAUSDORFF)
    assert c == pytest.approx([math.sqrt(2) / 2], abs=1e-15)


def test_candidates_hexagon():
    # by hand: skip-1 triples give 1 - cos 60deg, the long diagonal gives
    # sin 60deg, and the span-4 outer pairs give 1 and 3/2
    c = candidate_errors(regular_polygon(6), HAUSDORFF)
    assert c == pytest.approx([0.5, math.sqrt(3) / 2, 1.0, 1.5], abs=1e-12)


def test_candidates_triangle():
    assert candidate_errors(regular_polygon(3), HAUSDORFF).size == 0


def test_candidates_contain_optimum():
    for seed in range(20):
        P = rand_poly(11, seed)
        for m in (HAUSDORFF, APERTURE):
            c = candidate_errors(P, m)
            for k in (3, 5, 8):
                e = brute_force_opt(P, m, k).error
                assert np.min(np.abs(c - e)) <= 1e-12


def test_feasible_cover_consistency():
    for seed in range(15):
        P = rand_poly(10, seed)
        for m in (HAUSDORFF, APERTURE):
            for k in (3, 4, 6):
                opt = brute_force_opt(P, m, k).error
                Q = feasible_cover(P, m, k, opt)
                assert Q is not None and len(Q) == k
                assert phi(m, P, Q)[0] <= opt + 1e-12
                assert feasible_cover(P, m, k, opt * (1 - 1e-6) - 1e-9) is None


def test_cover_everything_feasible():
    P = rand_poly(9, 4)
    assert len(feasible_cover(P, HAUSDORFF, 3, 1e9)) == 3


def test_greedy_wrap_jumps_chords(square):
    assert greedy_wrap(square, HAUSDORFF, 0, 0.8) == [0, 2]
    assert greedy_wrap(square, HAUSDORFF, 1, 0.0) == [1, 2, 3, 0]


def test_result_invariants():
    rng = np.random.default_rng(8)
    for seed in range(40):
        n = int(rng.integers(5, 15))
        P = rand_poly(n, seed)
        k = int(rng.integers(3, n))
        for m in (HAUSDORFF, APERTURE):
            for res in (optimal_subpolygon(P, m, k), brute_force_opt(P, m, k)):
                assert len(res.chosen) <= k
                assert list(res.chosen) == sorted(set(res.chosen))
                assert res.error == pytest.approx(phi(m, P, res.chosen)[0], abs=1e-12)
                assert res.error > 0.0


def test_brute_force_tie_break_is_lexicographic(square):
    # every 3-subset of the square has the same error
    assert brute_force_opt(square, APERTURE, 3).chosen == (0, 1, 2)


def test_methods_recorded(square):
    assert brute_force_opt(square, HAUSDORFF, 3).method is Method.BRUTE_FORCE
    assert optimal_subpolygon(square, HAUSDORFF, 3).method is Method.CANDIDATE_SEARCH
    assert phi_k(square, HAUSDORFF, 3) == optimal_subpolygon(square, HAUSDORFF, 3).error


def test_large_polygon_search_runs():
    P = rand_poly(120, 1)
    res = optimal_subpolygon(P, HAUSDORFF, 6)
    assert len(res.chosen) == 6
    assert res.error == pytest.approx(phi(HAUSDORFF, P, res.chosen)[0], abs=1e-12)


def test_brute_force_uses_exact_k():
    P = validate_polygon(regular_polygon(7).vertices)
    assert len(brute_force_opt(P, HAUSDORFF, 4).chosen) == 4
