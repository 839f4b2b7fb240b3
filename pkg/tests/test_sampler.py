import math
from collections import Counter

import numpy as np
import pytest

from sawlab.enum import BudgetExceeded, count_saws
from sawlab.enum.naive import all_walks
from sawlab.graph import make_family, quotient_cylinder
from sawlab.sampler import (
    DisplacementRow,
    Unranker,
    displacement_stats,
    exact_mean_sq_displacement,
    nu_estimate,
    sample_uniform,
    speed_probe,
    uniform_below,
)

Z2 = make_family("hypercubic", dim=2)
TREE = make_family("tree", delta=3)


def test_tree_displacement_is_length():
    for s in sample_uniform(TREE, 5, 50, seed=1):
        assert s.displacement == 5
        assert len(s.vertices) == 6


def test_samples_are_valid_walks():
    for G in (Z2, make_family("hexagonal"), make_family("bridge", delta=4), quotient_cylinder(3)):
        for s in sample_uniform(G, 7, 30, seed=3):
            assert len(set(s.vertices)) == 8
            assert s.vertices[0] == G.root
            for a, b in zip(s.vertices, s.vertices[1:]):
                assert b in {w for w, _, _ in G.neighbor_rule(a)}
            assert 0 <= s.displacement <= 7


def test_seed_determinism_and_prefix_stability():
    a = sample_uniform(Z2, 8, 40, seed=11)
    b = sample_uniform(Z2, 8, 40, seed=11)
    c = sample_uniform(Z2, 8, 10, seed=11)
    d = sample_uniform(Z2, 8, 40, seed=12)
    assert a == b
    assert a[:10] == c
    assert a != d


def test_unranking_bijective_z2():
    for n in range(7):
        u = Unranker(Z2, n)
        walks = [tuple(u.unrank(r)) for r in range(u.total)]
        assert u.total == count_saws(Z2, n).values[n]
        assert len(set(walks)) == u.total
        # canonical order matches the oracle's materialized list
        assert set(walks) == {tuple(w) for w, _ in all_walks(Z2, n)}
    with pytest.raises(ValueError):
        Unranker(Z2, 3).unrank(36)


def test_unranking_memo_method_agrees():
    L = make_family("ladder")
    a, b = Unranker(L, 9, method="memo"), Unranker(L, 9, method="backtrack")
    assert a.total == b.total
    assert [a.unrank(r) for r in range(a.total)] == [b.unrank(r) for r in range(b.total)]


def test_z2_two_step_endpoint_frequencies():
    samples = sample_uniform(Z2, 2, 6000, seed=5)
    diagonal = sum(1 for s in samples if all(abs(c) == 1 for c in s.vertices[-1])) / len(samples)
    # 8 of the 12 two-step walks end on a diagonal neighbor
    sd = math.sqrt((2 / 3) * (1 / 3) / len(samples))
    assert abs(diagonal - 8 / 12) < 4 * sd


def test_uniform_over_all_walks():
    # chi-square style check on Z^2, n=3: 36 walks, 36000 draws
    samples = sample_uniform(Z2, 3, 36000, seed=9)
    counts = Counter(s.vertices for s in samples)
    assert len(counts) == 36
    expected = 1000
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    assert chi2 < 80  # 35 degrees of freedom, p ~ 2e-5


def test_multigraph_weighting_in_samples():
    # from the root of bridge(4): 3 of 4 one-step walks cross the bundle
    samples = sample_uniform(make_family("bridge", delta=4), 1, 4000, seed=2)
    freq = sum(1 for s in samples if s.vertices[-1] == (1,)) / len(samples)
    assert abs(freq - 0.75) < 4 * math.sqrt(0.75 * 0.25 / 4000)


def test_uniform_below_big_bounds():
    rng = np.random.Generator(np.random.Philox(1))
    bound = 3**100
    draws = [uniform_below(rng, bound) for _ in range(200)]
    assert all(0 <= d < bound for d in draws)
    assert max(draws) > bound // 2
    assert uniform_below(rng, 1) == 0
    with pytest.raises(ValueError):
        uniform_below(rng, 0)


def test_sampler_refuses_over_budget():
    with pytest.raises(BudgetExceeded):
        sample_uniform(Z2, 14, 5, seed=0, budget=1000)
    with pytest.raises(ValueError):
        sample_uniform(Z2, 4, 0, seed=0)


def brute_mean_sq(G, n, dist):
    walks = all_walks(G, n)
    return sum(wt * dist(w[-1]) ** 2 for w, wt in walks), sum(wt for _, wt in walks)


def test_exact_mean_sq_displacement():
    T = TREE
    for n in range(1, 7):
        num, den = exact_mean_sq_displacement(T, n)
        assert num == n * n * den
    # on Z^2 the graph distance is |x| + |y|, so every 2-step walk ends at distance 2
    num, den = exact_mean_sq_displacement(Z2, 2)
    assert (num, den) == brute_mean_sq(Z2, 2, lambda v: abs(v[0]) + abs(v[1]))
    assert num / den == 4
    for n in (5, 8):
        assert exact_mean_sq_displacement(Z2, n) == brute_mean_sq(Z2, n, lambda v: abs(v[0]) + abs(v[1]))


def test_exact_mode_limit():
    with pytest.raises(BudgetExceeded):
        exact_mean_sq_displacement(Z2, 16)


def test_monte_carlo_matches_exact():
    for G, n in ((Z2, 8), (make_family("hexagonal"), 10), (make_family("ladder"), 12)):
        exact = displacement_stats(G, [n], exact=True)[0]
        mc = displacement_stats(G, [n], count=2000, seed=4)[0]
        assert abs(mc.mean_sq_displacement - exact.mean_sq_displacement) < 4 * mc.stderr


def test_stderr_scales_with_count():
    small = displacement_stats(Z2, [8], count=400, seed=1)[0].stderr
    large = displacement_stats(Z2, [8], count=6400, seed=1)[0].stderr
    assert 2.5 < small / large < 6.5


def test_nu_estimates():
    table = displacement_stats(TREE, [4, 6, 8, 10, 12], exact=True)
    assert abs(nu_estimate(table) - 1.0) <= 1e-6
    synthetic = [DisplacementRow(n, 3.0 * n, 0.0, 1, None) for n in (5, 10, 20, 40)]
    assert nu_estimate(synthetic) == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(ValueError):
        nu_estimate([DisplacementRow(8, 1.0, 0.0, 1, None)] * 4)
    with pytest.raises(ValueError):
        nu_estimate(synthetic[:3])
    with pytest.raises(ValueError):
        nu_estimate([DisplacementRow(n, float(n), 0.0, 1, None) for n in (10, 11, 12, 13)])


def test_speed_probe():
    assert speed_probe(TREE, 12, 0.9, 200, 0).frequency == 0.0
    ladder = speed_probe(make_family("ladder"), 30, 0.1, 500, 0)
    assert ladder.frequency < 0.05
    assert ladder.half_width > 0
    full = speed_probe(Z2, 8, 1.0, 300, 0)
    assert full.frequency == 1.0
    with pytest.raises(ValueError):
        speed_probe(Z2, 8, 0.0)
