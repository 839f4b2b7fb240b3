"""Acceptance criteria 1-12, each at its stated tolerance and time limit.

Every criterion records a one-line PASS/FAIL verdict; the lines are printed
in the pytest terminal summary, or directly when this file is run as a script.
All runs are cold: no series cache, fresh graph objects.
"""

import math
import time

import pytest

from sawlab.bounds import (
    cubic_girth_lower,
    cubic_girth_residual,
    fisher_iterate,
    fisher_mu_pull,
    fisher_rate_bounds,
    girth_degree_upper,
    locality_scan,
    mu_interval,
    ratio_estimate,
    semicubic_solve,
    spectral_lower,
)
from sawlab.enum import count_bridges, count_saws
from sawlab.enum.naive import naive_saw_counts
from sawlab.graph import make_family, quotient_cylinder
from sawlab.sampler import Unranker, displacement_stats, nu_estimate, speed_probe

GOLDEN = 1.6180339887
GOLDEN_EXACT = (1 + math.sqrt(5)) / 2
HEX = 1.8477590650
Z2_ESTIMATE = 2.63815

VERDICTS = {}


def record(number, title, checks, seconds=None):
    """Store the verdict line, then fail the test with the first failing check."""
    ok = all(passed for _, passed in checks)
    detail = "; ".join(f"{text} [{'ok' if passed else 'FAIL'}]" for text, passed in checks)
    timing = f" ({seconds:.2f} s)" if seconds is not None else ""
    VERDICTS[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title}{timing} :: {detail}"
    print(VERDICTS[number])
    failing = [text for text, passed in checks if not passed]
    assert not failing, failing


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def test_criterion_01_ladder_exact_value():
    est, dt = timed(lambda: ratio_estimate(make_family("ladder"), 40, 1))
    record(1, "ladder ratio n=40 vs golden mean", [
        (f"|{est:.10f} - {GOLDEN}| = {abs(est - GOLDEN):.2e} <= 1e-3", abs(est - GOLDEN) <= 1e-3),
        (f"runtime {dt:.2f} s < 5 s", dt < 5),
    ], dt)


def test_criterion_02_bridge_multigraph():
    target = math.sqrt(3)
    est, dt = timed(lambda: ratio_estimate(make_family("bridge", delta=4), 30, 2))
    record(2, "bridge(4) ratio n=30 step=2 vs sqrt(3)", [
        (f"|{est:.10f} - sqrt3| = {abs(est - target):.2e} <= 1e-3", abs(est - target) <= 1e-3),
        (f"runtime {dt:.2f} s < 5 s", dt < 5),
    ], dt)


def test_criterion_03_hexagonal():
    H = make_family("hexagonal")
    (iv, est), dt = timed(lambda: (mu_interval(H, 24), ratio_estimate(H, 24, 2)))
    record(3, "hexagonal interval and ratio at n=24", [
        (f"upper {iv.upper:.6f} >= {HEX}", iv.upper >= HEX),
        (f"upper - mu = {iv.upper - HEX:.4f} <= 0.15", iv.upper - HEX <= 0.15),
        (f"|ratio {est:.6f} - mu| = {abs(est - HEX):.4f} <= 0.05", abs(est - HEX) <= 0.05),
        (f"runtime {dt:.2f} s < 120 s", dt < 120),
    ], dt)


def test_criterion_04_z2_sandwich():
    Z = make_family("hypercubic", dim=2)

    def work():
        iv = mu_interval(Z, 14)
        return iv, count_saws(Z, 14).values, count_bridges(Z, 14).values

    (iv, s, b), dt = timed(work)
    sub = all(s[i + j] <= s[i] * s[j] for i in range(15) for j in range(15 - i))
    sup = all(b[i + j] >= b[i] * b[j] for i in range(15) for j in range(15 - i))
    record(4, "Z2 sandwich at n=14 (rigorous window 2.6256-2.6792 not reproducible at this n)", [
        (f"lower {iv.lower:.6f} <= {Z2_ESTIMATE}", iv.lower <= Z2_ESTIMATE),
        (f"upper {iv.upper:.6f} >= {Z2_ESTIMATE}", iv.upper >= Z2_ESTIMATE),
        (f"upper {iv.upper:.6f} <= 2.95", iv.upper <= 2.95),
        ("sigma submultiplicative for i+j <= 14", sub),
        ("bridges supermultiplicative for i+j <= 14", sup),
        (f"runtime {dt:.2f} s < 120 s", dt < 120),
    ], dt)


def test_criterion_05_fisher():
    def work():
        return fisher_mu_pull(GOLDEN_EXACT), fisher_iterate(2.0, 10)

    (fixed, seq), dt = timed(work)
    checks = [(f"|pull(phi) - phi| = {abs(fixed - GOLDEN_EXACT):.1e} <= 1e-10", abs(fixed - GOLDEN_EXACT) <= 1e-10)]
    inside = []
    for k in range(1, 11):
        lo, hi = fisher_rate_bounds(k)
        dev = 1 / seq[k] - 1 / GOLDEN_EXACT
        inside.append(lo <= dev <= hi)
    checks.append((f"1/mu_k - 1/phi within window for k=1..10 ({sum(inside)}/10)", all(inside)))
    checks.append((f"runtime {dt:.4f} s < 1 s", dt < 1))
    record(5, "Fisher fixed point and recursion window", checks, dt)


def test_criterion_06_semicubic():
    val, dt = timed(lambda: semicubic_solve(math.sqrt(2 + math.sqrt(2))))
    record(6, "semicubic_solve(sqrt(2+sqrt2))", [
        (f"{val:.8f} = 1.75056 +- 1e-4", abs(val - 1.75056) <= 1e-4),
        (f"runtime {dt:.4f} s < 1 s", dt < 1),
    ], dt)


def test_criterion_07_cross_solver():
    def work():
        y = girth_degree_upper(3, 3)
        pulled = fisher_mu_pull(2.0)
        est = ratio_estimate(make_family("free-product", delta=3, g=3), 24)
        return y, pulled, est

    (y, pulled, est), dt = timed(work)
    record(7, "girth-degree bound vs Fisher pull vs free product", [
        (f"|{y:.12f} - {pulled:.12f}| <= 1e-8", abs(y - pulled) <= 1e-8),
        (f"|ratio {est:.6f} - y| = {abs(est - y):.4f} <= 0.02", abs(est - y) <= 0.02),
        (f"runtime {dt:.2f} s < 60 s", dt < 60),
    ], dt)


def test_criterion_08_cubic_lower():
    g4 = cubic_girth_lower(4)
    g3 = cubic_girth_lower(3)
    res = abs(cubic_girth_residual(g3))
    record(8, "cubic girth-3/4 lower bounds", [
        (f"|{g4:.12f} - 12^(1/6)| <= 1e-10", abs(g4 - 12 ** (1 / 6)) <= 1e-10),
        (f"girth 3: x = {g3:.12f}, residual {res:.1e} <= 1e-12", res <= 1e-12),
    ])


def test_criterion_09_spectral():
    val = spectral_lower(3, 1 - 2 * math.sqrt(2) / 3)
    exact_zero = all(spectral_lower(d, 0.0) == math.sqrt(d - 1) for d in (3, 4, 5, 6, 10, 50))
    record(9, "spectral lower bound sanity", [
        (f"{val:.6f} in (1.55, 1.65)", 1.55 < val < 1.65),
        (f"{val:.6f} <= 2", val <= 2),
        ("spectral_lower(D, 0) == sqrt(D-1) exactly", exact_zero),
    ])


def test_criterion_10_locality():
    rows, dt = timed(lambda: locality_scan(range(3, 9), 14))
    gaps = [r.gap for r in rows if r.m is not None]
    mono = all(b <= a + 0.02 for a, b in zip(gaps, gaps[1:]))
    record(10, "cylinder gaps to Z2 for m=3..8 at n=14", [
        ("gaps " + ", ".join(f"{g:.4f}" for g in gaps) + " non-increasing within 0.02", mono),
        (f"runtime {dt:.2f} s < 300 s", dt < 300),
    ], dt)


def test_criterion_11_sampler():
    T = make_family("tree", delta=3)
    nu = nu_estimate(displacement_stats(T, [4, 6, 8, 10, 12], exact=True))
    Z = make_family("hypercubic", dim=2)
    bijective = True
    for n in range(7):
        u = Unranker(Z, n)
        walks = {tuple(u.unrank(r)) for r in range(u.total)}
        bijective &= len(walks) == u.total == count_saws(Z, n).values[n]
    probe = speed_probe(T, 12, 0.9, 500, 0)
    record(11, "sampler exactness", [
        (f"tree(3) exact nu = {nu:.10f} (1 +- 1e-6)", abs(nu - 1) <= 1e-6),
        ("Z2 unranking bijective for n <= 6", bijective),
        (f"speed_probe(tree(3), c=0.9) = {probe.frequency}", probe.frequency == 0.0),
    ])


def test_criterion_12_oracle():
    graphs = [make_family("hypercubic", dim=2), make_family("ladder"), make_family("hexagonal"),
              make_family("bridge", delta=3), quotient_cylinder(3)]
    checks = []
    for G in graphs:
        naive = naive_saw_counts(G, 8)
        same = all(
            list(count_saws(G, 8, workers=w, method=m).values) == naive
            for w in (1, 2, None)
            for m in ("auto", "backtrack")
        )
        checks.append((f"{G.family}{G.spec['params'] or ''}: optimized == naive for n <= 8 at 1/2/max workers", same))
    record(12, "oracle equivalence and worker determinism", checks)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
