import math
import threading

import pytest

from sawlab.enum import (
    BudgetExceeded,
    SeriesCache,
    count_bridges,
    count_extendable,
    count_extensions,
    count_saws,
    count_saws_to,
    generating_function_eval,
)
from sawlab.enum.counting import stats
from sawlab.enum.naive import naive_bridge_counts, naive_endpoints, naive_saw_counts
from sawlab.graph import GraphError, fisher_semicubic, fisher_transform, make_family, quotient_cylinder

# published square- and cubic-lattice SAW counts (OEIS A001411, A001412)
Z2_COUNTS = [1, 4, 12, 36, 100, 284, 780, 2172, 5916, 16268, 44100, 120292, 324932,
             881500, 2374444, 6416596, 17245332]
Z3_COUNTS = [1, 6, 30, 150, 726, 3534, 16926, 81390, 387966, 1853886, 8809878]


def coordinate_saws(n):
    """Square-lattice SAW counts from explicit coordinate lists, no graph layer."""
    counts = [0] * (n + 1)

    def rec(path):
        counts[len(path) - 1] += 1
        if len(path) - 1 == n:
            return
        x, y = path[-1]
        for nxt in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nxt not in path:
                path.append(nxt)
                rec(path)
                path.pop()

    rec([(0, 0)])
    return counts


def oracle_graphs():
    hexagonal = make_family("hexagonal")
    return [
        make_family("hypercubic", dim=1),
        make_family("hypercubic", dim=2),
        make_family("hypercubic", dim=3),
        make_family("ladder"),
        hexagonal,
        make_family("triangular"),
        make_family("square-octagon"),
        make_family("tree", delta=3),
        make_family("bridge", delta=3),
        make_family("bridge", delta=4),
        make_family("free-product", delta=3, g=4),
        fisher_transform(hexagonal),
        fisher_semicubic(hexagonal),
        quotient_cylinder(2),
        quotient_cylinder(3),
        quotient_cylinder(4),
    ]


def test_z2_counts_match_coordinate_enumerator():
    assert coordinate_saws(9) == Z2_COUNTS[:10]
    assert list(count_saws(make_family("hypercubic", dim=2), 9).values) == Z2_COUNTS[:10]


def test_z2_published_series():
    assert list(count_saws(make_family("hypercubic", dim=2), 16).values) == Z2_COUNTS


def test_z3_published_series():
    assert list(count_saws(make_family("hypercubic", dim=3), 10).values) == Z3_COUNTS


def test_small_examples():
    assert count_saws(make_family("tree", delta=3), 12).values[1:] == tuple(3 * 2 ** (n - 1) for n in range(1, 13))
    assert count_saws(make_family("ladder"), 1).values[1] == 3


@pytest.mark.parametrize("G", oracle_graphs(), ids=lambda G: G.key)
def test_saws_match_naive_oracle(G):
    n = 6 if G.degree >= 6 else 8
    naive = naive_saw_counts(G, n)
    for method in ("backtrack", "memo"):
        assert list(count_saws(G, n, method=method).values) == naive
    assert list(count_saws(G, n, compiled=False, method="backtrack").values) == naive


@pytest.mark.parametrize("G", [g for g in oracle_graphs() if g.height is not None], ids=lambda G: G.key)
def test_bridges_match_naive_oracle(G):
    naive = naive_bridge_counts(G, 8)
    assert list(count_bridges(G, 8).values) == naive
    assert list(count_bridges(G, 8, compiled=False).values) == naive
    sigma = count_saws(G, 8).values
    assert all(b <= s for b, s in zip(naive, sigma))


def test_bridge_examples():
    assert count_bridges(make_family("hypercubic", dim=2), 2).values[1:] == (1, 3)
    assert count_bridges(make_family("ladder"), 1).values[1] == 1


def test_bridge_needs_height():
    with pytest.raises(GraphError):
        count_bridges(make_family("tree", delta=3), 4)


def test_multigraph_weighting_by_hand():
    # root 0 has partner 1 (3 parallel edges) and plain neighbor -1;
    # -1 has its own partner -2, so sigma_2 = 3*1 + 1*3
    G = make_family("bridge", delta=4)
    assert count_saws(G, 2).values == (1, 4, 6)


def test_big_integer_weights():
    G = make_family("bridge", delta=200)
    values = count_saws(G, 24).values
    assert values == tuple(naive_saw_counts(G, 6)) + values[7:]
    assert values[24] > 2**63
    # closed form: each step pair crosses one bundle of 199 edges, two ways to leave the root
    assert values[24] == 2 * 199**12


def test_endpoints():
    Z = make_family("hypercubic", dim=2)
    assert count_saws_to(Z, 1) == {(-1, 0): 1, (0, -1): 1, (0, 1): 1, (1, 0): 1}
    ends = count_saws_to(Z, 2)
    assert ends[(2, 0)] == 1 and ends[(1, 1)] == 2 and ends[(0, 2)] == 1
    assert sum(ends.values()) == 12
    tree_ends = count_saws_to(make_family("tree", delta=3), 2)
    assert len(tree_ends) == 6 and set(tree_ends.values()) == {1}
    for G in (Z, make_family("bridge", delta=4), quotient_cylinder(3)):
        assert count_saws_to(G, 6) == naive_endpoints(G, 6)
        assert count_saws_to(G, 6, compiled=False) == naive_endpoints(G, 6)


def test_extendable():
    T = make_family("tree", delta=3)
    sigma = count_saws(T, 6).values
    for m in (0, 3, 10):
        assert count_extendable(T, 6, m) == sigma[6]
    Z = make_family("hypercubic", dim=2)
    assert count_extendable(Z, 2, 0) == 12
    for n in range(2, 11, 2):
        assert count_extendable(Z, n, 20) >= 3 ** (n // 2)
    # non-increasing in m, trapped walks drop out
    vals = [count_extendable(Z, 8, m) for m in (0, 2, 4, 8)]
    assert vals == sorted(vals, reverse=True)
    assert vals[-1] < vals[0]


def test_extendable_python_path_agrees():
    Z = make_family("hypercubic", dim=2)
    for n, m in ((4, 3), (7, 5)):
        assert count_extendable(Z, n, m, compiled=False) == count_extendable(Z, n, m)


def test_extensions_of_a_prefix():
    Z = make_family("hypercubic", dim=2)
    # all walks beginning with an east step: a quarter of sigma_n
    ext = count_extensions(Z, [(0, 0), (1, 0)], 7)
    assert [4 * c for c in ext] == Z2_COUNTS[1:9]
    with pytest.raises(GraphError):
        count_extensions(Z, [(1, 0)], 3)


def test_generating_function():
    T = make_family("tree", delta=3)
    assert generating_function_eval(T, 0.0, 10) == 1.0
    partial = [generating_function_eval(T, 0.25, n) for n in (6, 10, 15)]
    errors = [abs(p - 2.5) for p in partial]
    assert errors[0] > errors[1] > errors[2]
    # tail after n terms is 6 * 2^-(n+2)
    assert errors[2] == pytest.approx(6 / 2**17, rel=1e-9)
    L = make_family("ladder")
    assert generating_function_eval(L, 1.0, 3) == 1 + 3 + 6 + 12


def test_submultiplicative_z3():
    s = count_saws(make_family("hypercubic", dim=3), 10).values
    assert all(s[i + j] <= s[i] * s[j] for i in range(11) for j in range(11 - i))
    b = count_bridges(make_family("hypercubic", dim=3), 10).values
    assert all(b[i + j] >= b[i] * b[j] for i in range(11) for j in range(11 - i))


def test_worker_determinism():
    for G in (make_family("hypercubic", dim=2), make_family("hexagonal"), make_family("bridge", delta=3)):
        runs = [count_saws(G, 12, workers=w, method="backtrack").values for w in (1, 2, 8, None)]
        assert all(r == runs[0] for r in runs)
    for G in (make_family("hypercubic", dim=2), make_family("hexagonal"), make_family("ladder")):
        bruns = [count_bridges(G, 12, workers=w).values for w in (1, 3, None)]
        assert all(r == bruns[0] for r in bruns)


def test_prefix_depth_does_not_change_counts():
    Z = make_family("hypercubic", dim=2)
    runs = [count_saws(Z, 11, prefix_depth=d, method="backtrack").values for d in (0, 1, 4, 11, 20)]
    assert all(r == tuple(Z2_COUNTS[:12]) for r in runs)


def test_budget_truncation():
    Z = make_family("hypercubic", dim=2)
    s = count_saws(Z, 16, budget=20000)
    assert s.truncated
    assert s.n_requested == 16
    assert s.n_max < 16
    assert list(s.values) == Z2_COUNTS[: s.n_max + 1]
    full = count_saws(Z, 8, budget=10**6)
    assert not full.truncated


def test_memo_ladder_long():
    L = make_family("ladder")
    s = count_saws(L, 40).values
    # rational generating function recurrence check against backtracking on a prefix
    assert s[:17] == count_saws(L, 16, method="backtrack").values
    assert s[40] > s[39] > 0


def test_cache_round_trip(tmp_path):
    cache = SeriesCache(tmp_path)
    Z = make_family("hypercubic", dim=2)
    first = count_saws(Z, 10, cache=cache)
    before = stats["nodes"]
    again = count_saws(Z, 10, cache=SeriesCache(tmp_path / "series.jsonl"))
    assert again.values == first.values
    assert stats["nodes"] == before
    lines = (tmp_path / "series.jsonl").read_text().splitlines()
    assert len(lines) == 11
    assert all('"value":"' in line for line in lines)
    # a longer request must enumerate again
    count_saws(Z, 11, cache=cache)
    assert stats["nodes"] > before


def test_cache_big_values_and_torn_line(tmp_path):
    path = tmp_path / "c" / "series.jsonl"
    cache = SeriesCache(path)
    huge = 3**200
    cache.store("g", "saw", {}, {0: 1, 1: huge})
    with open(path, "a") as fh:
        fh.write('{"graph_key":"g","kind":"saw","params":{},"n":2,"va')
    fresh = SeriesCache(path)
    assert fresh.lookup("g", "saw", {}, 1) == [1, huge]
    assert fresh.lookup("g", "saw", {}, 2) is None
    assert fresh.get("g", "saw", {}, 1) == huge


def test_cache_concurrent_writers(tmp_path):
    path = tmp_path / "series.jsonl"

    def write(k):
        SeriesCache(path).store(f"g{k}", "saw", {}, {n: n * k for n in range(50)})

    threads = [threading.Thread(target=write, args=(k,)) for k in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    cache = SeriesCache(path)
    for k in range(8):
        assert cache.lookup(f"g{k}", "saw", {}, 49) == [n * k for n in range(50)]


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("SAWLAB_CACHE_DIR", str(tmp_path))
    assert SeriesCache().path == tmp_path / "series.jsonl"


def test_invalid_arguments():
    Z = make_family("hypercubic", dim=2)
    with pytest.raises(ValueError):
        count_saws(Z, -1)
    with pytest.raises(ValueError):
        count_extendable(Z, -1, 2)
    with pytest.raises(ValueError):
        count_saws(Z, 4, method="pivot")


def test_generating_function_rejects_negative_x():
    with pytest.raises(ValueError):
        generating_function_eval(make_family("ladder"), -0.1, 4)


def test_budget_exceeded_is_runtime_error():
    assert issubclass(BudgetExceeded, RuntimeError)
    assert math.isfinite(generating_function_eval(make_family("ladder"), 0.5, 20))
