import subprocess
import sys
from itertools import combinations, permutations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from oddprime import Graph, OrderLimitExceeded, exhaustive_search, independence_number, kernels, lemma2_check, power_graph
from oddprime.search import BUDGET_EXCEEDED, EXHAUSTED, FOUND, search_order


def brute_independence(g):
    for size in range(g.order, 0, -1):
        for subset in combinations(g.vertices, size):
            if not any(g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return 0


def brute_labelable(g):
    labels = range(1, 2 * g.order, 2)
    return any(all(gcd(p[u - 1], p[v - 1]) == 1 for u, v in g.edges) for p in permutations(labels))


@st.composite
def graphs(draw, max_order=10):
    n = draw(st.integers(1, max_order))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    p = draw(st.floats(0.1, 0.9))
    mask = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, x in zip(pairs, mask) if x < p])


def test_backends_listed():
    assert "python" in kernels.available_backends()
    assert kernels.backend_name() in kernels.available_backends()


@pytest.mark.parametrize("g, beta", [(power_graph(8, 2, True), 2), (power_graph(13, 3, False), 4), (power_graph(3, 1, True), 1)])
def test_independence_examples(backend, g, beta):
    assert independence_number(g) == beta


@settings(max_examples=120, deadline=None)
@given(graphs(max_order=12))
def test_independence_matches_brute_force(g):
    expected = brute_independence(g)
    for name in kernels.available_backends():
        assert kernels.get_backend(name).independence_number(_masks(g)) == expected


def _masks(g):
    return [sum(1 << (w - 1) for w in g.neighbors(v)) for v in g.vertices]


def test_independence_order_limit():
    with pytest.raises(OrderLimitExceeded):
        independence_number(Graph.from_edges(65, []))
    with pytest.raises(OrderLimitExceeded):
        independence_number(Graph.from_edges(10, []), max_order=9)


def test_lemma2_examples():
    assert lemma2_check(power_graph(11, 2, True)).to_json() == {"result": "fail", "beta": 3, "bound": 4}
    assert lemma2_check(power_graph(13, 3, False)).passed
    assert lemma2_check(power_graph(2, 1, False)).passed


def test_search_examples(backend):
    assert exhaustive_search(power_graph(5, 2, True)).verdict == EXHAUSTED
    outcome = exhaustive_search(power_graph(5, 3, False))
    assert outcome.verdict == FOUND and outcome.labeling is not None
    single = exhaustive_search(Graph.from_edges(1, []))
    assert single.found and single.labeling.as_list() == [1]


@pytest.mark.parametrize("n, k", [(5, 2), (8, 2), (11, 2), (5, 3), (6, 3), (7, 4)])
def test_refuted_cycle_powers(backend, n, k):
    assert exhaustive_search(power_graph(n, k, True)).verdict == EXHAUSTED


def test_p12_cubed_refuted_by_bound_and_search():
    g = power_graph(12, 3, False)
    assert not lemma2_check(g).passed
    assert exhaustive_search(g).verdict == EXHAUSTED


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=7))
def test_search_matches_brute_force(g):
    expected = brute_labelable(g)
    for name in kernels.available_backends():
        previous = kernels.use_backend(name)
        try:
            assert exhaustive_search(g).found == expected
        finally:
            kernels.use_backend(previous)


@pytest.mark.parametrize("n, k", [(11, 2), (13, 3), (7, 4), (10, 2)])
def test_backends_agree_on_node_counts(n, k):
    results = []
    for name in kernels.available_backends():
        previous = kernels.use_backend(name)
        try:
            outcome = exhaustive_search(power_graph(n, k, True if k == 2 and n % 3 == 2 else False))
        finally:
            kernels.use_backend(previous)
        results.append((outcome.verdict, outcome.nodes_explored, outcome.labeling))
    assert all(r == results[0] for r in results)


def test_budget_exceeded(backend):
    outcome = exhaustive_search(power_graph(11, 2, True), budget=10)
    assert outcome.verdict == BUDGET_EXCEEDED
    assert outcome.labeling is None and outcome.nodes_explored == 11


def test_search_order_limit():
    with pytest.raises(OrderLimitExceeded):
        exhaustive_search(Graph.from_edges(17, []))
    assert exhaustive_search(Graph.from_edges(17, []), max_order=20).found


def test_search_order_is_by_decreasing_degree():
    g = Graph.from_edges(4, [(1, 4), (2, 4), (3, 4), (1, 2)])
    assert search_order(g) == [4, 1, 2, 3]


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_falls_back_to_python_without_extension():
    code = (
        "import sys; sys.modules['oddprime._kernels'] = None\n"
        "from oddprime import kernels, exhaustive_search, power_graph\n"
        "assert kernels.backend_name() == 'python' and kernels.available_backends() == ['python']\n"
        "print(exhaustive_search(power_graph(5, 2, True)).verdict)\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "exhausted"
