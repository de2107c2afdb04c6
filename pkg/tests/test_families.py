import networkx as nx
import pytest
from hypothesis import given, strategies as st

from grid import constructive_grid
from oddprime import (
    FAMILIES,
    Book,
    Caterpillar,
    CycleChain,
    CyclePower,
    DisjointCycles,
    Firecracker,
    GeneralizedPetersen,
    Grid,
    InvalidParameters,
    MaximalPrimeGraph,
    PathPower,
    PerfectBinaryTree,
    Snake,
    Spider,
    StackedPrism,
    TToedCaterpillar,
    build_family,
    family_order,
    make_spec,
)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_snake_counts():
    g = build_family(Snake(6, 5))
    assert (g.order, g.size) == (21, 24)


def test_book_order():
    assert build_family(Book(3, 6)).order == 14


def test_prism_counts():
    g = build_family(GeneralizedPetersen(7, 1))
    assert (g.order, g.size) == (14, 21)


def test_maximal_prime_graph_r4():
    assert build_family(MaximalPrimeGraph(4)).edges == ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))


@pytest.mark.parametrize(
    "spec, order",
    [(TToedCaterpillar(2, 1), 6), (Firecracker(5, 4), 20), (Spider((1, 1, 1)), 4)],
)
def test_orders(spec, order):
    assert build_family(spec).order == order == family_order(spec)


def test_family_order_matches_built_graph_across_grid():
    for case in constructive_grid():
        if case.spec is not None:
            assert family_order(case.spec) == case.graph().order, case.name


@pytest.mark.parametrize("k, n", [(3, 2), (4, 3), (5, 4), (8, 1)])
def test_stacked_prism_is_cycle_times_path(k, n):
    expected = nx.cartesian_product(nx.cycle_graph(k), nx.path_graph(n))
    assert nx.is_isomorphic(_nx(build_family(StackedPrism(k, n))), expected)


@pytest.mark.parametrize("m, n", [(2, 3), (4, 4), (3, 1)])
def test_grid_is_path_times_path(m, n):
    expected = nx.grid_2d_graph(m, n)
    assert nx.is_isomorphic(_nx(build_family(Grid(m, n))), expected)


@pytest.mark.parametrize("n, k", [(5, 2), (7, 3), (10, 3)])
def test_generalized_petersen_matches_networkx(n, k):
    h = _nx(build_family(GeneralizedPetersen(n, k)))
    outer = nx.cycle_graph(n)
    expected = nx.Graph(outer)
    expected.add_edges_from((n + i, n + (i + k) % n) for i in range(n))
    expected.add_edges_from((i, n + i) for i in range(n))
    assert nx.is_isomorphic(h, expected)


def test_perfect_binary_tree():
    h = _nx(build_family(PerfectBinaryTree(4)))
    assert nx.is_isomorphic(h, nx.balanced_tree(2, 3))


@pytest.mark.parametrize("n, k", [(9, 2), (12, 3), (7, 4)])
def test_powers_match_networkx(n, k):
    path = nx.power(nx.path_graph(n), k)
    cycle = nx.power(nx.cycle_graph(n), k)
    assert nx.is_isomorphic(_nx(build_family(PathPower(n, k))), path)
    assert nx.is_isomorphic(_nx(build_family(CyclePower(n, k))), cycle)


@pytest.mark.parametrize(
    "spec, k",
    [(Snake(5, 4), 5), (CycleChain(5, 3), 5), (CycleChain(6, 2), 6), (Book(4, 5), 5)],
    ids=repr,
)
def test_cycle_basis_lengths(spec, k):
    g = _nx(build_family(spec))
    assert nx.is_connected(g)
    assert {len(c) for c in nx.minimum_cycle_basis(g)} == {k}


def test_disjoint_cycles_components():
    g = _nx(build_family(DisjointCycles((3, 4, 5))))
    assert sorted(len(c) for c in nx.connected_components(g)) == [3, 4, 5]
    assert all(d == 2 for _, d in g.degree())


def test_firecracker_is_a_tree():
    assert nx.is_tree(_nx(build_family(Firecracker(4, 3))))


@given(st.integers(2, 20), st.lists(st.integers(0, 4), min_size=18, max_size=18))
def test_caterpillar_is_a_tree_with_path_spine(spine, pool):
    leaves = tuple(pool[: spine - 2])
    g = _nx(build_family(Caterpillar(spine, leaves)))
    assert nx.is_tree(g)
    assert g.number_of_nodes() == spine + sum(leaves)
    leafless = g.subgraph([v for v in g if g.degree(v) > 1 or v in (1, spine)])
    assert nx.is_connected(leafless)


def test_t_toed_caterpillar_degrees():
    g = build_family(TToedCaterpillar(4, 3))
    degrees = sorted(g.degree(v) for v in g.vertices)
    assert degrees.count(1) == 4 * 3 + 2
    assert degrees.count(5) == 4


@pytest.mark.parametrize(
    "tag, params",
    [
        ("snake", {"k": 2, "n": 3}),
        ("snake", {"k": 3}),
        ("book", {"n": 0, "k": 4}),
        ("generalized-petersen", {"n": 4, "k": 2}),
        ("path-power", {"n": 3, "k": 2}),
        ("cycle-power", {"n": 3, "k": 2}),
        ("caterpillar", {"spine": 4, "leaves": [1]}),
        ("spider", {"legs": []}),
        ("disjoint-cycles", {"lengths": [2]}),
        ("grid", {"m": 1, "n": 3}),
        ("no-such-family", {}),
        ("snake", {"k": 3.0, "n": 2}),
    ],
)
def test_invalid_parameters(tag, params):
    with pytest.raises(InvalidParameters):
        make_spec(tag, params)


def test_every_family_round_trips_through_json():
    for case in constructive_grid():
        if case.spec is None:
            continue
        doc = case.spec.to_json()
        assert doc["family"] in FAMILIES
        assert make_spec(doc["family"], doc["params"]) == case.spec
