import json

import pytest
from hypothesis import given, strategies as st

from oddprime import Graph, Labeling, PartialLabeling, VerificationReport, expected_label_set, gcd, to_dot, verify_labeling


@pytest.mark.parametrize("a, b, expected", [(9, 13, 1), (21, 35, 7), (1, 999, 1)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("a, b", [(0, 3), (3, -1)])
def test_gcd_rejects_non_positive(a, b):
    with pytest.raises(ValueError):
        gcd(a, b)


def test_expected_label_set():
    assert expected_label_set(1) == {1}
    assert expected_label_set(4) == {1, 3, 5, 7}
    labels = expected_label_set(10)
    assert len(labels) == 10 and max(labels) == 19


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def test_path_with_consecutive_odd_labels_is_valid():
    report = verify_labeling(path(3), Labeling.from_sequence([1, 3, 5]))
    assert report.is_valid
    assert not report.violating_edges


def test_defects_and_violations_are_reported():
    report = verify_labeling(path(2), Labeling.from_sequence([3, 9]))
    assert not report.is_valid
    assert [tuple(e) for e in report.violating_edges] == [(1, 2, 3)]
    (defect,) = report.label_set_defects
    assert list(defect.missing) == [1]
    assert list(defect.extra) == [9]
    assert list(defect.duplicated) == []


def test_duplicate_label_is_a_defect():
    report = verify_labeling(Graph.from_edges(2, []), Labeling.from_sequence([1, 1]))
    assert not report.is_valid
    assert list(report.label_set_defects[0].duplicated) == [1]


def test_four_cycle():
    c4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert verify_labeling(c4, Labeling({1: 1, 2: 5, 3: 7, 4: 3})).is_valid


def test_partial_labeling_raises():
    with pytest.raises(PartialLabeling):
        verify_labeling(path(3), Labeling({1: 1, 2: 3}))


@pytest.mark.parametrize(
    "edges",
    [[(1, 1)], [(1, 4)], [(2, 1)], [(1, 2), (1, 2)]],
    ids=["loop", "out-of-range", "unordered", "duplicate"],
)
def test_graph_rejects_malformed_edges(edges):
    with pytest.raises(ValueError):
        Graph(3, tuple(edges))


def test_from_edges_normalizes_and_sorts():
    g = Graph.from_edges(3, [(3, 2), (2, 1)])
    assert g.edges == ((1, 2), (2, 3))
    assert g.degree(2) == 2 and g.neighbors(2) == {1, 3}
    assert g.has_edge(3, 2) and not g.has_edge(1, 3)


def test_without_edges_keeps_vertices():
    g = path(4).without_edges([(2, 3)])
    assert g.order == 4 and g.size == 2


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 9))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges, {v: f"x_{v}" for v in range(1, n + 1)})


@given(graphs())
def test_graph_json_round_trip(g):
    back = Graph.from_json(json.loads(json.dumps(g.to_json())))
    assert back == g
    assert [back.name(v) for v in back.vertices] == [g.name(v) for v in g.vertices]


@given(st.lists(st.integers(1, 99), min_size=1, max_size=12))
def test_labeling_json_round_trip(values):
    ell = Labeling.from_sequence(values)
    assert Labeling.from_json(json.loads(json.dumps(ell.to_json()))) == ell


@given(graphs(), st.randoms(use_true_random=False))
def test_report_json_round_trip(g, rnd):
    values = [2 * i + 1 for i in range(g.order)]
    rnd.shuffle(values)
    report = verify_labeling(g, Labeling.from_sequence(values))
    assert VerificationReport.from_json(json.loads(json.dumps(report.to_json()))) == report


@given(graphs(), st.randoms(use_true_random=False))
def test_verifier_matches_direct_check(g, rnd):
    values = [2 * i + 1 for i in range(g.order)]
    rnd.shuffle(values)
    expect = all(gcd(values[u - 1], values[v - 1]) == 1 for u, v in g.edges)
    assert verify_labeling(g, Labeling.from_sequence(values)).is_valid == expect


def test_dot_puts_label_as_text_and_role_as_tooltip():
    g = Graph.from_edges(2, [(1, 2)], {1: "u", 2: "v"})
    dot = to_dot(g, Labeling.from_sequence([1, 3]), graph_name="P2")
    assert dot.startswith("graph P2 {")
    assert '1 [label="1", tooltip="u"];' in dot
    assert '2 [label="3", tooltip="v"];' in dot
    assert "1 -- 2;" in dot
