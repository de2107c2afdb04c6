from math import gcd

import pytest

from oddprime import Graph, Labeling, NotAPrimeLabeling, OrderOutOfRange, convert_prime_to_odd, rn_sequence, verify_rn
from oddprime.rn import MAX_ORDER, TABLE


def test_row_lookups():
    assert rn_sequence(12) == [1, 3, 5, 9, 7, 15, 11, 13, 17, 21, 19, 23]
    assert rn_sequence(4) == [1, 3, 5, 7]
    tail = rn_sequence(50)
    assert len(tail) == 50 and tail[-3:] == [95, 97, 13]


def test_every_order_by_independent_pair_check():
    for n in range(1, MAX_ORDER + 1):
        labels = rn_sequence(n)
        assert sorted(labels) == list(range(1, 2 * n, 2))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if gcd(i, j) == 1:
                    assert gcd(labels[i - 1], labels[j - 1]) == 1, (n, i, j)


@pytest.mark.parametrize("n", [1, 12, 50])
def test_verify_rn(n):
    assert verify_rn(n).is_valid


def test_rows_are_prefix_consistent():
    for row in TABLE.rows:
        for n in range(row.lo, row.hi + 1):
            assert rn_sequence(n) == list(row.sequence[:n])


@pytest.mark.parametrize("n", [0, 51])
def test_out_of_range(n):
    with pytest.raises(OrderOutOfRange):
        rn_sequence(n)


def test_convert_path():
    p4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    assert convert_prime_to_odd(p4, Labeling.from_sequence([1, 2, 3, 4])).as_list() == [1, 3, 5, 7]


def test_convert_six_cycle():
    c6 = Graph.from_edges(6, [(i, i % 6 + 1) for i in range(1, 7)])
    ell = convert_prime_to_odd(c6, Labeling.from_sequence(range(1, 7)))
    assert ell.as_list() == rn_sequence(6)


def test_convert_rejects_non_prime_labeling():
    p2 = Graph.from_edges(2, [(1, 2)])
    with pytest.raises(NotAPrimeLabeling):
        convert_prime_to_odd(p2, Labeling.from_sequence([2, 4]))
    with pytest.raises(NotAPrimeLabeling) as info:
        convert_prime_to_odd(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)]), Labeling.from_sequence([2, 4, 1, 3]))
    assert [tuple(e)[:2] for e in info.value.violating_edges] == [(1, 2)]
