import math
from itertools import permutations

import pytest
from hypothesis import assume, given, settings, strategies as st

from oddprime import HypothesisViolated, TargetNotInSequence, bertrand_prime, coprime_matching, is_prime, reorder_power_of_two
from oddprime.coprime import odd_prime_factors


def _sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = [False] * len(flags[p * p :: p])
    return flags


def test_is_prime_agrees_with_sieve():
    flags = _sieve(20000)
    assert [p for p in range(20001) if is_prime(p)] == [p for p in range(20001) if flags[p]]


@pytest.mark.parametrize("p, expected", [(2, True), (1, False), (91, False)])
def test_is_prime_examples(p, expected):
    assert is_prime(p) is expected


def test_odd_prime_factors():
    assert odd_prime_factors(2 * 9 * 25 * 7) == [3, 5, 7]
    assert odd_prime_factors(64) == []


@pytest.mark.parametrize("t, p", [(14, 23), (2, 3), (3, 5)])
def test_bertrand_examples(t, p):
    assert bertrand_prime(t) == p


def test_bertrand_is_the_largest_prime_in_range():
    flags = _sieve(4000)
    for t in range(2, 2000):
        assert bertrand_prime(t) == max(p for p in range(t + 1, 2 * t) if flags[p])


def test_bertrand_rejects_small_t():
    with pytest.raises(ValueError):
        bertrand_prime(1)


def _brute_force_matchings(n, a, b):
    domain = range(1, 2 * n, 2)
    codomain = [a + r * b for r in range(n)]
    return [
        dict(zip(domain, perm))
        for perm in permutations(codomain)
        if all(math.gcd(x, y) == 1 for x, y in zip(domain, perm))
    ]


@pytest.mark.parametrize(
    "n, a, b, expected",
    [
        (2, 5, 2, {1: 5, 3: 7}),
        (3, 7, 2, {1: 7, 3: 11, 5: 9}),
        (1, 101, 2, {1: 101}),
    ],
)
def test_matching_examples(n, a, b, expected):
    h = coprime_matching(n, a, b)
    assert h.mapping == expected
    assert expected in _brute_force_matchings(n, a, b)
    for x, y in expected.items():
        assert h(x) == y and h.inverse(y) == x


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6), st.integers(1, 60), st.integers(1, 30))
def test_matching_is_a_coprime_bijection(n, a, b):
    assume(not [p for p in odd_prime_factors(math.gcd(a, b)) if p <= 2 * n - 1])
    h = coprime_matching(n, a, b)
    assert sorted(h.mapping) == list(range(1, 2 * n, 2))
    assert sorted(h.mapping.values()) == sorted(a + r * b for r in range(n))
    assert all(math.gcd(x, y) == 1 for x, y in h.mapping.items())
    assert _brute_force_matchings(n, a, b)


def test_matching_hypothesis_violated():
    with pytest.raises(HypothesisViolated):
        coprime_matching(3, 3, 6)


@pytest.mark.parametrize(
    "m, count, target, expected",
    [
        (1, 5, 5, [1, 3, 7, 9, 5]),
        (1, 5, 3, [1, 5, 9, 7, 3]),
        (1, 5, 9, [1, 3, 5, 7, 9]),
    ],
)
def test_reorder_examples(m, count, target, expected):
    assert reorder_power_of_two(m, count, target) == expected


@given(st.integers(0, 300).map(lambda x: 2 * x + 1), st.integers(1, 64), st.data())
def test_reorder_gaps_are_powers_of_two(m, count, data):
    target = m + 2 * data.draw(st.integers(0, count - 1))
    out = reorder_power_of_two(m, count, target)
    assert sorted(out) == list(range(m, m + 2 * count, 2))
    assert out[-1] == target
    for x, y in zip(out, out[1:]):
        d = abs(x - y)
        assert d >= 2 and d & (d - 1) == 0


@pytest.mark.parametrize("target", [0, 4, 11])
def test_reorder_rejects_missing_target(target):
    with pytest.raises(TargetNotInSequence):
        reorder_power_of_two(1, 5, target)
