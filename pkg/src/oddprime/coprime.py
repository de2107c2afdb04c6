"""Number-theoretic helpers used by the constructive labelers."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisViolated, MatchingFailure, TargetNotInSequence


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0 or p % 3 == 0:
        return False
    i = 5
    while i * i <= p:
        if p % i == 0 or p % (i + 2) == 0:
            return False
        i += 6
    return True


def odd_prime_factors(x: int) -> list[int]:
    x = abs(x)
    while x and x % 2 == 0:
        x //= 2
    factors = []
    p = 3
    while p * p <= x:
        if x % p == 0:
            factors.append(p)
            while x % p == 0:
                x //= p
        p += 2
    if x > 1:
        factors.append(x)
    return factors


def bertrand_prime(t: int) -> int:
    """Largest prime ``p`` with ``t < p < 2t``."""
    if t <= 1:
        raise ValueError(f"Bertrand's postulate needs t > 1, got {t}")
    for p in range(2 * t - 1, t, -1):
        if is_prime(p):
            return p
    raise AssertionError(f"no prime in ({t}, {2 * t})")  # unreachable by Bertrand's postulate


@dataclass(frozen=True)
class CoprimeMatching:
    """Bijection from the first ``n`` odd integers onto ``a, a+b, ..., a+(n-1)b``."""

    domain: tuple[int, ...]
    codomain: tuple[int, ...]
    mapping: dict

    def __call__(self, m: int) -> int:
        return self.mapping[m]

    def inverse(self, y: int) -> int:
        for x, hx in self.mapping.items():
            if hx == y:
                return x
        raise KeyError(y)


def coprime_matching(n: int, a: int, b: int) -> CoprimeMatching:
    """Pair each of ``1, 3, ..., 2n-1`` with a coprime member of ``a + r*b``.

    Such a pairing always exists when ``a`` and ``b`` share no
    odd prime divisor up to ``2n - 1``; the pairing itself comes from a greedy
    pass followed by augmenting paths, both scanning labels in increasing order.
    """
    if n < 1 or a < 1 or b < 1:
        raise HypothesisViolated(f"need n, a, b >= 1, got n={n}, a={a}, b={b}")
    shared = [p for p in odd_prime_factors(math.gcd(a, b)) if p <= 2 * n - 1]
    if shared:
        raise HypothesisViolated(f"a={a} and b={b} share odd prime divisors {shared} up to {2 * n - 1}")

    domain = tuple(range(1, 2 * n, 2))
    codomain = tuple(a + r * b for r in range(n))
    options = [[j for j, y in enumerate(codomain) if math.gcd(x, y) == 1] for x in domain]

    match_left = [-1] * n
    match_right = [-1] * n
    for i, opts in enumerate(options):
        for j in opts:
            if match_right[j] < 0:
                match_left[i] = j
                match_right[j] = i
                break

    def augment(i, visited):
        for j in options[i]:
            if visited[j]:
                continue
            visited[j] = True
            if match_right[j] < 0 or augment(match_right[j], visited):
                match_left[i] = j
                match_right[j] = i
                return True
        return False

    for i in range(n):
        if match_left[i] < 0 and not augment(i, [False] * n):
            raise MatchingFailure(f"no coprime perfect matching for n={n}, a={a}, b={b}")

    mapping = {domain[i]: codomain[match_left[i]] for i in range(n)}
    return CoprimeMatching(domain, codomain, mapping)


def reorder_power_of_two(m: int, count: int, target: int) -> list[int]:
    """Reorder ``m, m+2, ..., m+2(count-1)`` to end at ``target``.

    Consecutive entries of the result differ by a power of two (at least 2).
    The entries ``target, target + 2^a1, target + 2^a1 + 2^a2, ...`` taken from
    the binary expansion of ``last - target`` are pulled out and re-appended in
    reverse order.
    """
    if m % 2 == 0:
        raise ValueError(f"sequence must consist of odd integers, got start {m}")
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    last = m + 2 * (count - 1)
    if target < m or target > last or (target - m) % 2:
        raise TargetNotInSequence(f"{target} is not in {m}, {m + 2}, ..., {last}")
    seq = list(range(m, last + 1, 2))
    if target == last:
        return seq

    diff = last - target
    powers = [1 << s for s in range(diff.bit_length() - 1, 0, -1) if diff >> s & 1]
    removed = [target]
    for step in powers[:-1]:
        removed.append(removed[-1] + step)
    pulled = set(removed)
    return [x for x in seq if x not in pulled] + removed[::-1]
