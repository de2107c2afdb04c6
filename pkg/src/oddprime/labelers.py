"""Constructive odd prime labelings, one per family.

Every labeler returns a :class:`~oddprime.core.Labeling` keyed by the vertex
ids that :func:`~oddprime.families.build_family` assigns to the same family,
so ``verify_labeling(build_family(spec), label_family(spec))`` is the
soundness check used throughout the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .coprime import bertrand_prime, coprime_matching, reorder_power_of_two
from .core import Labeling
from .errors import DegreeTooLarge, InvalidParameters, MatchingFailure, ProvablyInfeasible, UnsupportedPolygon
from .families import (
    Book,
    Caterpillar,
    CycleChain,
    CyclePower,
    DisjointCycles,
    FamilySpec,
    Firecracker,
    GeneralizedPetersen,
    Grid,
    MaximalPrimeGraph,
    PathPower,
    PerfectBinaryTree,
    Snake,
    Spider,
    StackedPrism,
    TToedCaterpillar,
    _cycle_chain_path_lengths,
)
from .rn import MAX_ORDER as RN_MAX_ORDER
from .rn import rn_labeling
from .search import multiples_of_three_bound


def _odd_run(start: int):
    """Yield start, start + 2, start + 4, ..."""
    x = start
    while True:
        yield x
        x += 2


def _alternating_positions(k: int) -> list[int]:
    """1, k, 2, k-1, 3, ...: walks a k-cycle so neighbours get labels 2 or 4 apart."""
    lo, hi = 1, k
    out = []
    while lo <= hi:
        out.append(lo)
        if lo != hi:
            out.append(hi)
        lo += 1
        hi -= 1
    return out


def label_disjoint_cycles(lengths) -> Labeling:
    spec = DisjointCycles(tuple(lengths))
    labels = {}
    counter = _odd_run(1)
    offset = 0
    for k in spec.lengths:
        for pos in _alternating_positions(k):
            labels[offset + pos] = next(counter)
        offset += k
    return Labeling(labels)


def label_snake(k: int, n: int) -> Labeling:
    """Consecutive odd labels along v_1, w_{1,*}, v_2, w_{2,*}, ..., v_n."""
    Snake(k, n)
    counter = _odd_run(1)
    labels = {1: next(counter)}
    for i in range(1, n):
        for j in range(1, k - 1):
            labels[n + (i - 1) * (k - 2) + j] = next(counter)
        labels[i + 1] = next(counter)
    return Labeling(labels)


def label_cycle_chain(k: int, n: int) -> Labeling:
    CycleChain(k, n)
    nw, nx = _cycle_chain_path_lengths(k)
    counter = _odd_run(1)
    labels = {1: next(counter)}
    for i in range(1, n + 1):
        base = n + 1 + (i - 1) * (k - 2)
        w = [base + j for j in range(1, nw + 1)]
        x = [base + nw + j for j in range(1, nx + 1)]
        if k % 2 == 0:
            walk = [v for pair in zip(w, x) for v in pair]
        else:
            walk = [v for pair in zip(x, w) for v in pair] + [x[-1]]
        for v in walk + [i + 1]:
            labels[v] = next(counter)
    return Labeling(labels)


def label_book(n: int, k: int) -> Labeling:
    """Pages get consecutive odd runs; ``v`` is moved onto a Bertrand prime.

    With ``t`` the order, the largest prime ``p`` in ``(t, 2t)`` is at least
    half of every label, so it is coprime to all of them.
    """
    Book(n, k)
    u, v = 1, 2
    page = k - 2

    def w(i, j):
        return 2 + (i - 1) * page + j

    labels = {u: 1}
    counter = _odd_run(3)
    for i in range(1, n + 1):
        for j in range(1, page + 1):
            labels[w(i, j)] = next(counter)
    top = 2 * page * n + 3
    labels[v] = top

    p = bertrand_prime(page * n + 2)
    if p != top:
        # p sits on some w_{a,b}: slide the rest of page a down and put the top label last
        pos = next(x for x, lab in labels.items() if lab == p)
        a, b = divmod(pos - 3, page)
        a, b = a + 1, b + 1
        for j in range(b, page):
            labels[w(a, j)] = labels[w(a, j + 1)]
        labels[w(a, page)] = top
        labels[v] = p
    return Labeling(labels)


def label_prism(n: int) -> Labeling:
    """GP(n, 1): inner u_i = 4i - 3, outer v_i = 4i - 1, swapping u_1, v_1 when n = 1 mod 3."""
    GeneralizedPetersen(n, 1)
    labels = {}
    for i in range(1, n + 1):
        labels[i] = 4 * i - 1
        labels[n + i] = 4 * i - 3
    if n % 3 == 1:
        labels[1], labels[n + 1] = 1, 3
    return Labeling(labels)


# Seed layers for the 3-, 5- and 6-gon stacked prisms; layer i > period reuses
# layer ((i-1) mod period) + 1 shifted by ``shift`` per full period.
_PRISM_TABLES = {
    3: (18, ((1, 3, 5), (9, 11, 7), (17, 13, 15))),
    5: (
        50,
        (
            (1, 3, 7, 9, 5),
            (17, 19, 15, 11, 13),
            (25, 21, 23, 27, 29),
            (33, 37, 39, 35, 31),
            (49, 45, 41, 43, 47),
        ),
    ),
    6: (36, ((1, 9, 11, 3, 7, 5), (17, 13, 15, 19, 23, 21), (33, 29, 31, 35, 27, 25))),
}


def _is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def supported_polygon(k: int) -> bool:
    return k in _PRISM_TABLES or (k >= 4 and _is_power_of_two(k))


def _layered_labels(k: int, n: int) -> Labeling:
    labels = {}
    if k in _PRISM_TABLES:
        shift, table = _PRISM_TABLES[k]
        period = len(table)
        for i in range(1, n + 1):
            b = (i - 1) % period + 1
            a = (i - b) // period
            for j in range(1, k + 1):
                labels[(i - 1) * k + j] = table[b - 1][j - 1] + shift * a
        return Labeling(labels)
    # power-of-two sides: layer i takes (i-1)*2k + 1 .. i*2k - 1 in alternating order
    positions = _alternating_positions(k)
    for i in range(1, n + 1):
        start = (i - 1) * 2 * k + 1
        for r, j in enumerate(positions):
            labels[(i - 1) * k + j] = start + 2 * r
    return Labeling(labels)


def label_stacked_prism(k: int, n: int) -> Labeling:
    StackedPrism(k, n)
    if not supported_polygon(k):
        raise UnsupportedPolygon(k)
    return _layered_labels(k, n)


def label_grid(m: int, n: int) -> Labeling:
    """Grid P_m x P_n, labeled as the stacked prism it spans (m = 2 uses the power-of-two layout)."""
    Grid(m, n)
    if not (supported_polygon(m) or m == 2):
        raise UnsupportedPolygon(m)
    return _layered_labels(m, n)


def label_spider(legs) -> Labeling:
    """Center 1, then each leg outward with the next consecutive odd labels."""
    spec = Spider(tuple(legs))
    order = 1 + sum(spec.legs)
    return Labeling({v: 2 * v - 1 for v in range(1, order + 1)})


def label_perfect_binary_tree(levels: int) -> Labeling:
    """Children of a level-k vertex labeled x get x + 2^k and x + 2^(k+1)."""
    PerfectBinaryTree(levels)
    labels = {1: 1}
    if levels >= 2:
        labels[2], labels[3] = 3, 5
    for k in range(2, levels):
        for parent in range(2 ** (k - 1), 2**k):
            x = labels[parent]
            labels[2 * parent] = x + 2**k
            labels[2 * parent + 1] = x + 2 ** (k + 1)
    return Labeling(labels)


def _caterpillar_spine_choice(m: int, degree: int) -> int:
    """Smallest of m, m+2, ..., m+2(degree-2) fit for a spine vertex of this degree."""
    window = [m + 2 * r for r in range(degree - 1)]
    if degree == 2:
        return m
    banned = (3,) if degree == 3 else (3, 5)
    return next(x for x in window if all(x % p for p in banned))


def label_caterpillar_maxdeg5(spec: Caterpillar) -> Labeling:
    n = spec.spine
    leaf_ids = {}
    next_id = n + 1
    for idx, count in enumerate(spec.leaves):
        leaf_ids[idx + 2] = list(range(next_id, next_id + count))
        next_id += count
    for i, leaves in leaf_ids.items():
        if len(leaves) + 2 > 5:
            raise DegreeTooLarge(i, len(leaves) + 2)

    labels = {1: 1}
    m = 3
    for i in range(2, n):
        leaves = leaf_ids[i]
        degree = len(leaves) + 2
        window = [m + 2 * r for r in range(degree - 1)]
        chosen = _caterpillar_spine_choice(m, degree)
        labels[i] = chosen
        window.remove(chosen)
        for leaf, x in zip(leaves, window):
            labels[leaf] = x
        m += 2 * (degree - 1)
    labels[n] = m
    return Labeling(labels)


def label_t_toed_caterpillar(n: int, t: int) -> Labeling:
    """Spine u, v_1..v_n, w; toes of v_i receive coprime-matched blocks.

    One of the two largest labels is coprime to an interior label 2k - 1; the
    interior labels are reordered so 2k - 1 ends up on v_n next to w.
    """
    TToedCaterpillar(n, t)
    big_low = 2 * n * (t + 1) + 1
    big_high = big_low + 2
    u, w = 1, n + 2

    def v(i):
        return 1 + i

    def toe(i, j):
        return n + 2 + (i - 1) * t + j

    if n == 1:
        interior = [1]
        w_label, u_label = big_high, big_low
    else:
        choice = None
        for k in range(2, n + 1):
            for big in (big_high, big_low):
                if math.gcd(2 * k - 1, big) == 1:
                    choice = (2 * k - 1, big)
                    break
            if choice:
                break
        if choice is None:
            raise MatchingFailure(f"no interior label coprime to {big_low} or {big_high}")
        target, w_label = choice
        u_label = big_low if w_label == big_high else big_high
        interior = [1] + reorder_power_of_two(3, n - 1, target)

    labels = {u: u_label, w: w_label}
    for i, x in enumerate(interior, start=1):
        labels[v(i)] = x
    for j in range(1, t + 1):
        h = coprime_matching(n, 2 * n * j + 1, 2)
        for i in range(1, n + 1):
            labels[toe(i, j)] = h(labels[v(i)])
    return Labeling(labels)


def label_firecracker(n: int, k: int) -> Labeling:
    """Path gets 2n+1..4n-1; centers and leaves come from coprime matchings."""
    Firecracker(n, k)
    labels = {}
    h = coprime_matching(n, 2 * n + 1, 2)
    for i in range(1, n + 1):
        labels[i] = 2 * n + 2 * i - 1
        labels[n + i] = h.inverse(labels[i])
    for j in range(1, k - 1):
        hj = coprime_matching(n, 2 * (j + 1) * n + 1, 2)
        for i in range(1, n + 1):
            labels[2 * n + (i - 1) * (k - 2) + j] = hj(labels[n + i])
    return Labeling(labels)


def label_path_power2(n: int) -> Labeling:
    """v_i gets 2i - 1; also valid for the complete cases n = 2, 3."""
    if n < 2:
        raise InvalidParameters(f"path power needs n >= 2, got {n}")
    return Labeling.from_sequence(range(1, 2 * n, 2))


def label_cycle_power2(n: int) -> Labeling:
    if n < 3:
        raise InvalidParameters(f"cycle power needs n >= 3, got {n}")
    if n % 3 == 2:
        beta, bound = n // 3, multiples_of_three_bound(n)
        raise ProvablyInfeasible(
            f"C_{n}^2 with n = 2 mod 3: independence number {beta} < {bound} multiples of 3", beta, bound
        )
    return Labeling.from_sequence(range(1, 2 * n, 2))


# (n, k) -> labels of v_1..v_n for the odd prime powers P_n^k, k >= 3
SMALL_POWER_LABELINGS = {
    (5, 3): (3, 1, 5, 7, 9),
    (6, 3): (3, 1, 5, 7, 9, 11),
    (7, 3): (3, 1, 5, 7, 9, 11, 13),
    (9, 3): (3, 1, 5, 7, 9, 11, 13, 17, 15),
    (10, 3): (3, 1, 5, 7, 9, 11, 13, 17, 15, 19),
    (13, 3): (3, 1, 5, 7, 9, 11, 13, 25, 21, 19, 23, 17, 15),
    (6, 4): (3, 1, 5, 7, 11, 9),
    (7, 4): (3, 1, 5, 7, 11, 9, 13),
    (7, 5): (3, 1, 5, 7, 11, 13, 9),
}


def power_independence_number(spec: PathPower | CyclePower) -> int:
    """Closed-form independence number of P_n^k and C_n^k."""
    if isinstance(spec, PathPower):
        return -(-spec.n // (spec.k + 1))
    return spec.n // (spec.k + 1)


def label_small_power(spec: PathPower | CyclePower) -> Labeling:
    """Table labeling for the odd prime P_n^k (k >= 3); otherwise raise the refutation."""
    if not isinstance(spec, (PathPower, CyclePower)):
        raise InvalidParameters(f"expected a path or cycle power, got {spec!r}")
    if spec.k < 3:
        raise InvalidParameters(f"label_small_power handles k >= 3, got k={spec.k}")
    if isinstance(spec, PathPower) and (spec.n, spec.k) in SMALL_POWER_LABELINGS:
        return Labeling.from_sequence(SMALL_POWER_LABELINGS[spec.n, spec.k])
    beta = power_independence_number(spec)
    bound = multiples_of_three_bound(spec.n)
    kind = "P" if isinstance(spec, PathPower) else "C"
    if beta >= bound:
        raise AssertionError(f"{kind}_{spec.n}^{spec.k} is outside the characterization")
    raise ProvablyInfeasible(
        f"{kind}_{spec.n}^{spec.k}: independence number {beta} < {bound} multiples of 3", beta, bound
    )


ODD_PRIME = "odd_prime"
NOT_ODD_PRIME = "not_odd_prime"
CONJECTURED = "conjectured"


@dataclass(frozen=True)
class Verdict:
    status: str
    labeler: Optional[str] = None
    reason: str = ""

    def to_json(self) -> dict:
        return {"status": self.status, "labeler": self.labeler, "reason": self.reason}


def _caterpillar_labeler(spec: Caterpillar) -> Optional[str]:
    if all(c <= 3 for c in spec.leaves):
        return "label_caterpillar_maxdeg5"
    if spec.spine >= 3 and len(set(spec.leaves)) == 1:
        return "label_t_toed_caterpillar"
    return None


def classify(spec: FamilySpec) -> Verdict:
    """Known verdict for a family instance, and which labeler realizes it."""
    simple = {
        DisjointCycles: "label_disjoint_cycles",
        Snake: "label_snake",
        CycleChain: "label_cycle_chain",
        Book: "label_book",
        Spider: "label_spider",
        PerfectBinaryTree: "label_perfect_binary_tree",
        TToedCaterpillar: "label_t_toed_caterpillar",
        Firecracker: "label_firecracker",
    }
    if type(spec) in simple:
        return Verdict(ODD_PRIME, simple[type(spec)])
    if isinstance(spec, GeneralizedPetersen):
        if spec.k == 1:
            return Verdict(ODD_PRIME, "label_prism")
        if spec.k == 2:
            return Verdict(ODD_PRIME, None, "GP(n,2) is odd prime by prior work; no constructive labeler here")
        return Verdict(CONJECTURED, None, "GP(n,k) for k > 2 is conjectured odd prime")
    if isinstance(spec, StackedPrism):
        if supported_polygon(spec.k):
            return Verdict(ODD_PRIME, "label_stacked_prism")
        return Verdict(CONJECTURED, None, f"Y_{{{spec.k},n}} is conjectured odd prime")
    if isinstance(spec, Grid):
        if supported_polygon(spec.m) or spec.m == 2:
            return Verdict(ODD_PRIME, "label_grid")
        return Verdict(CONJECTURED, None, f"follows from the conjecture for Y_{{{spec.m},n}}")
    if isinstance(spec, PathPower):
        if spec.k == 1:
            return Verdict(ODD_PRIME, None, "a path takes consecutive odd labels")
        if spec.k == 2:
            return Verdict(ODD_PRIME, "label_path_power2")
        if (spec.n, spec.k) in SMALL_POWER_LABELINGS:
            return Verdict(ODD_PRIME, "label_small_power")
        return Verdict(NOT_ODD_PRIME, None, _power_refutation(spec))
    if isinstance(spec, CyclePower):
        if spec.k == 1:
            return Verdict(ODD_PRIME, "label_disjoint_cycles")
        if spec.k == 2 and spec.n % 3 != 2:
            return Verdict(ODD_PRIME, "label_cycle_power2")
        return Verdict(NOT_ODD_PRIME, None, _power_refutation(spec))
    if isinstance(spec, Caterpillar):
        labeler = _caterpillar_labeler(spec)
        if labeler:
            return Verdict(ODD_PRIME, labeler)
        return Verdict(CONJECTURED, None, "all trees are conjectured odd prime")
    if isinstance(spec, MaximalPrimeGraph):
        if spec.n <= RN_MAX_ORDER:
            return Verdict(ODD_PRIME, "rn_labeling")
        return Verdict(CONJECTURED, None, "R_n for n > 50 is open")
    raise InvalidParameters(f"not a family spec: {spec!r}")


def _power_refutation(spec) -> str:
    beta = power_independence_number(spec)
    bound = multiples_of_three_bound(spec.n)
    return f"independence number {beta} < {bound} multiples of 3"


def label_family(spec: FamilySpec) -> Labeling:
    """Dispatch to the labeler for ``spec``.

    Raises :class:`ProvablyInfeasible` for refuted instances and
    :class:`UnsupportedPolygon` / :class:`InvalidParameters` when no
    constructive labeling is available.
    """
    if isinstance(spec, DisjointCycles):
        return label_disjoint_cycles(spec.lengths)
    if isinstance(spec, Snake):
        return label_snake(spec.k, spec.n)
    if isinstance(spec, CycleChain):
        return label_cycle_chain(spec.k, spec.n)
    if isinstance(spec, Book):
        return label_book(spec.n, spec.k)
    if isinstance(spec, GeneralizedPetersen):
        if spec.k != 1:
            raise InvalidParameters(f"no constructive labeler for GP({spec.n},{spec.k})")
        return label_prism(spec.n)
    if isinstance(spec, StackedPrism):
        return label_stacked_prism(spec.k, spec.n)
    if isinstance(spec, Grid):
        return label_grid(spec.m, spec.n)
    if isinstance(spec, PathPower):
        if spec.k == 1:
            return Labeling.from_sequence(range(1, 2 * spec.n, 2))
        if spec.k == 2:
            return label_path_power2(spec.n)
        return label_small_power(spec)
    if isinstance(spec, CyclePower):
        if spec.k == 1:
            return label_disjoint_cycles([spec.n])
        if spec.k == 2:
            return label_cycle_power2(spec.n)
        return label_small_power(spec)
    if isinstance(spec, Spider):
        return label_spider(spec.legs)
    if isinstance(spec, PerfectBinaryTree):
        return label_perfect_binary_tree(spec.levels)
    if isinstance(spec, Caterpillar):
        labeler = _caterpillar_labeler(spec)
        if labeler == "label_caterpillar_maxdeg5":
            return label_caterpillar_maxdeg5(spec)
        if labeler == "label_t_toed_caterpillar":
            return label_t_toed_caterpillar(spec.spine - 2, spec.leaves[0])
        raise DegreeTooLarge(*max(((i + 2, c + 2) for i, c in enumerate(spec.leaves)), key=lambda p: p[1]))
    if isinstance(spec, TToedCaterpillar):
        return label_t_toed_caterpillar(spec.n, spec.t)
    if isinstance(spec, Firecracker):
        return label_firecracker(spec.n, spec.k)
    if isinstance(spec, MaximalPrimeGraph):
        return rn_labeling(spec.n)
    raise InvalidParameters(f"not a family spec: {spec!r}")
