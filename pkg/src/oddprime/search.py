"""Exhaustive oracle and infeasibility certificates.

``exhaustive_search`` decides odd-primality of small graphs by backtracking;
``independence_number`` and ``lemma2_check`` give the independence-bound
refutation: an odd prime graph of order n has an independent set large enough
to hold the floor((n+1)/3) multiples of 3 among its labels.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .core import Graph, Labeling, verify_labeling
from .errors import OrderLimitExceeded

DEFAULT_BUDGET = 10**8
DEFAULT_SEARCH_ORDER_LIMIT = 16
DEFAULT_INDEPENDENCE_ORDER_LIMIT = 64

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget_exceeded"

_STATUS = {kernels.FOUND: FOUND, kernels.EXHAUSTED: EXHAUSTED, kernels.BUDGET_EXCEEDED: BUDGET_EXCEEDED}


@dataclass(frozen=True)
class SearchOutcome:
    verdict: str
    labeling: Optional[Labeling]
    nodes_explored: int
    elapsed: float

    @property
    def found(self) -> bool:
        return self.verdict == FOUND

    def to_json(self) -> dict:
        doc = {"verdict": self.verdict, "nodes_explored": self.nodes_explored, "elapsed": self.elapsed}
        if self.labeling is not None:
            doc.update(self.labeling.to_json())
        return doc


@dataclass(frozen=True)
class Lemma2Result:
    beta: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.beta >= self.bound

    def to_json(self) -> dict:
        return {"result": "pass" if self.passed else "fail", "beta": self.beta, "bound": self.bound}


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.order
    for u, v in g.edges:
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    return masks


def independence_number(g: Graph, max_order: int = DEFAULT_INDEPENDENCE_ORDER_LIMIT) -> int:
    """Exact independence number by branch and bound."""
    limit = min(max_order, kernels.MAX_ORDER)
    if g.order > limit:
        raise OrderLimitExceeded(g.order, limit)
    return kernels.independence_number(_adjacency_masks(g))


def multiples_of_three_bound(n: int) -> int:
    """Number of multiples of 3 in 1, 3, ..., 2n - 1."""
    return (n + 1) // 3


def lemma2_check(g: Graph, max_order: int = DEFAULT_INDEPENDENCE_ORDER_LIMIT) -> Lemma2Result:
    """Compare the independence number with the number of multiples of 3 to place.

    A failing result certifies that ``g`` has no odd prime labeling.
    """
    return Lemma2Result(independence_number(g, max_order), multiples_of_three_bound(g.order))


def search_order(g: Graph) -> list[int]:
    """Decreasing degree, ties broken by vertex id."""
    return sorted(g.vertices, key=lambda v: (-g.degree(v), v))


def exhaustive_search(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    max_order: int = DEFAULT_SEARCH_ORDER_LIMIT,
) -> SearchOutcome:
    """Backtracking search over all assignments of ``{1, 3, ..., 2n-1}``.

    Runs single-threaded, so node counts are reproducible. ``max_order`` may be
    raised up to the kernel limit of 64 vertices, at the caller's risk.
    """
    limit = min(max_order, kernels.MAX_ORDER)
    if g.order > limit:
        raise OrderLimitExceeded(g.order, limit)
    order = [v - 1 for v in search_order(g)]
    start = time.perf_counter()
    status, labels, nodes = kernels.search_labeling(_adjacency_masks(g), order, budget)
    elapsed = time.perf_counter() - start
    verdict = _STATUS[status]
    labeling = None
    if verdict == FOUND:
        labeling = Labeling.from_sequence(labels)
        report = verify_labeling(g, labeling)
        if not report.is_valid:
            raise AssertionError(f"search kernel returned an invalid labeling: {report}")
    return SearchOutcome(verdict, labeling, nodes, elapsed)
