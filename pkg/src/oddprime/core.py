"""Graph and labeling model plus the odd prime labeling verifier.

Vertices are 1-indexed. Edges are kept as sorted ``(u, v)`` pairs with
``u < v`` so that every report and serialized form is reproducible.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import PartialLabeling

Edge = tuple[int, int]


def gcd(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError(f"gcd expects positive integers, got ({a}, {b})")
    return math.gcd(a, b)


def expected_label_set(n: int) -> frozenset[int]:
    """The odd labels ``{1, 3, ..., 2n - 1}`` used on a graph of order ``n``."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return frozenset(range(1, 2 * n, 2))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..order``.

    Use :meth:`from_edges` to build one from unordered pairs; the constructor
    itself only accepts already-normalized edges but still validates them.
    """

    order: int
    edges: tuple[Edge, ...]
    names: Mapping[int, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"graph order must be positive, got {self.order}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u < v <= self.order):
                raise ValueError(f"edge ({u}, {v}) is not a normalized pair in [1, {self.order}]")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        for v in self.names:
            if not 1 <= v <= self.order:
                raise ValueError(f"name given for unknown vertex {v}")
        object.__setattr__(self, "names", dict(self.names))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Iterable[int]], names: Mapping[int, str] | None = None) -> Graph:
        """Build a graph from unordered pairs; duplicates collapse, self-loops raise."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(order, tuple(sorted(normalized)), names or {})

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.order + 1)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    def name(self, v: int) -> str:
        return self.names.get(v, f"v_{v}")

    def without_edges(self, removed: Iterable[Iterable[int]]) -> Graph:
        """Spanning subgraph with the given edges deleted."""
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return Graph(self.order, tuple(e for e in self.edges if e not in drop), self.names)

    def to_json(self) -> dict:
        doc = {"n": self.order, "edges": [list(e) for e in self.edges]}
        if self.names:
            doc["names"] = {str(v): self.names[v] for v in sorted(self.names)}
        return doc

    @classmethod
    def from_json(cls, doc: Mapping) -> Graph:
        names = {int(k): str(v) for k, v in doc.get("names", {}).items()}
        return cls.from_edges(int(doc["n"]), [tuple(e) for e in doc["edges"]], names)


@dataclass(frozen=True)
class Labeling:
    """Map from vertex id to label. Immutable after construction."""

    labels: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "labels", {int(v): int(x) for v, x in sorted(self.labels.items())})

    @classmethod
    def from_sequence(cls, values: Iterable[int]) -> Labeling:
        """Labels for vertices 1, 2, ... in order."""
        return cls({i: x for i, x in enumerate(values, start=1)})

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, v) -> bool:
        return v in self.labels

    def items(self):
        return self.labels.items()

    def as_list(self) -> list[int]:
        """Labels ordered by vertex id."""
        return [self.labels[v] for v in sorted(self.labels)]

    def to_json(self) -> dict:
        return {"labels": {str(v): x for v, x in self.labels.items()}}

    @classmethod
    def from_json(cls, doc: Mapping) -> Labeling:
        return cls({int(k): int(v) for k, v in doc["labels"].items()})


@dataclass(frozen=True)
class LabelSetDefect:
    missing: tuple[int, ...]
    extra: tuple[int, ...]
    duplicated: tuple[int, ...]

    def to_json(self) -> dict:
        return {"missing": list(self.missing), "extra": list(self.extra), "duplicated": list(self.duplicated)}


@dataclass(frozen=True)
class VerificationReport:
    label_set_defects: tuple[LabelSetDefect, ...]
    violating_edges: tuple[tuple[int, int, int], ...]

    @property
    def is_valid(self) -> bool:
        return not self.label_set_defects and not self.violating_edges

    def to_json(self) -> dict:
        return {
            "is_valid": self.is_valid,
            "label_set_defects": [d.to_json() for d in self.label_set_defects],
            "violating_edges": [list(e) for e in self.violating_edges],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> VerificationReport:
        defects = tuple(
            LabelSetDefect(tuple(d["missing"]), tuple(d["extra"]), tuple(d["duplicated"]))
            for d in doc["label_set_defects"]
        )
        return cls(defects, tuple(tuple(e) for e in doc["violating_edges"]))


def verify_labeling(g: Graph, ell: Labeling) -> VerificationReport:
    """Check ``ell`` against ``g``: exact label set and coprime labels on every edge.

    Raises :class:`PartialLabeling` when a vertex of ``g`` has no label.
    Labels given for vertices outside ``g`` count as extra labels.
    """
    missing_vertices = [v for v in g.vertices if v not in ell]
    if missing_vertices:
        raise PartialLabeling(missing_vertices)

    counts = Counter(ell.labels.values())
    expected = expected_label_set(g.order)
    present = set(counts)
    defects = []
    missing = tuple(sorted(expected - present))
    extra = tuple(sorted(present - expected))
    duplicated = tuple(sorted(x for x, c in counts.items() if c > 1))
    if missing or extra or duplicated:
        defects.append(LabelSetDefect(missing, extra, duplicated))

    violations = []
    for u, v in g.edges:
        d = math.gcd(ell[u], ell[v])
        if d != 1:
            violations.append((u, v, d))
    return VerificationReport(tuple(defects), tuple(violations))


def to_dot(g: Graph, ell: Labeling | None = None, graph_name: str = "G") -> str:
    """Graphviz rendering; node text is the label (or the role name), tooltip the role name."""
    lines = [f"graph {graph_name} {{"]
    for v in g.vertices:
        text = str(ell[v]) if ell is not None and v in ell else g.name(v)
        lines.append(f'  {v} [label="{text}", tooltip="{g.name(v)}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
