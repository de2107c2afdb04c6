"""Parameter records and constructors for the graph families.

Vertex numbering is part of the public contract: spine / outer-ring vertices
come first, auxiliary vertices follow in ``(i, j)`` lexicographic order. Each
builder documents its layout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import ClassVar, Union

from .core import Graph
from .errors import InvalidParameters


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameters(message)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class _Spec:
    tag: ClassVar[str]

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, list):
                object.__setattr__(self, f.name, tuple(value))
                value = getattr(self, f.name)
            items = value if isinstance(value, tuple) else (value,)
            _require(all(_is_int(x) for x in items), f"{self.tag}: {f.name} must be integer-valued, got {value!r}")
        self.validate()

    def validate(self) -> None:  # pragma: no cover - overridden
        pass

    def to_json(self) -> dict:
        return {"family": self.tag, "params": {f.name: _plain(getattr(self, f.name)) for f in fields(self)}}


def _plain(value):
    return list(value) if isinstance(value, tuple) else value


@dataclass(frozen=True)
class DisjointCycles(_Spec):
    lengths: tuple[int, ...]
    tag: ClassVar[str] = "disjoint-cycles"

    def validate(self):
        _require(len(self.lengths) >= 1, "disjoint-cycles: need at least one cycle")
        _require(all(k >= 3 for k in self.lengths), f"disjoint-cycles: every length must be >= 3, got {self.lengths}")


@dataclass(frozen=True)
class Snake(_Spec):
    k: int
    n: int
    tag: ClassVar[str] = "snake"

    def validate(self):
        _require(self.k >= 3, f"snake: k must be >= 3, got {self.k}")
        _require(self.n >= 2, f"snake: n must be >= 2, got {self.n}")


@dataclass(frozen=True)
class CycleChain(_Spec):
    k: int
    n: int
    tag: ClassVar[str] = "cycle-chain"

    def validate(self):
        _require(self.k >= 3, f"cycle-chain: k must be >= 3, got {self.k}")
        _require(self.n >= 1, f"cycle-chain: n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Book(_Spec):
    n: int
    k: int
    tag: ClassVar[str] = "book"

    def validate(self):
        _require(self.n >= 1, f"book: n (pages) must be >= 1, got {self.n}")
        _require(self.k >= 3, f"book: k (page size) must be >= 3, got {self.k}")


@dataclass(frozen=True)
class GeneralizedPetersen(_Spec):
    n: int
    k: int
    tag: ClassVar[str] = "generalized-petersen"

    def validate(self):
        _require(self.n >= 3, f"generalized-petersen: n must be >= 3, got {self.n}")
        _require(
            1 <= self.k <= (self.n - 1) // 2,
            f"generalized-petersen: k must satisfy 1 <= k <= {(self.n - 1) // 2}, got {self.k}",
        )


@dataclass(frozen=True)
class StackedPrism(_Spec):
    k: int
    n: int
    tag: ClassVar[str] = "stacked-prism"

    def validate(self):
        _require(self.k >= 3, f"stacked-prism: k must be >= 3, got {self.k}")
        _require(self.n >= 1, f"stacked-prism: n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Grid(_Spec):
    m: int
    n: int
    tag: ClassVar[str] = "grid"

    def validate(self):
        _require(self.m >= 2, f"grid: m must be >= 2, got {self.m}")
        _require(self.n >= 1, f"grid: n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class PathPower(_Spec):
    n: int
    k: int
    tag: ClassVar[str] = "path-power"

    def validate(self):
        _require(self.n >= 2, f"path-power: n must be >= 2, got {self.n}")
        _require(self.k >= 1, f"path-power: k must be >= 1, got {self.k}")
        _require(self.n > self.k + 1, f"path-power: n={self.n} <= k+1={self.k + 1} gives the complete graph")


@dataclass(frozen=True)
class CyclePower(_Spec):
    n: int
    k: int
    tag: ClassVar[str] = "cycle-power"

    def validate(self):
        _require(self.n >= 3, f"cycle-power: n must be >= 3, got {self.n}")
        _require(self.k >= 1, f"cycle-power: k must be >= 1, got {self.k}")
        _require(self.n > self.k + 1, f"cycle-power: n={self.n} <= k+1={self.k + 1} gives the complete graph")


@dataclass(frozen=True)
class Spider(_Spec):
    legs: tuple[int, ...]
    tag: ClassVar[str] = "spider"

    def validate(self):
        _require(len(self.legs) >= 1, "spider: need at least one leg")
        _require(all(x >= 1 for x in self.legs), f"spider: leg lengths must be >= 1, got {self.legs}")


@dataclass(frozen=True)
class PerfectBinaryTree(_Spec):
    levels: int
    tag: ClassVar[str] = "binary-tree"

    def validate(self):
        _require(self.levels >= 1, f"binary-tree: levels must be >= 1, got {self.levels}")


@dataclass(frozen=True)
class Caterpillar(_Spec):
    """Spine ``v_1..v_spine``; ``leaves[i]`` leaves hang off interior vertex ``v_{i+2}``."""

    spine: int
    leaves: tuple[int, ...]
    tag: ClassVar[str] = "caterpillar"

    def validate(self):
        _require(self.spine >= 2, f"caterpillar: spine length must be >= 2, got {self.spine}")
        _require(
            len(self.leaves) == self.spine - 2,
            f"caterpillar: need one leaf count per interior vertex ({self.spine - 2}), got {len(self.leaves)}",
        )
        _require(all(c >= 0 for c in self.leaves), f"caterpillar: leaf counts must be >= 0, got {self.leaves}")


@dataclass(frozen=True)
class TToedCaterpillar(_Spec):
    n: int
    t: int
    tag: ClassVar[str] = "t-toed-caterpillar"

    def validate(self):
        _require(self.n >= 1, f"t-toed-caterpillar: n must be >= 1, got {self.n}")
        _require(self.t >= 0, f"t-toed-caterpillar: t must be >= 0, got {self.t}")


@dataclass(frozen=True)
class Firecracker(_Spec):
    n: int
    k: int
    tag: ClassVar[str] = "firecracker"

    def validate(self):
        _require(self.n >= 2, f"firecracker: n must be >= 2, got {self.n}")
        _require(self.k >= 3, f"firecracker: k must be >= 3, got {self.k}")


@dataclass(frozen=True)
class MaximalPrimeGraph(_Spec):
    n: int
    tag: ClassVar[str] = "maximal-prime"

    def validate(self):
        _require(self.n >= 1, f"maximal-prime: n must be >= 1, got {self.n}")


FamilySpec = Union[
    DisjointCycles,
    Snake,
    CycleChain,
    Book,
    GeneralizedPetersen,
    StackedPrism,
    Grid,
    PathPower,
    CyclePower,
    Spider,
    PerfectBinaryTree,
    Caterpillar,
    TToedCaterpillar,
    Firecracker,
    MaximalPrimeGraph,
]

FAMILIES: dict[str, type] = {
    cls.tag: cls
    for cls in (
        DisjointCycles,
        Snake,
        CycleChain,
        Book,
        GeneralizedPetersen,
        StackedPrism,
        Grid,
        PathPower,
        CyclePower,
        Spider,
        PerfectBinaryTree,
        Caterpillar,
        TToedCaterpillar,
        Firecracker,
        MaximalPrimeGraph,
    )
}


def make_spec(tag: str, params: dict) -> FamilySpec:
    """Build a spec from a family tag and a parameter dict (the CLI's JSON blob)."""
    try:
        cls = FAMILIES[tag]
    except KeyError:
        raise InvalidParameters(f"unknown family {tag!r}; choose from {sorted(FAMILIES)}") from None
    names = {f.name for f in fields(cls)}
    unknown = set(params) - names
    absent = names - set(params)
    if unknown or absent:
        raise InvalidParameters(f"{tag}: expected parameters {sorted(names)}, got {sorted(params)}")
    return cls(**params)


class _Builder:
    """Accumulates vertices (with role names) and edges."""

    def __init__(self):
        self.names: dict[int, str] = {}
        self.edges: list[tuple[int, int]] = []

    def vertex(self, name: str) -> int:
        v = len(self.names) + 1
        self.names[v] = name
        return v

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def path(self, vs) -> None:
        for u, v in zip(vs, vs[1:]):
            self.edge(u, v)

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.names), self.edges, self.names)


def _build_disjoint_cycles(spec: DisjointCycles) -> Graph:
    # cycle c occupies a consecutive id block, vertices v_{c,1..k} clockwise
    b = _Builder()
    for c, k in enumerate(spec.lengths, start=1):
        vs = [b.vertex(f"v_{{{c},{j}}}") for j in range(1, k + 1)]
        b.path(vs + [vs[0]])
    return b.graph()


def _build_snake(spec: Snake) -> Graph:
    # v_1..v_n, then w_{i,j} for i < n, j <= k-2
    k, n = spec.k, spec.n
    b = _Builder()
    v = [None] + [b.vertex(f"v_{i}") for i in range(1, n + 1)]
    for i in range(1, n):
        w = [b.vertex(f"w_{{{i},{j}}}") for j in range(1, k - 1)]
        b.path([v[i]] + w + [v[i + 1]])
        b.edge(v[i], v[i + 1])
    return b.graph()


def _cycle_chain_path_lengths(k: int) -> tuple[int, int]:
    """Internal vertex counts of the w- and x-paths of one link."""
    if k % 2 == 0:
        return k // 2 - 1, k // 2 - 1
    return (k - 1) // 2 - 1, (k - 1) // 2


def _build_cycle_chain(spec: CycleChain) -> Graph:
    # v_1..v_{n+1}, then per link i: w_{i,*} then x_{i,*}
    k, n = spec.k, spec.n
    nw, nx = _cycle_chain_path_lengths(k)
    b = _Builder()
    v = [None] + [b.vertex(f"v_{i}") for i in range(1, n + 2)]
    for i in range(1, n + 1):
        w = [b.vertex(f"w_{{{i},{j}}}") for j in range(1, nw + 1)]
        x = [b.vertex(f"x_{{{i},{j}}}") for j in range(1, nx + 1)]
        b.path([v[i]] + w + [v[i + 1]])
        b.path([v[i]] + x + [v[i + 1]])
    return b.graph()


def _build_book(spec: Book) -> Graph:
    # u = 1, v = 2, then w_{i,j}; u ~ w_{i,1}, w_{i,k-2} ~ v
    n, k = spec.n, spec.k
    b = _Builder()
    u = b.vertex("u")
    v = b.vertex("v")
    b.edge(u, v)
    for i in range(1, n + 1):
        w = [b.vertex(f"w_{{{i},{j}}}") for j in range(1, k - 1)]
        b.path([u] + w + [v])
    return b.graph()


def _build_generalized_petersen(spec: GeneralizedPetersen) -> Graph:
    # outer v_1..v_n = ids 1..n, inner u_1..u_n = ids n+1..2n
    n, k = spec.n, spec.k
    b = _Builder()
    v = [b.vertex(f"v_{i}") for i in range(1, n + 1)]
    u = [b.vertex(f"u_{i}") for i in range(1, n + 1)]
    for i in range(n):
        b.edge(v[i], v[(i + 1) % n])
        b.edge(u[i], u[(i + k) % n])
        b.edge(v[i], u[i])
    return b.graph()


def _build_layers(m: int, n: int, wrap: bool) -> Graph:
    # v_{i,j} has id (i-1)*m + j; i indexes layers, j positions within a layer
    b = _Builder()
    layers = [[b.vertex(f"v_{{{i},{j}}}") for j in range(1, m + 1)] for i in range(1, n + 1)]
    for i, layer in enumerate(layers):
        b.path(layer)
        if wrap:
            b.edge(layer[-1], layer[0])
        if i + 1 < n:
            for a, c in zip(layer, layers[i + 1]):
                b.edge(a, c)
    return b.graph()


def _build_stacked_prism(spec: StackedPrism) -> Graph:
    return _build_layers(spec.k, spec.n, wrap=True)


def _build_grid(spec: Grid) -> Graph:
    return _build_layers(spec.m, spec.n, wrap=False)


def _power_edges(n: int, k: int, cyclic: bool):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = j - i
            if cyclic:
                d = min(d, n - d)
            if d <= k:
                yield i, j


def power_graph(n: int, k: int, cyclic: bool) -> Graph:
    """P_n^k (or C_n^k when ``cyclic``) without the n > k+1 restriction of PathPower and CyclePower."""
    _require(n >= (3 if cyclic else 1) and k >= 1, f"power graph needs valid n, k; got n={n}, k={k}")
    names = {i: f"v_{i}" for i in range(1, n + 1)}
    return Graph.from_edges(n, _power_edges(n, k, cyclic), names)


def _build_path_power(spec: PathPower) -> Graph:
    return power_graph(spec.n, spec.k, cyclic=False)


def _build_cycle_power(spec: CyclePower) -> Graph:
    return power_graph(spec.n, spec.k, cyclic=True)


def _build_spider(spec: Spider) -> Graph:
    # center = 1, then leg i outward: x_{i,1} (next to the center) .. x_{i,n_i}
    b = _Builder()
    c = b.vertex("c")
    for i, length in enumerate(spec.legs, start=1):
        leg = [b.vertex(f"x_{{{i},{j}}}") for j in range(1, length + 1)]
        b.path([c] + leg)
    return b.graph()


def _build_binary_tree(spec: PerfectBinaryTree) -> Graph:
    # heap order: v_{i,j} has id 2^(i-1) - 1 + j; children of id p are 2p and 2p+1
    size = 2**spec.levels - 1
    names = {}
    for i in range(1, spec.levels + 1):
        for j in range(1, 2 ** (i - 1) + 1):
            names[2 ** (i - 1) - 1 + j] = f"v_{{{i},{j}}}"
    edges = [(p, c) for c in range(2, size + 1) for p in (c // 2,)]
    return Graph.from_edges(size, edges, names)


def _build_caterpillar(spec: Caterpillar, spine_names=None, leaf_name="x") -> Graph:
    # spine v_1..v_spine first, then leaves x_{i,j} of interior v_i in (i, j) order
    b = _Builder()
    spine_names = spine_names or [f"v_{i}" for i in range(1, spec.spine + 1)]
    spine = [b.vertex(name) for name in spine_names]
    b.path(spine)
    for idx, count in enumerate(spec.leaves):
        i = idx + 2
        for j in range(1, count + 1):
            b.edge(spine[i - 1], b.vertex(f"{leaf_name}_{{{i},{j}}}"))
    return b.graph()


def _build_t_toed(spec: TToedCaterpillar) -> Graph:
    # spine u, v_1..v_n, w (ids 1..n+2), then toes x_{i,j} of v_i
    names = ["u"] + [f"v_{i}" for i in range(1, spec.n + 1)] + ["w"]
    g = _build_caterpillar(Caterpillar(spec.n + 2, (spec.t,) * spec.n), names)
    # relabel toes so the index refers to v_i rather than the spine position
    renamed = dict(g.names)
    for vid, name in g.names.items():
        if name.startswith("x_{"):
            i, j = name[3:-1].split(",")
            renamed[vid] = f"x_{{{int(i) - 1},{j}}}"
    return Graph(g.order, g.edges, renamed)


def _build_firecracker(spec: Firecracker) -> Graph:
    # path v_1..v_n, centers u_1..u_n, then leaves w_{i,j}, j <= k-2
    n, k = spec.n, spec.k
    b = _Builder()
    v = [b.vertex(f"v_{i}") for i in range(1, n + 1)]
    u = [b.vertex(f"u_{i}") for i in range(1, n + 1)]
    b.path(v)
    for i in range(n):
        b.edge(v[i], u[i])
    for i in range(n):
        for j in range(1, k - 1):
            b.edge(u[i], b.vertex(f"w_{{{i + 1},{j}}}"))
    return b.graph()


def _build_maximal_prime(spec: MaximalPrimeGraph) -> Graph:
    n = spec.n
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if math.gcd(i, j) == 1]
    return Graph.from_edges(n, edges, {i: f"v_{i}" for i in range(1, n + 1)})


_BUILDERS = {
    DisjointCycles: _build_disjoint_cycles,
    Snake: _build_snake,
    CycleChain: _build_cycle_chain,
    Book: _build_book,
    GeneralizedPetersen: _build_generalized_petersen,
    StackedPrism: _build_stacked_prism,
    Grid: _build_grid,
    PathPower: _build_path_power,
    CyclePower: _build_cycle_power,
    Spider: _build_spider,
    PerfectBinaryTree: _build_binary_tree,
    Caterpillar: _build_caterpillar,
    TToedCaterpillar: _build_t_toed,
    Firecracker: _build_firecracker,
    MaximalPrimeGraph: _build_maximal_prime,
}


def build_family(spec: FamilySpec) -> Graph:
    try:
        builder = _BUILDERS[type(spec)]
    except KeyError:
        raise InvalidParameters(f"not a family spec: {spec!r}") from None
    return builder(spec)


def family_order(spec: FamilySpec) -> int:
    """Vertex count of ``build_family(spec)``, computed in closed form."""
    if isinstance(spec, DisjointCycles):
        return sum(spec.lengths)
    if isinstance(spec, Snake):
        return (spec.k - 1) * (spec.n - 1) + 1
    if isinstance(spec, CycleChain):
        return spec.n * (spec.k - 1) + 1
    if isinstance(spec, Book):
        return (spec.k - 2) * spec.n + 2
    if isinstance(spec, GeneralizedPetersen):
        return 2 * spec.n
    if isinstance(spec, StackedPrism):
        return spec.k * spec.n
    if isinstance(spec, Grid):
        return spec.m * spec.n
    if isinstance(spec, (PathPower, CyclePower, MaximalPrimeGraph)):
        return spec.n
    if isinstance(spec, Spider):
        return 1 + sum(spec.legs)
    if isinstance(spec, PerfectBinaryTree):
        return 2**spec.levels - 1
    if isinstance(spec, Caterpillar):
        return spec.spine + sum(spec.leaves)
    if isinstance(spec, TToedCaterpillar):
        return spec.n * (spec.t + 1) + 2
    if isinstance(spec, Firecracker):
        return spec.n * spec.k
    raise InvalidParameters(f"not a family spec: {spec!r}")
