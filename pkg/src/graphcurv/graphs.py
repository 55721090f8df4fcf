"""Finite simple undirected graphs: representation, parsing, generators.

Vertices are always 0-based integers.  Graph values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphInputError
from .rationals import parse_ratio
from .seeding import counter_values_np

GNP_MAX_RETRIES = 1000


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency lists."""

    __slots__ = ("n", "adjacency")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise GraphInputError(f"vertex count must be positive, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphInputError(f"vertex index out of range in edge ({u}, {v}), n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    n: int
    m: int
    issues: list[str] = field(default_factory=list)


def validate(g: Graph) -> ValidationReport:
    """Structural report; connectivity via one BFS from vertex 0."""
    seen = _bfs_reachable(g, 0)
    connected = len(seen) == g.n
    issues = []
    if not connected:
        missing = next(v for v in range(g.n) if v not in seen)
        issues.append(f"not connected: vertex {missing} unreachable from vertex 0")
    return ValidationReport(connected=connected, n=g.n, m=g.m, issues=issues)


def _bfs_reachable(g: Graph, source: int) -> set[int]:
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


# ---------------------------------------------------------------------------
# Edge-list file format: '#' comment lines, then "n m", then m lines "u v".


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the edge-list format; duplicate edges are deduplicated."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    rows = [ln.strip() for ln in lines if ln.strip() and not ln.strip().startswith("#")]
    if not rows:
        raise GraphInputError("empty input, expected header line 'n m'")
    header = rows[0].split()
    if len(header) != 2:
        raise GraphInputError(f"malformed header {rows[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphInputError(f"malformed header {rows[0]!r}, expected integers 'n m'") from None
    if len(rows) - 1 != m:
        raise GraphInputError(f"header promises {m} edges, found {len(rows) - 1} edge lines")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphInputError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"malformed edge line {ln!r}") from None
        edges.append((u, v))
    return Graph(n, edges)


def serialize(g: Graph) -> str:
    """Emit the edge-list format with sorted edges (u < v, lexicographic)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def hypercube(d: int) -> Graph:
    _require(1 <= d <= 20, f"hypercube needs 1 <= d <= 20, got {d}")
    n = 1 << d
    return Graph(n, [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)])


def grid(rows: int, cols: int) -> Graph:
    _require(rows >= 1 and cols >= 1, f"grid needs positive dimensions, got {rows}x{cols}")
    def idx(r, c):
        return r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Graph(rows * cols, edges)


def gnp(n: int, p: Fraction, seed: int) -> tuple[Graph, int]:
    """Connected Erdos-Renyi G(n, p); returns (graph, retry count).

    Each potential edge gets a deterministic counter-based 64-bit coin, so the
    graph is a pure function of (n, p, seed).  If the draw is disconnected the
    sub-seed advances and the whole graph is redrawn, up to GNP_MAX_RETRIES.
    The coin keeps p as an exact fraction: edge present iff r * den < num * 2^64.
    """
    _require(n >= 1, f"gnp needs n >= 1, got {n}")
    p = Fraction(p)
    _require(0 <= p <= 1, f"gnp probability must be in [0, 1], got {p}")
    if p == 1:
        return complete(n), 0
    # r < threshold  <=>  r * den < num * 2^64, for integer r
    threshold = -(-(p.numerator << 64) // p.denominator)
    iu, ju = np.triu_indices(n, k=1)
    counters = np.arange(len(iu), dtype=np.uint64)
    for retry in range(GNP_MAX_RETRIES):
        r = counter_values_np(seed, counters, retry)
        mask = r < np.uint64(threshold) if threshold > 0 else np.zeros(len(iu), bool)
        edges = list(zip(iu[mask].tolist(), ju[mask].tolist()))
        g = Graph(n, edges)
        if validate(g).connected:
            return g, retry
    raise GraphInputError(
        f"gnp({n}, {p}, seed={seed}) failed to produce a connected graph in {GNP_MAX_RETRIES} retries"
    )


_FAMILIES = ("path", "cycle", "complete", "star", "hypercube", "grid", "gnp")


def generate(family: str, params: Sequence[int | Fraction], seed: int = 0) -> Graph:
    """Factory over the named families; see the per-family helpers."""
    if family not in _FAMILIES:
        raise GraphInputError(f"unknown family {family!r}, expected one of {_FAMILIES}")
    try:
        if family == "gnp":
            n, p = params
            return gnp(int(n), Fraction(p), seed)[0]
        ints = [int(x) for x in params]
        if family == "grid":
            return grid(*ints)
        return {"path": path, "cycle": cycle, "complete": complete,
                "star": star, "hypercube": hypercube}[family](*ints)
    except TypeError:
        raise GraphInputError(f"wrong parameter count for {family}: {params!r}") from None


def parse_generator_spec(spec: str, seed: int = 0) -> Graph:
    """Parse "family:param[,param...]", e.g. "path:5" or "gnp:20,1/4"."""
    if ":" not in spec:
        raise GraphInputError(f"generator spec {spec!r} must look like 'family:params'")
    family, _, rest = spec.partition(":")
    family = family.strip()
    raw = [s for s in rest.split(",") if s.strip()]
    if not raw:
        raise GraphInputError(f"generator spec {spec!r} has no parameters")
    params: list[int | Fraction] = []
    for tok in raw:
        try:
            params.append(parse_ratio(tok))
        except ValueError:
            raise GraphInputError(f"bad parameter {tok!r} in generator spec {spec!r}") from None
    return generate(family, params, seed=seed)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphInputError(msg)
