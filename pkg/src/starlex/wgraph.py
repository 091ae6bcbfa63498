"""Undirected weighted graphs with loops, and the builders used for the
pendant-path families: paths, cycles, coalescence and path attachment.

Weights are exact (:class:`~starlex.exact.Surd`, rational when the radicand
is 1). A loop of weight ``w`` contributes ``w`` to the diagonal of the
adjacency matrix and nothing to the combinatorial degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .exact import Surd, parse_rational

__all__ = [
    "WeightedGraph",
    "RootedGraph",
    "GraphFormatError",
    "path",
    "cycle",
    "trivial",
    "complete_minus_edge",
    "rooted_path",
    "coalesce",
    "attach_paths",
    "starlike",
    "bridge",
    "adjacency_matrix",
    "degree_matrix",
    "a_alpha_matrix",
    "float_matrix",
    "delete_vertex",
    "delete_edge",
    "is_isomorphic",
    "is_path_graph",
    "parse_edge_list",
    "read_edge_list",
]


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


def _weight(w) -> Surd:
    return w if isinstance(w, Surd) else Surd(Fraction(w))


class WeightedGraph:
    """Vertices ``0..n-1`` and a symmetric weight map on unordered pairs.

    Zero-weight entries are dropped on construction so that an edge is
    present exactly when its weight is positive.
    """

    __slots__ = ("n", "_w", "labels")

    def __init__(self, n: int, weights: dict | Iterable = (), labels: Sequence | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        items = weights.items() if isinstance(weights, dict) else weights
        w: dict[tuple[int, int], Surd] = {}
        for (u, v), wt in items:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            wt = _weight(wt)
            if wt.coef < 0:
                raise ValueError(f"negative weight on ({u},{v})")
            if wt.coef == 0:
                continue
            k = _key(u, v)
            if k in w:
                raise ValueError(f"duplicate edge {k}")
            w[k] = wt
        self.n = n
        self._w = dict(sorted(w.items()))
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self.labels = tuple(labels) if labels is not None else None

    def weight(self, u: int, v: int) -> Surd:
        return self._w.get(_key(u, v), Surd(0))

    def items(self):
        return self._w.items()

    def edges(self) -> list[tuple[int, int]]:
        """Non-loop edges as sorted pairs."""
        return [k for k in self._w if k[0] != k[1]]

    def loops(self) -> dict[int, Surd]:
        return {u: wt for (u, v), wt in self._w.items() if u == v}

    def neighbors(self, u: int) -> list[int]:
        out = []
        for (x, y) in self._w:
            if x == y:
                continue
            if x == u:
                out.append(y)
            elif y == u:
                out.append(x)
        return sorted(out)

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    @property
    def num_edges(self) -> int:
        return len(self.edges())

    def is_simple(self) -> bool:
        return all(k[0] != k[1] and wt == 1 for k, wt in self._w.items())

    def is_rational(self) -> bool:
        return all(wt.is_rational for wt in self._w.values())

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen, stack = {0}, [0]
        while stack:
            u = stack.pop()
            for v in self.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def relabel(self, labels: Sequence) -> "WeightedGraph":
        return WeightedGraph(self.n, self._w, labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self._w == other._w

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._w.items())))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={len(self._w)})"


@dataclass(frozen=True)
class RootedGraph:
    """A graph with a distinguished root.

    ``branches`` records pendant paths attached by :func:`attach_paths`:
    one tuple per path, listing its vertices from the root outward.
    """

    graph: WeightedGraph
    root: int = 0
    branches: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} is not a vertex")

    @property
    def n(self) -> int:
        return self.graph.n


def path(n_vertices: int) -> WeightedGraph:
    if n_vertices < 1:
        raise ValueError("a path needs at least one vertex")
    return WeightedGraph(n_vertices, {(i, i + 1): 1 for i in range(n_vertices - 1)})


def cycle(n_vertices: int) -> WeightedGraph:
    if n_vertices < 3:
        raise ValueError("a cycle needs at least three vertices")
    w = {(i, (i + 1) % n_vertices): 1 for i in range(n_vertices)}
    return WeightedGraph(n_vertices, w)


def trivial() -> WeightedGraph:
    return WeightedGraph(1)


def complete_minus_edge(n_vertices: int = 4) -> WeightedGraph:
    """K_n without the edge between its last two vertices."""
    w = {
        (u, v): 1
        for u, v in itertools.combinations(range(n_vertices), 2)
        if (u, v) != (n_vertices - 2, n_vertices - 1)
    }
    return WeightedGraph(n_vertices, w)


def rooted_path(length: int) -> RootedGraph:
    """Path with ``length`` edges rooted at an end."""
    branch = (tuple(range(1, length + 1)),) if length else ()
    return RootedGraph(path(length + 1), 0, branch)


def coalesce(g1: RootedGraph, g2: RootedGraph) -> RootedGraph:
    """Identify the two roots; loop weights at the roots add.

    ``g1`` keeps its ids; the non-root vertices of ``g2`` follow in order.
    """
    n1 = g1.n
    remap: dict[int, int] = {}
    nxt = n1
    for x in range(g2.n):
        if x == g2.root:
            remap[x] = g1.root
        else:
            remap[x] = nxt
            nxt += 1
    w: dict[tuple[int, int], Surd] = dict(g1.graph.items())
    for (x, y), wt in g2.graph.items():
        k = _key(remap[x], remap[y])
        w[k] = w[k] + wt if k in w else wt
    labels = None
    if g1.graph.labels is not None and g2.graph.labels is not None:
        extra = [g2.graph.labels[x] for x in range(g2.n) if x != g2.root]
        labels = list(g1.graph.labels) + extra
    branches = g1.branches + tuple(
        tuple(remap[x] for x in br) for br in g2.branches
    )
    return RootedGraph(WeightedGraph(nxt, w, labels), g1.root, branches)


def attach_paths(g: RootedGraph, parts: Sequence[int]) -> RootedGraph:
    """G(a, v): one fresh pendant path per part, in the order given.

    Zero parts are skipped. The parts need not be sorted.
    """
    out = g
    for p in parts:
        if p < 0:
            raise ValueError("path lengths must be nonnegative")
        if p:
            out = coalesce(out, rooted_path(p))
    return out


def starlike(parts: Sequence[int]) -> RootedGraph:
    return attach_paths(RootedGraph(trivial()), parts)


def bridge(g: WeightedGraph, u: int, h: WeightedGraph, v: int, w=1) -> WeightedGraph:
    """Disjoint union of ``g`` and ``h`` plus the edge ``u``–``v`` of weight ``w``."""
    weights = dict(g.items())
    for (x, y), wt in h.items():
        weights[(x + g.n, y + g.n)] = wt
    weights[_key(u, v + g.n)] = _weight(w)
    return WeightedGraph(g.n + h.n, weights)


def adjacency_matrix(g: WeightedGraph) -> np.ndarray:
    """Exact weighted adjacency as an object array.

    Entries are Fractions where the weight is rational and Surds otherwise.
    """
    m = np.full((g.n, g.n), Fraction(0), dtype=object)
    for (u, v), wt in g.items():
        val = wt.coef if wt.is_rational else wt
        m[u, v] = val
        m[v, u] = val
    return m


def degree_matrix(g: WeightedGraph) -> np.ndarray:
    m = np.full((g.n, g.n), Fraction(0), dtype=object)
    for u in range(g.n):
        m[u, u] = Fraction(g.degree(u))
    return m


def a_alpha_matrix(g: WeightedGraph, alpha) -> np.ndarray:
    """alpha*D + (1 - alpha)*A for a simple unit-weight graph."""
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    if not g.is_simple():
        raise ValueError("A_alpha is defined for simple unweighted graphs only")
    return alpha * degree_matrix(g) + (1 - alpha) * adjacency_matrix(g)


def float_matrix(m) -> np.ndarray:
    if isinstance(m, WeightedGraph):
        m = adjacency_matrix(m)
    return np.array([[float(x) for x in row] for row in np.asarray(m, dtype=object)], dtype=float).reshape(
        np.shape(m)
    )


def delete_vertex(g: WeightedGraph, u: int) -> WeightedGraph:
    if not 0 <= u < g.n:
        raise ValueError(f"no vertex {u}")

    def shift(x):
        return x - 1 if x > u else x

    w = {(shift(x), shift(y)): wt for (x, y), wt in g.items() if u not in (x, y)}
    labels = None if g.labels is None else [l for i, l in enumerate(g.labels) if i != u]
    return WeightedGraph(g.n - 1, w, labels)


def delete_edge(g: WeightedGraph, e: tuple[int, int]) -> WeightedGraph:
    k = _key(*e)
    if k not in dict(g.items()):
        raise ValueError(f"no edge {e}")
    return WeightedGraph(g.n, {kk: wt for kk, wt in g.items() if kk != k}, g.labels)


def is_path_graph(g: WeightedGraph) -> bool:
    """Simple path P_n (including K_1)."""
    return (
        g.is_simple()
        and g.is_connected()
        and g.num_edges == g.n - 1
        and all(g.degree(u) <= 2 for u in range(g.n))
    )


def is_isomorphic(g: WeightedGraph, h: WeightedGraph) -> bool:
    """Brute-force weighted isomorphism test, meant for graphs of <= 8 vertices."""
    if g.n != h.n or len(g._w) != len(h._w):
        return False

    def signature(x: WeightedGraph, u: int):
        return (x.degree(u), x.weight(u, u).squared(), sorted(x.weight(u, v).squared() for v in x.neighbors(u)))

    sg = [signature(g, u) for u in range(g.n)]
    sh = [signature(h, u) for u in range(h.n)]
    if sorted(map(repr, sg)) != sorted(map(repr, sh)):
        return False
    candidates = [[v for v in range(h.n) if sh[v] == sg[u]] for u in range(g.n)]

    def extend(mapping: list[int], used: set[int]) -> bool:
        u = len(mapping)
        if u == g.n:
            return True
        for v in candidates[u]:
            if v in used:
                continue
            if all(g.weight(u, x) == h.weight(v, mapping[x]) for x in range(u)) and g.weight(u, u) == h.weight(v, v):
                mapping.append(v)
                used.add(v)
                if extend(mapping, used):
                    return True
                mapping.pop()
                used.discard(v)
        return False

    return extend([], set())


class GraphFormatError(ValueError):
    pass


def parse_edge_list(text: str) -> WeightedGraph:
    """Parse ``u v [w]`` lines; ``u u w`` is a loop, ``#`` starts a comment."""
    edges: dict[tuple[int, int], Fraction] = {}
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) not in (2, 3):
            raise GraphFormatError(f"line {lineno}: expected 'u v [w]', got {raw!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        try:
            w = parse_rational(toks[2]) if len(toks) == 3 else Fraction(1)
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
        if w <= 0:
            raise GraphFormatError(f"line {lineno}: weight must be positive")
        k = _key(u, v)
        if k in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {k}")
        edges[k] = w
        top = max(top, u, v)
    if top < 0:
        raise GraphFormatError("no edges found")
    return WeightedGraph(top + 1, edges)


def read_edge_list(path_: str | Path) -> WeightedGraph:
    try:
        text = Path(path_).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(f"cannot read {path_}: {exc}") from None
    return parse_edge_list(text)
