"""Equitable partitions, left and symmetric quotients, and the weighted
quotient graph G_s(v, a, b) of a graph with s equal pendant paths.

Cells of the pendant-path partition are ordered canonically: the path
cells C_1..C_a by distance from the root, then the root, then every other
vertex by id. With this order the symmetric quotient is compared to
``build_gs`` entry by entry instead of up to permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import Surd, as_fraction, fmt_scalar
from .wgraph import (
    RootedGraph,
    WeightedGraph,
    adjacency_matrix,
    coalesce,
    degree_matrix,
)

__all__ = [
    "NotEquitableError",
    "EquitablePartition",
    "QuotientPair",
    "check_equitable",
    "quotients",
    "pendant_path_partition",
    "cell_labels",
    "q_prime_matrix",
    "weighted_path",
    "build_gs",
    "GsResult",
    "matrix_to_json",
    "align",
]


class NotEquitableError(ValueError):
    def __init__(self, witness):
        self.witness = witness
        i, j, row = witness
        super().__init__(f"block ({i},{j}) has a non-constant row sum at index {row}")


def _validate_cells(n: int, cells: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    cells = [tuple(c) for c in cells]
    flat = [x for c in cells for x in c]
    if any(not c for c in cells):
        raise ValueError("empty cell")
    if sorted(flat) != list(range(n)):
        raise ValueError("cells must partition the index set exactly once")
    return cells


def check_equitable(a, cells) -> tuple[bool, tuple[int, int, int] | None]:
    """Whether every block A[X_i : X_j] has constant row sums.

    Returns ``(True, None)`` or ``(False, (i, j, row))`` naming the first
    offending block and row.
    """
    a = np.asarray(a, dtype=object)
    cells = _validate_cells(a.shape[0], cells)
    for i, xi in enumerate(cells):
        for j, xj in enumerate(cells):
            first = None
            for r in xi:
                total = sum((a[r, c] for c in xj), Fraction(0))
                if first is None:
                    first = total
                elif total != first:
                    return False, (i, j, r)
    return True, None


@dataclass(frozen=True)
class EquitablePartition:
    cells: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def characteristic_matrix(self) -> np.ndarray:
        n = sum(self.sizes)
        s = np.zeros((n, len(self.cells)), dtype=int)
        for j, cell in enumerate(self.cells):
            for i in cell:
                s[i, j] = 1
        return s


@dataclass(frozen=True)
class QuotientPair:
    S: np.ndarray
    Lambda: np.ndarray
    Q_l: np.ndarray
    Q_s: np.ndarray


def quotients(a, cells) -> QuotientPair:
    """Left quotient Lambda^-1 S^T A S and symmetric quotient
    Lambda^-1/2 S^T A S Lambda^-1/2 of a rational matrix."""
    a = np.asarray(a, dtype=object)
    ok, witness = check_equitable(a, cells)
    if not ok:
        raise NotEquitableError(witness)
    part = EquitablePartition(tuple(tuple(c) for c in cells))
    s = part.characteristic_matrix()
    sizes = part.sizes
    m = len(sizes)
    b = s.T.astype(object) @ np.vectorize(as_fraction, otypes=[object])(a) @ s.astype(object)
    q_l = np.empty((m, m), dtype=object)
    q_s = np.empty((m, m), dtype=object)
    for i in range(m):
        for j in range(m):
            bij = Fraction(b[i, j])
            q_l[i, j] = bij / sizes[i]
            # b_ij / sqrt(n_i n_j) = (b_ij / (n_i n_j)) * sqrt(n_i n_j)
            q_s[i, j] = _simplify(Surd(bij / (sizes[i] * sizes[j]), sizes[i] * sizes[j]))
    lam = np.diag(np.array(sizes, dtype=object))
    return QuotientPair(s, lam, q_l, q_s)


def _simplify(x: Surd):
    return x.coef if x.is_rational else x


def pendant_path_partition(h: RootedGraph, a: int, b: int, s: int) -> list[tuple[int, ...]]:
    """Cells for H = G([a]*s + [b], v): C_i gathers the vertices at distance i
    on the s paths of length a; everything else is a singleton.

    Relies on the branch record kept by :func:`~starlex.wgraph.attach_paths`.
    The first s branches of length a are grouped.
    """
    if a < 1 or s < 1 or b < 0:
        raise ValueError("need a >= 1, s >= 1, b >= 0")
    lengths = sorted(len(br) for br in h.branches)
    expected = sorted([a] * s + ([b] if b else []))
    if lengths != expected:
        raise ValueError(f"branch lengths {lengths} do not match [{a}]*{s}+[{b}]")
    grouped = [br for br in h.branches if len(br) == a][:s]
    cells = [tuple(sorted(br[i] for br in grouped)) for i in range(a)]
    used = {x for c in cells for x in c}
    rest = [h.root] + [x for x in range(h.n) if x != h.root and x not in used]
    return cells + [(x,) for x in rest]


def cell_labels(h: RootedGraph, cells: Sequence[Sequence[int]], a: int) -> list[tuple]:
    """Role labels for the canonical cells, shared with :func:`build_gs`.

    ``("path", i)`` for C_i, ``("root",)``, ``("G", id)`` for vertices of the
    base graph, and ``("tail", j)`` for the lone path at distance j.
    """
    tail = {}
    for br in h.branches:
        if br and br[0] not in cells[0]:
            for j, x in enumerate(br, 1):
                tail[x] = j
    labels: list[tuple] = [("path", i) for i in range(1, a + 1)]
    for cell in cells[a:]:
        (x,) = cell
        if x == h.root:
            labels.append(("root",))
        elif x in tail:
            labels.append(("tail", tail[x]))
        else:
            labels.append(("G", x))
    return labels


def q_prime_matrix(g: RootedGraph, alpha, s: int) -> np.ndarray:
    """alpha*D'(G) + (1-alpha)*A(G), the root's degree raised to d_G(v) + s - 1."""
    alpha = Fraction(alpha)
    d = degree_matrix(g.graph)
    d[g.root, g.root] = Fraction(g.graph.degree(g.root) + s - 1)
    return alpha * d + (1 - alpha) * adjacency_matrix(g.graph)


def weighted_path(a: int, b: int, s: int) -> WeightedGraph:
    """P_s(a, b): vertices 0..a+b, unit edges except weight sqrt(s) on (a-1, a)."""
    if a < 1 or b < 0 or s < 1:
        raise ValueError("need a >= 1, b >= 0, s >= 1")
    w = {(i, i + 1): (Surd.sqrt(s) if i == a - 1 else 1) for i in range(a + b)}
    return WeightedGraph(a + b + 1, w)


def _matrix_graph(m: np.ndarray) -> WeightedGraph:
    n = m.shape[0]
    w = {}
    for i in range(n):
        for j in range(i, n):
            x = m[i, j]
            if x != 0:
                w[(i, j)] = x if isinstance(x, Surd) else Surd(x)
    return WeightedGraph(n, w)


@dataclass(frozen=True)
class GsResult:
    graph: WeightedGraph
    labels: tuple[tuple, ...]
    q_prime: np.ndarray
    path_matrix: np.ndarray

    def matrix(self) -> np.ndarray:
        return adjacency_matrix(self.graph)


def build_gs(g: RootedGraph, alpha, a: int, b: int, s: int) -> GsResult:
    """The weighted quotient graph G_s(v, a, b).

    Coalesces the graph of Q'(G) at the root with the graph of
    alpha*D(P_s(a,b)) + (1-alpha)*A(P_s(a,b)) at its vertex ``a``.
    """
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    if not g.graph.is_connected():
        raise ValueError("G must be connected")
    qp = q_prime_matrix(g, alpha, s)
    ps = weighted_path(a, b, s)
    pm = alpha * degree_matrix(ps) + (1 - alpha) * adjacency_matrix(ps)
    g_labels = [("root",) if x == g.root else ("G", x) for x in range(g.n)]
    p_labels = [("path", a - x) if x < a else ("root",) if x == a else ("tail", x - a) for x in range(a + b + 1)]
    left = RootedGraph(_matrix_graph(qp).relabel(g_labels), g.root)
    right = RootedGraph(_matrix_graph(pm).relabel(p_labels), a)
    merged = coalesce(left, right)
    return GsResult(merged.graph, merged.graph.labels, qp, pm)


def align(m: np.ndarray, labels: Sequence, order: Sequence) -> np.ndarray:
    """Reorder rows and columns of ``m`` (indexed by ``labels``) into ``order``."""
    pos = {lab: i for i, lab in enumerate(labels)}
    perm = [pos[lab] for lab in order]
    return m[np.ix_(perm, perm)]


def matrix_to_json(m) -> list[list[str]]:
    return [[fmt_scalar(x) for x in row] for row in np.asarray(m, dtype=object)]
