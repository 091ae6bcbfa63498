import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from starlex.exact import Surd
from starlex.quotient import weighted_path
from starlex.wgraph import (
    GraphFormatError,
    RootedGraph,
    WeightedGraph,
    a_alpha_matrix,
    adjacency_matrix,
    attach_paths,
    coalesce,
    complete_minus_edge,
    cycle,
    degree_matrix,
    delete_edge,
    delete_vertex,
    is_isomorphic,
    is_path_graph,
    parse_edge_list,
    path,
    rooted_path,
    starlike,
    trivial,
)


def brute_isomorphic(g, h):
    if g.n != h.n:
        return False
    ag, ah = adjacency_matrix(g), adjacency_matrix(h)
    for perm in itertools.permutations(range(g.n)):
        if all(ag[i, j] == ah[perm[i], perm[j]] for i in range(g.n) for j in range(g.n)):
            return True
    return False


def test_builders():
    assert path(2).edges() == [(0, 1)] and path(2).weight(0, 1) == 1
    c3 = cycle(3)
    assert c3.num_edges == 3 and all(c3.weight(*e) == 1 for e in c3.edges())
    k1 = trivial()
    assert k1.n == 1 and k1.num_edges == 0
    with pytest.raises(ValueError):
        cycle(2)
    k4e = complete_minus_edge()
    assert k4e.num_edges == 5 and k4e.degree(0) == 3 and k4e.degree(3) == 2


def test_coalesce_paths():
    p = coalesce(rooted_path(1), rooted_path(1))
    assert p.n == 3 and p.graph.num_edges == 2 and not p.graph.loops()
    assert is_path_graph(p.graph)


def test_coalesce_adds_root_loops():
    g1 = RootedGraph(WeightedGraph(1, {(0, 0): 2}))
    g2 = RootedGraph(WeightedGraph(1, {(0, 0): 3}))
    out = coalesce(g1, g2)
    assert out.n == 1 and out.graph.weight(0, 0) == 5


def test_coalesce_star_with_edge_is_claw():
    star = starlike((1, 1))
    claw = coalesce(star, rooted_path(1))
    k13 = WeightedGraph(4, {(0, 1): 1, (0, 2): 1, (0, 3): 1})
    assert brute_isomorphic(claw.graph, k13)
    assert is_isomorphic(claw.graph, k13)


def test_coalesce_keeps_ids():
    g = RootedGraph(cycle(3), 1)
    out = coalesce(g, rooted_path(2))
    assert out.root == 1
    assert out.graph.neighbors(1) == [0, 2, 3]
    assert out.graph.edges()[-1] == (3, 4)


def test_attach_paths_example_shapes():
    s = starlike((2, 2, 2, 1))
    assert s.n == 8 and s.graph.degree(0) == 4
    h = attach_paths(RootedGraph(cycle(3), 0), (2, 2, 2, 1))
    assert h.n == 10 and h.graph.degree(0) == 6
    assert h.branches == ((3, 4), (5, 6), (7, 8), (9,))


def test_attach_single_path_equals_coalescence():
    g = RootedGraph(cycle(4), 2)
    assert attach_paths(g, (3,)).graph == coalesce(g, rooted_path(3)).graph


@pytest.mark.parametrize("base", [RootedGraph(trivial()), RootedGraph(cycle(3), 0), RootedGraph(path(3), 1)])
@pytest.mark.parametrize("parts", [(1,), (2, 3), (1, 1, 4), (2, 2, 2, 1)])
def test_attach_paths_counts(base, parts):
    h = attach_paths(base, parts)
    assert h.n == base.n + sum(parts)
    assert h.graph.num_edges == base.graph.num_edges + sum(parts)
    assert h.graph.degree(h.root) == base.graph.degree(base.root) + len(parts)


small_graphs = st.integers(1, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=6),
        st.integers(0, n - 1),
    )
)


def _connected_graph(spec):
    n, extra, root = spec
    w = {(i, i + 1): 1 for i in range(n - 1)}
    for u, v in extra:
        if u != v:
            w[(min(u, v), max(u, v))] = 1
    return RootedGraph(WeightedGraph(n, w), root)


@settings(max_examples=40, deadline=None)
@given(small_graphs, small_graphs, small_graphs)
def test_coalesce_commutative_and_associative(s1, s2, s3):
    g1, g2, g3 = map(_connected_graph, (s1, s2, s3))
    assert is_isomorphic(coalesce(g1, g2).graph, coalesce(g2, g1).graph)
    left = coalesce(coalesce(g1, g2), g3).graph
    right = coalesce(g1, coalesce(g2, g3)).graph
    if left.n <= 8:
        assert brute_isomorphic(left, right)
    assert is_isomorphic(left, right)


def test_is_isomorphic_negative():
    assert not is_isomorphic(path(4), starlike((1, 1, 1)).graph)
    assert not is_isomorphic(cycle(4), path(4))


def test_a_alpha_examples():
    a = Fraction(1, 3)
    m = a_alpha_matrix(path(2), a)
    assert m.tolist() == [[a, 1 - a], [1 - a, a]]
    assert (a_alpha_matrix(path(3), 0) == adjacency_matrix(path(3))).all()
    h = attach_paths(RootedGraph(cycle(3), 0), (2, 2, 2, 1))
    assert a_alpha_matrix(h.graph, a)[0, 0] == 6 * a
    with pytest.raises(ValueError):
        a_alpha_matrix(path(2), 1)
    with pytest.raises(ValueError):
        a_alpha_matrix(WeightedGraph(2, {(0, 1): 2}), 0)
    with pytest.raises(ValueError):
        a_alpha_matrix(WeightedGraph(2, {(0, 1): 1, (0, 0): 1}), 0)


@given(st.integers(1, 6), st.fractions(0, 1).filter(lambda x: x < 1), st.randoms())
def test_a_alpha_diagonal_is_alpha_times_row_support(n, alpha, rnd):
    w = {(i, i + 1): 1 for i in range(n - 1)}
    for u, v in itertools.combinations(range(n), 2):
        if rnd.random() < 0.3:
            w[(u, v)] = 1
    g = WeightedGraph(n, w)
    m = a_alpha_matrix(g, alpha)
    for i in range(n):
        off = sum(1 for j in range(n) if j != i and m[i, j] != 0)
        assert m[i, i] == alpha * off


def test_weighted_path_matrices():
    ps = weighted_path(2, 1, 3)
    assert np.diag(degree_matrix(ps)).tolist() == [1, 2, 2, 1]
    a = adjacency_matrix(ps)
    assert a[0, 1] == 1 and a[1, 2] == Surd(1, 3) and a[2, 3] == 1
    assert a[1, 2].squared() == 3


def test_loops_on_diagonal_not_in_degree():
    g = WeightedGraph(2, {(0, 0): Fraction(5, 2), (0, 1): 1})
    assert adjacency_matrix(g)[0, 0] == Fraction(5, 2)
    assert degree_matrix(g)[0, 0] == 1


def test_deletions():
    assert delete_vertex(path(3), 2) == path(2)
    assert delete_vertex(path(3), 0) == path(2)
    assert delete_edge(cycle(3), (2, 0)).num_edges == 2
    with pytest.raises(ValueError):
        delete_vertex(path(3), 5)
    with pytest.raises(ValueError):
        delete_edge(path(3), (0, 2))


def test_edge_list_parsing():
    g = parse_edge_list("# triangle\n0 1\n1 2 1/1\n\n2 0 1.0\n3 3 0.25\n2 3 2\n")
    assert g.n == 4 and g.weight(3, 3) == Fraction(1, 4) and g.weight(2, 3) == 2
    assert g.weight(0, 1) == 1
    for bad in ("0 x 1", "0 1 abc", "0 1\n1 0", "1", "0 1 -1", ""):
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)
