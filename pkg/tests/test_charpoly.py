import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from starlex import charpoly as cp
from starlex.charpoly import Poly, X
from starlex.exact import Surd
from starlex.spectra import theta
from starlex.verify import b_matrix, random_weighted_matrix
from starlex.wgraph import a_alpha_matrix, adjacency_matrix, path, starlike

ALPHAS = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]


def sympy_charpoly(m):
    """Independent oracle: sympy's Berkowitz characteristic polynomial."""
    x = sympy.Symbol("x")
    mat = sympy.Matrix([[sympy.Rational(str(e)) for e in row] for row in np.asarray(m, dtype=object)])
    coeffs = mat.charpoly(x).all_coeffs()[::-1]
    return Poly(Fraction(int(c.p), int(c.q)) for c in coeffs)


def laplace_charpoly(m):
    """det(xI - M) by cofactor expansion along the first row."""
    rows = [[(X if i == j else Poly()) - Poly([m[i][j]]) for j in range(len(m))] for i in range(len(m))]

    def det(rows):
        if not rows:
            return Poly([1])
        total = Poly()
        for j, entry in enumerate(rows[0]):
            if entry.is_zero():
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = entry * det(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return det(rows)


def test_poly_basics():
    p = Poly([-1, 0, 1])
    assert str(p) == "[-1/1, 0/1, 1/1]"
    assert Poly.parse(str(p)) == p
    assert p.degree == 2 and p.is_monic()
    assert (X - 1) * (X + 1) == p
    assert p(Fraction(3)) == 8 and p(0.5) == -0.75
    assert Poly().degree == -1 and str(Poly()) == "[0/1]"
    assert (X + 1) ** 3 == Poly([1, 3, 3, 1])


polys = st.lists(st.fractions(max_denominator=5).map(lambda f: f.limit_denominator(5)), max_size=5).map(Poly)


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly()
    x = Fraction(3, 7)
    assert (a * b)(x) == a(x) * b(x)


def test_f_initial_terms():
    assert cp.f_poly(0, Fraction(1, 3)) == Poly([1])
    assert cp.f_poly(1, Fraction(1, 3)) == X - Fraction(1, 3)
    assert cp.f_poly(2, 0) == Poly([-1, 0, 1])
    # 2x2 determinant by hand for B_2 at alpha = 0: [[0,1],[1,0]]
    b2 = b_matrix(2, 0)
    assert b2.tolist() == [[0, 1], [1, 0]]
    assert cp.f_poly(-1, 0).is_zero()


@pytest.mark.parametrize("alpha", ALPHAS + [Fraction(2, 7)])
def test_f_monic_of_degree_n(alpha):
    for n in range(41):
        f = cp.f_poly(n, alpha)
        assert f.degree == n and f.is_monic()


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", range(0, 13))
def test_f_matches_determinant_oracle(n, alpha):
    f = cp.f_poly(n, alpha)
    m = b_matrix(n, alpha)
    assert f == cp.char_poly_oracle(m)
    if n <= 7:
        assert f == sympy_charpoly(m)


def test_f_value_agrees_with_poly():
    for n in range(12):
        for x in (Fraction(3, 2), Fraction(-1, 3)):
            assert cp.f_value(n, Fraction(1, 4), x) == cp.f_poly(n, Fraction(1, 4))(x)
        assert math.isclose(cp.f_value(n, 0.25, 1.7), float(cp.f_poly(n, Fraction(1, 4))(Fraction(1.7))), rel_tol=1e-9, abs_tol=1e-9)


def test_phi_path_examples():
    assert cp.phi_path(1, 1, 0) == Poly([-1, 0, 1])
    p3 = cp.phi_path(2, 1, 0)
    assert p3 == Poly([0, -2, 0, 1])
    assert p3 == laplace_charpoly(adjacency_matrix(path(3)).tolist())
    half = Fraction(1, 2)
    assert cp.phi_path(3, 2, half).coeffs == cp.phi_path(4, 1, half).coeffs
    assert cp.phi_path(2, 1, half) == sympy_charpoly(a_alpha_matrix(path(3), half))
    # f_{-1} = 0 convention
    assert cp.phi_path(4, 0, half) == cp.f_poly(4, half)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_phi_path_split_independence(alpha):
    for n in range(2, 21):
        polys = {cp.phi_path(a, n - a, alpha) for a in range(1, n)}
        assert len(polys) == 1
        if n <= 8:
            assert polys.pop() == sympy_charpoly(a_alpha_matrix(path(n), alpha))


def test_bridge_examples():
    k1 = Poly([0, 1])
    one = Poly([1])
    assert cp.bridge_phi(k1, one, k1, one, 1) == Poly([-1, 0, 1])
    assert cp.bridge_phi(k1, one, k1, one, 3) == Poly([-3, 0, 1])
    p2, p1 = Poly([-1, 0, 1]), Poly([0, 1])
    p4 = cp.bridge_phi(p2, p1, p2, p1, 1)
    assert p4 == Poly([1, 0, -3, 0, 1])
    assert p4 == laplace_charpoly(adjacency_matrix(path(4)).tolist())


def test_coalescence_examples():
    p2, p1, one = Poly([-1, 0, 1]), Poly([0, 1]), Poly([1])
    assert cp.coalescence_phi(p2, p1, p2, p1) == Poly([0, -2, 0, 1])
    assert cp.coalescence_phi(p1, one, p1, one) == p1
    star = adjacency_matrix(starlike((1, 1)).graph)
    claw = cp.coalescence_phi(cp.char_poly_oracle(star), Poly([1, 0, 1]) * 0 + X * X, p2, p1)
    assert claw == Poly([0, 0, -3, 0, 1])
    assert claw == laplace_charpoly(adjacency_matrix(starlike((1, 1, 1)).graph).tolist())


@pytest.mark.parametrize("a,b,alpha", [(2, 1, 0), (3, 1, 0), (3, 2, Fraction(1, 2))])
def test_inequ_difference_examples(a, b, alpha):
    got = cp.inequ_difference(a, b, alpha)
    direct = cp.f_poly(a, alpha) * cp.f_poly(b - 1, alpha) - cp.f_poly(a - 1, alpha) * cp.f_poly(b, alpha)
    assert got == direct
    if (a, b) == (2, 1):
        assert got == Poly([-1])
    if (a, b) == (3, 1):
        assert got == -X


def test_inequ_difference_rejects_bad_args():
    with pytest.raises(ValueError):
        cp.inequ_difference(2, 2, 0)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_telescoped_identity_exact(alpha):
    for a in range(2, 13):
        for b in range(1, a):
            cp.inequ_difference(a, b, alpha)


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1, 2)])
def test_telescoped_sign_on_grid(alpha):
    for a in range(2, 21):
        for b in range(1, a):
            l = a - b
            for x in np.linspace(theta(l, alpha) + 1e-6, 3, 50):
                xf = Fraction(float(x))
                val = cp.f_value(a - 1, alpha, xf) * cp.f_value(b, alpha, xf) - cp.f_value(a, alpha, xf) * cp.f_value(b - 1, alpha, xf)
                assert val > 0


def test_oracle_examples():
    assert cp.char_poly_oracle([[Fraction(5, 2)]]) == X - Fraction(5, 2)
    assert cp.char_poly_oracle(adjacency_matrix(path(2))) == Poly([-1, 0, 1])
    assert cp.char_poly_oracle(np.empty((0, 0), dtype=object)) == Poly([1])
    with pytest.raises(ValueError):
        cp.char_poly_oracle([[1, 2, 3]])
    with pytest.raises(TypeError):
        cp.char_poly_oracle([[Surd(1, 2)]])


def test_oracle_against_sympy_on_random_matrices():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 6)
        m = random_weighted_matrix(rng, n)
        m[0, n - 1] += Fraction(rng.randint(0, 3), 5)  # break symmetry sometimes
        assert cp.char_poly_oracle(m) == sympy_charpoly(m)
