"""Inner products under the exp(-x) weight."""

import math
import random
from fractions import Fraction

import pytest

from displab.algebra import Polynomial, laguerre, monomial
from displab.companion import catalan_polynomial, catalan_polynomial_r3
from displab.families import two_row_counter
from displab.orthogonality import (gram, gram_projection, laguerre_inner,
                                   laguerre_gram, maximality_witness,
                                   moment_xi_djLn)


def test_inner_basics():
    one = Polynomial((1,))
    assert laguerre_inner(one, one) == 1
    assert laguerre_inner(monomial(1), monomial(1)) == 2


def test_moment_closed_form_matches_integral():
    for n in range(7):
        for j in range(n + 2):
            deriv = laguerre(n)
            for _ in range(j):
                deriv = deriv.derivative()
            for i in range(11):
                assert moment_xi_djLn(i, j, n) == laguerre_inner(
                    monomial(i), deriv), (i, j, n)


def test_moment_vanishing_band():
    for n in range(1, 7):
        for j in range(n):
            for i in range(j, n):
                assert moment_xi_djLn(i, j, n) == 0


def test_moment_diagonal_value():
    for n in range(7):
        assert moment_xi_djLn(n, 0, n) == (-1) ** n * math.factorial(n)


def test_moment_above_degree_is_zero():
    assert moment_xi_djLn(3, 5, 4) == 0


def test_pair_orthogonality_lemma():
    """<X^{j+k} d^j L_n, d^k L_m> = 0 whenever |m - n| > max(j, k)."""
    derivs = {}
    for n in range(7):
        p = laguerre(n)
        row = []
        for _ in range(4):
            row.append(p)
            p = p.derivative()
        derivs[n] = row
    for n in range(7):
        for m in range(7):
            for j in range(3):
                for k in range(3):
                    if abs(m - n) > max(j, k):
                        val = laguerre_inner(
                            monomial(j + k) * derivs[n][j], derivs[m][k])
                        assert val == 0, (n, m, j, k)


def test_catalan_family_gram_diagonal_through_7():
    fam = [catalan_polynomial(k) for k in range(1, 8)]
    matrix = gram(fam, flip_sign=True)
    assert matrix.is_diagonal()
    for i in range(7):
        assert matrix.entries[i][i] > 0


def test_laguerre_gram_is_identity():
    matrix = laguerre_gram(6)
    for i in range(6):
        for j in range(6):
            assert matrix.entries[i][j] == (1 if i == j else 0)


def test_r3_family_not_orthogonal():
    p3 = catalan_polynomial_r3(3)
    p4 = catalan_polynomial_r3(4)
    matrix = gram([p3, p4], flip_sign=True)
    assert matrix.entries[0][1] == 4
    assert laguerre_inner(p3.compose_neg(), p4.compose_neg()) == 4


def test_maximality_witness_values():
    fam = [catalan_polynomial(k).compose_neg() for k in range(1, 8)]
    for n in range(3):
        value = maximality_witness(fam, 2 * n + 1)
        catalan = two_row_counter(n + 2, n + 2)
        formula = Fraction(-catalan * (n + 3) * math.factorial(2 * n + 1),
                           2 * (2 * n + 3))
        assert value == formula != 0, n


def test_maximality_witness_validation():
    fam = [catalan_polynomial(k).compose_neg() for k in range(1, 4)]
    with pytest.raises(ValueError):
        maximality_witness(fam, 4)
    with pytest.raises(ValueError):
        maximality_witness(fam, 9)


def test_even_monomials_gram_solve():
    """The Gram system for every even monomial is solvable, and the
    leftover after projection is orthogonal to the whole family."""
    fam = [catalan_polynomial(k).compose_neg() for k in range(1, 8)]
    for k in range(7):
        coords = gram_projection(fam, monomial(2 * k))
        leftover = monomial(2 * k)
        for c, p in zip(coords, fam):
            leftover = leftover - c * p
        assert all(laguerre_inner(leftover, p) == 0 for p in fam)


def test_odd_degree_blocked_by_witness_pairing():
    """No polynomial of odd degree 2n+1 is orthogonal to the family: the
    pairing against member n+2 sees only the leading coefficient, so it is
    a nonzero multiple of the witness value for the bare monomial."""
    rng = random.Random(62)
    fam = [catalan_polynomial(k).compose_neg() for k in range(1, 8)]
    for n in range(3):
        deg = 2 * n + 1
        witness = maximality_witness(fam, deg)
        assert witness != 0
        for _ in range(5):
            coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 3))
                      for _ in range(deg)]
            lead = Fraction(rng.randint(1, 9))
            p = Polynomial(coeffs + [lead])
            assert laguerre_inner(p, fam[n + 1]) == lead * witness


def test_inner_bilinear_and_positive():
    rng = random.Random(61)
    for _ in range(25):
        deg = rng.randint(0, 5)
        p = Polynomial([Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                        for _ in range(deg)] + [1])
        q = Polynomial([rng.randint(-4, 4) for _ in range(4)])
        r = Polynomial([rng.randint(-4, 4) for _ in range(4)])
        assert laguerre_inner(p, q + r) == (laguerre_inner(p, q)
                                            + laguerre_inner(p, r))
        assert laguerre_inner(p, p) > 0


def test_gram_csv_export():
    matrix = gram([Polynomial((1,)), monomial(1)], labels=["one", "x"])
    text = matrix.to_csv()
    lines = text.strip().split("\n")
    assert lines[0] == ",one,x"
    assert lines[1] == "one,1,1"
    assert lines[2] == "x,1,2"
