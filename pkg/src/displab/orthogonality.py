"""Exact inner products against the weight exp(-x) on [0, inf).

The monomial moments are factorials, so every integral here is a finite
rational sum; no numerics anywhere.
"""

from __future__ import annotations

import io
import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial, format_rational, laguerre, monomial, pochhammer


def laguerre_inner(p: Polynomial, q: Polynomial) -> Fraction:
    """<p, q> = integral of p q exp(-x) over [0, inf) = sum c_k k!."""
    prod = p * q
    return sum((c * math.factorial(k) for k, c in enumerate(prod.coeffs)),
               Fraction(0))


def moment_xi_djLn(i: int, j: int, n: int) -> Fraction:
    """<X^i, d^j L_n>: (-1)^n (n-j+1)_j (i-n+1)_{n-j} (n+1)_{i-n} for j <= n,
    zero otherwise.  Negative-length rising factorials follow the reciprocal
    convention, which is exactly what makes the i < n cases come out right.
    """
    if min(i, j, n) < 0:
        raise ValueError("indices must be nonnegative")
    if j > n:
        return Fraction(0)
    return ((-1) ** n * pochhammer(n - j + 1, j)
            * pochhammer(i - n + 1, n - j) * pochhammer(n + 1, i - n))


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + list(self.labels))
        for label, row in zip(self.labels, self.entries):
            writer.writerow([label] + [format_rational(x) for x in row])
        return buf.getvalue()

    def is_diagonal(self) -> bool:
        return all(x == 0
                   for i, row in enumerate(self.entries)
                   for j, x in enumerate(row) if i != j)


def gram(polys: Sequence[Polynomial], flip_sign: bool = False,
         labels: Sequence[str] | None = None) -> GramMatrix:
    """Matrix of <p_i(+-X), p_j(+-X)> under the exp(-x) weight."""
    ps = [p.compose_neg() if flip_sign else p for p in polys]
    if labels is None:
        labels = [f"p{i + 1}" for i in range(len(ps))]
    entries = tuple(
        tuple(laguerre_inner(ps[i], ps[j]) for j in range(len(ps)))
        for i in range(len(ps)))
    return GramMatrix(entries, tuple(labels))


def maximality_witness(family: Sequence[Polynomial], odd_degree: int) -> Fraction:
    """Nonzero inner product blocking any odd-degree extension of the family.

    ``family`` holds the sign-flipped polynomials (degrees 0, 2, 4, ...);
    for odd degree 2n+1 the witness is <X^{2n+1}, family[n+1]>, which is
    provably nonzero: no odd-degree polynomial can be orthogonal to the
    whole family.
    """
    if odd_degree < 1 or odd_degree % 2 == 0:
        raise ValueError("witness degree must be odd and positive")
    n = (odd_degree - 1) // 2
    if n + 1 >= len(family):
        raise ValueError(f"family too short for degree {odd_degree}")
    value = laguerre_inner(monomial(odd_degree), family[n + 1])
    if value == 0:
        raise AssertionError("maximality witness vanished; family is wrong")
    return value


def gram_projection(family: Sequence[Polynomial],
                    p: Polynomial) -> list[Fraction]:
    """Solve the Gram system <sum c_i e_i, e_j> = <p, e_j> for c.

    For an orthogonal family the Gram matrix is diagonal with positive
    entries, so the system always has the unique solution
    c_i = <p, e_i> / <e_i, e_i>; the leftover p - sum c_i e_i is then
    orthogonal to every family member.
    """
    coords = []
    for e in family:
        norm = laguerre_inner(e, e)
        if norm == 0:
            raise ValueError("family member with zero norm")
        coords.append(laguerre_inner(p, e) / norm)
    return coords


def laguerre_gram(count: int) -> GramMatrix:
    """Gram matrix of L_0..L_{count-1}; the diagonal is all ones."""
    return gram([laguerre(k) for k in range(count)],
                labels=[f"L{k}" for k in range(count)])
