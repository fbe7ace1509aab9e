"""Second-order ODEs with polynomial coefficients and their constructions.

The central construction: any degree-n polynomial P decomposes uniquely
against the basis X^i d^i L_n(X) (the coefficient matrix is triangular with
nonzero diagonal), which yields polynomials Q, R with
P = Q L_n + R L_n'.  Repeated differentiation inside the rank-2 module
spanned by (L_n, L_n') over rational functions, using
L_n'' = (-n/X) L_n + ((X-1)/X) L_n', expresses P, P', P'' in module
coordinates, and eliminating L_n, L_n' by 2x2 minors produces an ODE
U Y'' + V Y' + W Y = 0 satisfied by P.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (ONE, Polynomial, RationalFunction, TruncatedSeries, X,
                      ZERO, laguerre, monomial, pochhammer, poly_to_series)


# ---------------------------------------------------------------------------
# the ODE value type
# ---------------------------------------------------------------------------

class Ode2:
    """U(X) Y'' + V(X) Y' + W(X) Y = 0, stored in canonical form.

    Normalization divides out the common polynomial gcd and the joint
    rational content, then fixes the sign so that the first nonzero of
    (U, V, W) has a positive leading coefficient.  Equality of Ode2 values
    is therefore equality "up to a nonzero rational (or polynomial common)
    factor" of the raw triples.
    """

    __slots__ = ("u", "v", "w")

    def __init__(self, u, v, w):
        u, v, w = Polynomial(_coeffs(u)), Polynomial(_coeffs(v)), Polynomial(_coeffs(w))
        if u.is_zero() and v.is_zero() and w.is_zero():
            raise ValueError("U, V, W cannot all be zero")
        g = _triple_gcd(u, v, w)
        if g.degree > 0:
            u = u.divmod(g)[0]
            v = v.divmod(g)[0]
            w = w.divmod(g)[0]
        c = _joint_content(u, v, w)
        first = next(p for p in (u, v, w) if not p.is_zero())
        if first.leading() < 0:
            c = -c
        u, v, w = u * (1 / c), v * (1 / c), w * (1 / c)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    def __setattr__(self, name, value):
        raise AttributeError("Ode2 is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, Ode2):
            return (self.u, self.v, self.w) == (other.u, other.v, other.w)
        return NotImplemented

    def __hash__(self):
        return hash((self.u, self.v, self.w))

    def __repr__(self):
        return f"Ode2({self.u!r}, {self.v!r}, {self.w!r})"

    def reflect(self) -> "Ode2":
        """The equation satisfied by Y(-X) whenever Y satisfies self."""
        return Ode2(self.u.compose_neg(), -self.v.compose_neg(),
                    self.w.compose_neg())

    def to_json(self) -> dict:
        return {"U": self.u.to_json(), "V": self.v.to_json(),
                "W": self.w.to_json()}

    @classmethod
    def from_json(cls, data) -> "Ode2":
        return cls(Polynomial.from_json(data["U"]),
                   Polynomial.from_json(data["V"]),
                   Polynomial.from_json(data["W"]))

    def pretty(self) -> str:
        def wrap(p: Polynomial) -> str:
            return f"({p.pretty()})"

        out = f"{wrap(self.u)}Y'' + {wrap(self.v)}Y'"
        if self.w.leading() < 0:
            out += f" - {wrap(-self.w)}Y"
        else:
            out += f" + {wrap(self.w)}Y"
        return out + " = 0"


def _coeffs(p):
    if isinstance(p, Polynomial):
        return p.coeffs
    return p.coeffs if hasattr(p, "coeffs") else tuple(p)


def _triple_gcd(u, v, w) -> Polynomial:
    g = ZERO
    for p in (u, v, w):
        g = p if g.is_zero() else g.gcd(p)
    return g


def _joint_content(u, v, w) -> Fraction:
    import math
    num, den = 0, 1
    for p in (u, v, w):
        for c in p.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
    return Fraction(num, den)


def laguerre_equation(n: int) -> Ode2:
    """X Y'' + (1 - X) Y' + n Y = 0, satisfied by L_n."""
    return Ode2(X, Polynomial((1, -1)), Polynomial((n,)))


def verify_ode(ode: Ode2, p: Polynomial) -> bool:
    """Exact check that U p'' + V p' + W p vanishes identically."""
    residual = ode.u * p.derivative().derivative() + ode.v * p.derivative() + ode.w * p
    return residual.is_zero()


def verify_ode_on_series(ode: Ode2, s: TruncatedSeries,
                         inhomogeneous: Polynomial = ZERO) -> bool:
    """Check U s'' + V s' + W s + inhomogeneous = 0 through order N-2."""
    if s.order < 4:
        raise ValueError("series order must be at least 4")
    n = s.order - 2
    res = poly_to_series(ode.u, n) * s.derivative().derivative()
    res = res + poly_to_series(ode.v, n) * s.derivative().truncate(n)
    res = res + poly_to_series(ode.w, n) * s.truncate(n)
    res = res + poly_to_series(inhomogeneous, n)
    return all(c == 0 for c in res.coeffs)


# ---------------------------------------------------------------------------
# decomposition against X^i d^i L_n and the (A, B) reduction
# ---------------------------------------------------------------------------

def laguerre_basis_polys(n: int) -> list[Polynomial]:
    """[X^i d^i/dX^i L_n(X) for i = 0..n]."""
    out = []
    p = laguerre(n)
    for i in range(n + 1):
        out.append(monomial(i) * p)
        p = p.derivative()
    return out


def laguerre_basis_decompose(p: Polynomial, n: int | None = None) -> tuple[Fraction, ...]:
    """Unique coefficients (c_0..c_n) with p = sum c_i X^i d^i L_n(X).

    The i-th basis polynomial starts at degree i with coefficient
    (-1)^i C(n, i), so the system is triangular and the solve proceeds
    degree by degree.
    """
    if p.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    if n is None:
        n = p.degree
    if p.degree > n:
        raise ValueError(f"degree {p.degree} exceeds basis index {n}")
    basis = laguerre_basis_polys(n)
    coeffs: list[Fraction] = []
    rem = p
    for i in range(n + 1):
        c = rem.coefficient(i) / basis[i].coefficient(i)
        coeffs.append(c)
        if c:
            rem = rem - c * basis[i]
    if not rem.is_zero():
        raise AssertionError("triangular solve left a nonzero remainder")
    return tuple(coeffs)


def ab_reduction(n: int) -> tuple[list[RationalFunction], list[RationalFunction]]:
    """Rational functions with d^i L_n = A[i] L_n + B[i] L_n'.

    Seeded by A[0] = 1, B[0] = 0 and advanced with
    A_i = A_{i-1}' - (n/X) B_{i-1},
    B_i = A_{i-1} + B_{i-1}' + ((X-1)/X) B_{i-1};
    denominators divide X^(n-1).
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    rf_x = RationalFunction(X)
    a = [RationalFunction(ONE)]
    b = [RationalFunction(ZERO)]
    for _ in range(n):
        prev_a, prev_b = a[-1], b[-1]
        a.append(prev_a.derivative() - RationalFunction(Polynomial((n,)), X) * prev_b)
        b.append(prev_a + prev_b.derivative()
                 + RationalFunction(Polynomial((-1, 1)), X) * prev_b)
    return a, b


def reduce_to_QR(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Polynomials (Q, R) with p = Q L_n + R L_n', n = deg p.

    X^i A[i] has degree i-1 and X^i B[i] degree i, so deg Q <= n-1 (for
    n >= 1) and deg R <= n.
    """
    n = p.degree
    if n < 0:
        raise ValueError("cannot reduce the zero polynomial")
    coeffs = laguerre_basis_decompose(p, n)
    a, b = ab_reduction(n)
    q = RationalFunction(ZERO)
    r = RationalFunction(ZERO)
    for i, c in enumerate(coeffs):
        if c:
            xi = RationalFunction(monomial(i))
            q = q + c * xi * a[i]
            r = r + c * xi * b[i]
    return q.as_polynomial(), r.as_polynomial()


# ---------------------------------------------------------------------------
# the laguerrean of a polynomial
# ---------------------------------------------------------------------------

def _module_derivative(coords: tuple[RationalFunction, RationalFunction],
                       n: int) -> tuple[RationalFunction, RationalFunction]:
    """d/dX inside the (L_n, L_n') module: uses the L'' reduction."""
    a, b = coords
    n_over_x = RationalFunction(Polynomial((n,)), X)
    xm1_over_x = RationalFunction(Polynomial((-1, 1)), X)
    return (a.derivative() - n_over_x * b,
            a + b.derivative() + xm1_over_x * b)


def _clear_denominators(u: RationalFunction, v: RationalFunction,
                        w: RationalFunction) -> tuple[Polynomial, Polynomial, Polynomial]:
    lcm = ONE
    for rf in (u, v, w):
        g = lcm.gcd(rf.den)
        lcm = lcm.divmod(g)[0] * rf.den
    return tuple((rf * RationalFunction(lcm)).as_polynomial()
                 for rf in (u, v, w))


def laguerrean(p: Polynomial) -> Ode2:
    """The ODE obtained by eliminating L_n, L_n' from p, p', p''.

    p maps to module coordinates (Q, R); two module derivatives give the
    coordinates of p' and p''; the 2x2 minors of the stacked coordinates
    are the (U, V, W) triple.  For p = L_n this is Laguerre's equation.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no laguerrean")
    n = p.degree
    q, r = reduce_to_QR(p)
    c0 = (RationalFunction(q), RationalFunction(r))
    c1 = _module_derivative(c0, n)
    c2 = _module_derivative(c1, n)
    (a0, b0), (a1, b1), (a2, b2) = c0, c1, c2
    u = a1 * b0 - a0 * b1
    v = a0 * b2 - a2 * b0
    w = a2 * b1 - a1 * b2
    if u.is_zero() and v.is_zero() and w.is_zero():
        # p, p', p'' are module-proportional; one derivative suffices
        u = RationalFunction(ZERO)
        v, w = a0, -a1
        if v.is_zero() and w.is_zero():
            v, w = b0, -b1
    ode = Ode2(*_clear_denominators(u, v, w))
    if not verify_ode(ode, p):
        raise AssertionError("elimination produced an equation p fails")
    return ode


def laguerrean_reflected(p: Polynomial) -> Ode2:
    """The laguerrean built at reflected argument and mapped back.

    Counter-derived polynomials (all coefficients nonnegative) decompose
    naturally against Laguerre data at -X; building the elimination there
    and reflecting the equation back is what yields the low-degree
    published forms for the zigzag family.
    """
    return laguerrean(p.compose_neg()).reflect()


# ---------------------------------------------------------------------------
# closed-form equation families for the two-row digraphs
# ---------------------------------------------------------------------------

def two_row_ode(n1: int, n2: int, r: int) -> Ode2:
    """Closed-form ODE satisfied by the two-row companion polynomial at v_r,
    r in {2, 3}."""
    if not (0 <= n1 <= n2):
        raise ValueError("need 0 <= n1 <= n2")
    if r == 2:
        if n2 < 2:
            raise ValueError("r = 2 needs n2 >= 2")
        s = n1 + n2
        alpha = pochhammer(s - 2, 3) * pochhammer(s - 1, 2)
        beta = n1 * (n2 + 1) * (n1**2 + n2**2 + n1 * n2 - 2 * n1 - n2)
        gamma = pochhammer(s - 2, 3) * (
            n1**3 + n2**3 + 3 * n1**2 * n2 + 3 * n1 * n2**2
            - 3 * n1**2 - 3 * n2**2 - 7 * n1 * n2 + n1 + 2 * n2)
        u = Polynomial((0, alpha, beta))
        v = Polynomial((alpha, alpha, beta))
        w = -Polynomial((gamma, (s - 2) * beta))
        return Ode2(u, v, w)
    if r == 3:
        if n2 < 3:
            raise ValueError("r = 3 needs n2 >= 3")
        s = n1 + n2
        alpha = pochhammer(s - 4, 5) * pochhammer(s - 3, 4)
        beta = 2 * n1 * (n2 + 1) * (
            n1**6 + 7 * n1**5 * (n2 - 2)
            + n1**4 * (15 * n2**2 - 72 * n2 + 77)
            + n1**3 * (16 * n2**3 - 119 * n2**2 + 279 * n2 - 208)
            + n1**2 * (15 * n2**4 - 107 * n2**3 + 333 * n2**2 - 490 * n2 + 276)
            + n1 * (7 * n2**5 - 67 * n2**4 + 227 * n2**3 - 384 * n2**2
                    + 352 * n2 - 144)
            + n2 * (n2**5 - 15 * n2**4 + 74 * n2**3 - 156 * n2**2
                    + 144 * n2 - 48))
        gamma = 2 * pochhammer(n1 - 1, 2) * pochhammer(n2, 2) * (s - 2) * (
            -3 * n1 + n1**2 + (n2 - 1) * n2)
        delta = 2 * n1 * (n2 + 1) * (
            n1**6 + 7 * n1**5 * (n2 - 2)
            + n1**4 * (15 * n2**2 - 73 * n2 + 77)
            + n1**3 * (16 * n2**3 - 120 * n2**2 + 285 * n2 - 208)
            + n1**2 * (15 * n2**4 - 108 * n2**3 + 338 * n2**2 - 501 * n2 + 276)
            + n1 * (7 * n2**5 - 68 * n2**4 + 231 * n2**3 - 390 * n2**2
                    + 358 * n2 - 144)
            + n2 * (n2**5 - 15 * n2**4 + 75 * n2**3 - 159 * n2**2
                    + 146 * n2 - 48))
        epsilon = pochhammer(s - 4, 5) * (
            6 * n1 - 29 * n1**2 + 27 * n1**3 - 9 * n1**4 + n1**5
            + 18 * n2 - 78 * n1 * n2 + 91 * n1**2 * n2 - 38 * n1**3 * n2
            + 5 * n1**4 * n2 - 39 * n2**2 + 97 * n1 * n2**2
            - 60 * n1**2 * n2**2 + 10 * n1**3 * n2**2 + 29 * n2**3
            - 38 * n1 * n2**3 + 10 * n1**2 * n2**3 - 9 * n2**4
            + 5 * n1 * n2**4 + n2**5)
        zeta = 2 * n1 * (n2 + 1) * (s - 4) * (
            n1**6 + n1**5 * (7 * n2 - 13)
            + n1**4 * (15 * n2**2 - 68 * n2 + 67)
            + n1**3 * (16 * n2**3 - 114 * n2**2 + 249 * n2 - 171)
            + n1**2 * (15 * n2**4 - 102 * n2**3 + 302 * n2**2 - 414 * n2 + 216)
            + n1 * (7 * n2**5 - 63 * n2**4 + 203 * n2**3 - 327 * n2**2
                    + 282 * n2 - 108)
            + n2 * (n2**5 - 14 * n2**4 + 65 * n2**3 - 130 * n2**2
                    + 114 * n2 - 36))
        u = Polynomial((0, alpha, beta, gamma))
        v = Polynomial((alpha, alpha, delta, gamma))
        w = -Polynomial((epsilon, zeta, (s - 3) * gamma))
        return Ode2(u, v, w)
    raise ValueError("closed-form equations exist for r in {2, 3} only")


def catalan_ode(n: int, r: int = 2) -> Ode2:
    """The simplified equal-rows forms of :func:`two_row_ode`."""
    if r == 2:
        if n < 2:
            raise ValueError("r = 2 needs n >= 2")
        c = 8 * (2 * n - 1) ** 2
        u = Polynomial((0, c, 3 * (n + 1)))
        v = Polynomial((c, c, 3 * (n + 1)))
        w = Polynomial((-4 * (2 * n - 1) * (8 * n**2 - 13 * n + 3),
                        6 * (n + 1) * (1 - n)))
        return Ode2(u, v, w)
    if r == 3:
        if n < 3:
            raise ValueError("r = 3 needs n >= 3")
        quart = 72 - 384 * n + 704 * n**2 - 512 * n**3 + 128 * n**4
        u = Polynomial((0, quart, 48 - 25 * n - 42 * n**2 + 31 * n**3,
                        2 * n + 2 * n**2))
        v = Polynomial((quart, quart, 48 - 27 * n - 44 * n**2 + 31 * n**3,
                        2 * n + 2 * n**2))
        w = -2 * Polynomial((
            -72 + 558 * n - 1438 * n**2 + 1560 * n**3 - 744 * n**4 + 128 * n**5,
            -72 + 90 * n + 37 * n**2 - 94 * n**3 + 31 * n**4,
            -3 * n - n**2 + 2 * n**3))
        return Ode2(u, v, w)
    raise ValueError("simplified equations exist for r in {2, 3} only")
