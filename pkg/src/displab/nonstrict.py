"""Non-strict disposition counters: maps into {1..i} weakly decreasing on arcs.

Directed cycles no longer kill the count, they force equality, so the
counter factors through the strong-component quotient.  After condensing,
the inclusion-exclusion recurrence over sink subsets computes everything.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .algebra import TruncatedSeries, binomial
from .errors import SizeLimitError
from .graph import SimpleDigraph, iter_mask

BRUTE_FORCE_BUDGET = 10_000_000
CONDENSED_ORDER_LIMIT = 20


def nonstrict_bruteforce(d: SimpleDigraph, i: int) -> int:
    """Oracle: check all i^n maps directly.

    Loops impose f(v) >= f(v), which always holds, so had_loop is ignored.
    """
    if i < 0:
        raise ValueError("size must be nonnegative")
    if d.n == 0:
        return 1
    if i == 0:
        return 0
    if i**d.n > BRUTE_FORCE_BUDGET:
        raise SizeLimitError(
            f"brute force would scan {i**d.n} maps, over the budget")
    arcs = tuple(d.arcs)
    total = 0
    for f in product(range(1, i + 1), repeat=d.n):
        if all(f[u] >= f[v] for u, v in arcs):
            total += 1
    return total


class NonStrictCounter:
    """Memoized non-strict counters of one acyclic digraph.

    ``value(mask, i)`` counts the size-i non-strict dispositions of the
    subgraph induced by ``mask`` via inclusion-exclusion over nonempty
    subsets of its sinks (or sources, for the cross-check variant):

        sigma_i(S) = sum_{1<=j<=i} sum_{T} (-1)^(|T|+1) sigma_j(S - T).

    The empty set counts 1 at every size.
    """

    def __init__(self, d: SimpleDigraph, peel: str = "sinks"):
        if not d.is_acyclic():
            raise ValueError("NonStrictCounter needs an acyclic digraph")
        self.bound = d.out_masks() if peel == "sinks" else d.in_masks()
        self.memo: dict[tuple[int, int], int] = {}

    def value(self, mask: int, i: int) -> int:
        if mask == 0:
            return 1
        if i <= 0:
            return 0
        key = (mask, i)
        got = self.memo.get(key)
        if got is not None:
            return got
        extremal = [u for u in iter_mask(mask) if self.bound[u] & mask == 0]
        total = 0
        for j in range(1, i + 1):
            for size, sub in _subsets_with_size(extremal):
                term = self.value(mask & ~sub, j)
                total += term if size % 2 == 1 else -term
        self.memo[key] = total
        return total


def _subsets_with_size(vertices: list[int]):
    """Nonempty subsets of a vertex list as (popcount, mask) pairs."""
    k = len(vertices)
    for bits in range(1, 1 << k):
        sub = 0
        size = 0
        b = bits
        while b:
            low = b & -b
            sub |= 1 << vertices[low.bit_length() - 1]
            size += 1
            b ^= low
        yield size, sub


def nonstrict_count(d: SimpleDigraph, i: int, method: str = "peel",
                    peel: str = "sinks") -> int:
    """Non-strict counter of size i for any digraph.

    Condenses first (quotient invariance), splits into weak components
    (the counter is multiplicative at fixed size), then runs either the
    inclusion-exclusion recurrence ("peel") or the level-set transfer
    dynamic program ("transfer"); the two agree and the recurrence is the
    canonical path.
    """
    if i < 0:
        raise ValueError("size must be nonnegative")
    cond = d.condense()
    if cond.n > CONDENSED_ORDER_LIMIT:
        raise SizeLimitError(
            f"condensed order {cond.n} exceeds the cap {CONDENSED_ORDER_LIMIT}")
    if cond.n == 0:
        return 1
    if i == 0:
        return 0
    result = 1
    for comp_mask in cond.underlying_components():
        sub = cond.induced_subgraph(comp_mask)
        if method == "peel":
            result *= NonStrictCounter(sub, peel=peel).value(
                (1 << sub.n) - 1, i)
        elif method == "transfer":
            result *= _transfer_count(sub, i)
        else:
            raise ValueError(f"unknown method {method!r}")
    return result


def _transfer_count(d: SimpleDigraph, i: int) -> int:
    """Level-set dynamic program: peeling the value-1 vertices leaves an
    arc-closed (predecessor-closed) subset, so

        sigma_i(S) = sum over predecessor-closed U of S of sigma_{i-1}(U).
    """
    out = d.out_masks()
    memo: dict[tuple[int, int], int] = {}

    def upclosed(mask: int) -> list[int]:
        subs = []
        sub = mask
        while True:
            if _is_predecessor_closed(sub, mask, out):
                subs.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
        return subs

    def value(mask: int, j: int) -> int:
        if mask == 0:
            return 1
        if j <= 0:
            return 0
        key = (mask, j)
        got = memo.get(key)
        if got is not None:
            return got
        total = sum(value(u, j - 1) for u in upclosed(mask))
        memo[key] = total
        return total

    return value((1 << d.n) - 1, i)


def _is_predecessor_closed(sub: int, mask: int, out: list[int]) -> bool:
    # u -> v with v in sub and u in mask forces u in sub
    for u in iter_mask(mask & ~sub):
        if out[u] & sub:
            return False
    return True


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def nonstrict_path(n: int, i: int) -> int:
    """sigma^ns_i of a directed path: combinations with repetition
    C(i+n-1, n)."""
    if n < 0 or i < 0:
        raise ValueError("arguments must be nonnegative")
    return binomial(i + n - 1, n)


def nonstrict_empty(n: int, i: int) -> int:
    return i**n


def nonstrict_two_row(n1: int, n2: int, i: int) -> int:
    """Closed form for the two-row grid:

    (1 + n1 (1-i) / ((n2+1) i)) CR_{i,n1} CR_{i,n2};
    the value must be an integer, which is asserted.
    """
    if not (0 <= n1 <= n2):
        raise ValueError("need 0 <= n1 <= n2")
    if i < 1:
        raise ValueError("size must be at least 1")
    value = ((1 + Fraction(n1 * (1 - i), (n2 + 1) * i))
             * nonstrict_path(n1, i) * nonstrict_path(n2, i))
    if value.denominator != 1:
        raise AssertionError(f"two-row closed form gave non-integer {value}")
    return int(value)


# ---------------------------------------------------------------------------
# generating series
# ---------------------------------------------------------------------------

def nonstrict_path_series_fixed_size(j: int, order: int) -> TruncatedSeries:
    """EGF over growing paths at fixed size j: coefficients C(j+i-1, i)/i!.

    Equals exp(X) L_{j-1}(-X) as a series.
    """
    if j < 1:
        raise ValueError("size must be at least 1")
    return TruncatedSeries(
        Fraction(binomial(j + i - 1, i), math.factorial(i))
        for i in range(order + 1))


def nonstrict_path_series(order: int) -> TruncatedSeries:
    """EGF over growing paths with size = order: coefficients C(2i-1, i)/i!.

    The i = 0 term is 1 (order-0 convention); the series equals
    (1 + exp(2X) I_0(2X)) / 2.
    """
    return TruncatedSeries(
        Fraction(binomial(2 * i - 1, i), math.factorial(i))
        for i in range(order + 1))
