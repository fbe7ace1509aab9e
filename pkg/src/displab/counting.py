"""Strict disposition counting: the counter sigma and the dispositions themselves.

A disposition is a bijection f: V -> {1..n} with f(u) > f(v) on every arc
(u, v); sigma counts them.  The workhorse is a sink-peeling recursion
memoized on the surviving vertex subset: the counter of an induced subgraph
depends only on its vertex set, and the recursion only ever visits subsets
reachable by deleting sinks, which for the digraph families here is far
fewer than 2^n states.
"""

from __future__ import annotations

from itertools import permutations

from .algebra import multinomial
from .errors import CapExceededError, SizeLimitError
from .graph import (SimpleDigraph, check_mask_limit, full_mask, iter_mask,
                    mask_size)

BRUTE_FORCE_LIMIT = 9
ENUMERATION_ORDER_LIMIT = 12
DEFAULT_ENUMERATION_CAP = 100_000


class CounterTable:
    """Memoized sigma over vertex subsets of one fixed digraph.

    ``sigma(mask)`` is the counter of the subgraph induced by ``mask``,
    computed by summing over sink deletions.  The table is confined to a
    single counting call; the empty set counts 1 (the void disposition).
    """

    def __init__(self, d: SimpleDigraph):
        check_mask_limit(d.n, "subset-memoized counting")
        self.out = d.out_masks()
        self.memo: dict[int, int] = {0: 1}

    def sigma(self, mask: int) -> int:
        memo = self.memo
        got = memo.get(mask)
        if got is not None:
            return got
        out = self.out
        total = 0
        for u in iter_mask(mask):
            if out[u] & mask == 0:
                total += self.sigma(mask & ~(1 << u))
        memo[mask] = total
        return total


def count(d: SimpleDigraph) -> int:
    """Number of dispositions of d.

    Zero when a loop was normalized away or when a directed cycle exists;
    otherwise the weak components are counted independently and recombined
    with the multinomial of their sizes.
    """
    if d.had_loop:
        return 0
    check_mask_limit(d.n, "count")
    if d.n == 0:
        return 1
    if not d.is_acyclic():
        return 0
    comps = d.underlying_components()
    table = CounterTable(d)
    result = multinomial([mask_size(c) for c in comps])
    for c in comps:
        result *= table.sigma(c)
    return result


def count_bruteforce(d: SimpleDigraph) -> int:
    """Oracle: check every bijection directly.  Only for tiny digraphs."""
    if d.n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(
            f"brute-force counting is capped at {BRUTE_FORCE_LIMIT} vertices")
    if d.had_loop:
        return 0
    arcs = tuple(d.arcs)
    total = 0
    for perm in permutations(range(1, d.n + 1)):
        if all(perm[u] > perm[v] for u, v in arcs):
            total += 1
    return total


def enumerate_dispositions(d: SimpleDigraph,
                           cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """All dispositions, built by peeling maximum points.

    The vertex receiving the largest remaining value must be a source of the
    surviving subgraph, and every disposition arises exactly once this way.
    Output is sorted by the value tuple (mapping[0], ..., mapping[n-1]).
    """
    if d.n > ENUMERATION_ORDER_LIMIT:
        raise SizeLimitError(
            f"disposition enumeration is capped at {ENUMERATION_ORDER_LIMIT} vertices")
    total = count(d)
    if total > cap:
        raise CapExceededError(
            f"digraph has {total} dispositions, more than the cap {cap}")
    if total == 0:
        return []
    inc = d.in_masks()
    results: list[tuple[int, ...]] = []
    values = [0] * d.n

    def peel(mask: int, value: int) -> None:
        if mask == 0:
            results.append(tuple(values))
            return
        for v in iter_mask(mask):
            if inc[v] & mask == 0:
                values[v] = value
                peel(mask & ~(1 << v), value - 1)

    peel(full_mask(d.n), d.n)
    results.sort()
    return results
