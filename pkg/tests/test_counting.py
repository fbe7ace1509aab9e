"""Strict counters against the brute-force oracle and each other."""

import random
from itertools import permutations

import pytest

from displab.algebra import multinomial
from displab.counting import (CounterTable, count, count_bruteforce,
                              enumerate_dispositions)
from displab.errors import CapExceededError, SizeLimitError
from displab.families import (make_empty, make_path, make_staircase, make_star,
                              make_two_row)
from displab.graph import SimpleDigraph, full_mask, iter_mask, mask_size, normalize, Multidigraph
from helpers import all_digraphs, random_simple_digraph


def count_by_source_peeling(d):
    """Test-only mirror of the counter: peel sources instead of sinks."""
    inc = d.in_masks()
    memo = {0: 1}

    def sigma(mask):
        if mask in memo:
            return memo[mask]
        total = 0
        for v in iter_mask(mask):
            if inc[v] & mask == 0:
                total += sigma(mask & ~(1 << v))
        memo[mask] = total
        return total

    return sigma(full_mask(d.n))


def test_bruteforce_examples():
    assert count_bruteforce(make_path(4)) == 1
    assert count_bruteforce(make_empty(4)) == 24
    assert count_bruteforce(SimpleDigraph(2, [(0, 1), (1, 0)])) == 0


def test_bruteforce_size_cap():
    with pytest.raises(SizeLimitError):
        count_bruteforce(make_empty(10))


def test_count_examples():
    assert count(make_staircase(5)) == 16
    assert count(make_star(5)) == 24
    assert count(make_two_row(2, 3)) == 5


def test_count_zero_on_loop_and_cycle():
    assert count(normalize(Multidigraph(1, [(0, 0)]))) == 0
    assert count(SimpleDigraph(3, [(0, 1), (1, 2), (2, 0)])) == 0


def test_count_order_zero_is_one():
    assert count(make_empty(0)) == 1


def test_count_size_cap():
    with pytest.raises(SizeLimitError):
        count(make_empty(64))


def test_counter_table_conventions():
    d = make_staircase(4)
    table = CounterTable(d)
    assert table.sigma(full_mask(4)) == 5
    assert table.memo[0] == 1


def test_enumerate_path():
    assert enumerate_dispositions(make_path(3)) == [(3, 2, 1)]


def test_enumerate_empty_and_staircase():
    assert len(enumerate_dispositions(make_empty(2))) == 2
    dispositions = enumerate_dispositions(make_staircase(3))
    assert len(dispositions) == 2
    assert dispositions == sorted(dispositions)
    # every result really is a disposition
    for f in dispositions:
        assert sorted(f) == [1, 2, 3]
        assert all(f[u] > f[v] for u, v in make_staircase(3).arcs)


def test_enumerate_matches_counter():
    rng = random.Random(11)
    for _ in range(25):
        d = random_simple_digraph(rng, rng.randint(1, 6))
        assert len(enumerate_dispositions(d)) == count(d)


def test_enumerate_cap():
    with pytest.raises(CapExceededError):
        enumerate_dispositions(make_empty(6), cap=10)


def test_enumerate_size_cap():
    with pytest.raises(SizeLimitError):
        enumerate_dispositions(make_empty(13))


def test_oracle_exhaustive_small_orders():
    for n in range(4):
        for d in all_digraphs(n):
            assert count(d) == count_bruteforce(d)


def test_oracle_random_medium_orders():
    rng = random.Random(2024)
    for _ in range(300):
        d = random_simple_digraph(rng, rng.randint(4, 7))
        assert count(d) == count_bruteforce(d)


def test_oracle_on_family_instances():
    from displab.families import (make_dispositional, make_qary_level,
                                  make_rooted_tree, staircase_spec)
    corpus = []
    for n in range(1, 8):
        corpus += [make_path(n), make_empty(n), make_staircase(n), make_star(n)]
    corpus += [make_two_row(n1, n2) for n1 in range(4)
               for n2 in range(max(n1, 1), 5)]
    corpus += [make_qary_level(2, 2), make_qary_level(3, 2),
               make_qary_level(2, 3),
               make_rooted_tree([-1, 0, 0, 1, 1, 2]),
               make_dispositional(staircase_spec(7))]
    for d in corpus:
        if d.n <= 9:
            assert count(d) == count_bruteforce(d), d


def test_thread_safety_of_counters():
    """Concurrent counting on distinct digraphs and the shared zigzag memo."""
    import threading
    from displab.families import staircase_counter
    results = {}

    def worker(idx):
        d = make_staircase(5 + idx % 3)
        results[idx] = (count(d), staircase_counter(40 + idx))

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for idx, (c, s) in results.items():
        assert c == staircase_counter(5 + idx % 3)
        assert s == staircase_counter(40 + idx)


def test_reverse_invariance():
    rng = random.Random(21)
    for _ in range(80):
        d = random_simple_digraph(rng, rng.randint(1, 8))
        assert count(d) == count(d.reverse())


def test_subdigraph_monotonicity():
    rng = random.Random(22)
    for _ in range(40):
        d = random_simple_digraph(rng, rng.randint(2, 7))
        base = count(d)
        for arc in d.arcs:
            smaller = SimpleDigraph(d.n, d.arcs - {arc})
            assert count(smaller) >= base


def test_sink_vs_source_recursion():
    rng = random.Random(23)
    for _ in range(60):
        d = random_simple_digraph(rng, rng.randint(1, 7))
        assert count_by_source_peeling(d) == CounterTable(d).sigma(
            full_mask(d.n))


def test_component_law():
    rng = random.Random(24)
    for _ in range(40):
        d = random_simple_digraph(rng, rng.randint(2, 8))
        comps = d.underlying_components()
        expected = multinomial([mask_size(c) for c in comps])
        for c in comps:
            expected *= count(d.induced_subgraph(c))
        assert count(d) == expected
        # whole-graph recursion without factorization agrees
        assert CounterTable(d).sigma(full_mask(d.n)) == count(d)


def test_positivity_iff_acyclic():
    rng = random.Random(25)
    for _ in range(80):
        d = random_simple_digraph(rng, rng.randint(1, 7))
        assert (count(d) > 0) == d.is_acyclic()


def test_dispositions_definition_bruteforce_cross():
    """The enumerated set equals the set found by scanning all bijections."""
    rng = random.Random(26)
    for _ in range(10):
        d = random_simple_digraph(rng, rng.randint(1, 5))
        direct = sorted(
            perm for perm in permutations(range(1, d.n + 1))
            if all(perm[u] > perm[v] for u, v in d.arcs))
        assert enumerate_dispositions(d) == direct
