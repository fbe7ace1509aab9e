"""Shared helpers for the test suite."""

from displab.graph import SimpleDigraph


def random_simple_digraph(rng, n, p=None):
    """Random loop-free digraph on n vertices with arc probability p."""
    if p is None:
        p = rng.choice((0.1, 0.2, 0.35, 0.5))
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < p]
    return SimpleDigraph(n, arcs)


def random_acyclic_digraph(rng, n, p=None):
    """Random DAG: arcs only from smaller to larger index, then shuffled."""
    if p is None:
        p = rng.choice((0.2, 0.35, 0.5))
    relabel = list(range(n))
    rng.shuffle(relabel)
    arcs = [(relabel[u], relabel[v]) for u in range(n) for v in range(u + 1, n)
            if rng.random() < p]
    return SimpleDigraph(n, arcs)


def random_tree_parents(rng, n):
    """Uniformly random parent array: parent of v is drawn from 0..v-1."""
    return [-1] + [rng.randrange(v) for v in range(1, n)]


def all_digraphs(n):
    """Every loop-free digraph on n vertices (2^(n(n-1)) of them)."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for bits in range(1 << len(pairs)):
        arcs = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        yield SimpleDigraph(n, arcs)
