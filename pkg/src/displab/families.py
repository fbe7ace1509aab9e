"""Named digraph families and their closed-form or recurrence counters.

Every family the counting and polynomial machinery cares about is built
here with a fixed canonical vertex numbering, so golden tests can compare
arc sets literally.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .algebra import binomial, multinomial
from .errors import ParseError
from .graph import SimpleDigraph


# ---------------------------------------------------------------------------
# dispositional digraphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DispositionalSpec:
    """Row lengths and shifts of a grid-of-rows digraph.

    ``rows[i] = (length, shift)``: row i+1 sits ``shift`` columns to the
    right of row i (negative = left); the first shift must be 0.  Arcs run
    rightward inside a row and from each vertex to the vertex of the next
    row in the same absolute column, when it exists.
    """

    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple((int(a), int(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        if rows:
            if rows[0][1] != 0:
                raise ValueError("first row shift must be 0")
            if any(a < 0 for a, _ in rows):
                raise ValueError("row lengths must be nonnegative")

    @property
    def order(self) -> int:
        return sum(a for a, _ in self.rows)

    def to_json(self) -> dict:
        return {"rows": [{"len": a, "shift": b} for a, b in self.rows]}

    @classmethod
    def from_json(cls, data) -> "DispositionalSpec":
        try:
            rows = tuple((int(r["len"]), int(r["shift"])) for r in data["rows"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad dispositional spec: {exc}") from exc
        return cls(rows)


def make_dispositional(spec: DispositionalSpec) -> SimpleDigraph:
    """Build the grid digraph of a spec.

    Vertices are numbered row-major starting from the *last* row, left to
    right inside each row; this is the numbering under which the zigzag
    digraphs come out with their canonical vertex order.
    """
    starts = []
    pos = 0
    for idx, (_, shift) in enumerate(spec.rows):
        pos = shift if idx == 0 else pos + shift
        starts.append(pos)
    # vertex index of (row, offset-within-row), last row numbered first
    base = {}
    counter = 0
    for ridx in range(len(spec.rows) - 1, -1, -1):
        length = spec.rows[ridx][0]
        for off in range(length):
            base[(ridx, off)] = counter
            counter += 1
    arcs = []
    for ridx, (length, _) in enumerate(spec.rows):
        for off in range(length - 1):
            arcs.append((base[(ridx, off)], base[(ridx, off + 1)]))
        if ridx + 1 < len(spec.rows):
            nlen, _ = spec.rows[ridx + 1]
            shift = starts[ridx + 1] - starts[ridx]
            for off in range(length):
                noff = off - shift
                if 0 <= noff < nlen:
                    arcs.append((base[(ridx, off)], base[(ridx + 1, noff)]))
    return SimpleDigraph(spec.order, arcs)


def dispositional_connected(spec: DispositionalSpec) -> bool:
    """True iff the underlying undirected graph is one weak component."""
    d = make_dispositional(spec)
    return len(d.underlying_components()) <= 1


def staircase_spec(n: int) -> DispositionalSpec:
    """The zigzag digraph of order n as a dispositional spec.

    Even n = 2k: rows [2,0] then [2,-1] repeated k-1 times; odd n = 2k+1:
    [1,0] then [2,-1] repeated k times.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        return DispositionalSpec(())
    if n % 2 == 0:
        rows = [(2, 0)] + [(2, -1)] * (n // 2 - 1)
    else:
        rows = [(1, 0)] + [(2, -1)] * (n // 2)
    return DispositionalSpec(tuple(rows))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def make_path(n: int) -> SimpleDigraph:
    return SimpleDigraph(n, ((i, i + 1) for i in range(n - 1)))


def make_empty(n: int) -> SimpleDigraph:
    return SimpleDigraph(n, ())


def make_star(n: int, center_out: bool = True) -> SimpleDigraph:
    """Star digraph: vertex 0 joined to n-1 leaves.

    ``center_out`` orients the arcs away from the center (the counter is the
    same either way, by reverse invariance).
    """
    if n < 1:
        raise ValueError("star needs at least the center")
    if center_out:
        return SimpleDigraph(n, ((0, i) for i in range(1, n)))
    return SimpleDigraph(n, ((i, 0) for i in range(1, n)))


def make_staircase(n: int) -> SimpleDigraph:
    """Zigzag digraph S_n: arcs v1->v2, v3->v2, v3->v4, v5->v4, ...

    0-based: (2i, 2i+1) for the down-steps and (2i, 2i-1) for the up-steps.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    arcs = []
    for i in range((n - 2) // 2 + 1 if n >= 2 else 0):
        arcs.append((2 * i, 2 * i + 1))
    for i in range(2, (n + 1) // 2 + 1):
        arcs.append((2 * i - 2, 2 * i - 3))
    return SimpleDigraph(n, arcs)


def make_two_row(n1: int, n2: int) -> SimpleDigraph:
    """Two-row grid digraph with rows of lengths n1 <= n2.

    Equals the dispositional digraph with rows [n2, 0], [n1, 0]: the
    length-n2 row (vertices v1..vn2, indices n1..n1+n2-1) sends a vertical
    arc into the length-n1 row (u1..un1, indices 0..n1-1) in each shared
    column, and both rows are directed paths.
    """
    if not (0 <= n1 <= n2):
        raise ValueError("need 0 <= n1 <= n2")
    return make_dispositional(DispositionalSpec(((n2, 0), (n1, 0))))


def two_row_labels(n1: int, n2: int) -> dict[str, int]:
    """Vertex labels for make_two_row: u1..u{n1} then v1..v{n2}."""
    labels = {f"u{i + 1}": i for i in range(n1)}
    labels.update({f"v{j + 1}": n1 + j for j in range(n2)})
    return labels


def make_rooted_tree(parents: list[int]) -> SimpleDigraph:
    """Digraph of a rooted tree given parents (root has parent -1).

    Arcs are oriented away from the root.
    """
    n = len(parents)
    roots = [v for v, p in enumerate(parents) if p < 0]
    if len(roots) != 1:
        raise ValueError("parent array must have exactly one root")
    arcs = []
    for v, p in enumerate(parents):
        if p >= 0:
            if not (0 <= p < n):
                raise ValueError(f"parent {p} out of range")
            arcs.append((p, v))
    d = SimpleDigraph(n, arcs)
    if len(d.underlying_components()) != 1 or not d.is_acyclic():
        raise ValueError("parent array does not encode a tree")
    return d


def qary_level_parents(q: int, level: int) -> list[int]:
    """Parent array of the complete q-ary tree with `level` levels."""
    if q < 2 or level < 1:
        raise ValueError("need q >= 2 and level >= 1")
    parents = [-1]
    prev = [0]
    for _ in range(level - 1):
        nxt = []
        for p in prev:
            for _ in range(q):
                parents.append(p)
                nxt.append(len(parents) - 1)
        prev = nxt
    return parents


def make_qary_level(q: int, level: int) -> SimpleDigraph:
    return make_rooted_tree(qary_level_parents(q, level))


# ---------------------------------------------------------------------------
# analytic counters
# ---------------------------------------------------------------------------

_zigzag_lock = threading.Lock()
_zigzag: list[int] = [1, 1]


def staircase_counter(n: int) -> int:
    """Euler zigzag number s_n = sigma(S_n), by the sink-peeling recurrence

    s_n = sum over 1 <= i <= n//2 of C(n-1, 2i-1) s_{2i-1} s_{n-2i}.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    with _zigzag_lock:
        while len(_zigzag) <= n:
            m = len(_zigzag)
            s = sum(binomial(m - 1, 2 * i - 1) * _zigzag[2 * i - 1] * _zigzag[m - 2 * i]
                    for i in range(1, m // 2 + 1))
            _zigzag.append(s)
        return _zigzag[n]


def staircase_counter_alt(n: int) -> int:
    """Same number by the source-peeling recurrence (test cross-check):

    s_n = sum over 0 <= i <= (n-1)//2 of C(n-1, 2i) s_{2i} s_{n-2i-1}.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n <= 1:
        return 1
    return sum(binomial(n - 1, 2 * i) * staircase_counter_alt(2 * i)
               * staircase_counter_alt(n - 2 * i - 1)
               for i in range((n - 1) // 2 + 1))


def tree_counter(parents: list[int]) -> int:
    """Counter of a rooted tree: multinomial of the descendant subtree
    orders times the product of their counters."""
    n = len(parents)
    children: list[list[int]] = [[] for _ in range(n)]
    root = -1
    for v, p in enumerate(parents):
        if p < 0:
            root = v
        else:
            children[p].append(v)
    if root < 0:
        raise ValueError("no root in parent array")

    sizes = [0] * n

    def size(v: int) -> int:
        if sizes[v] == 0:
            sizes[v] = 1 + sum(size(c) for c in children[v])
        return sizes[v]

    def sigma(v: int) -> int:
        kids = children[v]
        if not kids:
            return 1
        out = multinomial([size(c) for c in kids])
        for c in kids:
            out *= sigma(c)
        return out

    size(root)
    if sizes[root] != n:
        raise ValueError("parent array is not a single tree")
    return sigma(root)


def qary_level_counter(q: int, level: int) -> int:
    """Counter of the n-level complete q-ary tree:
    sigma(level 1) = 1 and sigma(level n+1) = multinomial(q equal parts) *
    sigma(level n)^q, each part of size (q^n - 1)/(q - 1)."""
    if q < 2 or level < 1:
        raise ValueError("need q >= 2 and level >= 1")
    value = 1
    for m in range(1, level):
        part = (q**m - 1) // (q - 1)
        value = multinomial([part] * q) * value**q
    return value


def two_row_counter(n1: int, n2: int) -> int:
    """sigma of the two-row grid: C(n1+n2, n1) - C(n1+n2, n1-1).

    At n1 = n2 = n this is the n-th Catalan number.
    """
    if not (0 <= n1 <= n2):
        raise ValueError("need 0 <= n1 <= n2")
    return binomial(n1 + n2, n1) - binomial(n1 + n2, n1 - 1)


# ---------------------------------------------------------------------------
# family strings ("staircase:7", "tworow:2,3", ...)
# ---------------------------------------------------------------------------

def build_family(text: str) -> tuple[SimpleDigraph, dict[str, int]]:
    """Parse a family string and return (digraph, vertex labels).

    Most families label vertices v1..vn in index order; the two-row family
    labels its rows u1..u{n1} / v1..v{n2} instead.
    """
    name, _, arg = text.partition(":")
    name = name.strip().lower()
    try:
        if name == "path":
            n = int(arg)
            return make_path(n), _index_labels(n)
        if name == "empty":
            n = int(arg)
            return make_empty(n), _index_labels(n)
        if name == "star":
            n = int(arg)
            return make_star(n), _index_labels(n)
        if name == "staircase":
            n = int(arg)
            return make_staircase(n), _index_labels(n)
        if name == "tworow":
            n1, n2 = (int(x) for x in arg.split(","))
            return make_two_row(n1, n2), two_row_labels(n1, n2)
        if name == "qary":
            q, level = (int(x) for x in arg.split(","))
            d = make_qary_level(q, level)
            return d, _index_labels(d.n)
        if name == "tree":
            parents = [int(x) for x in arg.split(",")]
            d = make_rooted_tree(parents)
            return d, _index_labels(d.n)
        if name == "dispositional":
            rows = []
            for part in arg.split(";"):
                a, b = (int(x) for x in part.split(","))
                rows.append((a, b))
            d = make_dispositional(DispositionalSpec(tuple(rows)))
            return d, _index_labels(d.n)
    except ParseError:
        raise
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad family string {text!r}: {exc}") from exc
    raise ParseError(f"unknown family {name!r}")


def _index_labels(n: int) -> dict[str, int]:
    return {f"v{i + 1}": i for i in range(n)}
