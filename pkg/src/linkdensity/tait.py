"""Tait graphs and exact spanning-tree counts.

Counts are Python integers throughout. The matrix-tree count runs Bareiss
fraction-free elimination on a reduced Laplacian whose entries aggregate
parallel edges as integer weights.
"""

from collections import Counter
from dataclasses import dataclass
import warnings

from . import kernels

__all__ = [
    "Edge",
    "Multigraph",
    "TreeCount",
    "DisconnectedGraphWarning",
    "SelfLoopWarning",
    "EnumerationGuardError",
    "MAX_ENUM_BUNDLES",
    "tait_graph",
    "spanning_tree_count",
    "spanning_tree_split",
    "multiedge_expand",
    "expand_edge",
    "enumerate_spanning_trees",
    "parse_edge_list",
    "format_edge_list",
]

MAX_ENUM_BUNDLES = 16


class DisconnectedGraphWarning(UserWarning):
    pass


class SelfLoopWarning(UserWarning):
    pass


class EnumerationGuardError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        ids = [e.id for e in edges]
        if len(set(ids)) != len(ids):
            raise ValueError("edge identifiers must be unique")
        for e in edges:
            if not (0 <= e.u < self.vertex_count and 0 <= e.v < self.vertex_count):
                raise ValueError(f"edge {e.id} has an endpoint outside 0..{self.vertex_count - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, vertex_count, pairs):
        """Edges numbered 0, 1, ... in the order given."""
        return cls(vertex_count, tuple(Edge(i, u, v) for i, (u, v) in enumerate(pairs)))

    def edge(self, eid):
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(f"no edge with id {eid}")

    def next_id(self):
        return max((e.id for e in self.edges), default=-1) + 1

    def delete(self, eid):
        self.edge(eid)
        return Multigraph(self.vertex_count, tuple(e for e in self.edges if e.id != eid))

    def contract(self, eid):
        """Merge the endpoints of ``eid``; parallel copies become self-loops."""
        target = self.edge(eid)
        keep, gone = sorted((target.u, target.v))
        if keep == gone:
            return self.delete(eid)

        def relabel(x):
            if x == gone:
                x = keep
            return x - 1 if x > gone else x

        edges = tuple(Edge(e.id, relabel(e.u), relabel(e.v))
                      for e in self.edges if e.id != eid)
        return Multigraph(self.vertex_count - 1, edges)

    def bundles(self):
        """Parallel classes as ``(u, v, multiplicity)``, self-loops dropped."""
        counts = Counter((min(e.u, e.v), max(e.u, e.v)) for e in self.edges if e.u != e.v)
        return [(u, v, k) for (u, v), k in sorted(counts.items())]

    def is_connected(self):
        if self.vertex_count == 0:
            return False
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        pieces = self.vertex_count
        for e in self.edges:
            a, b = find(e.u), find(e.v)
            if a != b:
                parent[a] = b
                pieces -= 1
        return pieces == 1


@dataclass(frozen=True)
class TreeCount:
    total: int
    with_edge: int | None = None
    without_edge: int | None = None

    def __post_init__(self):
        if self.total < 0:
            raise ValueError("tree counts are non-negative")
        if self.with_edge is not None and self.without_edge is not None:
            if self.with_edge + self.without_edge != self.total:
                raise ValueError("total must equal with_edge + without_edge")


def tait_graph(tv):
    """Checkerboard graph of the standard diagram of ``tv``.

    Built as a two-terminal series-parallel network: odd-numbered levels
    (a_1, a_3, ...) add a bundle of a_i parallel edges across the terminals,
    even-numbered levels extend the network by a path of a_i edges. When the
    last level is a path its far end is glued back to the first terminal.
    """
    s, t = 0, 1
    vertex_count = 2
    pairs = []
    for i, a in enumerate(tv.levels):
        if i % 2 == 0:
            pairs.extend([(s, t)] * a)
        else:
            prev = t
            for _ in range(a):
                pairs.append((prev, vertex_count))
                prev = vertex_count
                vertex_count += 1
            t = prev
    if len(tv.levels) % 2 == 0:
        # close the final path onto s: relabel t as s
        pairs = [(s if u == t else u, s if v == t else v) for u, v in pairs]
        vertex_count -= 1
    return Multigraph.from_pairs(vertex_count, pairs)


def _bareiss_det(mat):
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _reduced_laplacian(g):
    n = g.vertex_count
    lap = [[0] * n for _ in range(n)]
    for u, v, k in g.bundles():
        lap[u][u] += k
        lap[v][v] += k
        lap[u][v] -= k
        lap[v][u] -= k
    return [row[:-1] for row in lap[:-1]]


def spanning_tree_count(g):
    """Number of spanning trees (matrix-tree theorem, exact).

    A disconnected graph gives 0 together with a
    :class:`DisconnectedGraphWarning`.
    """
    if not g.is_connected():
        warnings.warn("graph is disconnected; spanning tree count is 0",
                      DisconnectedGraphWarning, stacklevel=2)
        return 0
    return _bareiss_det(_reduced_laplacian(g))


def spanning_tree_split(g, eid):
    """Trees containing / avoiding edge ``eid`` via contraction / deletion."""
    e = g.edge(eid)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DisconnectedGraphWarning)
        without = spanning_tree_count(g.delete(eid))
        if e.u == e.v:
            warnings.warn(f"edge {eid} is a self-loop and lies in no spanning tree",
                          SelfLoopWarning, stacklevel=2)
            with_edge = 0
        else:
            with_edge = spanning_tree_count(g.contract(eid))
    return TreeCount(with_edge + without, with_edge, without)


def multiedge_expand(g, eid, m):
    """Tree count after replacing ``eid`` by m + 1 parallel copies:
    (m + 1) * T_e + T_without_e."""
    if m < 0:
        raise ValueError("m must be non-negative")
    split = spanning_tree_split(g, eid)
    return (m + 1) * split.with_edge + split.without_edge


def expand_edge(g, eid, m):
    """The explicit graph with ``eid`` replaced by m + 1 parallel copies."""
    e = g.edge(eid)
    start = g.next_id()
    extra = tuple(Edge(start + i, e.u, e.v) for i in range(m))
    return Multigraph(g.vertex_count, g.edges + extra)


def enumerate_spanning_trees(g, backend=None):
    """Brute-force tree count: every (V-1)-subset of parallel classes that is
    acyclic contributes the product of its class sizes.

    Refuses graphs with more than :data:`MAX_ENUM_BUNDLES` parallel classes.
    """
    bundles = g.bundles()
    if len(bundles) > MAX_ENUM_BUNDLES:
        raise EnumerationGuardError(
            f"{len(bundles)} distinct edges exceed the enumeration guard of {MAX_ENUM_BUNDLES}")
    if g.vertex_count == 0:
        return 0
    return kernels.count_tree_subsets(g.vertex_count, bundles, backend=backend)


def parse_edge_list(text):
    """Read ``n <vertex_count>`` followed by one ``u v`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"expected header 'n <vertex_count>', got {lines[0]!r}")
    vertex_count = int(head[1])
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v', got {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return Multigraph.from_pairs(vertex_count, pairs)


def format_edge_list(g):
    rows = [f"n {g.vertex_count}"]
    rows.extend(f"{e.u} {e.v}" for e in sorted(g.edges, key=lambda e: e.id))
    return "\n".join(rows) + "\n"
