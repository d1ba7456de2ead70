"""Compact undirected simple graphs with bitset adjacency and clique primitives.

Vertices are labelled 0..n-1.  A vertex set is an int bitmask (bit v set
iff vertex v is in the set); adjacency is one mask per vertex.  Python ints
are arbitrary precision, so masks need no fixed word layout; a configurable
vertex cap guards against accidental huge allocations.

Clique existence tests collapse false twins (vertices with identical
neighborhoods) before searching: at most one member of such a class can
appear in any clique, so searching over one representative per class is
exact.  Blow-up style graphs reduce to a handful of classes this way.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

VertexSet = int  # bitmask over 0..n-1

DEFAULT_VERTEX_CAP = 4096


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph.

    adj[v] is the neighborhood bitmask of v.  Invariants: symmetric, no
    loops.  Construct via build_graph / from_adjacency / graph6_decode.
    """

    __slots__ = ("n", "adj", "_m", "_twins")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj
        self._m: Optional[int] = None
        self._twins: Optional[tuple[int, ...]] = None

    @property
    def m(self) -> int:
        """Edge count."""
        if self._m is None:
            self._m = sum(a.bit_count() for a in self.adj) // 2
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def vertices_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        """Yield non-adjacent pairs (u, v) with u < v in lexicographic order."""
        full = self.vertices_mask()
        for u in range(self.n):
            above = full >> (u + 1) << (u + 1)
            for v in bits(above & ~self.adj[u]):
                yield (u, v)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"no edge {u}-{v} to remove")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("loop edge")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def twin_classes(self) -> tuple[VertexSet, ...]:
        """Masks of false-twin classes (identical neighborhoods), cached.

        Members of one class are pairwise non-adjacent (equal neighborhoods
        forbid loops), so any clique uses at most one per class.
        """
        if self._twins is None:
            groups: dict[int, int] = {}
            for v, a in enumerate(self.adj):
                groups[a] = groups.get(a, 0) | (1 << v)
            self._twins = tuple(groups.values())
        return self._twins

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Build a graph from an edge list; duplicate and mirrored pairs collapse."""
    if n < 0:
        raise ValueError("negative vertex count")
    if n > cap:
        raise ValueError(f"vertex count {n} exceeds cap {cap}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in edge ({u},{v})")
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency(adj: Iterable[int], cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Wrap raw adjacency masks, validating symmetry and loop-freeness."""
    rows = tuple(adj)
    n = len(rows)
    if n > cap:
        raise ValueError(f"vertex count {n} exceeds cap {cap}")
    full = (1 << n) - 1
    for v, a in enumerate(rows):
        if a >> v & 1:
            raise ValueError(f"loop at vertex {v}")
        if a & ~full:
            raise ValueError(f"adjacency of {v} outside vertex range")
    for v, a in enumerate(rows):
        for u in bits(a):
            if not rows[u] >> v & 1:
                raise ValueError(f"asymmetric adjacency {v}->{u}")
    return Graph(n, rows)


def common_neighborhood(g: Graph, u_set: VertexSet) -> VertexSet:
    """Intersection of the neighborhoods of all vertices in u_set."""
    if u_set == 0:
        raise ValueError("common neighborhood of an empty set is undefined")
    out = g.vertices_mask()
    for v in bits(u_set):
        out &= g.adj[v]
    return out


def edges_between(g: Graph, u_set: VertexSet, w_set: VertexSet) -> int:
    """Number of edges with one endpoint in each of two disjoint sets."""
    if u_set & w_set:
        raise ValueError("edges_between requires disjoint vertex sets")
    return sum((g.adj[v] & w_set).bit_count() for v in bits(u_set))


def induced_edges(g: Graph, mask: VertexSet) -> int:
    """Number of edges with both endpoints inside `mask`."""
    return sum((g.adj[v] & mask).bit_count() for v in bits(mask)) // 2


def _reduce_by_twins(g: Graph, mask: VertexSet) -> VertexSet:
    """One representative (lowest member in mask) per twin class."""
    out = 0
    for cls in g.twin_classes():
        hit = cls & mask
        if hit:
            out |= hit & -hit
    return out


def _find_clique_in(g: Graph, mask: VertexSet, k: int) -> Optional[tuple[int, ...]]:
    """Some k-clique inside `mask`, or None.  Searches twin representatives."""
    if k <= 0:
        return ()
    cand = _reduce_by_twins(g, mask)
    adj = g.adj
    out: list[int] = []

    def rec(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            out.append(v)
            if rec(cand & adj[v], need - 1):
                return True
            out.pop()
            cand ^= low
        return False

    if rec(cand, k):
        return tuple(out)
    return None


def find_clique(g: Graph, p: int) -> Optional[tuple[int, ...]]:
    """A witness p-clique of g, or None."""
    if p < 1:
        raise ValueError("clique size must be >= 1")
    return _find_clique_in(g, g.vertices_mask(), p)


def contains_clique(g: Graph, p: int) -> bool:
    return find_clique(g, p) is not None


def enumerate_cliques(g: Graph, p: int) -> Iterator[tuple[int, ...]]:
    """All p-cliques as sorted tuples, in lexicographic order.

    Ordered expansion over increasing vertex labels with a population-count
    prune; no twin collapsing here since every clique must be emitted.
    """
    if p < 1:
        raise ValueError("clique size must be >= 1")
    adj = g.adj
    full = g.vertices_mask()

    def rec(prefix: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        need = p - len(prefix)
        if need == 0:
            yield prefix
            return
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(prefix + (v,), cand & adj[v])

    yield from rec((), full)


# graph6 interchange format (canonical ASCII encoding of simple graphs).

_G6_LONG = 126  # '~' prefix for the >= 63 vertex form


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError("graph too large for supported graph6 forms")
    bit_chunks = []
    acc = 0
    nbits = 0
    for col in range(1, n):
        col_adj = g.adj[col]
        for row in range(col):
            acc = (acc << 1) | (col_adj >> row & 1)
            nbits += 1
            if nbits == 6:
                bit_chunks.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        bit_chunks.append(chr(acc + 63))
    return head + "".join(bit_chunks)


def graph6_decode(text: str, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("malformed graph6: byte out of printable range")
    if data[0] == _G6_LONG - 63:
        if len(data) >= 2 and data[1] == _G6_LONG - 63:
            raise ValueError("graph6 8-byte order form not supported")
        if len(data) < 4:
            raise ValueError("malformed graph6: truncated long-form order")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > cap:
        raise ValueError(f"graph6 order {n} exceeds cap {cap}")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ValueError("malformed graph6: wrong body length")
    adj = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            idx += 1
    while idx < 6 * len(body):
        if body[idx // 6] >> (5 - idx % 6) & 1:
            raise ValueError("malformed graph6: nonzero padding")
        idx += 1
    return Graph(n, tuple(adj))


def format_edge_list(g: Graph) -> str:
    """Text form: header "n m" then one "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    rows = [ln for ln in (ln.strip() for ln in text.splitlines()) if ln]
    if not rows:
        raise ValueError("empty edge-list input")
    try:
        n, m = (int(tok) for tok in rows[0].split())
    except ValueError as exc:
        raise ValueError("edge-list header must be 'n m'") from exc
    edges = []
    for ln in rows[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(toks[0]), int(toks[1])))
    g = build_graph(n, edges, cap=cap)
    if g.m != m:
        raise ValueError(f"edge-list header claims {m} edges, found {g.m}")
    return g
