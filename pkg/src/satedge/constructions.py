"""Turán graphs and the extremal blow-up constructions h0 / h1 / h2.

The base pattern: a complete (p-1)-partite graph with parts {v_i, u_i} plus
an apex v0 adjacent to every v_i.  Blowing the base up with part sizes

    |V0| = 2(p-1)(p-2)^2 x,   |V_i| = 4(p-1)^2(p-2) x,   |U_i| = p(3p-4) x

gives h0, a K_{p+1}-free graph on modulus(p) * x vertices where
modulus(p) = p(p-1)(4p^2-11p+8).  h1 stretches V0 by 2y and shrinks the
U side by a balanced y vertices, landing exactly on the Turán edge count
for n = modulus(p)*x + y; h2 does the same with 2y+1 / y+1 and overshoots
by a small surplus that trim_to_target can remove edge by edge.

Vertex labels in every blow-up run V0 first, then V_1..V_{p-1}, then
U_1..U_{p-1}, each part a contiguous range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import (
    Graph,
    VertexSet,
    bits,
    build_graph,
    contains_clique,
)


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with balanced parts."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    part_of = []
    for i, s in enumerate(sizes):
        part_of.extend([i] * s)
    adj = [0] * n
    start = 0
    masks = []
    for s in sizes:
        masks.append(((1 << s) - 1) << start)
        start += s
    full = (1 << n) - 1
    for v in range(n):
        adj[v] = full & ~masks[part_of[v]]
    return Graph(n, tuple(adj))


def turan_number(n: int, p: int) -> int:
    """Maximum edge count of an n-vertex graph with no p-clique."""
    if p < 2:
        raise ValueError("forbidden clique size must be >= 2")
    r = p - 1
    q, t = divmod(n, r)
    # complete r-partite with t parts of size q+1 and r-t of size q
    total = n * n
    total -= t * (q + 1) ** 2 + (r - t) * q * q
    return total // 2


def turan_defect(n: int, p: int) -> Fraction:
    """Exact defect d with turan_number(n, p) = (p-2)n^2/(2(p-1)) - d.

    d = t(p-1-t)/(2(p-1)) for t = n mod (p-1); zero iff (p-1) | n.
    """
    if p < 3:
        raise ValueError("need p >= 3")
    t = n % (p - 1)
    return Fraction(t * (p - 1 - t), 2 * (p - 1))


def modulus(p: int) -> int:
    """Vertex-count period of the constructions: p(p-1)(4p^2-11p+8)."""
    return p * (p - 1) * (4 * p * p - 11 * p + 8)


@dataclass(frozen=True)
class TuranDecomposition:
    p: int
    n: int
    x: int
    y: int


def decompose_n(n: int, p: int) -> TuranDecomposition:
    """Unique split n = modulus(p)*x + y with 0 <= y < modulus(p)."""
    if p < 3 or n < 0:
        raise ValueError("need p >= 3 and n >= 0")
    x, y = divmod(n, modulus(p))
    return TuranDecomposition(p=p, n=n, x=x, y=y)


def base_graph(p: int) -> Graph:
    """The 2p-1 vertex base: K_{2,...,2} on pairs {v_i, u_i} plus apex v0.

    Labels: 0 = v0, 1..p-1 = v_i, p..2p-2 = u_i.
    """
    if p < 3:
        raise ValueError("need p >= 3")
    edges = []
    for i in range(1, p):
        edges.append((0, i))
        for j in range(i + 1, p):
            # all cross-pair edges of the complete multipartite core
            edges.append((i, j))
            edges.append((i, p - 1 + j))
            edges.append((p - 1 + i, j))
            edges.append((p - 1 + i, p - 1 + j))
    return build_graph(2 * p - 1, edges)


@dataclass(frozen=True)
class BlowupSpec:
    """A base graph plus one part size per base vertex."""

    base: Graph
    sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) != self.base.n:
            raise ValueError("one size per base vertex required")
        if any(s < 0 for s in self.sizes):
            raise ValueError("part sizes must be nonnegative")

    @property
    def n(self) -> int:
        return sum(self.sizes)


def blow_up(spec: BlowupSpec) -> tuple[Graph, tuple[VertexSet, ...]]:
    """Materialize a blow-up; returns (graph, part masks per base vertex).

    Each base vertex becomes an independent set; cross-part adjacency copies
    the base edge.  Vertices of one part share a single adjacency mask.
    """
    n = spec.n
    parts = []
    start = 0
    for s in spec.sizes:
        parts.append(((1 << s) - 1) << start)
        start += s
    adj: list[int] = [0] * n
    for b in range(spec.base.n):
        if not parts[b]:
            continue
        row = 0
        for nb in bits(spec.base.adj[b]):
            row |= parts[nb]
        for v in bits(parts[b]):
            adj[v] = row
    return Graph(n, tuple(adj)), tuple(parts)


@dataclass(frozen=True)
class Blowup:
    """A constructed blow-up together with its part map."""

    graph: Graph
    spec: BlowupSpec
    parts: tuple[VertexSet, ...]
    p: int

    @property
    def v_parts(self) -> tuple[VertexSet, ...]:
        """V0, V_1..V_{p-1}: the parts whose internal pairs saturate."""
        return self.parts[: self.p]

    @property
    def u_parts(self) -> tuple[VertexSet, ...]:
        return self.parts[self.p:]


def _h_sizes(p: int, x: int) -> list[int]:
    v0 = 2 * (p - 1) * (p - 2) ** 2 * x
    vi = 4 * (p - 1) ** 2 * (p - 2) * x
    ui = p * (3 * p - 4) * x
    return [v0] + [vi] * (p - 1) + [ui] * (p - 1)


def _balanced_split(total: int, parts: int) -> list[int]:
    """Split `total` into `parts` shares differing by <= 1, larger first."""
    q, rem = divmod(total, parts)
    return [q + 1 if i < rem else q for i in range(parts)]


def h0(p: int, x: int) -> Blowup:
    """The K_{p+1}-free blow-up on modulus(p)*x vertices."""
    if p < 3 or x < 1:
        raise ValueError("need p >= 3 and x >= 1")
    spec = BlowupSpec(base_graph(p), tuple(_h_sizes(p, x)))
    g, parts = blow_up(spec)
    return Blowup(graph=g, spec=spec, parts=parts, p=p)


def _h_variant(p: int, x: int, extra_v0: int, drop_u: int) -> Blowup:
    sizes = _h_sizes(p, x)
    sizes[0] += extra_v0
    drops = _balanced_split(drop_u, p - 1)
    for i, d in enumerate(drops):
        sizes[p + i] -= d
    spec = BlowupSpec(base_graph(p), tuple(sizes))
    g, parts = blow_up(spec)
    return Blowup(graph=g, spec=spec, parts=parts, p=p)


def h1(p: int, x: int, y: int) -> Blowup:
    """Exact-Turán-count construction on modulus(p)*x + y vertices.

    Grows V0 by 2y and deletes a balanced y vertices across the U parts
    (a balanced transversal of the complete multipartite U side, so the
    deleted set induces a Turán graph on y vertices).
    """
    if p < 3 or x < 1 or y < 0:
        raise ValueError("need p >= 3, x >= 1, y >= 0")
    if not p * (p - 1) * (3 * p - 4) * x > y:
        raise ValueError(f"infeasible remainder: need p(p-1)(3p-4)x > y, got {p*(p-1)*(3*p-4)*x} <= {y}")
    return _h_variant(p, x, 2 * y, y)


def h2(p: int, x: int, y: int) -> Blowup:
    """Like h1 with 2y+1 extra V0 vertices and y+1 balanced U deletions.

    Same vertex count as h1(p, x, y) but with a small edge surplus beyond
    the Turán number; see h2_surplus.
    """
    if p < 3 or x < 1 or y < 0:
        raise ValueError("need p >= 3, x >= 1, y >= 0")
    if not p * (p - 1) * (3 * p - 4) * x > y + 1:
        raise ValueError(f"infeasible remainder: need p(p-1)(3p-4)x > y+1, got {p*(p-1)*(3*p-4)*x} <= {y+1}")
    return _h_variant(p, x, 2 * y + 1, y + 1)


def h2_surplus(p: int, x: int, y: int) -> int:
    """e(h2(p,x,y)) - turan_number(n, p), computed exactly.

    Equals (p-2)^3 x + t_{p-1}(y+1) - t_{p-1}(y) where t is the balanced
    multipartite edge count on p-1 parts.
    """
    r = p - 1
    ty1 = turan_number(y + 1, p)
    ty = turan_number(y, p)
    del r
    return (p - 2) ** 3 * x + ty1 - ty


class TrimError(ValueError):
    """Raised when trim_to_target cannot reach the requested edge count."""


def trim_to_target(bu: Blowup, target: int) -> Graph:
    """Remove U-incident edges until exactly `target` edges remain.

    Candidate edges (at least one endpoint in a U part) are scanned in
    lexicographic order; a removal is kept only if the count of
    K_{p+1}-saturating edges is unchanged, which is re-verified after every
    single removal.  Raises TrimError if the scan cannot reach the target.
    """
    from .saturation import count_saturating

    g = bu.graph
    if target > g.m:
        raise TrimError(f"target {target} exceeds edge count {g.m}")
    if target == g.m:
        return g
    u_mask = 0
    for pm in bu.u_parts:
        u_mask |= pm
    baseline = count_saturating(g, bu.p + 1, edges=False).total
    candidates = [(u, v) for (u, v) in g.edges() if (1 << u | 1 << v) & u_mask]
    for u, v in candidates:
        if g.m == target:
            break
        trial = g.without_edge(u, v)
        if count_saturating(trial, bu.p + 1, edges=False).total == baseline:
            g = trial
    if g.m != target:
        raise TrimError(
            f"cannot reach {target} edges: {g.m} remain after scanning removable edges"
        )
    return g


def check_construction_edge_identity(n: int, p: int) -> bool:
    """turan_number(n,p) == (p-2)n^2/(2(p-1)) - turan_defect(n,p), exactly."""
    lhs = Fraction(turan_number(n, p))
    rhs = Fraction((p - 2) * n * n, 2 * (p - 1)) - turan_defect(n, p)
    return lhs == rhs


def is_kp1_free(bu: Blowup) -> bool:
    return not contains_clique(bu.graph, bu.p + 1)
