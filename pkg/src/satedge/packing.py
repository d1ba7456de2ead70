"""Exact maximum vertex-disjoint clique packings and their local analysis.

A packing is a family of pairwise disjoint p-cliques; the remainder is the
rest of the host.  Beyond maximum cardinality, the machinery here supports
the remainder-edge refinement (switch a packed clique with an equal-size
clique outside and keep only strict remainder-edge gains), the neighbor-count
partition Z_j of the remainder relative to one packed clique, the attachment
sets A_i, and the split of saturating edges into packed-touching and
remainder-internal parts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graph import (
    Graph,
    VertexSet,
    bits,
    common_neighborhood,
    edges_between,
    find_clique,
    induced_edges,
    mask_of,
)
from .constructions import turan_defect, turan_number
from .formulas import attachment_fraction_bound, best_clique_edge_bound
from .saturation import CliquePresentError, count_saturating

DEFAULT_PACKING_BUDGET = 5_000_000


class BudgetExceededError(RuntimeError):
    """The exact search hit its node budget before certifying a result."""


@dataclass(frozen=True)
class CliquePacking:
    host: Graph
    p: int
    cliques: tuple[tuple[int, ...], ...]
    remainder: VertexSet
    certified: bool

    @property
    def size(self) -> int:
        return len(self.cliques)

    @property
    def packed_mask(self) -> VertexSet:
        return self.host.vertices_mask() & ~self.remainder

    @property
    def density(self) -> Fraction:
        """r = |packing| / n."""
        return Fraction(len(self.cliques), self.host.n)

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "cliques": [list(c) for c in self.cliques],
                "remainder": sorted(bits(self.remainder)),
                "certified": self.certified,
            }
        )


def make_packing(host: Graph, p: int, cliques: Iterable[Iterable[int]], certified: bool = False) -> CliquePacking:
    """Validate and normalize a packing: disjointness, cliqueness, remainder."""
    if p < 2:
        raise ValueError("need p >= 2")
    normalized = sorted(tuple(sorted(c)) for c in cliques)
    used = 0
    for c in normalized:
        if len(c) != p or len(set(c)) != p:
            raise ValueError(f"{c} is not a set of {p} vertices")
        cm = mask_of(c)
        if cm & used:
            raise ValueError(f"clique {c} overlaps another packed clique")
        if cm & ~host.vertices_mask():
            raise ValueError(f"clique {c} leaves the vertex range")
        for u, v in combinations(c, 2):
            if not host.has_edge(u, v):
                raise ValueError(f"{c} is not a clique: missing edge {u}-{v}")
        used |= cm
    return CliquePacking(
        host=host,
        p=p,
        cliques=tuple(normalized),
        remainder=host.vertices_mask() & ~used,
        certified=certified,
    )


def packing_from_json(host: Graph, text: str) -> CliquePacking:
    data = json.loads(text)
    packing = make_packing(host, data["p"], data["cliques"], bool(data.get("certified", False)))
    if "remainder" in data and mask_of(data["remainder"]) != packing.remainder:
        raise ValueError("remainder field disagrees with the clique list")
    return packing


def _cliques_within(g: Graph, mask: VertexSet, k: int) -> Iterator[tuple[int, ...]]:
    """All k-cliques inside `mask`, sorted tuples in lexicographic order."""
    adj = g.adj

    def rec(prefix: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        need = k - len(prefix)
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

    yield from rec((), mask)


class _PackSearch:
    """Two-phase exact search: optimal size, then the least witness."""

    def __init__(self, g: Graph, p: int, budget: int):
        self.g = g
        self.p = p
        self.budget = budget
        self.nodes = 0
        self.best = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"packing search exceeded {self.budget} nodes on n={self.g.n}"
            )

    def _cliques_through_lowest(self, pool: VertexSet) -> Iterator[tuple[int, ...]]:
        # pool's lowest vertex is the branch vertex; all other members are above it
        low = pool & -pool
        v = low.bit_length() - 1
        for rest in _cliques_within(self.g, pool & self.g.adj[v], self.p - 1):
            yield (v,) + rest

    def _cliques_at(self, v: int, live: VertexSet, cap: int = 512) -> int:
        count = 0
        for _ in _cliques_within(self.g, live & self.g.adj[v], self.p - 1):
            count += 1
            if count >= cap:
                break
        return count

    def upper_bound(self, pool: VertexSet, cutoff: int) -> int:
        """An upper bound on the packing size inside `pool`, at most cutoff+1.

        Greedily deletes the vertex lying on the most p-cliques until none
        remain.  Disjoint cliques must contain distinct deleted vertices, so
        the number of deletions bounds any packing.  Gives up (returning
        cutoff + 1) once the bound can no longer prune.
        """
        g = self.g
        live = pool
        hits = 0
        while hits <= cutoff:
            self._tick()
            if next(_cliques_within(g, live, self.p), None) is None:
                return hits
            best_v, best_c = -1, -1
            for v in bits(live):
                c = self._cliques_at(v, live)
                if c > best_c:
                    best_c, best_v = c, v
            live ^= 1 << best_v
            hits += 1
        return cutoff + 1

    def greedy(self) -> list[tuple[int, ...]]:
        pool = self.g.vertices_mask()
        out: list[tuple[int, ...]] = []
        while pool.bit_count() >= self.p:
            c = next(self._cliques_through_lowest(pool), None)
            if c is None:
                pool ^= pool & -pool
            else:
                out.append(c)
                pool &= ~mask_of(c)
        return out

    def max_size(self, pool: VertexSet, current: int):
        self._tick()
        if current > self.best:
            self.best = current
        room = self.best - current
        if pool.bit_count() // self.p <= room:
            return
        if self.upper_bound(pool, room) <= room:
            return
        for c in self._cliques_through_lowest(pool):
            self.max_size(pool & ~mask_of(c), current + 1)
        self.max_size(pool ^ (pool & -pool), current)

    def witness(self, pool: VertexSet, acc: list[tuple[int, ...]], target: int) -> Optional[list[tuple[int, ...]]]:
        self._tick()
        if len(acc) == target:
            return acc
        need = target - len(acc)
        if pool.bit_count() // self.p < need:
            return None
        if self.upper_bound(pool, need - 1) < need:
            return None
        for c in self._cliques_through_lowest(pool):
            acc.append(c)
            got = self.witness(pool & ~mask_of(c), acc, target)
            if got is not None:
                return got
            acc.pop()
        return self.witness(pool ^ (pool & -pool), acc, target)


def max_packing(g: Graph, p: int, budget: int = DEFAULT_PACKING_BUDGET) -> CliquePacking:
    """A maximum packing of p-cliques, exact and certified.

    The witness is the lexicographically least optimum (cliques as sorted
    tuples, the family sorted).  Raises BudgetExceededError instead of ever
    returning an uncertified answer.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    search = _PackSearch(g, p, budget)
    seed = search.greedy()
    search.best = len(seed)
    search.max_size(g.vertices_mask(), 0)
    if search.best == 0:
        return make_packing(g, p, [], certified=True)
    found = search.witness(g.vertices_mask(), [], search.best)
    assert found is not None
    return make_packing(g, p, found, certified=True)


def switch(packing: CliquePacking, index: int, c_out: Iterable[int], c_in: Iterable[int]) -> CliquePacking:
    """Replace part of one packed clique with an equal-size outside clique.

    The clique at `index` loses the subset c_out and gains c_in, which must
    lie entirely in the remainder; the result must again be a p-clique.
    """
    g = packing.host
    r_old = packing.cliques[index]
    out_set = tuple(sorted(set(c_out)))
    in_set = tuple(sorted(set(c_in)))
    if len(out_set) != len(in_set):
        raise ValueError("switched sets must have equal size")
    if not set(out_set) <= set(r_old):
        raise ValueError(f"{out_set} is not a subset of the packed clique {r_old}")
    if mask_of(in_set) & ~packing.remainder:
        raise ValueError(f"{in_set} is not contained in the remainder")
    r_new = tuple(sorted((set(r_old) - set(out_set)) | set(in_set)))
    for u, v in combinations(r_new, 2):
        if not g.has_edge(u, v):
            raise ValueError(f"replacement {r_new} is not a clique: missing edge {u}-{v}")
    cliques = list(packing.cliques)
    cliques[index] = r_new
    return make_packing(g, packing.p, cliques, certified=packing.certified)


def check_switch_inequality(
    packing: CliquePacking, index: int, c_out: Iterable[int], c_in: Iterable[int]
) -> tuple[int, int, bool]:
    """Edge counts (new clique to new remainder, old clique to old remainder).

    Under remainder-edge local maximality the first never drops below the
    second; returns (lhs, rhs, lhs >= rhs).
    """
    g = packing.host
    r_old = packing.cliques[index]
    rhs = edges_between(g, mask_of(r_old), packing.remainder)
    switched = switch(packing, index, c_out, c_in)
    r_new = tuple(sorted((set(r_old) - set(c_out)) | set(c_in)))
    lhs = edges_between(g, mask_of(r_new), switched.remainder)
    return lhs, rhs, lhs >= rhs


def refine_packing(packing: CliquePacking) -> CliquePacking:
    """Drive the packing to a local maximum of remainder edges.

    Scans switches in a fixed order (clique index, swapped-out subset size
    and members, swapped-in clique, all lexicographic) and applies the first
    one that strictly increases remainder edges, restarting until none
    applies.  Size never changes; remainder edges never decrease.
    """
    g = packing.host
    p = packing.p
    current = packing
    improved = True
    while improved:
        improved = False
        h_mask = current.remainder
        h_edges = induced_edges(g, h_mask)
        for index, r_old in enumerate(current.cliques):
            for c_size in range(1, p + 1):
                for c_out in combinations(r_old, c_size):
                    kept = set(r_old) - set(c_out)
                    if kept:
                        cand = common_neighborhood(g, mask_of(kept)) & h_mask
                    else:
                        cand = h_mask
                    out_mask = mask_of(c_out)
                    for c_in in _cliques_within(g, cand, c_size):
                        new_h = (h_mask & ~mask_of(c_in)) | out_mask
                        if induced_edges(g, new_h) > h_edges:
                            current = switch(current, index, c_out, c_in)
                            improved = True
                            break
                    if improved:
                        break
                if improved:
                    break
            if improved:
                break
    return current


@dataclass(frozen=True)
class PackingAnalysis:
    """Remainder structure relative to one packed clique."""

    clique: tuple[int, ...]
    Z: tuple[VertexSet, ...]
    z: tuple[Fraction, ...]
    A: tuple[VertexSet, ...]
    r: Fraction
    ell1: int
    ell2: int


def ell_split(packing: CliquePacking) -> tuple[int, int]:
    """Saturating edges split: (touching packed vertices, inside remainder).

    Counts (p+1)-clique-saturating edges of the host, so the host must be
    K_{p+1}-free; the two parts always sum to the full count.
    """
    g = packing.host
    report = count_saturating(g, packing.p + 1, edges=True)
    packed = packing.packed_mask
    ell1 = sum(1 for u, v in report.edges if (1 << u | 1 << v) & packed)
    return ell1, report.total - ell1


def analyze(packing: CliquePacking, index: int) -> PackingAnalysis:
    """Partition the remainder by neighbor count into the indexed clique.

    Z_j holds remainder vertices with exactly j neighbors in the clique
    (Z_p empty by K_{p+1}-freeness); A_i is the common neighborhood of the
    clique minus its i-th vertex.  Verifies the exact identities
    sum z_j = 1 - p r and sum |A_i|/n = z_{p-1}, that the A_i are disjoint
    independent subsets of Z_{p-1}, and that every pair inside an A_i is a
    saturating edge.
    """
    g = packing.host
    p = packing.p
    n = g.n
    witness = find_clique(g, p + 1)
    if witness is not None:
        raise CliquePresentError(f"host contains a {p + 1}-clique {witness}")
    clique = packing.cliques[index]
    r_mask = mask_of(clique)
    z_masks = [0] * (p + 1)
    for v in bits(packing.remainder):
        z_masks[(g.adj[v] & r_mask).bit_count()] |= 1 << v
    assert z_masks[p] == 0
    z = tuple(Fraction(m.bit_count(), n) for m in z_masks)
    r = packing.density
    assert sum(z[:p]) == 1 - p * r

    a_masks = []
    for i in range(p):
        rest = r_mask ^ (1 << clique[i])
        a_masks.append(common_neighborhood(g, rest) & packing.remainder)
    seen = 0
    for a in a_masks:
        assert a & seen == 0
        assert a & ~z_masks[p - 1] == 0
        assert induced_edges(g, a) == 0
        seen |= a
    assert sum(Fraction(a.bit_count(), n) for a in a_masks) == z[p - 1]
    from .saturation import is_saturating

    for a in a_masks:
        members = list(bits(a))
        for u, v in combinations(members, 2):
            assert is_saturating(g, p + 1, u, v)

    ell1, ell2 = ell_split(packing)
    return PackingAnalysis(
        clique=clique,
        Z=tuple(z_masks),
        z=z,
        A=tuple(a_masks),
        r=r,
        ell1=ell1,
        ell2=ell2,
    )


def best_r_star(packing: CliquePacking) -> tuple[int, int]:
    """The packed clique with the most edges to the remainder.

    Requires a certified maximum packing on a host with exactly the
    extremal K_p-free edge count; under that hypothesis the returned count
    meets best_clique_edge_bound and the clique's attachment fraction meets
    attachment_fraction_bound, both verified here in exact arithmetic.
    Ties resolve to the lowest index.
    """
    g = packing.host
    p = packing.p
    n = g.n
    if not packing.certified:
        raise ValueError("packing must be a certified maximum")
    if not packing.cliques:
        raise ValueError("empty packing: no clique to select")
    if g.m != turan_number(n, p):
        raise ValueError(
            f"host has {g.m} edges; the bound needs exactly turan_number({n},{p}) = {turan_number(n, p)}"
        )
    values = [edges_between(g, mask_of(c), packing.remainder) for c in packing.cliques]
    best_index = max(range(len(values)), key=lambda i: (values[i], -i))
    best_value = values[best_index]

    delta = turan_defect(n, p)
    r = packing.density
    assert best_value >= best_clique_edge_bound(n, p, r, delta)
    clique_mask = mask_of(packing.cliques[best_index])
    z_top = 0
    for v in bits(packing.remainder):
        if (g.adj[v] & clique_mask).bit_count() == p - 1:
            z_top += 1
    assert Fraction(z_top, n) >= attachment_fraction_bound(n, p, r, delta)
    return best_index, best_value


def _best_remainder_walk(g: Graph, p: int, budget: int) -> tuple[int, int, tuple[tuple[int, ...], ...]]:
    """Visit every maximum packing; return (size, best remainder edges, witness).

    The witness is the first packing attaining the best remainder-edge count
    in a fixed depth-first scan (cliques through the lowest pooled vertex in
    lexicographic order, then the vertex-exclusion branch).  Exponential in
    general; intended for hosts of a dozen-odd vertices.
    """
    search = _PackSearch(g, p, budget)
    search.best = len(search.greedy())
    search.max_size(g.vertices_mask(), 0)
    target = search.best
    full = g.vertices_mask()
    if target == 0:
        return 0, g.m, ()
    best_edges = -1
    best_family: tuple[tuple[int, ...], ...] = ()
    acc: list[tuple[int, ...]] = []
    nodes = [0]

    def walk(pool: VertexSet, packed: VertexSet, size: int):
        nonlocal best_edges, best_family
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceededError(f"certification exceeded {budget} nodes")
        if size == target:
            e = induced_edges(g, full & ~packed)
            if e > best_edges:
                best_edges = e
                best_family = tuple(sorted(acc))
            return
        need = target - size
        if pool.bit_count() // p < need:
            return
        if search.upper_bound(pool, need - 1) < need:
            return
        low = pool & -pool
        v = low.bit_length() - 1
        for rest in _cliques_within(g, pool & g.adj[v], p - 1):
            cm = mask_of(rest) | low
            acc.append((v,) + rest)
            walk(pool & ~cm, packed | cm, size + 1)
            acc.pop()
        walk(pool ^ low, packed, size)

    walk(full, 0, 0)
    return target, best_edges, best_family


def max_remainder_packing(g: Graph, p: int, budget: int = DEFAULT_PACKING_BUDGET) -> CliquePacking:
    """A maximum packing whose remainder-edge count is the global maximum.

    Exhausts every maximum packing, so the returned packing satisfies the
    strong form of the remainder condition, not just switch-stability.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    _, _, family = _best_remainder_walk(g, p, budget)
    return make_packing(g, p, family, certified=True)


def certify_remainder_maximal(packing: CliquePacking, budget: int = DEFAULT_PACKING_BUDGET) -> tuple[bool, int]:
    """Exhaustively compare remainder edges across ALL maximum packings.

    Returns (is_globally_maximal, best_remainder_edges).  Exponential in
    general; intended for hosts of a dozen-odd vertices.
    """
    g = packing.host
    target, best_edges, _ = _best_remainder_walk(g, packing.p, budget)
    if target != packing.size:
        raise ValueError(f"packing has size {packing.size}, maximum is {target}")
    mine = induced_edges(g, packing.remainder)
    return mine == best_edges, best_edges
