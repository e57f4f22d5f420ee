"""Solver for the edge version of the packing/covering dichotomy for long
cycles.

For a multigraph ``G`` and integers ``k >= 0``, ``ell >= 2`` the solver
returns either ``k`` edge-disjoint cycles of length at least ``ell`` or a set
``F`` of at most ``k * g_long(k, ell)`` edges such that ``G - F`` has no such
cycle. A cycle of length at least ``ell`` is called long below.

The driver applies reductions until none fits and then packs greedily in a
quotient graph:

* R1 ``ShortLongCycle``: a long cycle of length at most ``g_long(k, ell)``
  is removed and ``k`` drops by one.
* R2 ``LowDegree``: a vertex of degree at most one is deleted.
* R3 ``LeafBlock``: a leaf-block of ``G`` without long cycles is shrunk to
  its cut vertex.
* R4 ``TwoBlocks``: two small adjacent blocks near a ball centre; one of
  them is contracted.

Edge ids survive every step, so certificates computed for reduced graphs
refer to edges of the input.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Union

from .blocks import blocks
from .certificates import Certificate
from .cycles import bounded_long_cycle, find_long_cycle
from .decomposition import BallDecomposition, ball_partition, pre_leaf_analysis, separated_set
from .errors import InvariantViolation, PreconditionError, TheoremGap
from .flow import max_edge_disjoint_paths
from .graph import (
    ContractionMap,
    Cycle,
    Multigraph,
    Path,
    bfs_distances,
    contract_partition,
    contract_vertex_set,
    validate_cycle,
)
from .packing import greedy_long_cycle_packing, greedy_shortest_cycles

DEFAULT_EXACT_CHECK_EDGES = 64


def g_long(k: int, ell: int) -> int:
    """``8 (ell-1) (ceil(log2(k ell)) + 1)`` for ``k >= 1``; ``0`` for ``k = 0``."""
    if ell < 2:
        raise PreconditionError("ell must be at least 2")
    if k < 0:
        raise PreconditionError("k must be non-negative")
    if k == 0:
        return 0
    return 8 * (ell - 1) * ((k * ell - 1).bit_length() + 1)


def bound_long(k: int, ell: int) -> int:
    return k * g_long(k, ell)


@dataclass(frozen=True)
class ShortLongCycle:
    cycle: Cycle
    tag = "R1"


@dataclass(frozen=True)
class LowDegree:
    vertex: int
    tag = "R2"


@dataclass(frozen=True)
class LeafBlock:
    edges: frozenset[int]
    vertices: frozenset[int]
    cut_vertex: int | None
    tag = "R3"

    def removed_vertices(self) -> list[int]:
        keep = self.cut_vertex if self.cut_vertex is not None else min(self.vertices)
        return sorted(self.vertices - {keep})


@dataclass(frozen=True)
class TwoBlocks:
    """Blocks ``T1`` and ``T2`` of ``H(x)`` meeting in ``v``; ``t_i`` is the
    other cut vertex of ``T_i`` and ``p_i`` the number of edge-disjoint
    ``t_i``-``v`` paths inside ``T_i`` (``p1 <= p2``). ``paths2`` realise
    ``p2`` as ``v``-``t2`` paths inside ``T2``."""

    center: int
    t1_edges: frozenset[int]
    t2_edges: frozenset[int]
    t1_vertices: frozenset[int]
    t2_vertices: frozenset[int]
    v: int
    t1: int
    t2: int
    p1: int
    p2: int
    paths2: tuple[Path, ...] = field(repr=False)
    tag = "R4"


Reduction = Union[ShortLongCycle, LowDegree, LeafBlock, TwoBlocks]


def long_ball_decomposition(g: Multigraph, k: int, ell: int) -> tuple[BallDecomposition, int]:
    """Centres pairwise ``g_long/4`` apart and the parts grown around them.

    Returns the decomposition and ``r = g_long/8``. Centres at distance
    exactly ``2r`` have overlapping radius-``r`` balls, so the parts are
    grown from radius ``r - 1``; a vertex equidistant (at distance ``r``)
    from two centres goes to the smaller one.
    """
    gk = g_long(k, ell)
    r = gk // 8
    xs = separated_set(g, gk // 4)
    return ball_partition(g, xs, r - 1), r


def _r4_candidates(g: Multigraph, dec: BallDecomposition, r: int, ell: int):
    for x in dec.centers:
        part = dec.parts[x]
        h = g.induced_subgraph(part)
        if find_long_cycle(h, ell) is not None:
            continue
        bd = blocks(h)
        inner = frozenset(bfs_distances(g, x, limit=r - ell)) if r >= ell else frozenset()
        near = [i for i, vs in enumerate(bd.block_vertices) if vs & inner]
        near_set = set(near)
        for v in sorted(bd.cut_vertices):
            here = [i for i in bd.blocks_at(v) if i in near_set]
            if len(here) != 2 or len(bd.blocks_at(v)) != 2:
                continue
            a, b = here
            around = bd.block_vertices[a] | bd.block_vertices[b]
            if not set(g.neighbors(v)) <= around:
                continue
            if len(bd.cut_vertices_of(a)) != 2 or len(bd.cut_vertices_of(b)) != 2:
                continue
            if not (_sealed(g, bd.blocks[a], bd.block_vertices[a], bd.cut_vertices_of(a))
                    and _sealed(g, bd.blocks[b], bd.block_vertices[b], bd.cut_vertices_of(b))):
                continue
            yield x, v, bd, a, b


def _sealed(g: Multigraph, edges: frozenset[int], vs: frozenset[int], cuts: frozenset[int]) -> bool:
    """True when no vertex of the block other than its cut vertices has an
    edge leaving the block."""
    for u in vs - cuts:
        if any(e not in edges for e in g.incident(u)):
            return False
    return True


def _two_blocks(g: Multigraph, x: int, v: int, bd, a: int, b: int) -> TwoBlocks:
    (ta,) = bd.cut_vertices_of(a) - {v}
    (tb,) = bd.cut_vertices_of(b) - {v}
    pa, _ = max_edge_disjoint_paths(g.edge_subgraph(bd.blocks[a]), ta, v)
    pb, _ = max_edge_disjoint_paths(g.edge_subgraph(bd.blocks[b]), tb, v)
    if pb < pa:
        a, b, ta, tb = b, a, tb, ta
    p1, _ = max_edge_disjoint_paths(g.edge_subgraph(bd.blocks[a]), ta, v)
    p2, paths = max_edge_disjoint_paths(g.edge_subgraph(bd.blocks[b]), v, tb)
    return TwoBlocks(
        center=x,
        t1_edges=bd.blocks[a],
        t2_edges=bd.blocks[b],
        t1_vertices=bd.block_vertices[a],
        t2_vertices=bd.block_vertices[b],
        v=v,
        t1=ta,
        t2=tb,
        p1=p1,
        p2=p2,
        paths2=tuple(paths),
    )


def find_reduction(g: Multigraph, k: int, ell: int) -> Reduction | None:
    """First applicable reduction in the order R1, R2, R3, R4.

    An edgeless graph has nothing left to reduce and gives ``None`` even
    when it has isolated vertices.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if g.number_of_edges() == 0:
        return None
    gk = g_long(k, ell)
    c = bounded_long_cycle(g, ell, gk)
    if c is not None:
        return ShortLongCycle(c)
    for v in g.vertices():
        if g.degree(v) <= 1:
            return LowDegree(v)
    bd = blocks(g)
    for i in bd.leaf_blocks():
        if i in bd.loop_blocks:
            continue
        sub = g.edge_subgraph(bd.blocks[i])
        if find_long_cycle(sub, ell) is None:
            cuts = bd.cut_vertices_of(i)
            cut = min(cuts) if cuts else None
            return LeafBlock(bd.blocks[i], bd.block_vertices[i], cut)
    dec, r = long_ball_decomposition(g, k, ell)
    for x, v, bdx, a, b in _r4_candidates(g, dec, r, ell):
        return _two_blocks(g, x, v, bdx, a, b)
    return None


def _attach(c: Cycle, vstar: int, g: Multigraph, t2_vertices: frozenset[int]):
    """Rotate ``c`` to start at ``vstar``; return it together with the
    original ends (inside ``T2``) of its two edges at ``vstar``."""
    i = c.vertices.index(vstar)
    n = len(c)
    vs = tuple(c.vertices[(i + j) % n] for j in range(n))
    es = tuple(c.edges[(i + j) % n] for j in range(n))

    def end_in(e: int) -> int:
        ends = [w for w in g.endpoints(e) if w in t2_vertices]
        if len(ends) != 1:
            raise InvariantViolation(f"edge {e} at the contracted vertex has {len(ends)} ends in T2")
        return ends[0]

    return vs, es, end_in(es[0]), end_in(es[-1])


def sigma_lift(
    cycles: list[Cycle], red: TwoBlocks, g: Multigraph, vstar: int
) -> list[Cycle]:
    """Map a packing of ``G`` with ``T2`` contracted to ``vstar`` back to an
    edge-disjoint packing of ``G``.

    Cycles avoiding ``vstar`` stay. A cycle whose two edges at ``vstar`` end
    at the same vertex of ``T2`` is re-rooted there (for a cycle without an
    edge of ``T1`` that vertex is ``t2``). A cycle arriving at ``v`` through
    ``T1`` and leaving from ``t2`` is closed with its own ``v``-``t2`` path
    inside ``T2``.
    """
    out: list[Cycle] = []
    spare = list(red.paths2)
    through_t1 = 0
    for c in cycles:
        if vstar not in c.vertex_set:
            out.append(c)
            continue
        vs, es, first, last = _attach(c, vstar, g, red.t2_vertices)
        uses_t1 = bool(red.t1_edges & c.edge_set)
        if first == last:
            if not uses_t1 and first != red.t2:
                raise InvariantViolation("cycle through the contracted vertex misses t2")
            lifted = Cycle((first,) + vs[1:], es)
        else:
            if not uses_t1:
                raise InvariantViolation("cycle needs a T2 path but avoids T1")
            through_t1 += 1
            if not spare:
                raise InvariantViolation(
                    f"{through_t1} cycles cross T1 but only {red.p2} paths exist in T2"
                )
            p = spare.pop(0)
            if (p.start, p.end) != (last, first):
                p = p.reversed()
            if (p.start, p.end) != (last, first):
                raise InvariantViolation("T2 path does not join the cycle's attachment points")
            lifted = Cycle((first,) + vs[1:] + p.vertices[:-1], es + p.edges)
        validate_cycle(g, lifted)
        if len(lifted) < len(c):
            raise InvariantViolation("lifted cycle is shorter than its image")
        out.append(lifted)
    if through_t1 > red.p1 or red.p1 > red.p2:
        raise InvariantViolation(
            f"{through_t1} cycles cross T1 with p1={red.p1}, p2={red.p2}"
        )
    _check_edge_disjoint(out)
    return out


def lift_ball_packing(
    cycles: list[Cycle], dec: BallDecomposition, cmap: ContractionMap
) -> list[Cycle]:
    """Expand vertex-disjoint cycles of the quotient into cycles of ``G``.

    Every visit of a part is replaced by a shortest path inside that part
    between the two cycle edges meeting there.
    """
    seen: set[int] = set()
    for c in cycles:
        if seen & c.vertex_set:
            raise PreconditionError("quotient cycles must be vertex-disjoint")
        seen |= c.vertex_set
    out = []
    for c in cycles:
        lifted = cmap.lift_cycle(c)
        if len(lifted) < len(c):
            raise InvariantViolation("lifted cycle is shorter than its image")
        out.append(lifted)
    _check_edge_disjoint(out)
    return out


def _check_edge_disjoint(cycles: list[Cycle]) -> None:
    used: set[int] = set()
    for c in cycles:
        if used & c.edge_set:
            raise InvariantViolation("lifted cycles share an edge")
        used |= c.edge_set


def _ball_packing(g: Multigraph, k: int, ell: int) -> tuple[list[Cycle], list[str]]:
    """Terminal step on a fully reduced graph.

    Checks the structural facts the packing relies on, part by part, and
    then packs vertex-disjoint long cycles in the quotient obtained by
    contracting every part.
    """
    gk = g_long(k, ell)
    dec, r = long_ball_decomposition(g, k, ell)
    need = k * ell - 1
    block_diam = max(1, (ell - 1) // 2)
    owner = dec.assignment
    log = [f"ball decomposition: {len(dec.centers)} parts, r={r}"]

    def gap(msg: str, **extra) -> TheoremGap:
        return TheoremGap(msg, {"k": k, "ell": ell, "g": gk, "r": r, **extra})

    c = bounded_long_cycle(g, ell, gk)
    if c is not None:
        raise gap("reduced graph still has a long cycle of length at most g", cycle=list(c.edges))
    for x in dec.centers:
        part = dec.parts[x]
        h = g.induced_subgraph(part)
        dist = bfs_distances(h, x)
        far = max(dist.values())
        if 4 * far >= gk:
            raise gap("part reaches distance g/4 from its centre", center=x, radius=far)
        if find_long_cycle(h, ell) is not None:
            raise gap("part contains a long cycle", center=x)
        for vs in blocks(h).block_vertices:
            for u in vs:
                du = bfs_distances(h.induced_subgraph(vs), u)
                if max(du.values()) > block_diam:
                    raise gap("block of a part has large diameter", center=x, vertex=u)
        rep = pre_leaf_analysis(g, dec, x, ell, inner=r - ell)
        if rep.orphan_pre_leaves or rep.ambiguous_leaf_blocks:
            raise gap(
                "pre-leaf structure differs from the expected one",
                center=x,
                orphans=rep.orphan_pre_leaves,
                ambiguous=rep.ambiguous_leaf_blocks,
            )
        bd = rep.decomposition
        for p in rep.pre_leaves:
            for u in bd.block_vertices[p]:
                if any(owner[w] != x for w in g.neighbors(u)):
                    raise gap("pre-leaf vertex has a neighbour in another part", center=x, vertex=u)
        if len(rep.pre_leaves) < need:
            raise gap(
                "too few pre-leaves",
                center=x,
                pre_leaves=len(rep.pre_leaves),
                tree_leaves=len(rep.tree_leaves()),
                required=need,
            )
        joined: dict[int, set[int]] = {}
        for lb in rep.leaf_blocks:
            ys = {owner[w] for u in bd.block_vertices[lb] for w in g.neighbors(u)} - {x}
            if not ys:
                raise gap("leaf-block of a part has no edge to another part", center=x, block=lb)
            if lb in rep.leaf_to_pre_leaf:
                for y in ys:
                    joined.setdefault(y, set()).add(rep.leaf_to_pre_leaf[lb])
        crowded = [y for y, pl in joined.items() if len(pl) > 1]
        if crowded:
            raise gap(
                "leaf-blocks with distinct pre-leaves reach the same part", center=x, part=crowded[0]
            )
        if len(joined) < need:
            raise gap("part is adjacent to too few parts", center=x, adjacent=len(joined))
        log.append(f"part {x}: {len(rep.pre_leaves)} pre-leaves, {len(joined)} neighbouring parts")

    quotient, cmap = contract_partition(g, dec.part_list(), simple=True)
    qd = quotient.min_degree()
    if qd is None or qd < need:
        raise gap("quotient minimum degree below k*ell-1", min_degree=qd)
    if ell >= 3:
        packed = greedy_long_cycle_packing(quotient, k, ell)
    else:
        packed = greedy_shortest_cycles(quotient, k)
        if len(packed) < k:
            raise gap("greedy found too few cycles in the quotient", found=len(packed))
    log.append(f"quotient packing of {len(packed)} cycles")
    return lift_ball_packing(packed, dec, cmap), log


def solve_long(
    g: Multigraph, k: int, ell: int, *, exact_check_edges: int | None = None
) -> Certificate:
    """Packing of ``k`` edge-disjoint long cycles or a small hitting set.

    ``exact_check_edges`` caps the size of graphs on which the driver runs an
    exhaustive long-cycle test as a shortcut to an empty hitting set
    (default from ``EPKIT_BUDGET_EDGES`` or 64).
    """
    if ell < 2:
        raise PreconditionError("ell must be at least 2")
    if k < 0:
        raise PreconditionError("k must be non-negative")
    if exact_check_edges is None:
        exact_check_edges = int(os.environ.get("EPKIT_BUDGET_EDGES", DEFAULT_EXACT_CHECK_EDGES))

    h = g.without_loops()
    log: list[str] = []
    if h.number_of_edges() != g.number_of_edges():
        log.append(f"discard {g.number_of_edges() - h.number_of_edges()} loops")
    steps: list[tuple] = []
    kk = k
    try:
        while True:
            if kk == 0:
                cert = Certificate("packing", 0, ell, 0)
                break
            if h.number_of_edges() == 0 or (
                h.number_of_edges() <= exact_check_edges and find_long_cycle(h, ell) is None
            ):
                cert = Certificate("hitting", kk, ell, bound_long(kk, ell))
                log.append("no long cycle left")
                break
            red = find_reduction(h, kk, ell)
            if red is None:
                cycles, extra = _ball_packing(h, kk, ell)
                log.extend(extra)
                cert = Certificate("packing", kk, ell, bound_long(kk, ell), cycles=cycles)
                break
            log.append(_describe(red))
            if isinstance(red, ShortLongCycle):
                steps.append((red, kk, None, None))
                h = h.without_edges(red.cycle.edges)
                kk -= 1
            elif isinstance(red, LowDegree):
                h = h.without_vertices([red.vertex])
            elif isinstance(red, LeafBlock):
                h = h.without_vertices(red.removed_vertices())
            else:
                contracted, cmap = contract_vertex_set(h, red.t2_vertices)
                (vstar,) = [u for u, part in cmap.vertex_map.items() if len(part) > 1]
                steps.append((red, kk, h, vstar))
                h = contracted
    except TheoremGap as exc:
        exc.diagnostic.setdefault("provenance", list(log))
        raise

    for red, kk, before, vstar in reversed(steps):
        if isinstance(red, ShortLongCycle):
            c = red.cycle
            if cert.is_packing:
                cert.cycles.append(c)
            else:
                cert.hitting = cert.hitting | c.edge_set
                if len(cert.hitting) > bound_long(kk, ell):
                    raise InvariantViolation("hitting set exceeds k*g(k, ell) after combining")
        elif cert.is_packing:
            cert.cycles = sigma_lift(cert.cycles, red, before, vstar)
    cert.k, cert.bound = k, bound_long(k, ell)
    cert.provenance = log
    if cert.is_packing:
        if len(cert.cycles) != k:
            raise InvariantViolation(f"packing has {len(cert.cycles)} cycles, expected {k}")
        cert.cycles = sorted((c.canonical() for c in cert.cycles), key=Cycle.edge_key)
        for c in cert.cycles:
            validate_cycle(g, c)
        _check_edge_disjoint(cert.cycles)
    elif len(cert.hitting) > cert.bound:
        raise InvariantViolation("hitting set exceeds the bound")
    return cert


def _describe(red: Reduction) -> str:
    if isinstance(red, ShortLongCycle):
        return f"R1 short long cycle {list(red.cycle.edge_key())}"
    if isinstance(red, LowDegree):
        return f"R2 delete vertex {red.vertex}"
    if isinstance(red, LeafBlock):
        return f"R3 shrink leaf-block {sorted(red.edges)} to {red.cut_vertex}"
    return (
        f"R4 contract block {sorted(red.t2_edges)} at centre {red.center}"
        f" (v={red.v}, p1={red.p1}, p2={red.p2})"
    )
