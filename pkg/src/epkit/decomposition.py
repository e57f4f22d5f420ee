"""Ball decompositions, the high-girth ball minor and the pre-leaf analysis."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .blocks import BlockDecomposition, blocks
from .cycles import find_long_cycle, girth
from .errors import InvariantViolation, PreconditionError, TheoremGap
from .graph import (
    ContractionMap,
    Multigraph,
    bfs_distances,
    contract_partition,
    is_connected_set,
    multi_source_distances,
    shortest_path,
)


@dataclass(frozen=True)
class BallDecomposition:
    """A partition of ``V(G)`` into connected parts grown around centres.

    ``parts[x]`` is the vertex set of ``H(x)``; ``assignment`` maps each
    vertex to its centre and ``distance`` to its hop distance from that
    centre in ``G``.
    """

    centers: tuple[int, ...]
    radius: int
    assignment: dict[int, int]
    parts: dict[int, frozenset[int]]
    distance: dict[int, int]

    def part(self, x: int) -> frozenset[int]:
        return self.parts[x]

    def part_list(self) -> list[frozenset[int]]:
        return [self.parts[x] for x in self.centers]


def separated_set(g: Multigraph, d: int) -> list[int]:
    """Greedy maximal set of vertices pairwise at distance ``>= d``.

    Vertices are scanned in ascending id order; each chosen vertex blocks
    everything within distance ``d - 1``.
    """
    if d < 1:
        raise PreconditionError("separation must be at least 1")
    chosen: list[int] = []
    blocked: set[int] = set()
    for v in g.vertices():
        if v in blocked:
            continue
        chosen.append(v)
        blocked.update(bfs_distances(g, v, limit=d - 1))
    return chosen


def ball_partition(g: Multigraph, centers: list[int] | tuple[int, ...], r: int) -> BallDecomposition:
    """Grow the disjoint balls ``B_r(x)`` layer by layer into a partition.

    A vertex at distance ``r + i`` from the centre set joins the part of a
    neighbour at distance ``r + i - 1``; among several, the part with the
    smallest centre id wins, then the smallest neighbour id.
    """
    if r < 0:
        raise PreconditionError("radius must be non-negative")
    xs = tuple(centers)
    if len(set(xs)) != len(xs):
        raise PreconditionError("centres must be distinct")
    for x in xs:
        if x not in g:
            raise PreconditionError(f"centre {x} not in graph")
    cset = set(xs)
    assignment: dict[int, int] = {}
    for x in xs:
        ball = bfs_distances(g, x, limit=2 * r)
        clash = [y for y in ball if y in cset and y != x]
        if clash:
            raise PreconditionError(
                f"centres {x} and {clash[0]} are closer than {2 * r + 1}; balls overlap"
            )
        for v, dv in ball.items():
            if dv <= r:
                assignment[v] = x
    layer = multi_source_distances(g, xs)
    missing = [v for v in g.vertices() if v not in layer]
    if missing:
        raise PreconditionError(f"vertices {missing[:5]} are not reachable from any centre")
    order = sorted((d, v) for v, d in layer.items() if d > r)
    for d, v in order:
        best = None
        for w in g.neighbors(v):
            if layer[w] == d - 1:
                cand = (assignment[w], w)
                if best is None or cand < best:
                    best = cand
        assert best is not None
        assignment[v] = best[0]
    members: dict[int, set[int]] = {x: set() for x in xs}
    for v, x in assignment.items():
        members[x].add(v)
    parts = {x: frozenset(vs) for x, vs in members.items()}
    distance: dict[int, int] = {}
    for x in xs:
        dist = bfs_distances(g, x)
        for v in parts[x]:
            distance[v] = dist[v]
        if not is_connected_set(g, parts[x]):
            raise InvariantViolation(f"part of centre {x} is not connected")
    return BallDecomposition(xs, r, assignment, parts, distance)


def ko_minor(g: Multigraph, m: int) -> tuple[Multigraph, ContractionMap]:
    """Contract the grown balls of radius ``m`` into single vertices.

    The returned minor is simple. When ``g`` is simple with minimum degree
    ``d >= 3`` and girth at least ``8m + 3`` the degree guarantee
    ``d (d-1)^m`` is checked together with the structural facts it rests on;
    a failure raises :class:`TheoremGap`.
    """
    if m < 0:
        raise PreconditionError("m must be non-negative")
    if m == 0:
        return contract_partition(g, [], loop_policy="keep")
    xs = separated_set(g, 2 * m + 1)
    dec = ball_partition(g, xs, m)
    minor, cmap = contract_partition(g, dec.part_list(), simple=True)

    d = g.min_degree()
    if d is None or d < 3 or not g.is_simple():
        return minor, cmap
    gi = girth(g)
    if gi is not None and gi[0] < 8 * m + 3:
        return minor, cmap
    owner = dec.assignment
    between: dict[tuple[int, int], int] = {}
    internal = {x: 0 for x in xs}
    for e in g.edges():
        u, v = g.endpoints(e)
        a, b = owner[u], owner[v]
        if a == b:
            internal[a] += 1
        else:
            key = (min(a, b), max(a, b))
            between[key] = between.get(key, 0) + 1
    for x in xs:
        if internal[x] != len(dec.parts[x]) - 1:
            raise TheoremGap("grown ball is not an induced tree", {"center": x})
    multi = [key for key, c in between.items() if c > 1]
    if multi:
        raise TheoremGap("two trees joined by more than one edge", {"pair": multi[0]})
    want = d * (d - 1) ** m
    got = minor.min_degree()
    if got is not None and got < want:
        raise TheoremGap(
            "minor degree below the guaranteed bound", {"min_degree": got, "bound": want}
        )
    return minor, cmap


@dataclass
class PreLeafReport:
    """Block structure of one part ``H(x)`` near its centre.

    Blocks are indices into ``decomposition``. ``star_blocks`` are the
    blocks of ``H(x)`` meeting the inner ball ``B_{r-ell}(x)``;
    ``pre_leaves`` are the leaf-blocks among them. ``leaf_to_pre_leaf``
    maps each leaf-block of ``H(x)`` to the unique pre-leaf among its
    ancestor-blocks, when there is one.
    """

    center: int
    subgraph: Multigraph
    decomposition: BlockDecomposition
    inner_ball: frozenset[int]
    star_blocks: list[int]
    pre_leaves: list[int]
    tree: dict[int, list[int]]
    root: int | None
    ancestors: dict[int, frozenset[int]]
    leaf_blocks: list[int]
    leaf_to_pre_leaf: dict[int, int] = field(default_factory=dict)
    orphan_pre_leaves: list[int] = field(default_factory=list)
    ambiguous_leaf_blocks: list[int] = field(default_factory=list)

    def tree_leaves(self) -> list[int]:
        return [b for b, nb in self.tree.items() if len(nb) <= 1]


def _ancestor_blocks(
    h: Multigraph, bd: BlockDecomposition, i: int, dist_x: dict[int, int], x: int
) -> frozenset[int]:
    """Blocks other than ``i`` met by a shortest path from ``V(block i)`` to
    ``x``; checks that every such shortest path meets the same blocks."""
    vs = bd.block_vertices[i]
    dmin = min(dist_x[v] for v in vs)
    if dmin == 0:
        return frozenset()
    ends = sorted(v for v in vs if dist_x[v] == dmin)
    path = shortest_path(h, x, ends[0])
    assert path is not None
    bof = bd.block_of_edge
    canonical = frozenset(bof[e] for e in path.edges) - {i}

    # every edge on some shortest x -> ends path
    union: set[int] = set()
    seen = set(ends)
    queue = deque(ends)
    while queue:
        u = queue.popleft()
        for e, w in h.incidence(u).items():
            if dist_x.get(w) == dist_x[u] - 1:
                union.add(bof[e])
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    if frozenset(union) - {i} != canonical:
        raise InvariantViolation(
            f"shortest paths from block {i} to the centre meet different blocks"
        )
    return canonical


def pre_leaf_analysis(
    g: Multigraph, dec: BallDecomposition, x: int, ell: int, *, inner: int | None = None
) -> PreLeafReport:
    """Blocks of ``H(x)``, the inner-ball blocks and their leaf-blocks.

    ``inner`` is the radius of the inner ball and defaults to
    ``dec.radius - ell``.
    """
    if x not in dec.parts:
        raise PreconditionError(f"{x} is not a centre of the decomposition")
    h = g.induced_subgraph(dec.parts[x]).without_loops()
    long_cycle = find_long_cycle(h, ell)
    if long_cycle is not None:
        raise InvariantViolation(f"part of centre {x} contains a long cycle {long_cycle}")
    bd = blocks(h)
    if inner is None:
        inner = dec.radius - ell
    ball = frozenset(bfs_distances(g, x, limit=inner)) if inner >= 0 else frozenset()
    star = [i for i, vs in enumerate(bd.block_vertices) if vs & ball]
    star_set = set(star)
    count: dict[int, int] = {}
    for i in star:
        for v in bd.block_vertices[i]:
            count[v] = count.get(v, 0) + 1
    star_cuts = {v for v, c in count.items() if c >= 2}
    pre_leaves = [i for i in star if len(bd.block_vertices[i] & star_cuts) <= 1]

    dist_x = bfs_distances(h, x)
    ancestors = {i: _ancestor_blocks(h, bd, i, dist_x, x) for i in range(len(bd))}

    tree: dict[int, list[int]] = {i: [] for i in star}
    for a in star:
        for b in star:
            if a < b and bd.block_vertices[a] & bd.block_vertices[b]:
                if a in ancestors[b] or b in ancestors[a]:
                    tree[a].append(b)
                    tree[b].append(a)
    roots = [i for i in star if x in bd.block_vertices[i]]
    root = roots[0] if roots else None

    leaf_blocks = bd.leaf_blocks()
    pre_set = set(pre_leaves)
    report = PreLeafReport(
        center=x,
        subgraph=h,
        decomposition=bd,
        inner_ball=ball,
        star_blocks=star,
        pre_leaves=pre_leaves,
        tree=tree,
        root=root,
        ancestors=ancestors,
        leaf_blocks=leaf_blocks,
    )
    used: set[int] = set()
    for lb in leaf_blocks:
        hits = sorted(ancestors[lb] & pre_set)
        if len(hits) == 1:
            report.leaf_to_pre_leaf[lb] = hits[0]
            used.add(hits[0])
        elif len(hits) > 1:
            report.ambiguous_leaf_blocks.append(lb)
    report.orphan_pre_leaves = [p for p in pre_leaves if p not in used]
    assert star_set >= pre_set
    return report
