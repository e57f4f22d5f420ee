"""Shortest and bounded-length cycle search in multigraphs.

Loops are cycles of length 1 and two parallel edges form a cycle of length 2.
Cycles of length three or more have distinct vertices, so for those the
search runs on the simple view of the graph that keeps, for each adjacent
pair, only the smallest edge id; this yields the lexicographically smallest
edge sequence among equal-length candidates and keeps parallel bundles from
multiplying the search space.

Ties are always broken by :meth:`Cycle.edge_key`.
"""

from __future__ import annotations

from collections import deque

from .blocks import blocks
from .errors import PreconditionError
from .graph import Cycle, Multigraph

# vertex -> [(edge id, neighbour)] ascending by edge id
SimpleView = dict[int, list[tuple[int, int]]]


def simple_view(g: Multigraph) -> SimpleView:
    best: dict[tuple[int, int], int] = {}
    for e in g.edges():
        u, v = g.endpoints(e)
        if u != v and (u, v) not in best:
            best[(u, v)] = e
    view: SimpleView = {v: [] for v in g.vertices()}
    for (u, v), e in best.items():
        view[u].append((e, v))
        view[v].append((e, u))
    for lst in view.values():
        lst.sort()
    return view


def _shortest_loop(g: Multigraph) -> Cycle | None:
    loops = g.loops()
    if not loops:
        return None
    e = loops[0]
    return Cycle((g.endpoints(e)[0],), (e,))


def _shortest_digon(g: Multigraph) -> Cycle | None:
    best = None
    seen: dict[tuple[int, int], int] = {}
    for e in g.edges():
        u, v = g.endpoints(e)
        if u == v:
            continue
        if (u, v) in seen:
            cand = (seen[(u, v)], e)
            if best is None or cand < best[0]:
                best = (cand, u, v)
        else:
            seen[(u, v)] = e
    if best is None:
        return None
    (e0, e1), u, v = best
    return Cycle((u, v), (e0, e1))


def _simple_girth(view: SimpleView, cap: int | None = None) -> int | None:
    """Girth of the simple view by BFS from every vertex."""
    best = None
    for s in view:
        dist = {s: 0}
        parent_edge = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if best is not None and 2 * du + 1 >= best:
                break
            for e, w in view[u]:
                if e == parent_edge[u]:
                    continue
                if w in dist:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
                else:
                    dist[w] = du + 1
                    parent_edge[w] = e
                    queue.append(w)
        if best == 3 or (cap is not None and best is not None and best <= cap):
            break
    return best


class _ExactLengthSearch:
    """Lexicographically smallest cycle of an exact length (>= 3)."""

    def __init__(self, g: Multigraph, view: SimpleView):
        self.g = g
        self.view = view
        bd = blocks(g)
        self.block_of_edge = bd.block_of_edge
        self.block_vertices = bd.block_vertices
        self._dist_cache: dict[tuple[int, int], dict[int, int]] = {}
        self.edges = sorted(
            (e, u, v) for u, lst in view.items() for e, v in lst if u < v
        )

    def max_block_size(self) -> int:
        sizes = [len(self.block_vertices[self.block_of_edge[e]]) for e, _, _ in self.edges]
        return max(sizes, default=0)

    def _dist(self, e0: int, start: int, allowed: frozenset[int]) -> dict[int, int]:
        key = (e0, start)
        d = self._dist_cache.get(key)
        if d is None:
            d = {start: 0}
            queue = deque([start])
            view = self.view
            while queue:
                u = queue.popleft()
                for e, w in view[u]:
                    if e > e0 and w in allowed and w not in d:
                        d[w] = d[u] + 1
                        queue.append(w)
            self._dist_cache[key] = d
        return d

    def find(self, length: int) -> Cycle | None:
        view = self.view
        for e0, a, b in self.edges:
            allowed = self.block_vertices[self.block_of_edge[e0]]
            if len(allowed) < length:
                continue
            cands = []
            for e, w in view[b]:
                if e > e0 and w != a and w in allowed:
                    cands.append((e, a, b, w))
            for e, w in view[a]:
                if e > e0 and w != b and w in allowed:
                    cands.append((e, b, a, w))
            cands.sort()
            for e1, start, first, w in cands:
                dist = self._dist(e0, start, allowed)
                dw = dist.get(w)
                if dw is None or dw > length - 2:
                    continue
                found = self._extend(
                    [start, first, w], [e0, e1], {start, first, w}, e0, e1, length, dist, allowed
                )
                if found is not None:
                    return found
        return None

    def _extend(self, verts, edges, onpath, e0, e1, length, dist, allowed):
        start = verts[0]
        # iterative DFS over (vertex index, position in adjacency list)
        view = self.view
        stack = [0]
        while stack:
            u = verts[-1]
            t = len(edges)
            lst = view[u]
            i = stack[-1]
            advanced = False
            while i < len(lst):
                e, w = lst[i]
                i += 1
                if e <= e0:
                    continue
                if t + 1 == length:
                    if w == start and e > e1:
                        return Cycle(tuple(verts), tuple(edges + [e]))
                    continue
                if w in onpath or w not in allowed:
                    continue
                dw = dist.get(w)
                if dw is None or dw > length - t - 1:
                    continue
                stack[-1] = i
                verts.append(w)
                edges.append(e)
                onpath.add(w)
                stack.append(0)
                advanced = True
                break
            if not advanced:
                stack.pop()
                if len(verts) > 3:
                    onpath.discard(verts.pop())
                    edges.pop()
                else:
                    return None
        return None


def girth(g: Multigraph) -> tuple[int, Cycle] | None:
    """Length and a shortest cycle, or ``None`` for forests."""
    c = _shortest_loop(g) or _shortest_digon(g)
    if c is not None:
        return len(c), c
    view = simple_view(g)
    gv = _simple_girth(view)
    if gv is None:
        return None
    c = _ExactLengthSearch(g, view).find(gv)
    assert c is not None
    return gv, c


def bounded_long_cycle(g: Multigraph, ell: int, max_len: int) -> Cycle | None:
    """A shortest cycle with ``ell <= length <= max_len``, if one exists.

    The search is exact: lengths are tried in increasing order and each
    length is settled by exhaustive depth-bounded search (pruned by
    distance-to-start and confined to one block). Worst case is exponential
    in ``max_len``.
    """
    if not 2 <= ell <= max_len:
        raise PreconditionError(f"need 2 <= ell <= max_len, got {ell}, {max_len}")
    if ell <= 2:
        c = _shortest_digon(g)
        if c is not None:
            return c
    view = simple_view(g)
    lo = max(ell, 3)
    if lo > max_len:
        return None
    gv = _simple_girth(view)
    if gv is None:
        return None
    search = _ExactLengthSearch(g, view)
    if gv >= lo:
        return search.find(gv) if gv <= max_len else None
    for length in range(lo, min(max_len, search.max_block_size()) + 1):
        c = search.find(length)
        if c is not None:
            return c
    return None


def find_long_cycle(g: Multigraph, ell: int) -> Cycle | None:
    """Some cycle of length at least ``ell`` (not necessarily shortest)."""
    if ell < 2:
        raise PreconditionError("ell must be at least 2")
    c = _shortest_digon(g)
    if c is not None and ell <= 2:
        return c
    view = simple_view(g)
    gv = _simple_girth(view)
    if gv is None:
        return None
    if gv >= ell:
        return _ExactLengthSearch(g, view).find(gv)
    bd = blocks(g)
    for vs in bd.block_vertices:
        if len(vs) < ell:
            continue
        c = _long_cycle_in_block(view, vs, ell)
        if c is not None:
            return c
    return None


def has_long_cycle(g: Multigraph, ell: int) -> bool:
    return find_long_cycle(g, ell) is not None


def _long_cycle_in_block(view: SimpleView, allowed: frozenset[int], ell: int) -> Cycle | None:
    for s in sorted(allowed):
        verts = [s]
        edges: list[int] = []
        onpath = {s}
        pos = [0]
        while pos:
            u = verts[-1]
            lst = view[u]
            i = pos[-1]
            moved = False
            while i < len(lst):
                e, w = lst[i]
                i += 1
                if w == s and len(edges) >= max(ell - 1, 2):
                    return Cycle(tuple(verts), tuple(edges + [e]))
                if w <= s or w in onpath or w not in allowed:
                    continue
                pos[-1] = i
                verts.append(w)
                edges.append(e)
                onpath.add(w)
                pos.append(0)
                moved = True
                break
            if not moved:
                pos.pop()
                if edges:
                    onpath.discard(verts.pop())
                    edges.pop()
    return None
