"""Edge-disjoint paths via unit-capacity augmenting paths."""

from __future__ import annotations

from collections import deque

from .errors import PreconditionError
from .graph import Multigraph, Path


def max_edge_disjoint_paths(
    g: Multigraph, s: int, t: int, allowed: set[int] | None = None
) -> tuple[int, list[Path]]:
    """Maximum number of pairwise edge-disjoint ``s``-``t`` paths.

    Every non-loop edge is an undirected unit-capacity arc. Augmenting paths
    are found by BFS (Edmonds-Karp), so the count equals the max-flow value.
    The flow is then decomposed into simple paths; closed sub-walks are cut
    out, which only drops edges and keeps the paths disjoint. ``allowed``
    confines everything to a vertex subset.
    """
    if s == t:
        raise PreconditionError("endpoints must differ")
    if s not in g or t not in g:
        raise PreconditionError("endpoints must be vertices of the graph")
    if allowed is not None and not (s in allowed and t in allowed):
        raise PreconditionError("endpoints must lie in the allowed set")

    def usable(w: int) -> bool:
        return allowed is None or w in allowed

    # flow[e] = +1 if e carries flow from its low endpoint to its high one,
    # -1 for the opposite direction, 0 if unused.
    flow: dict[int, int] = {}

    def residual(e: int, frm: int) -> bool:
        lo, _ = g.endpoints(e)
        f = flow.get(e, 0)
        direction = 1 if frm == lo else -1
        return f != direction

    count = 0
    while True:
        parent: dict[int, tuple[int, int]] = {s: (s, -1)}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            inc = g.incidence(u)
            for e in sorted(inc):
                w = inc[e]
                if w == u or w in parent or not usable(w) or not residual(e, u):
                    continue
                parent[w] = (u, e)
                queue.append(w)
        if t not in parent:
            break
        w = t
        while w != s:
            u, e = parent[w]
            lo, _ = g.endpoints(e)
            flow[e] = flow.get(e, 0) + (1 if u == lo else -1)
            w = u
        count += 1

    # decompose: out-arcs of each vertex carrying flow
    out: dict[int, list[tuple[int, int]]] = {}
    for e, f in flow.items():
        if f == 0:
            continue
        lo, hi = g.endpoints(e)
        a, b = (lo, hi) if f == 1 else (hi, lo)
        out.setdefault(a, []).append((e, b))
    for lst in out.values():
        lst.sort(reverse=True)
    paths = []
    for _ in range(count):
        verts, edges = [s], []
        pos = {s: 0}
        u = s
        while u != t:
            e, w = out[u].pop()
            if w in pos:
                cut = pos[w]
                for x in verts[cut + 1 :]:
                    del pos[x]
                del verts[cut + 1 :]
                del edges[cut:]
            else:
                pos[w] = len(verts)
                verts.append(w)
                edges.append(e)
                u = w
                continue
            u = w
        paths.append(Path(tuple(verts), tuple(edges)))
    return count, paths
