"""Greedy extraction of vertex-disjoint cycles from dense graphs."""

from __future__ import annotations

from .cycles import bounded_long_cycle, girth
from .errors import InvariantViolation, PreconditionError
from .graph import Cycle, Multigraph, Path, validate_cycle


def _neighbours_on(g: Multigraph, v: int, vs: frozenset[int]) -> int:
    return sum(1 for w in set(g.neighbors(v)) if w in vs)


def greedy_shortest_cycles(g: Multigraph, count: int) -> list[Cycle]:
    """Repeatedly take a shortest cycle and delete its vertices.

    No degree assumption; stops early when the residual graph is a forest.
    """
    h = g.copy()
    found: list[Cycle] = []
    while len(found) < count:
        gi = girth(h)
        if gi is None:
            break
        c = gi[1]
        found.append(c)
        h.remove_vertices(c.vertex_set)
    return found


def greedy_cycle_packing(g: Multigraph, k: int) -> list[Cycle]:
    """``k`` vertex-disjoint cycles in a simple graph of minimum degree
    ``>= 3k``, each a shortest cycle of the residual graph at its round."""
    if k < 0:
        raise PreconditionError("k must be non-negative")
    if k == 0:
        return []
    if not g.is_simple():
        raise PreconditionError("greedy_cycle_packing needs a simple graph")
    d = g.min_degree()
    if d is None or d < 3 * k:
        raise PreconditionError(f"minimum degree {d} is below 3k = {3 * k}")
    h = g.copy()
    found: list[Cycle] = []
    for left in range(k, 0, -1):
        gi = girth(h)
        if gi is None:
            raise InvariantViolation("residual graph is acyclic despite the degree bound")
        c = gi[1]
        on = c.vertex_set
        for v in h.vertices():
            if v not in on and _neighbours_on(h, v, on) > 3:
                raise InvariantViolation(f"vertex {v} sees more than 3 vertices of a shortest cycle")
        h.remove_vertices(on)
        found.append(c)
        if left > 1:
            rd = h.min_degree()
            if rd is None or rd < 3 * (left - 1):
                raise InvariantViolation(f"residual minimum degree {rd} after round {k - left + 1}")
    for c in found:
        validate_cycle(g, c)
    return found


def greedy_long_cycle_packing(g: Multigraph, k: int, ell: int) -> list[Cycle]:
    """``k`` vertex-disjoint cycles of length ``>= ell`` in a simple graph of
    minimum degree ``>= k*ell - 1``.

    Each round removes the vertices of a shortest cycle of length at least
    ``ell``. Before removal, every outside vertex is checked to have at most
    ``ell`` neighbours on that cycle, and afterwards the residual minimum
    degree is checked against ``(k-1)*ell - 1``.
    """
    if ell < 3:
        raise PreconditionError("ell must be at least 3")
    if k < 0:
        raise PreconditionError("k must be non-negative")
    if k == 0:
        return []
    if not g.is_simple():
        raise PreconditionError("greedy_long_cycle_packing needs a simple graph")
    d = g.min_degree()
    if d is None or d < k * ell - 1:
        raise PreconditionError(f"minimum degree {d} is below k*ell-1 = {k * ell - 1}")
    h = g.copy()
    found: list[Cycle] = []
    for left in range(k, 0, -1):
        n = h.number_of_vertices()
        c = bounded_long_cycle(h, ell, n) if n >= ell else None
        if c is None:
            raise InvariantViolation("no long cycle left despite the degree bound")
        on = c.vertex_set
        for v in h.vertices():
            if v not in on and _neighbours_on(h, v, on) > ell:
                raise InvariantViolation(
                    f"vertex {v} sees more than {ell} vertices of a shortest long cycle"
                )
        h.remove_vertices(on)
        found.append(c)
        if left > 1:
            rd = h.min_degree()
            if rd is None or rd < (left - 1) * ell - 1:
                raise InvariantViolation(f"residual minimum degree {rd} after round {k - left + 1}")
    for c in found:
        validate_cycle(g, c)
    return found


def _grow(g: Multigraph, path: list[int], edges: list[int], on: set[int]) -> None:
    while True:
        u = path[-1]
        step = None
        for e in g.incident(u):
            w = g.other(e, u)
            if w not in on:
                step = (w, e)
                break
        if step is None:
            return
        path.append(step[0])
        edges.append(step[1])
        on.add(step[0])


def maximal_path_long_cycle(g: Multigraph, ell: int) -> Cycle:
    """A cycle of length ``>= ell`` closed along a maximal path.

    The path starts at the smallest vertex and is extended at both ends
    until neither end has a neighbour off the path. The first vertex is
    then joined to its farthest neighbour on the path. Minimum degree
    ``>= ell - 1`` guarantees success; below that the graph needs minimum
    degree 2 and the call fails with :class:`PreconditionError` when the
    closed cycle turns out shorter than ``ell``.
    """
    if ell < 3:
        raise PreconditionError("ell must be at least 3")
    if not g.is_simple():
        raise PreconditionError("maximal_path_long_cycle needs a simple graph")
    d = g.min_degree()
    if d is None or d < 2:
        raise PreconditionError(f"minimum degree {d} is below 2")
    start = g.vertices()[0]
    path, edges, on = [start], [], {start}
    _grow(g, path, edges, on)
    path.reverse()
    edges.reverse()
    _grow(g, path, edges, on)
    path.reverse()
    edges.reverse()
    first = path[0]
    index = {v: i for i, v in enumerate(path)}
    j, closing = max((index[g.other(e, first)], e) for e in g.incident(first))
    if j + 1 < ell:
        if d < ell - 1:
            raise PreconditionError(
                f"minimum degree {d} is below ell-1 = {ell - 1} and the path closes only {j + 1} edges"
            )
        raise InvariantViolation(f"farthest neighbour gives a cycle of length {j + 1} < {ell}")
    c = Cycle(tuple(path[: j + 1]), tuple(edges[:j]) + (closing,))
    validate_cycle(g, c)
    return c


def even_cycle_from_theta(paths: list[Path] | tuple[Path, ...]) -> Cycle:
    """An even cycle formed by two of three internally disjoint ``u``-``v``
    paths of equal length parity."""
    if len(paths) != 3:
        raise PreconditionError("need exactly three paths")
    u, v = paths[0].start, paths[0].end
    if u == v:
        raise PreconditionError("paths must join two distinct vertices")
    norm = []
    for p in paths:
        if (p.start, p.end) == (v, u):
            p = p.reversed()
        if (p.start, p.end) != (u, v):
            raise PreconditionError("paths do not share their endpoints")
        if len(set(p.vertices)) != len(p.vertices):
            raise PreconditionError("path repeats a vertex")
        norm.append(p)
    inner = [set(p.vertices[1:-1]) for p in norm]
    edge_sets = [set(p.edges) for p in norm]
    for i in range(3):
        for j in range(i + 1, 3):
            if inner[i] & inner[j] or edge_sets[i] & edge_sets[j]:
                raise PreconditionError("paths are not internally disjoint")
    for i in range(3):
        for j in range(i + 1, 3):
            if len(norm[i]) % 2 == len(norm[j]) % 2:
                a, b = norm[i], norm[j].reversed()
                return Cycle(a.vertices[:-1] + b.vertices[:-1], a.edges + b.edges)
    raise AssertionError("three integers always contain two of equal parity")
