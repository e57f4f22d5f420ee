"""Solver for the classic cycle packing/covering dichotomy on simple graphs."""

from __future__ import annotations

from .certificates import ClassicCertificate, Mode
from .cycles import girth
from .decomposition import ko_minor
from .errors import InvariantViolation, PreconditionError, TheoremGap
from .graph import ContractionMap, Cycle, Multigraph, validate_cycle
from .packing import greedy_cycle_packing


def g_classic(k: int) -> int:
    """``8 * ceil(log2 k) + 2`` for ``k >= 1`` and ``0`` for ``k = 0``."""
    if k < 0:
        raise PreconditionError("k must be non-negative")
    if k == 0:
        return 0
    return 8 * (k - 1).bit_length() + 2


def _bound(k: int) -> int:
    return k * g_classic(k)


def _suppress(g: Multigraph, v: int) -> tuple[Multigraph, int]:
    """Contract the edge from degree-2 vertex ``v`` to its smaller neighbour
    ``u``; ``u`` keeps its id and the other edge at ``v`` keeps its id."""
    (e1, w1), (e2, w2) = sorted(g.incidence(v).items(), key=lambda t: (t[1], t[0]))
    u, keep, w = w1, e2, w2
    if u == w:
        raise InvariantViolation(f"degree-2 vertex {v} lies on a digon")
    h = g.copy()
    h.remove_vertex(v)
    if h.edges_between(u, w):
        raise InvariantViolation(f"suppressing {v} creates a parallel edge {u}-{w}")
    h.add_edge(u, w, keep)
    return h, u


def solve_classic(g: Multigraph, k: int, mode: Mode = "vertex") -> ClassicCertificate:
    """Return ``k`` vertex-disjoint cycles of ``g`` or a vertex (edge) set of
    size at most ``k * g_classic(k)`` whose removal leaves a forest.

    Works on a shrinking residual graph: short cycles are peeled off,
    vertices of degree at most one are deleted and degree-2 vertices are
    suppressed. What remains has minimum degree three and large girth, and
    its ball minor is dense enough for the greedy packing.
    """
    if mode not in ("vertex", "edge"):
        raise PreconditionError(f"unknown mode {mode!r}")
    if k < 0:
        raise PreconditionError("k must be non-negative")
    if not g.is_simple():
        raise PreconditionError("classic solver requires a simple graph")

    steps: list[tuple] = []
    h = g.copy()
    kk = k
    while True:
        if kk == 0:
            cert = ClassicCertificate("packing", mode, 0, 0)
            break
        gi = girth(h)
        if gi is None:
            cert = ClassicCertificate("hitting", mode, kk, _bound(kk))
            break
        length, c = gi
        # with k = 1 any cycle settles the instance
        if length <= g_classic(kk) or kk == 1:
            steps.append(("cycle", c, kk))
            if mode == "vertex":
                h.remove_vertices(c.vertex_set)
            else:
                h.remove_edges(c.edge_set)
            kk -= 1
            continue
        low = next((v for v in h.vertices() if h.degree(v) <= 1), None)
        if low is not None:
            steps.append(("low-degree", low, kk))
            h.remove_vertex(low)
            continue
        two = next((v for v in h.vertices() if h.degree(v) == 2), None)
        if two is not None:
            prev = h
            h, u = _suppress(h, two)
            steps.append(("suppress", (prev, two, u), kk))
            continue
        size = h.number_of_vertices() if mode == "vertex" else h.number_of_edges()
        if _bound(kk) >= size:
            everything = h.vertices() if mode == "vertex" else h.edges()
            cert = ClassicCertificate(
                "hitting", mode, kk, _bound(kk), hitting=frozenset(everything), trivial=True
            )
            break
        cert = _minor_packing(h, kk, mode)
        break

    for kind, data, kk in reversed(steps):
        if kind == "cycle":
            c = data
            if cert.is_packing:
                cert.cycles.append(c)
            else:
                extra = c.vertex_set if mode == "vertex" else c.edge_set
                cert.hitting = cert.hitting | extra
                if len(cert.hitting) > _bound(kk):
                    raise InvariantViolation("hitting set exceeds k*g(k) after combining")
        elif kind == "suppress":
            prev, v, u = data
            if cert.is_packing:
                vmap = {w: frozenset((w,)) for w in prev.vertices() if w != v}
                vmap[u] = frozenset((u, v))
                cmap = ContractionMap(vmap, {e: e for e in prev.edges()}, prev)
                cert.cycles = [c if u not in c.vertex_set else cmap.lift_cycle(c) for c in cert.cycles]
    cert.provenance = [_describe(s) for s in steps] + cert.provenance
    cert.k, cert.bound = k, _bound(k)
    if cert.is_packing:
        cert.cycles = sorted(cert.cycles, key=Cycle.edge_key)
        for c in cert.cycles:
            validate_cycle(g, c)
    return cert


def _describe(step: tuple) -> str:
    kind, data, _ = step
    if kind == "cycle":
        return f"short cycle of length {len(data)}"
    if kind == "low-degree":
        return f"delete vertex {data}"
    return f"suppress vertex {data[1]} into {data[2]}"


def _minor_packing(h: Multigraph, k: int, mode: Mode) -> ClassicCertificate:
    m = (g_classic(k) - 2) // 8
    minor, cmap = ko_minor(h, m)
    want = 3 * 2**m
    got = minor.min_degree()
    if got is None or got < want or want < 3 * k:
        raise TheoremGap(
            "ball minor is not dense enough for the greedy packing",
            {"k": k, "m": m, "min_degree": got, "required": want},
        )
    cycles = [cmap.lift_cycle(c) for c in greedy_cycle_packing(minor, k)]
    used: set[int] = set()
    for c in cycles:
        if used & c.vertex_set:
            raise InvariantViolation("lifted cycles share a vertex")
        used |= c.vertex_set
    return ClassicCertificate(
        "packing", mode, k, _bound(k), cycles=cycles, provenance=[f"ball minor with m={m}"]
    )
