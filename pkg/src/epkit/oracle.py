"""Brute-force ground truth: cycle enumeration, exact packing and hitting
numbers, and certificate checking.

Everything here works from its own exhaustive cycle enumeration and shares
no search code with the solvers, so agreement between the two is
meaningful. Cycles are handled as bitmasks over edge positions.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Literal

from .certificates import Certificate, ClassicCertificate
from .errors import BudgetExceeded, PreconditionError
from .graph import Cycle, Multigraph, cycle_problems

DEFAULT_BUDGET_EDGES = 64
DEFAULT_BUDGET_CYCLES = 500_000

Status = Literal["ok", "violation", "unverifiable"]


def budget_edges() -> int:
    return int(os.environ.get("EPKIT_BUDGET_EDGES", DEFAULT_BUDGET_EDGES))


class _Indexed:
    """Edge positions and per-vertex incidence masks for one graph."""

    def __init__(self, g: Multigraph, max_edges: int | None):
        limit = budget_edges() if max_edges is None else max_edges
        if g.number_of_edges() > limit:
            raise BudgetExceeded(
                f"{g.number_of_edges()} edges exceed the oracle budget of {limit}"
            )
        self.g = g
        self.edges = g.edges()
        self.pos = {e: i for i, e in enumerate(self.edges)}
        self.inc: dict[int, int] = {v: 0 for v in g.vertices()}
        for i, e in enumerate(self.edges):
            u, v = g.endpoints(e)
            self.inc[u] |= 1 << i
            self.inc[v] |= 1 << i

    def mask(self, edges) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.pos[e]
        return m

    def unmask(self, m: int) -> frozenset[int]:
        out = []
        i = 0
        while m:
            if m & 1:
                out.append(self.edges[i])
            m >>= 1
            i += 1
        return frozenset(out)


def _iter_cycles(g: Multigraph, min_len: int) -> Iterator[Cycle]:
    """Every cycle of length ``>= min_len``, each exactly once."""
    if min_len <= 1:
        for e in g.edges():
            u, v = g.endpoints(e)
            if u == v:
                yield Cycle((u,), (e,))
    if min_len <= 2:
        bundles: dict[tuple[int, int], list[int]] = {}
        for e in g.edges():
            u, w = g.endpoints(e)
            if u != w:
                bundles.setdefault((u, w), []).append(e)
        for (u, w), par in sorted(bundles.items()):
            for i in range(len(par)):
                for j in range(i + 1, len(par)):
                    yield Cycle((u, w), (par[i], par[j]))
    adj = {
        v: [(e, g.other(e, v)) for e in g.incident(v) if g.other(e, v) != v]
        for v in g.vertices()
    }
    want = max(min_len, 3)
    for s in g.vertices():
        path = [s]
        edges: list[int] = []
        on = {s}
        stack = [iter(adj[s])]
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                if edges:
                    on.discard(path.pop())
                    edges.pop()
                continue
            e, w = step
            if w == s:
                # each cycle is met in two directions; keep one
                if len(edges) + 1 >= want and len(path) >= 3 and path[1] < path[-1]:
                    yield Cycle(tuple(path), tuple(edges) + (e,))
                continue
            if w < s or w in on:
                continue
            path.append(w)
            edges.append(e)
            on.add(w)
            stack.append(iter(adj[w]))


def enumerate_long_cycles(
    g: Multigraph,
    ell: int,
    *,
    max_edges: int | None = None,
    max_cycles: int = DEFAULT_BUDGET_CYCLES,
) -> list[Cycle]:
    """All cycles of length at least ``ell``.

    Raises :class:`BudgetExceeded` beyond ``max_edges`` edges or
    ``max_cycles`` cycles.
    """
    _Indexed(g, max_edges)
    out = []
    for c in _iter_cycles(g, ell):
        out.append(c)
        if len(out) > max_cycles:
            raise BudgetExceeded(f"more than {max_cycles} long cycles")
    return out


def has_long_cycle_exact(g: Multigraph, ell: int, *, max_edges: int | None = None) -> bool:
    _Indexed(g, max_edges)
    return next(_iter_cycles(g, ell), None) is not None


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass
class OracleResult:
    value: int
    cycles: list[Cycle] = field(default_factory=list)
    edges: frozenset[int] = frozenset()


def exact_max_packing(
    g: Multigraph, ell: int, *, max_edges: int | None = None, max_cycles: int = DEFAULT_BUDGET_CYCLES
) -> OracleResult:
    """Maximum number of pairwise edge-disjoint cycles of length ``>= ell``.

    Branch and bound on the lowest edge still covered by a candidate cycle:
    either one of the cycles through it is taken, or none is. The bound
    counts incidences: ``c`` cycles of length at least ``L`` need
    ``c * L`` pairs of edge ends meeting at vertices.
    """
    idx = _Indexed(g, max_edges)
    cycles = enumerate_long_cycles(g, ell, max_edges=max_edges, max_cycles=max_cycles)
    masks = sorted({idx.mask(c.edges): c for c in cycles}.items())
    by_mask = dict(masks)
    inc = list(idx.inc.values())

    def bound(cands: list[int]) -> int:
        union = 0
        shortest = None
        for c in cands:
            union |= c
            n = _popcount(c)
            if shortest is None or n < shortest:
                shortest = n
        pairs = sum(_popcount(union & m) // 2 for m in inc)
        return pairs // shortest

    # greedy incumbent: shortest cycles first
    best: list[int] = []
    used = 0
    for c in sorted(by_mask, key=lambda c: (_popcount(c), c)):
        if not c & used:
            best.append(c)
            used |= c

    def rec(cands: list[int], chosen: list[int]) -> None:
        nonlocal best
        if not cands:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + bound(cands) <= len(best):
            return
        union = 0
        for c in cands:
            union |= c
        low = union & -union
        through = [c for c in cands if c & low]
        rest = [c for c in cands if not c & low]
        for c in through:
            chosen.append(c)
            rec([d for d in rest if not d & c], chosen)
            chosen.pop()
        rec(rest, chosen)

    rec([m for m, _ in masks], [])
    witness = [by_mask[m] for m in best]
    return OracleResult(len(witness), cycles=witness)


def _components_bound(n_vertices: dict[int, int], edge_mask: int, idx: _Indexed, ell: int) -> int:
    """Upper bound on the size of a long-cycle-free subgraph of a simple
    graph with the given edges, per connected component."""
    parent = {v: v for v in n_vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    m = edge_mask
    i = 0
    while m:
        if m & 1:
            u, v = idx.g.endpoints(idx.edges[i])
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
        m >>= 1
        i += 1
    size: dict[int, int] = {}
    for v in n_vertices:
        r = find(v)
        size[r] = size.get(r, 0) + 1
    c = max(ell - 1, 2)
    return sum(c * (s - 1) // 2 for s in size.values())


def _cycle_components(masks: list[int]) -> list[list[int]]:
    """Group cycle masks so that cycles in different groups share no edge."""
    parent = list(range(len(masks)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, c in enumerate(masks):
        m, b = c, 0
        while m:
            if m & 1:
                j = owner.setdefault(b, i)
                a, r = find(i), find(j)
                if a != r:
                    parent[a] = r
            m >>= 1
            b += 1
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(masks):
        groups.setdefault(find(i), []).append(c)
    return list(groups.values())


def _max_free_subset(masks: list[int], verts: dict[int, int], idx: _Indexed, ell: int, simple: bool) -> int:
    """Largest edge set inside the union of ``masks`` containing none of them."""
    relevant = 0
    for c in masks:
        relevant |= c
    order = [i for i in range(len(idx.edges)) if relevant >> i & 1]
    containing = {i: [c for c in masks if c >> i & 1] for i in order}
    best_s = 0
    best_size = -1

    def upper(s: int, undecided: int) -> int:
        alive = [c & undecided for c in masks if c & ~(s | undecided) == 0]
        taken = 0
        lost = 0
        for part in sorted(alive, key=lambda p: (_popcount(p), p)):
            if not part & taken:
                taken |= part
                lost += 1
        ub = _popcount(s) + _popcount(undecided) - lost
        if simple:
            ub = min(ub, _components_bound(verts, s | undecided, idx, ell))
        return ub

    def rec(j: int, s: int, undecided: int) -> None:
        nonlocal best_s, best_size
        if j == len(order):
            size = _popcount(s)
            if size > best_size:
                best_size, best_s = size, s
            return
        if upper(s, undecided) <= best_size:
            return
        bit = 1 << order[j]
        rest = undecided & ~bit
        with_bit = s | bit
        if all(c & ~with_bit for c in containing[order[j]]):
            rec(j + 1, with_bit, rest)
        rec(j + 1, s, rest)

    rec(0, 0, relevant)
    return relevant & ~best_s


def exact_min_hitting(
    g: Multigraph, ell: int, *, max_edges: int | None = None, max_cycles: int = DEFAULT_BUDGET_CYCLES
) -> OracleResult:
    """Minimum number of edges meeting every cycle of length ``>= ell``.

    Long cycles are first grouped into classes that share no edges; each
    class is solved on its own and the answers add up. Within a class the
    minimum is the complement of a largest edge set containing no long
    cycle, found by branch and bound over the class's edges (keep or drop
    each in turn). Two bounds prune: cycles that could still be completed
    need one dropped edge each among their undecided edges, counted
    greedily over cycles with disjoint undecided parts; and on simple
    graphs a long-cycle-free graph with a component of ``n`` vertices has
    at most ``max(ell-1, 2) * (n-1) / 2`` edges there.
    """
    idx = _Indexed(g, max_edges)
    cycles = enumerate_long_cycles(g, ell, max_edges=max_edges, max_cycles=max_cycles)
    masks = sorted({idx.mask(c.edges) for c in cycles})
    simple = g.is_simple()
    verts = {v: 1 for v in g.vertices()}
    hit = 0
    for group in _cycle_components(masks):
        hit |= _max_free_subset(group, verts, idx, ell, simple)
    return OracleResult(_popcount(hit), edges=idx.unmask(hit))


def hitting_set_within(
    g: Multigraph,
    ell: int,
    t: int,
    *,
    max_edges: int | None = None,
    max_cycles: int = DEFAULT_BUDGET_CYCLES,
) -> frozenset[int] | None:
    """An edge set of size at most ``t`` meeting every cycle of length
    ``>= ell``, or ``None`` when no such set exists.

    Bounded search: take a surviving cycle with the fewest deletable edges
    and branch on which of them to delete; edges skipped in earlier
    branches become undeletable. A branch dies once more surviving cycles
    with pairwise disjoint deletable parts remain than deletions left.
    This decides ``tau <= t`` without computing ``tau``, which is fast when
    ``t`` is small.
    """
    if t < 0:
        return None
    idx = _Indexed(g, max_edges)
    cycles = enumerate_long_cycles(g, ell, max_edges=max_edges, max_cycles=max_cycles)
    masks = sorted({idx.mask(c.edges) for c in cycles})

    def rec(alive: list[int], frozen: int, budget: int) -> int | None:
        if not alive:
            return 0
        free = [c & ~frozen for c in alive]
        if any(f == 0 for f in free):
            return None
        taken = 0
        need = 0
        for f in sorted(free, key=lambda p: (_popcount(p), p)):
            if not f & taken:
                taken |= f
                need += 1
                if need > budget:
                    return None
        pick = min(free, key=lambda p: (_popcount(p), p))
        m = pick
        while m:
            bit = m & -m
            m ^= bit
            sub = rec([c for c in alive if not c & bit], frozen, budget - 1)
            if sub is not None:
                return sub | bit
            frozen |= bit
        return None

    found = rec(masks, 0, t)
    return None if found is None else idx.unmask(found)


@dataclass
class Report:
    status: Status
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _long_bound(k: int, ell: int) -> int:
    # kept local so the checker does not lean on solver code
    if k == 0:
        return 0
    return k * 8 * (ell - 1) * ((k * ell - 1).bit_length() + 1)


def _classic_bound(k: int) -> int:
    if k == 0:
        return 0
    return k * (8 * (k - 1).bit_length() + 2)


def verify_certificate(
    g: Multigraph, k: int, ell: int, cert: Certificate, *, max_edges: int | None = None
) -> Report:
    """Check a long-cycle certificate literally against ``g``."""
    problems: list[str] = []
    if cert.kind == "packing":
        if len(cert.cycles) < k:
            problems.append(f"only {len(cert.cycles)} cycles, need {k}")
        used: set[int] = set()
        for i, c in enumerate(cert.cycles):
            problems.extend(f"cycle {i}: {p}" for p in cycle_problems(g, c))
            if len(c) < ell:
                problems.append(f"cycle {i} has length {len(c)} < {ell}")
            if used & c.edge_set:
                problems.append(f"cycle {i} not edge-disjoint from earlier cycles")
            used |= c.edge_set
        return Report("violation" if problems else "ok", problems)
    if cert.kind != "hitting":
        return Report("violation", [f"unknown certificate kind {cert.kind!r}"])
    missing = [e for e in cert.hitting if not g.has_edge(e)]
    if missing:
        problems.append(f"edges {sorted(missing)[:5]} not in graph")
    if len(cert.hitting) > _long_bound(k, ell):
        problems.append(f"bound exceeded: {len(cert.hitting)} > {_long_bound(k, ell)}")
    if problems:
        return Report("violation", problems)
    rest = g.without_edges([e for e in cert.hitting if g.has_edge(e)])
    try:
        if has_long_cycle_exact(rest, ell, max_edges=max_edges):
            return Report("violation", ["long cycle survives the hitting set"])
    except BudgetExceeded as exc:
        return Report("unverifiable", [str(exc)])
    return Report("ok")


def is_forest(g: Multigraph) -> bool:
    parent = {v: v for v in g.vertices()}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in g.edges():
        a, b = (find(w) for w in g.endpoints(e))
        if a == b:
            return False
        parent[a] = b
    return True


def verify_classic_certificate(g: Multigraph, k: int, cert: ClassicCertificate) -> Report:
    problems: list[str] = []
    if cert.kind == "packing":
        if len(cert.cycles) < k:
            problems.append(f"only {len(cert.cycles)} cycles, need {k}")
        used_v: set[int] = set()
        used_e: set[int] = set()
        for i, c in enumerate(cert.cycles):
            problems.extend(f"cycle {i}: {p}" for p in cycle_problems(g, c))
            if cert.mode == "vertex" and used_v & c.vertex_set:
                problems.append(f"cycle {i} not vertex-disjoint from earlier cycles")
            if used_e & c.edge_set:
                problems.append(f"cycle {i} not edge-disjoint from earlier cycles")
            used_v |= c.vertex_set
            used_e |= c.edge_set
        return Report("violation" if problems else "ok", problems)
    if len(cert.hitting) > _classic_bound(k):
        problems.append(f"bound exceeded: {len(cert.hitting)} > {_classic_bound(k)}")
    if cert.mode == "vertex":
        if not all(v in g for v in cert.hitting):
            problems.append("hitting set names unknown vertices")
            return Report("violation", problems)
        rest = g.without_vertices(cert.hitting)
    else:
        if not all(g.has_edge(e) for e in cert.hitting):
            problems.append("hitting set names unknown edges")
            return Report("violation", problems)
        rest = g.without_edges(cert.hitting)
    if not is_forest(rest):
        problems.append("a cycle survives the hitting set")
    return Report("violation" if problems else "ok", problems)


@dataclass
class DiameterReport:
    status: Literal["ok", "premises not satisfied", "counterexample"]
    cycle: Cycle | None = None


def _diameter(g: Multigraph) -> int | None:
    """Largest hop distance, or ``None`` if disconnected."""
    vs = g.vertices()
    best = 0
    for s in vs:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.neighbors(u):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) != len(vs):
            return None
        best = max(best, max(dist.values()))
    return best


def check_diameter_lemma(g: Multigraph, ell: int, gval: int) -> DiameterReport:
    """If ``g`` has diameter below ``gval/2`` and no cycle length lies in
    ``[ell, gval]``, it should have no cycle of length ``>= ell`` at all."""
    if ell < 1 or gval < 2 * ell - 1:
        raise PreconditionError("need ell >= 1 and g >= 2*ell - 1")
    long_cycles = list(_iter_cycles(g, ell))
    if not long_cycles:
        return DiameterReport("ok")
    diam = _diameter(g)
    if diam is None or 2 * diam >= gval or any(len(c) <= gval for c in long_cycles):
        return DiameterReport("premises not satisfied")
    return DiameterReport("counterexample", min(long_cycles, key=len))
