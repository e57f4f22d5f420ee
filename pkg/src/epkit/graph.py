"""Multigraph substrate: stable vertex/edge ids, cycles, paths and contraction."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Sequence

from .errors import InvariantViolation, PreconditionError

LoopPolicy = Literal["keep", "discard"]


class Multigraph:
    """Undirected multigraph with stable integer ids.

    Parallel edges and loops are allowed. ``degree`` counts edge incidences,
    so a loop adds 2. Ids handed out by :meth:`add_vertex` / :meth:`add_edge`
    are never reused within one lineage (copies and subgraphs inherit the
    id counters of their parent).
    """

    __slots__ = ("_adj", "_ends", "_next_vertex", "_next_edge")

    def __init__(self) -> None:
        self._adj: dict[int, dict[int, int]] = {}
        self._ends: dict[int, tuple[int, int]] = {}
        self._next_vertex = 0
        self._next_edge = 0

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
        """Vertices ``0..n-1``; edge ids follow the order of ``pairs``."""
        g = cls()
        for v in range(n):
            g.add_vertex(v)
        for u, v in pairs:
            g.add_edge(u, v)
        return g

    # -- construction -----------------------------------------------------

    def add_vertex(self, v: int | None = None) -> int:
        if v is None:
            v = self._next_vertex
        elif v in self._adj:
            raise PreconditionError(f"vertex {v} already present")
        self._adj[v] = {}
        self._next_vertex = max(self._next_vertex, v + 1)
        return v

    def add_edge(self, u: int, v: int, e: int | None = None) -> int:
        if u not in self._adj or v not in self._adj:
            raise PreconditionError(f"edge endpoint missing: {u}, {v}")
        if e is None:
            e = self._next_edge
        elif e in self._ends:
            raise PreconditionError(f"edge {e} already present")
        self._ends[e] = (u, v) if u <= v else (v, u)
        self._adj[u][e] = v
        self._adj[v][e] = u
        self._next_edge = max(self._next_edge, e + 1)
        return e

    def remove_edge(self, e: int) -> None:
        u, v = self._ends.pop(e)
        del self._adj[u][e]
        if v != u:
            del self._adj[v][e]

    def remove_edges(self, edges: Iterable[int]) -> None:
        for e in edges:
            self.remove_edge(e)

    def remove_vertex(self, v: int) -> None:
        for e in list(self._adj[v]):
            if e in self._ends:
                self.remove_edge(e)
        del self._adj[v]

    def remove_vertices(self, vs: Iterable[int]) -> None:
        for v in list(vs):
            self.remove_vertex(v)

    # -- queries ----------------------------------------------------------

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def has_edge(self, e: int) -> bool:
        return e in self._ends

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def edges(self) -> list[int]:
        return sorted(self._ends)

    def number_of_vertices(self) -> int:
        return len(self._adj)

    def number_of_edges(self) -> int:
        return len(self._ends)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._ends[e]

    def other(self, e: int, v: int) -> int:
        return self._adj[v][e]

    def incident(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def incidence(self, v: int) -> dict[int, int]:
        """Read-only view ``edge id -> other endpoint``."""
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return sorted({w for w in self._adj[v].values() if w != v})

    def degree(self, v: int) -> int:
        return sum(2 if w == v else 1 for w in self._adj[v].values())

    def min_degree(self) -> int | None:
        if not self._adj:
            return None
        return min(self.degree(v) for v in self._adj)

    def edges_between(self, u: int, v: int) -> list[int]:
        return sorted(e for e, w in self._adj[u].items() if w == v)

    def loops(self) -> list[int]:
        return sorted(e for e, (u, v) in self._ends.items() if u == v)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self._ends.values():
            if u == v or (u, v) in seen:
                return False
            seen.add((u, v))
        return True

    @property
    def next_vertex_id(self) -> int:
        return self._next_vertex

    # -- derived graphs ---------------------------------------------------

    def copy(self) -> Multigraph:
        g = Multigraph()
        g._adj = {v: dict(inc) for v, inc in self._adj.items()}
        g._ends = dict(self._ends)
        g._next_vertex = self._next_vertex
        g._next_edge = self._next_edge
        return g

    def induced_subgraph(self, vs: Iterable[int]) -> Multigraph:
        keep = set(vs)
        g = Multigraph()
        g._next_vertex = self._next_vertex
        g._next_edge = self._next_edge
        for v in keep:
            g._adj[v] = {e: w for e, w in self._adj[v].items() if w in keep}
        for v in keep:
            for e in g._adj[v]:
                g._ends[e] = self._ends[e]
        return g

    def edge_subgraph(self, edges: Iterable[int]) -> Multigraph:
        """Subgraph formed by ``edges`` and their endpoints."""
        g = Multigraph()
        g._next_vertex = self._next_vertex
        g._next_edge = self._next_edge
        for e in edges:
            u, v = self._ends[e]
            g._adj.setdefault(u, {})[e] = v
            g._adj.setdefault(v, {})[e] = u
            g._ends[e] = (u, v)
        return g

    def without_edges(self, edges: Iterable[int]) -> Multigraph:
        g = self.copy()
        g.remove_edges(edges)
        return g

    def without_vertices(self, vs: Iterable[int]) -> Multigraph:
        g = self.copy()
        g.remove_vertices(vs)
        return g

    def without_loops(self) -> Multigraph:
        return self.without_edges(self.loops())

    def edge_list(self) -> list[tuple[int, int, int]]:
        return [(e, *self._ends[e]) for e in self.edges()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return set(self._adj) == set(other._adj) and self._ends == other._ends

    def __repr__(self) -> str:
        return f"Multigraph(n={len(self._adj)}, m={len(self._ends)})"


def bfs_distances(
    g: Multigraph, source: int, *, limit: int | None = None
) -> dict[int, int]:
    """Hop distances from ``source``; unreachable vertices are absent.

    With ``limit`` the search stops expanding past that depth.
    """
    if source not in g:
        raise PreconditionError(f"source {source} not in graph")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in g.incidence(u).values():
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def multi_source_distances(g: Multigraph, sources: Iterable[int]) -> dict[int, int]:
    dist = {s: 0 for s in sources}
    queue = deque(sorted(dist))
    while queue:
        u = queue.popleft()
        for w in g.incidence(u).values():
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def shortest_path(
    g: Multigraph, source: int, target: int, allowed: set[int] | None = None
) -> Path | None:
    """Deterministic shortest path (smallest edge ids first), optionally
    confined to the vertex set ``allowed``."""
    if source == target:
        return Path((source,), ())
    parent: dict[int, tuple[int, int]] = {source: (source, -1)}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        inc = g.incidence(u)
        for e in sorted(inc):
            w = inc[e]
            if w in parent or (allowed is not None and w not in allowed):
                continue
            parent[w] = (u, e)
            if w == target:
                verts, edges = [w], []
                while w != source:
                    w, e = parent[w]
                    verts.append(w)
                    edges.append(e)
                return Path(tuple(reversed(verts)), tuple(reversed(edges)))
            queue.append(w)
    return None


@dataclass(frozen=True)
class Path:
    """Walk ``v0 e0 v1 ... e_{L-1} vL`` with distinct vertices."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise PreconditionError("path needs exactly one more vertex than edges")

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> Path:
        return Path(self.vertices[::-1], self.edges[::-1])


@dataclass(frozen=True)
class Cycle:
    """Closed walk ``v0 e0 v1 e1 ... v_{L-1} e_{L-1}`` back to ``v0``.

    Edge ``e_i`` joins ``v_i`` and ``v_{(i+1) mod L}``. Length is the number
    of edges; a loop has length 1 and a pair of parallel edges length 2.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) or not self.edges:
            raise PreconditionError("cycle needs as many vertices as edges (>= 1)")

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def edge_key(self) -> tuple[int, ...]:
        """Canonical edge sequence: start at the smallest edge id, then run in
        the direction whose next edge is smaller."""
        es = self.edges
        n = len(es)
        i = es.index(min(es))
        fwd = tuple(es[(i + j) % n] for j in range(n))
        bwd = tuple(es[(i - j) % n] for j in range(n))
        return min(fwd, bwd)

    def canonical(self) -> Cycle:
        """Same cycle, rotated/reflected to match :meth:`edge_key`."""
        es, vs = self.edges, self.vertices
        n = len(es)
        i = es.index(min(es))
        fwd = tuple(es[(i + j) % n] for j in range(n))
        bwd = tuple(es[(i - j) % n] for j in range(n))
        if fwd <= bwd:
            return Cycle(tuple(vs[(i + j) % n] for j in range(n)), fwd)
        # reversed traversal starts at the far endpoint of edge i
        return Cycle(tuple(vs[(i + 1 - j) % n] for j in range(n)), bwd)

    def substitute(self, old: int, new: int) -> Cycle:
        return Cycle(tuple(new if v == old else v for v in self.vertices), self.edges)


def cycle_problems(g: Multigraph, c: Cycle) -> list[str]:
    """Reasons ``c`` is not a genuine cycle of ``g`` (empty when valid)."""
    problems = []
    n = len(c)
    if len(set(c.edges)) != n:
        problems.append("repeated edge")
    if n > 2 and len(set(c.vertices)) != n:
        problems.append("repeated vertex")
    if n == 2 and c.vertices[0] == c.vertices[1]:
        problems.append("length-2 cycle through a single vertex")
    for i, e in enumerate(c.edges):
        if not g.has_edge(e):
            problems.append(f"edge {e} not in graph")
            continue
        a, b = c.vertices[i], c.vertices[(i + 1) % n]
        if g.endpoints(e) != (min(a, b), max(a, b)):
            problems.append(f"edge {e} does not join {a} and {b}")
    return problems


def validate_cycle(g: Multigraph, c: Cycle) -> None:
    problems = cycle_problems(g, c)
    if problems:
        raise InvariantViolation(f"invalid cycle {c}: {'; '.join(problems)}")


def path_problems(g: Multigraph, p: Path) -> list[str]:
    problems = []
    if len(set(p.vertices)) != len(p.vertices):
        problems.append("repeated vertex")
    for i, e in enumerate(p.edges):
        if not g.has_edge(e):
            problems.append(f"edge {e} not in graph")
            continue
        a, b = p.vertices[i], p.vertices[i + 1]
        if g.endpoints(e) != (min(a, b), max(a, b)):
            problems.append(f"edge {e} does not join {a} and {b}")
    return problems


@dataclass
class ContractionMap:
    """Bookkeeping that relates a contracted graph to its source.

    ``vertex_map`` sends each vertex of the contracted graph to the set of
    source vertices it stands for; ``edge_map`` sends each surviving edge to
    its source edge (ids are preserved, so this is the identity on the
    surviving edges).
    """

    vertex_map: dict[int, frozenset[int]]
    edge_map: dict[int, int]
    source: Multigraph = field(repr=False)

    def preimage(self, v: int) -> frozenset[int]:
        return self.vertex_map[v]

    def image(self) -> dict[int, int]:
        """Source vertex -> contracted vertex."""
        return {u: v for v, part in self.vertex_map.items() for u in part}

    def lift_cycle(self, c: Cycle) -> Cycle:
        """Expand a cycle of the contracted graph into the source graph.

        Each visit of a contracted vertex is replaced by a shortest path,
        inside the source subgraph induced by its part, between the
        endpoints of the two cycle edges that meet there.
        """
        g = self.source
        n = len(c)
        verts: list[int] = []
        edges: list[int] = []
        for i in range(n):
            e_in = self.edge_map[c.edges[i - 1]]
            e_out = self.edge_map[c.edges[i]]
            part = self.vertex_map[c.vertices[i]]
            # only a lifted loop has both ends of one edge inside the part
            a = _end_in(g, e_in, part, last=True)
            b = _end_in(g, e_out, part, last=False)
            if len(part) == 1:
                seg = Path((a,), ())
            else:
                seg = shortest_path(g, a, b, allowed=set(part))
                if seg is None:
                    raise InvariantViolation(f"{a} and {b} disconnected inside their part")
            verts.extend(seg.vertices)
            edges.extend(seg.edges)
            edges.append(e_out)
        lifted = Cycle(tuple(verts), tuple(edges))
        validate_cycle(g, lifted)
        return lifted


def _end_in(g: Multigraph, e: int, part: frozenset[int], last: bool) -> int:
    u, v = g.endpoints(e)
    inside = [w for w in (u, v) if w in part]
    if not inside:
        raise InvariantViolation(f"edge {e} does not touch part {sorted(part)}")
    return inside[-1] if last else inside[0]


def contract_partition(
    g: Multigraph,
    parts: Sequence[Iterable[int]],
    *,
    loop_policy: LoopPolicy = "discard",
    simple: bool = False,
) -> tuple[Multigraph, ContractionMap]:
    """Contract every listed vertex set to a single vertex.

    Parts must be pairwise disjoint; vertices not covered stay as they are.
    Multi-vertex parts receive fresh ids; singleton parts keep theirs. With
    ``simple`` parallel edges are collapsed to the smallest id and loops are
    dropped regardless of ``loop_policy``.
    """
    owner: dict[int, int] = {}
    vertex_map: dict[int, frozenset[int]] = {}
    h = Multigraph()
    h._next_vertex = g._next_vertex
    h._next_edge = g._next_edge
    for part in parts:
        ps = frozenset(part)
        if not ps:
            raise PreconditionError("cannot contract an empty vertex set")
        if len(ps) == 1:
            (rep,) = ps
        else:
            rep = h._next_vertex
        if any(u in owner for u in ps):
            raise PreconditionError("contraction parts overlap")
        for u in ps:
            if u not in g:
                raise PreconditionError(f"vertex {u} not in graph")
            owner[u] = rep
        h.add_vertex(rep)
        vertex_map[rep] = ps
    for v in g.vertices():
        if v not in owner:
            owner[v] = v
            h.add_vertex(v)
            vertex_map[v] = frozenset((v,))
    edge_map: dict[int, int] = {}
    seen: set[tuple[int, int]] = set()
    for e in g.edges():
        u, v = g.endpoints(e)
        a, b = owner[u], owner[v]
        if a == b and (simple or loop_policy == "discard"):
            continue
        if simple:
            key = (min(a, b), max(a, b))
            if key in seen:
                continue
            seen.add(key)
        h.add_edge(a, b, e)
        edge_map[e] = e
    return h, ContractionMap(vertex_map, edge_map, g)


def is_connected_set(g: Multigraph, vs: Iterable[int]) -> bool:
    vs = set(vs)
    if not vs:
        return False
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.incidence(u).values():
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def contract_vertex_set(
    g: Multigraph, s: Iterable[int], loop_policy: LoopPolicy = "discard"
) -> tuple[Multigraph, ContractionMap]:
    """Replace the connected vertex set ``s`` by one fresh vertex."""
    s = frozenset(s)
    if not s:
        raise PreconditionError("cannot contract an empty vertex set")
    if not all(v in g for v in s):
        raise PreconditionError("contraction set contains unknown vertices")
    if not is_connected_set(g, s):
        raise PreconditionError("contraction set does not induce a connected subgraph")
    return contract_partition(g, [s], loop_policy=loop_policy)


def connected_components(g: Multigraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.incidence(u).values():
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def iter_edges_within(g: Multigraph, vs: set[int]) -> Iterator[int]:
    for e in g.edges():
        u, v = g.endpoints(e)
        if u in vs and v in vs:
            yield e
