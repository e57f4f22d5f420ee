"""Deterministic graph families used by the CLI, the corpus and the tests."""

from __future__ import annotations

import itertools
import json
import random
from collections.abc import Iterator, Sequence
from typing import Any

from .errors import PreconditionError
from .graph import Multigraph, connected_components


def cycle(n: int) -> Multigraph:
    if n < 1:
        raise PreconditionError("a cycle needs at least one vertex")
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Multigraph:
    if n < 1:
        raise PreconditionError("a path needs at least one vertex")
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Multigraph:
    if n < 0:
        raise PreconditionError("n must be non-negative")
    return Multigraph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid(rows: int, cols: int) -> Multigraph:
    if rows < 1 or cols < 1:
        raise PreconditionError("grid dimensions must be positive")
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                pairs.append((v, v + 1))
            if r + 1 < rows:
                pairs.append((v, v + cols))
    return Multigraph.from_edges(rows * cols, pairs)


def theta(lengths: Sequence[int]) -> Multigraph:
    """Internally disjoint paths of the given lengths between vertices 0 and 1."""
    if len(lengths) < 1 or any(x < 1 for x in lengths):
        raise PreconditionError("theta path lengths must be positive")
    g = Multigraph.from_edges(2, [])
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            w = g.add_vertex()
            g.add_edge(prev, w)
            prev = w
        g.add_edge(prev, 1)
    return g


def gnp(n: int, p: float, seed: int) -> Multigraph:
    if n < 0 or not 0 <= p <= 1:
        raise PreconditionError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return Multigraph.from_edges(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    )


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    """Vertices and edges are renumbered consecutively, graph by graph."""
    out = Multigraph()
    for g in graphs:
        vmap = {v: out.add_vertex() for v in g.vertices()}
        for e in g.edges():
            u, v = g.endpoints(e)
            out.add_edge(vmap[u], vmap[v])
    return out


def random_multigraph(seed: int, max_vertices: int = 14, max_edges: int = 24) -> Multigraph:
    """Small random multigraph; parallel edges and loops occur."""
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
    return Multigraph.from_edges(n, pairs)


def random_min_degree_graph(n: int, d: int, seed: int) -> Multigraph:
    """Simple graph on ``n`` vertices with minimum degree at least ``d``.

    Starts from a random graph and adds random edges at deficient vertices.
    """
    if d >= n:
        raise PreconditionError("minimum degree must be below n")
    rng = random.Random(seed)
    adj = {v: set() for v in range(n)}
    p = min(1.0, rng.uniform(0.5, 1.5) * d / max(n - 1, 1))
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            adj[u].add(v)
            adj[v].add(u)
    for v in range(n):
        while len(adj[v]) < d:
            w = rng.choice([w for w in range(n) if w != v and w not in adj[v]])
            adj[v].add(w)
            adj[w].add(v)
    pairs = sorted((u, v) for u in adj for v in adj[u] if u < v)
    return Multigraph.from_edges(n, pairs)


def subdivide(g: Multigraph, times: int) -> Multigraph:
    """Replace every edge by a path of ``times`` edges. Original vertices
    keep their ids; new vertices follow."""
    if times < 1:
        raise PreconditionError("times must be positive")
    out = Multigraph()
    for v in g.vertices():
        out.add_vertex(v)
    for e in g.edges():
        u, v = g.endpoints(e)
        prev = u
        for _ in range(times - 1):
            w = out.add_vertex()
            out.add_edge(prev, w)
            prev = w
        out.add_edge(prev, v)
    return out


def doubled_cycle(n: int) -> Multigraph:
    """A cycle of length ``n`` with every edge doubled."""
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n) for _ in range(2)])


def cubic_high_girth(min_girth: int, seed: int = 0, n: int = 400, max_switches: int = 100_000) -> Multigraph:
    """A connected cubic simple graph of girth at least ``min_girth``.

    Starts from a Hamiltonian cycle plus a random perfect matching and
    repeatedly rewires an edge lying on a short cycle: ``ab`` and a far away
    edge ``cd`` become ``ac`` and ``bd`` when neither new edge closes a short
    cycle. Each switch destroys a short cycle and creates none, so the
    process ends once partners can be found, which holds for ``n`` large
    compared with ``2^(min_girth/2)``.
    """
    if n % 2 or n < 4:
        raise PreconditionError("n must be even and at least 4")
    rng = random.Random(seed)
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    chords = list(range(n))
    rng.shuffle(chords)
    edges += [(chords[i], chords[i + 1]) for i in range(0, n, 2)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def dist_without(a: int, b: int, limit: int) -> int:
        """Distance from ``a`` to ``b`` avoiding one ``ab`` edge, capped."""
        skip = 1
        seen = {a}
        frontier = [a]
        for d in range(1, limit + 1):
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if u == a and w == b and skip:
                        skip -= 1
                        continue
                    if w == b:
                        return d
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return limit + 1

    def bad(a: int, b: int) -> bool:
        return a == b or dist_without(a, b, min_girth - 2) + 1 < min_girth

    def far(a: int, b: int) -> bool:
        return a != b and b not in adj[a] and dist_without(a, b, min_girth - 2) + 1 >= min_girth

    switches = 0
    while True:
        flawed = [(u, v) for u in range(n) for v in adj[u] if u <= v and bad(u, v)]
        if not flawed:
            break
        for a, b in flawed:
            if b not in adj[a] or not bad(a, b):
                continue
            for _ in range(200):
                switches += 1
                if switches > max_switches:
                    raise RuntimeError("too many switches; raise n")
                c = rng.randrange(n)
                d = rng.choice(adj[c])
                if len({a, b, c, d}) < 4:
                    continue
                adj[a].remove(b)
                adj[b].remove(a)
                adj[c].remove(d)
                adj[d].remove(c)
                if far(a, c):
                    adj[a].append(c)
                    adj[c].append(a)
                    if far(b, d):
                        adj[b].append(d)
                        adj[d].append(b)
                        break
                    adj[a].remove(c)
                    adj[c].remove(a)
                adj[a].append(b)
                adj[b].append(a)
                adj[c].append(d)
                adj[d].append(c)
    g = Multigraph.from_edges(n, sorted((u, v) for u in adj for v in adj[u] if u < v))
    if len(connected_components(g)) != 1:
        raise RuntimeError("switching disconnected the graph; try another seed")
    return g


def connected_graphs(max_n: int) -> Iterator[Multigraph]:
    """Every connected simple graph on ``1..max_n`` vertices up to isomorphism.

    Up to seven vertices the networkx graph atlas is used. Larger orders are
    generated from the previous order by adding a vertex joined to a
    non-empty subset (every connected graph has a vertex whose removal
    keeps it connected) and discarding isomorphic copies by their nauty
    certificate. Needs networkx, and pynauty beyond seven vertices.
    """
    import networkx as nx

    by_order: dict[int, list[list[tuple[int, int]]]] = {}
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= min(max_n, 7) and nx.is_connected(h):
            by_order.setdefault(n, []).append(sorted(tuple(sorted(e)) for e in h.edges()))
    for n in range(8, max_n + 1):
        by_order[n] = _extend_order(n - 1, by_order[n - 1])
    for n in sorted(by_order):
        for edges in by_order[n]:
            yield Multigraph.from_edges(n, edges)


def _extend_order(n: int, graphs: list[list[tuple[int, int]]]) -> list[list[tuple[int, int]]]:
    import pynauty

    seen: set[bytes] = set()
    out = []
    for edges in graphs:
        for size in range(1, n + 1):
            for subset in itertools.combinations(range(n), size):
                new = edges + [(u, n) for u in subset]
                adj: dict[int, list[int]] = {v: [] for v in range(n + 1)}
                for u, v in new:
                    adj[u].append(v)
                    adj[v].append(u)
                cert = pynauty.certificate(pynauty.Graph(n + 1, adjacency_dict=adj))
                if cert not in seen:
                    seen.add(cert)
                    out.append(new)
    return out


def _as_int(params: dict[str, Any], key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise PreconditionError(f"missing parameter {key!r}")
        return default
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise PreconditionError(f"parameter {key!r} must be an integer")
    try:
        return int(value)
    except ValueError as exc:
        raise PreconditionError(f"parameter {key!r} must be an integer") from exc


def _as_int_list(value: Any) -> list[int]:
    if isinstance(value, str):
        value = [x for x in value.split(",") if x.strip()]
    try:
        return [int(x) for x in value]
    except (TypeError, ValueError) as exc:
        raise PreconditionError("expected a list of integers") from exc


def build_model(model: str, params: dict[str, Any], seed: int = 0) -> Multigraph:
    """Build a named generator model from loosely typed parameters.

    ``disjoint-union`` takes ``parts``, a list of ``{"model": ..., "params":
    ...}`` objects; part ``i`` gets seed ``seed + i``.
    """
    if model == "cycle":
        return cycle(_as_int(params, "n"))
    if model == "path":
        return path(_as_int(params, "n"))
    if model == "complete":
        return complete(_as_int(params, "n"))
    if model == "complete-bipartite":
        return complete_bipartite(_as_int(params, "a"), _as_int(params, "b"))
    if model == "grid":
        return grid(_as_int(params, "rows"), _as_int(params, "cols"))
    if model == "theta":
        if "lengths" not in params:
            raise PreconditionError("missing parameter 'lengths'")
        return theta(_as_int_list(params["lengths"]))
    if model == "gnp":
        try:
            p = float(params["p"])
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError("gnp needs a numeric parameter 'p'") from exc
        return gnp(_as_int(params, "n"), p, seed)
    if model == "multigraph":
        return random_multigraph(seed, _as_int(params, "n", 14), _as_int(params, "m", 24))
    if model == "min-degree":
        return random_min_degree_graph(_as_int(params, "n"), _as_int(params, "d"), seed)
    if model == "doubled-cycle":
        return doubled_cycle(_as_int(params, "n"))
    if model == "disjoint-union":
        parts = params.get("parts")
        if isinstance(parts, str):
            try:
                parts = json.loads(parts)
            except json.JSONDecodeError as exc:
                raise PreconditionError("'parts' must be a JSON list") from exc
        if not isinstance(parts, list):
            raise PreconditionError("disjoint-union needs a list 'parts'")
        graphs = []
        for i, part in enumerate(parts):
            if not isinstance(part, dict) or "model" not in part:
                raise PreconditionError("each part needs a 'model'")
            graphs.append(build_model(part["model"], part.get("params", {}), seed + i))
        return disjoint_union(*graphs)
    raise PreconditionError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")


MODELS = (
    "cycle",
    "path",
    "complete",
    "complete-bipartite",
    "grid",
    "theta",
    "gnp",
    "multigraph",
    "min-degree",
    "doubled-cycle",
    "disjoint-union",
)
