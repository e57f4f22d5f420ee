"""Biconnected decomposition of multigraphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .graph import Multigraph


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (as edge sets), their vertex sets and the cut vertices.

    Blocks are ordered by smallest edge id. A bridge or a loop forms a block
    on its own. Cut vertices are the vertices lying in two or more non-loop
    blocks; a loop hangs off its vertex without changing that status.
    """

    blocks: tuple[frozenset[int], ...]
    block_vertices: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    loop_blocks: frozenset[int] = field(default=frozenset())

    def __len__(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_of_edge(self) -> dict[int, int]:
        return {e: i for i, es in enumerate(self.blocks) for e in es}

    @cached_property
    def _blocks_at(self) -> dict[int, list[int]]:
        at: dict[int, list[int]] = {}
        for i, vs in enumerate(self.block_vertices):
            for v in vs:
                at.setdefault(v, []).append(i)
        return at

    def blocks_at(self, v: int) -> list[int]:
        return self._blocks_at.get(v, [])

    def cut_vertices_of(self, i: int) -> frozenset[int]:
        return self.block_vertices[i] & self.cut_vertices

    def leaf_blocks(self) -> list[int]:
        """Blocks containing at most one cut vertex."""
        return [i for i in range(len(self.blocks)) if len(self.cut_vertices_of(i)) <= 1]

    def tree(self) -> dict[tuple[str, int], list[tuple[str, int]]]:
        """Block-cut tree (a forest for disconnected graphs).

        Nodes are ``("B", block index)`` and ``("C", cut vertex)``.
        """
        adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for i in range(len(self.blocks)):
            adj[("B", i)] = [("C", v) for v in sorted(self.cut_vertices_of(i))]
        for v in sorted(self.cut_vertices):
            adj[("C", v)] = [("B", i) for i in self.blocks_at(v)]
        return adj


def blocks(g: Multigraph) -> BlockDecomposition:
    """Hopcroft-Tarjan on the edge stack; parallel edges are told apart by id."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: list[list[int]] = []
    clock = 0
    for root in g.vertices():
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[int] = []
        frames = [(root, -1, iter(g.incident(root)))]
        while frames:
            v, parent_edge, it = frames[-1]
            descended = False
            for e in it:
                if e == parent_edge:
                    continue
                w = g.other(e, v)
                if w == v:
                    continue
                if w not in disc:
                    edge_stack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    frames.append((w, e, iter(g.incident(w))))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            frames.pop()
            if frames:
                p = frames[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    block = []
                    while True:
                        f = edge_stack.pop()
                        block.append(f)
                        if f == parent_edge:
                            break
                    found.append(block)
    for e in g.loops():
        found.append([e])
    found.sort(key=min)
    edge_sets = tuple(frozenset(b) for b in found)
    vertex_sets = tuple(
        frozenset(v for e in b for v in g.endpoints(e)) for b in found
    )
    count: dict[int, int] = {}
    loops = set()
    for i, (es, vs) in enumerate(zip(edge_sets, vertex_sets)):
        if len(es) == 1 and len(vs) == 1:
            loops.add(i)
            continue
        for v in vs:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c >= 2)
    return BlockDecomposition(edge_sets, vertex_sets, cuts, frozenset(loops))
