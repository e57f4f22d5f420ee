"""Text formats for graphs and certificates.

Graph files start with ``multigraph <n> <m>`` followed by ``m`` lines
``<u> <v>`` of 0-based vertex indices. Edge ids are line positions, so a
certificate can be audited against the file without this library.
Certificates are JSON objects; a cycle is stored as its list of edge ids
with its vertex sequence alongside.
"""

from __future__ import annotations

import json
import re
from pathlib import Path as FsPath
from typing import Any

from .certificates import Certificate, ClassicCertificate
from .graph import Cycle, Multigraph


class FormatError(ValueError):
    """Input text is not a well-formed graph or certificate."""


def parse_graph(text: str) -> Multigraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "multigraph":
        raise FormatError(f"bad header {lines[0]!r}; expected 'multigraph <n> <m>'")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise FormatError("negative vertex or edge count")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges but {len(body)} lines follow")
    pairs = []
    for i, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"line {i}: expected two vertex indices")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"line {i}: vertex indices must be integers") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {i}: vertex index out of range 0..{n - 1}")
        pairs.append((u, v))
    return Multigraph.from_edges(n, pairs)


def format_graph(g: Multigraph) -> str:
    """Serialise with vertices and edges renumbered in ascending id order."""
    vs = {v: i for i, v in enumerate(g.vertices())}
    lines = [f"multigraph {len(vs)} {g.number_of_edges()}"]
    for e in g.edges():
        u, v = g.endpoints(e)
        lines.append(f"{vs[u]} {vs[v]}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | FsPath) -> Multigraph:
    return parse_graph(FsPath(path).read_text(encoding="utf-8"))


def write_graph(g: Multigraph, path: str | FsPath) -> None:
    FsPath(path).write_text(format_graph(g), encoding="utf-8")


def certificate_to_dict(cert: Certificate | ClassicCertificate) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": cert.kind, "k": cert.k, "bound": cert.bound}
    if isinstance(cert, Certificate):
        out["solver"] = "long"
        out["ell"] = cert.ell
    else:
        out["solver"] = "classic"
        out["mode"] = cert.mode
        out["trivial"] = cert.trivial
    if cert.kind == "packing":
        out["cycles"] = [list(c.edges) for c in cert.cycles]
        out["cycle_vertices"] = [list(c.vertices) for c in cert.cycles]
    else:
        out["hitting"] = sorted(cert.hitting)
    out["provenance"] = list(cert.provenance)
    return out


def certificate_from_dict(data: dict[str, Any]) -> Certificate | ClassicCertificate:
    try:
        kind = data["kind"]
        if kind not in ("packing", "hitting"):
            raise FormatError(f"unknown certificate kind {kind!r}")
        edge_lists = data.get("cycles", [])
        vertex_lists = data.get("cycle_vertices", [])
        if len(edge_lists) != len(vertex_lists):
            raise FormatError("'cycles' and 'cycle_vertices' differ in length")
        cycles = [Cycle(tuple(vs), tuple(es)) for vs, es in zip(vertex_lists, edge_lists)]
        hitting = frozenset(data.get("hitting", []))
        if data.get("solver", "long") == "long":
            return Certificate(
                kind, data["k"], data["ell"], data["bound"], cycles, hitting, list(data.get("provenance", []))
            )
        return ClassicCertificate(
            kind,
            data["mode"],
            data["k"],
            data["bound"],
            cycles,
            hitting,
            bool(data.get("trivial", False)),
            list(data.get("provenance", [])),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed certificate: {exc}") from exc


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps_certificate(cert: Certificate | ClassicCertificate) -> str:
    """JSON with one line per cycle or id list."""
    text = json.dumps(certificate_to_dict(cert), indent=2)
    text = _INT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def loads_certificate(text: str) -> Certificate | ClassicCertificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("certificate must be a JSON object")
    return certificate_from_dict(data)
