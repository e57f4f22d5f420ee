"""Certificate containers for both solvers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .graph import Cycle

Kind = Literal["packing", "hitting"]
Mode = Literal["vertex", "edge"]


@dataclass
class Certificate:
    """Either ``k`` edge-disjoint cycles of length ``>= ell`` or an edge set
    meeting every such cycle, with the bound it must respect."""

    kind: Kind
    k: int
    ell: int
    bound: int
    cycles: list[Cycle] = field(default_factory=list)
    hitting: frozenset[int] = frozenset()
    provenance: list[str] = field(default_factory=list)

    @property
    def is_packing(self) -> bool:
        return self.kind == "packing"

    @property
    def size(self) -> int:
        return len(self.cycles) if self.is_packing else len(self.hitting)


@dataclass
class ClassicCertificate:
    """Either ``k`` vertex-disjoint cycles or a vertex/edge set meeting every
    cycle. ``trivial`` marks a hitting set that is simply everything."""

    kind: Kind
    mode: Mode
    k: int
    bound: int
    cycles: list[Cycle] = field(default_factory=list)
    hitting: frozenset[int] = frozenset()
    trivial: bool = False
    provenance: list[str] = field(default_factory=list)

    @property
    def is_packing(self) -> bool:
        return self.kind == "packing"

    @property
    def size(self) -> int:
        return len(self.cycles) if self.is_packing else len(self.hitting)
