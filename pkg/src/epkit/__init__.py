"""Certificates for edge-disjoint long cycles and their hitting sets.

For a multigraph ``G`` and integers ``k >= 0``, ``l >= 2``,
:func:`solve_long` returns either ``k`` edge-disjoint cycles of length at
least ``l`` or at most ``8k(l-1)(ceil(log2(kl))+1)`` edges meeting all of
them. :func:`solve_classic` does the same for ordinary cycles on simple
graphs, vertex- or edge-disjoint. The :mod:`epkit.oracle` module holds
exhaustive checkers for small instances.
"""

from .certificates import Certificate, ClassicCertificate
from .classic import g_classic, solve_classic
from .errors import BudgetExceeded, InvariantViolation, PreconditionError, TheoremGap
from .graph import ContractionMap, Cycle, Multigraph, Path
from .longcycles import find_reduction, g_long, sigma_lift, solve_long

__all__ = [
    "BudgetExceeded",
    "Certificate",
    "ClassicCertificate",
    "ContractionMap",
    "Cycle",
    "InvariantViolation",
    "Multigraph",
    "Path",
    "PreconditionError",
    "TheoremGap",
    "find_reduction",
    "g_classic",
    "g_long",
    "sigma_lift",
    "solve_classic",
    "solve_long",
]
__version__ = "0.1.0"
