"""Exact computer algebra around conjugation spaces.

Cayley-Dickson algebras with the involution tau, Jordan-algebra projective
planes, the mod 2 Steenrod algebra, finite unstable algebras with the
doubling functor, and necessary conditions for being a real locus.
"""

from __future__ import annotations

from .cayley_dickson import CDElement, parse_element
from .constructions import AttachingElement, GroupPresentation, build_presentation_complex, realize_four_complex
from .errors import (
    ConjzooError,
    DomainError,
    InvalidAlgebra,
    NotADoubleCandidate,
    NotAllRelatorsSquare,
    NotPoincareDuality,
    ParseError,
    UsageError,
)
from .jordan import HermitianMatrix, classify_stratum, jordan_mul
from .obstructions import RealizabilityReport, check_realizable
from .steenrod import SteenrodElement, adem_normalize, admissible_basis, is_decomposable
from .unstable import DoublePair, UnstableAlgebra, check_double_pair, double, halve, sw_classes, validate, wu_classes

__version__ = "0.1.0"

__all__ = [
    "AttachingElement",
    "CDElement",
    "ConjzooError",
    "DomainError",
    "DoublePair",
    "GroupPresentation",
    "HermitianMatrix",
    "InvalidAlgebra",
    "NotADoubleCandidate",
    "NotAllRelatorsSquare",
    "NotPoincareDuality",
    "ParseError",
    "RealizabilityReport",
    "SteenrodElement",
    "UnstableAlgebra",
    "UsageError",
    "adem_normalize",
    "admissible_basis",
    "build_presentation_complex",
    "check_double_pair",
    "check_realizable",
    "classify_stratum",
    "double",
    "halve",
    "is_decomposable",
    "jordan_mul",
    "parse_element",
    "realize_four_complex",
    "sw_classes",
    "validate",
    "wu_classes",
]
