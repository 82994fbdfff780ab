"""Exact computation in the lamplighter groups Gamma_n(R) and the horocyclic products H_n(R)."""

from .an_ring import INF, AnContext, AnElement, from_sequences, mul_shift, mul_unit, seq_a
from .cayley import Report, cayley_ball, hn_ball, two_cell_report, verify_iso, verify_relators
from .errors import (
    ConfigurationError,
    InvalidVertexError,
    LamplighterError,
    NotInvertibleError,
    ParseError,
    RingMismatchError,
    UnsupportedError,
)
from .graphio import LabeledGraph, export, import_json
from .group_gamma import GammaGroup, GroupElement
from .ring import Ring, RingElem, Z, Zmod, parse_ring
from .trees import HnVertex, TreeAddress, hn_adjacent, neighbors, phi, phi_inv
from .words import Token, format_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "INF", "AnContext", "AnElement", "from_sequences", "mul_shift", "mul_unit", "seq_a",
    "Report", "cayley_ball", "hn_ball", "two_cell_report", "verify_iso", "verify_relators",
    "ConfigurationError", "InvalidVertexError", "LamplighterError", "NotInvertibleError",
    "ParseError", "RingMismatchError", "UnsupportedError",
    "LabeledGraph", "export", "import_json",
    "GammaGroup", "GroupElement",
    "Ring", "RingElem", "Z", "Zmod", "parse_ring",
    "HnVertex", "TreeAddress", "hn_adjacent", "neighbors", "phi", "phi_inv",
    "Token", "format_word", "parse_word",
]
