"""Positivity, Legendrian fronts and Lagrangian filling certificates for
knot diagrams, in exact integer arithmetic."""

from .diagram import (
    DiagramError,
    OrientedDiagram,
    Positivity,
    PositivityClass,
    canonical_genus,
    classify,
    diagram_from_text,
    genus_estimate,
    is_alternating,
    seifert_decompose,
    signature,
)
from .filling import (
    CertificateError,
    CobordismCertificate,
    FillingError,
    FillingReport,
    Move,
    generate_filling,
    strand_removal_moves,
    verify_certificate,
)
from .homflypt import homfly, max_deg_v, mfw_tb_bound
from .laurent import LaurentPoly2
from .legendrian import FrontDiagram, check_ruling, find_ruling, front_from_mondrian, parse_front, rot, tb
from .mondrian import Mode, MondrianDiagram, MondrianError, to_mondrian, validate_mondrian

__version__ = "0.1.0"

__all__ = [
    "CertificateError",
    "CobordismCertificate",
    "DiagramError",
    "FillingError",
    "FillingReport",
    "FrontDiagram",
    "LaurentPoly2",
    "Mode",
    "MondrianDiagram",
    "MondrianError",
    "Move",
    "OrientedDiagram",
    "Positivity",
    "PositivityClass",
    "canonical_genus",
    "check_ruling",
    "classify",
    "diagram_from_text",
    "find_ruling",
    "front_from_mondrian",
    "generate_filling",
    "genus_estimate",
    "homfly",
    "is_alternating",
    "max_deg_v",
    "mfw_tb_bound",
    "parse_front",
    "rot",
    "seifert_decompose",
    "signature",
    "strand_removal_moves",
    "tb",
    "to_mondrian",
    "validate_mondrian",
    "verify_certificate",
]
