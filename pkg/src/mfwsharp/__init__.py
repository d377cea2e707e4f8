"""HOMFLY-PT polynomials of link diagrams and the sharpness of their degree bounds."""

from .bounds import BoundsReport, bounds_report, positive_equalities_check
from .castle import LemmaViolation, build_castle, find_appropriate_point
from .decompose import MoveScript, SharpnessCertificate, decompose_no_nested, decompose_positive, replay, verify
from .diagram import (
    DiagramError,
    LinkDiagram,
    braid_closure,
    canonical,
    diagrams_isomorphic,
    mirror,
    parse_braid,
    parse_pd,
    serialize_pd,
    zero_crossing,
)
from .laurent import LaurentPoly2, unlink
from .moves import apply_artin, apply_double, apply_shackle, artin_sites, double_regions
from .resolution import homfly, homfly_coherent, homfly_oracle
from .seifert import SeifertStructure, diagram_stats

__all__ = [
    "BoundsReport",
    "DiagramError",
    "LaurentPoly2",
    "LemmaViolation",
    "LinkDiagram",
    "MoveScript",
    "SeifertStructure",
    "SharpnessCertificate",
    "apply_artin",
    "apply_double",
    "apply_shackle",
    "artin_sites",
    "bounds_report",
    "braid_closure",
    "build_castle",
    "canonical",
    "decompose_no_nested",
    "decompose_positive",
    "diagram_stats",
    "diagrams_isomorphic",
    "double_regions",
    "find_appropriate_point",
    "homfly",
    "homfly_coherent",
    "homfly_oracle",
    "mirror",
    "parse_braid",
    "parse_pd",
    "positive_equalities_check",
    "replay",
    "serialize_pd",
    "unlink",
    "verify",
    "zero_crossing",
]
