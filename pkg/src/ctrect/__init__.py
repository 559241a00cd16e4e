"""Composition-tableau rectification toolkit.

Validated tableau families on a shared grid carrier, the column-sort
bijection between composition tableaux and reverse semistandard Young
tableaux, jeu-de-taquin rectification with full slide traces, direct k-cell
rectification of composition tableaux, the eviction ordering, evacuation,
Schur and monomial (quasi)symmetric polynomial expansions, and an exhaustive
small-instance verification harness, all exposed through one CLI.
"""

from .bijection import rho, rho_inv
from .ct_rectify import PhiState, eviction, phi, phi_steps
from .jeu_de_taquin import (
    ShiftReport,
    SlideStep,
    SlideTrace,
    dominant_path,
    evacuate,
    is_diagonally_dominant,
    rectify_k,
    rectify_k_steps,
    rectify_once,
    replay,
    shifting_entries,
)
from .polynomials import (
    Polynomial,
    compositions,
    enumerate_ct,
    enumerate_rssyt,
    enumerate_ssyt,
    is_quasisymmetric,
    is_symmetric,
    monomial_qsym_expand,
    monomial_sym_expand,
    parse_polynomial,
    partitions,
    render_polynomial,
    schur_expand,
    weight_monomial,
)
from .tableaux import (
    Cell,
    CompositionShape,
    Filling,
    InvalidTableauError,
    InvariantViolationError,
    KINDS,
    ParseError,
    PartitionShape,
    Row,
    ShapeUndefinedError,
    TableauKind,
    Violation,
    Weight,
    filling_from_json,
    filling_to_json,
    parse_filling,
    render_filling,
    shape_of,
    validate,
    violations,
    weight_of,
)
from .verify import Counterexample, PROPERTY_NAMES, VerifyReport, run_property

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "CompositionShape",
    "Counterexample",
    "Filling",
    "InvalidTableauError",
    "InvariantViolationError",
    "KINDS",
    "ParseError",
    "PartitionShape",
    "PhiState",
    "Polynomial",
    "PROPERTY_NAMES",
    "Row",
    "ShapeUndefinedError",
    "ShiftReport",
    "SlideStep",
    "SlideTrace",
    "TableauKind",
    "VerifyReport",
    "Violation",
    "Weight",
    "compositions",
    "dominant_path",
    "enumerate_ct",
    "enumerate_rssyt",
    "enumerate_ssyt",
    "evacuate",
    "eviction",
    "filling_from_json",
    "filling_to_json",
    "is_diagonally_dominant",
    "is_quasisymmetric",
    "is_symmetric",
    "monomial_qsym_expand",
    "monomial_sym_expand",
    "parse_filling",
    "parse_polynomial",
    "partitions",
    "phi",
    "phi_steps",
    "rectify_k",
    "rectify_k_steps",
    "rectify_once",
    "render_filling",
    "render_polynomial",
    "replay",
    "rho",
    "rho_inv",
    "run_property",
    "schur_expand",
    "shape_of",
    "shifting_entries",
    "validate",
    "violations",
    "weight_monomial",
    "weight_of",
]
