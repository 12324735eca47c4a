"""Diagrams of opposition over ordered sets with an involutive negation."""
from .core import (
    AxiomReport,
    ClassCStructure,
    ElementId,
    NotInClassC,
    RawStructure,
    StructureError,
    admit,
    close_order,
    load_structure,
    product,
    validate_axioms,
    zeros,
)
from .diagrams import (
    Claim,
    Hypothesis,
    RelationKind,
    Shape,
    Verdict,
    VerificationReport,
    build_diagram,
    classify_pair,
    counterexample_search,
    expected_claims,
    render_dot,
    verify_shape,
)
from .statements import StatementContext, StatementKind, abs_max, compound_reduction_equivalent, eval_statement

__version__ = "0.1.0"
