"""
Exact arithmetic for diagram categories of perfect matchings and their
matrix representation.

The package has three layers: diagrams (matchings with loop-counting
composition, plus rational linear combinations of them), terms of the free
symmetric self-adjunction on one generator (with `links` interpreting them
as diagrams), and the Kronecker-product matrix representation over exact
rationals (with rank and commutation checks).  A CLI is installed as
`brauercat`.
"""

from .algebra import (
    AlgebraElement,
    add,
    brauer_dimension,
    element_from_json,
    element_to_json,
    multiply,
    scale,
    tl_dimension,
)
from .diagrams import (
    BOTTOM,
    TOP,
    Diagram,
    NotationError,
    ShapeMismatchError,
    WeightedDiagram,
    compose,
    compose_weighted,
    diagram_from_json,
    diagram_to_json,
    enumerate_diagrams,
    format_diagram,
    format_weighted,
    from_permutation,
    identity,
    is_noncrossing,
    parse_diagram,
    transpose,
    weighted_from_json,
    weighted_to_json,
)
from .matrices import (
    ExactMatrix,
    FaithfulnessReport,
    InvariantTerm,
    axiom_matrix_report,
    commutant_check,
    commutant_report,
    faithfulness_report,
    functor_report,
    invariant_term,
    kron,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    orthogonal_battery,
    orthogonal_check,
    parse_invariant_term,
    rank_of_span,
    rep_term,
    represent,
    represent_element,
)
from .render import render_ascii, render_tikz
from .reports import CheckReport, CheckResult
from .terms import (
    Chi,
    Comp,
    FApp,
    Gamma,
    Id,
    Phi,
    Term,
    TermSyntaxError,
    TermTypeError,
    axiom_instances,
    links,
    parse_term,
    print_term,
    random_term,
    term_for_diagram,
    term_from_json,
    term_to_json,
    terms_equal,
    typecheck,
    verify_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "BOTTOM",
    "CheckReport",
    "CheckResult",
    "Chi",
    "Comp",
    "Diagram",
    "ExactMatrix",
    "FApp",
    "FaithfulnessReport",
    "Gamma",
    "Id",
    "InvariantTerm",
    "NotationError",
    "Phi",
    "ShapeMismatchError",
    "TOP",
    "Term",
    "TermSyntaxError",
    "TermTypeError",
    "WeightedDiagram",
    "add",
    "axiom_instances",
    "axiom_matrix_report",
    "brauer_dimension",
    "commutant_check",
    "commutant_report",
    "compose",
    "compose_weighted",
    "diagram_from_json",
    "diagram_to_json",
    "element_from_json",
    "element_to_json",
    "enumerate_diagrams",
    "faithfulness_report",
    "format_diagram",
    "format_weighted",
    "from_permutation",
    "functor_report",
    "identity",
    "invariant_term",
    "is_noncrossing",
    "kron",
    "links",
    "matrix_from_json",
    "matrix_to_csv",
    "matrix_to_json",
    "multiply",
    "orthogonal_battery",
    "orthogonal_check",
    "parse_diagram",
    "parse_invariant_term",
    "parse_term",
    "print_term",
    "random_term",
    "rank_of_span",
    "render_ascii",
    "render_tikz",
    "rep_term",
    "represent",
    "represent_element",
    "scale",
    "term_for_diagram",
    "term_from_json",
    "term_to_json",
    "terms_equal",
    "tl_dimension",
    "transpose",
    "typecheck",
    "verify_axioms",
]
