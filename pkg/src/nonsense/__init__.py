"""Semantics and sequent calculi for the classical fragments of the
three-valued nonsense logics B3 (Bochvar) and H3 (Hallden)."""

from .calculus import (
    Calculus,
    CheckReport,
    Principal,
    ProofTree,
    Rule,
    StepError,
    check_proof,
    is_cut_free,
    premises_for,
)
from .derived import elaborate
from .formula import (
    SIGMA0,
    SIGMA1,
    SIGMA1H,
    SIGMA2,
    SIGMA2B,
    Atom,
    Binary,
    Conn,
    Formula,
    Signature,
    Unary,
    degree,
    expand_to,
    parse,
    render,
    variables,
)
from .prover import (
    Refutation,
    prove,
    prove_classical,
    prune_antecedent,
    prune_succedent,
    widen_antecedent,
    widen_succedent,
)
from .semantics import (
    B3,
    CPL,
    H3,
    Countermodel,
    InferenceReport,
    Logic,
    TruthValue,
    Valuation,
    all_valuations,
    classify,
    countermodel,
    evaluate,
    holds,
    is_valid,
    truth_table,
)
from .sequent import Sequent, parse_sequent, render_sequent

__version__ = "0.1.0"

__all__ = [
    "Sequent",
    "parse_sequent",
    "render_sequent",
    "Atom",
    "B3",
    "Binary",
    "CPL",
    "Calculus",
    "CheckReport",
    "Conn",
    "Countermodel",
    "Formula",
    "H3",
    "InferenceReport",
    "Logic",
    "Principal",
    "ProofTree",
    "Refutation",
    "Rule",
    "SIGMA0",
    "SIGMA1",
    "SIGMA1H",
    "SIGMA2",
    "SIGMA2B",
    "Signature",
    "StepError",
    "TruthValue",
    "Unary",
    "Valuation",
    "all_valuations",
    "check_proof",
    "classify",
    "countermodel",
    "degree",
    "elaborate",
    "evaluate",
    "expand_to",
    "holds",
    "is_cut_free",
    "is_valid",
    "parse",
    "premises_for",
    "prove",
    "prove_classical",
    "prune_antecedent",
    "prune_succedent",
    "render",
    "truth_table",
    "variables",
    "widen_antecedent",
    "widen_succedent",
    "__version__",
]
