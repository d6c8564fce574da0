"""Finite-model oracle: an independent semantics check for the engine."""

from .formula import FALSE, TRUE, And, Atom, Exists, Formula, Not, Var, conj, negate, pretty, to_formula, vocabulary
from .models import (
    Entailment,
    EntailmentResult,
    Interpretation,
    TooLarge,
    entails,
    find_model,
    herbrand_interpretation,
    holds,
    satisfiable,
    smallest_model,
)

__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "Atom",
    "Entailment",
    "EntailmentResult",
    "Exists",
    "Formula",
    "Interpretation",
    "Not",
    "TooLarge",
    "Var",
    "conj",
    "entails",
    "find_model",
    "herbrand_interpretation",
    "holds",
    "negate",
    "pretty",
    "satisfiable",
    "smallest_model",
    "to_formula",
    "vocabulary",
]
