"""Constructive k-cordial labelings of hypertrees for k = 2, 3, with a brute-force oracle."""

from .errors import (
    ContractViolation,
    InvariantViolation,
    NotAHypertreeError,
    SprigSearchExhausted,
    ValidationError,
)
from .hypergraph import Hypergraph, analyze, is_hypertree, remove
from .labeler import label, label_strong
from .labeling import Labeling, histogram, is_k_cordial, is_strong_on
from .oracle import Decision, OracleResult, count_k_cordial, exists_k_cordial
from .formats import ParseError, parse_ht, to_dot, write_ht

__all__ = [
    "ContractViolation",
    "Decision",
    "Hypergraph",
    "InvariantViolation",
    "Labeling",
    "NotAHypertreeError",
    "OracleResult",
    "ParseError",
    "SprigSearchExhausted",
    "ValidationError",
    "analyze",
    "count_k_cordial",
    "exists_k_cordial",
    "histogram",
    "is_hypertree",
    "is_k_cordial",
    "is_strong_on",
    "label",
    "label_strong",
    "parse_ht",
    "remove",
    "to_dot",
    "write_ht",
]
