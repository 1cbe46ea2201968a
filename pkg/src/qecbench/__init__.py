"""Stabilizer quantum error correction workbench."""

from .catalog import catalog, catalog_names
from .errors import (
    CapacityError,
    ConstructionError,
    DimensionError,
    DomainError,
    PauliParseError,
    QECError,
    UnknownCodeError,
    ValidationError,
)
from .experiments import (
    TrialStats,
    analytic_failure,
    analytic_success,
    concat_failure,
    pseudothreshold,
    run_monte_carlo,
    sweep,
)
from .gf2 import HAMMING_7, REPETITION_3, BinaryMatrix, check_duality, css_compatible, parity_syndrome
from .noise import NoiseChannel, Outcome, SyndromeTable, build_table, classify_residual, decode, sample_error
from .pauli import PauliOperator, commutes, pauli_from_string, pauli_multiply, weight
from .stabilizer import (
    StabilizerCode,
    Syndrome,
    css_from_parity_checks,
    distance,
    enumerate_group,
    is_degenerate,
    logical_operators,
    perfect_code_bound,
    syndrome_of,
    validate_generators,
)

__all__ = [
    "BinaryMatrix",
    "CapacityError",
    "ConstructionError",
    "DimensionError",
    "DomainError",
    "HAMMING_7",
    "NoiseChannel",
    "Outcome",
    "PauliOperator",
    "PauliParseError",
    "QECError",
    "REPETITION_3",
    "StabilizerCode",
    "Syndrome",
    "SyndromeTable",
    "TrialStats",
    "UnknownCodeError",
    "ValidationError",
    "analytic_failure",
    "analytic_success",
    "build_table",
    "catalog",
    "catalog_names",
    "check_duality",
    "classify_residual",
    "commutes",
    "concat_failure",
    "css_compatible",
    "css_from_parity_checks",
    "decode",
    "distance",
    "enumerate_group",
    "is_degenerate",
    "logical_operators",
    "parity_syndrome",
    "pauli_from_string",
    "pauli_multiply",
    "perfect_code_bound",
    "pseudothreshold",
    "run_monte_carlo",
    "sample_error",
    "sweep",
    "syndrome_of",
    "validate_generators",
    "weight",
]

__version__ = "0.1.0"
