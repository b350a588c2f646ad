"""Flag fault-tolerant error correction workbench."""

from .pauli import PauliOperator, StabilizerCode, MinWeightTable, build_min_weight_table
from .catalog import CodeSpec, build_code, validate_code

__all__ = [
    "PauliOperator",
    "StabilizerCode",
    "MinWeightTable",
    "build_min_weight_table",
    "CodeSpec",
    "build_code",
    "validate_code",
]
