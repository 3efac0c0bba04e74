"""Stabilizer codes: symplectic vectors, Gray map, B-form, distances, lattice."""

from qnl.stabilizer.bform import bform_reduce, replay_log, transform_vector
from qnl.stabilizer.code import (
    ENUMERATION_LIMIT_BITS,
    apply_pauli,
    binary_weight,
    bform_code,
    codewords,
    graph_state_generators,
    hamming_weight,
    is_real,
    is_self_dual,
    symplectic_product,
)
from qnl.stabilizer.distance import bounded_search, min_distance
from qnl.stabilizer.gray import gray_decode, gray_encode
from qnl.stabilizer.lattice import GapReport, lattice_min_norm, spectral_gap
from qnl.stabilizer.models import (
    BFormCode,
    CodeError,
    DistanceResult,
    EnumerationLimitError,
    GeneratorMatrix,
    PauliVector,
    ReductionError,
    SearchModeError,
)

__all__ = [
    "BFormCode",
    "CodeError",
    "DistanceResult",
    "ENUMERATION_LIMIT_BITS",
    "EnumerationLimitError",
    "GapReport",
    "GeneratorMatrix",
    "PauliVector",
    "ReductionError",
    "SearchModeError",
    "apply_pauli",
    "binary_weight",
    "bform_code",
    "bform_reduce",
    "bounded_search",
    "codewords",
    "gray_decode",
    "gray_encode",
    "graph_state_generators",
    "hamming_weight",
    "is_real",
    "is_self_dual",
    "lattice_min_norm",
    "min_distance",
    "replay_log",
    "spectral_gap",
    "symplectic_product",
    "transform_vector",
]
