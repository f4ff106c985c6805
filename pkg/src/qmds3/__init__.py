"""Hermitian self-orthogonal [n, 2, n-1] codes over GF(q^2) with dual
distance 3, for every odd prime power q and 4 <= n <= q^2 + 1, together
with the [[n, n-4, 3]]_q quantum MDS parameters they certify."""

from .construct import ChosenScalars, ConstructionResult, construct
from .gf import FieldCtx, hermitian_ip, make_field
from .matrix import GeneratorMatrix, from_text, to_text
from .partition import StandardPartition, build_partition
from .search import SearchConfig, exhaustive_search, randomized_repair
from .verify import (
    CodeCertificate,
    QuantumParams,
    brute_min_distance,
    certify,
    derive_quantum,
    dual_distance,
    min_distance,
)

__all__ = [
    "ChosenScalars",
    "CodeCertificate",
    "ConstructionResult",
    "FieldCtx",
    "GeneratorMatrix",
    "QuantumParams",
    "SearchConfig",
    "StandardPartition",
    "brute_min_distance",
    "build_partition",
    "certify",
    "construct",
    "derive_quantum",
    "dual_distance",
    "exhaustive_search",
    "from_text",
    "hermitian_ip",
    "make_field",
    "min_distance",
    "randomized_repair",
    "to_text",
]

__version__ = "0.1.0"
