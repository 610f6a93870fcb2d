"""SU(2) block decomposition of 2d-qubit spin Hamiltonians in the Bell gems basis.

The package splits the dynamics of a 2d-partite two-level spin system into
independent 2x2 blocks: it builds the entangled Bell gems basis, evaluates
Hamiltonian matrix elements in that basis through a per-site trace rule,
classifies which interaction patterns guarantee the block structure, extracts
the 2x2 blocks and their Pauli-like parameters, and propagates each block
through piecewise-constant schedules.
"""

from bellgems.pauli import (
    PauliString,
    TraceCase,
    pauli_matrix,
    index_to_string,
    string_to_index,
    tensor_product,
    trace_product,
    trace_case,
)
from bellgems.basis import BellGemsBasis, build_basis, gem_state, correspondent
from bellgems.hamiltonian import (
    CoefficientSchedule,
    HamiltonianTerm,
    HamiltonianSpec,
    validate,
    assemble_dense,
    gem_matrix,
    gem_matrix_element,
)
from bellgems.classifier import InteractionPattern, classify, predict_block_structure
from bellgems.decomposition import (
    EigenPairing,
    BlockDecomposition,
    BlockParams,
    eigen_pairing,
    alpha_basis,
    extract_blocks,
    block_params,
    block_params_from_block,
    reconstruct_block,
    split_block,
)
from bellgems.evolution import (
    BlockSchedule,
    PropagatorResult,
    segment_exponential,
    block_propagator,
    evolve,
    verify_unitary,
    verify_group_structure,
)
from bellgems import errors

__all__ = [
    "PauliString",
    "TraceCase",
    "pauli_matrix",
    "index_to_string",
    "string_to_index",
    "tensor_product",
    "trace_product",
    "trace_case",
    "BellGemsBasis",
    "build_basis",
    "gem_state",
    "correspondent",
    "CoefficientSchedule",
    "HamiltonianTerm",
    "HamiltonianSpec",
    "validate",
    "assemble_dense",
    "gem_matrix",
    "gem_matrix_element",
    "InteractionPattern",
    "classify",
    "predict_block_structure",
    "EigenPairing",
    "BlockDecomposition",
    "BlockParams",
    "eigen_pairing",
    "alpha_basis",
    "extract_blocks",
    "block_params",
    "block_params_from_block",
    "reconstruct_block",
    "split_block",
    "BlockSchedule",
    "PropagatorResult",
    "segment_exponential",
    "block_propagator",
    "evolve",
    "verify_unitary",
    "verify_group_structure",
    "errors",
]

__version__ = "0.1.0"
