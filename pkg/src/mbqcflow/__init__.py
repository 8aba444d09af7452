"""Classical signal-flow compiler for measurement patterns on graph states.

Measuring a graph state drives a computation, but every random outcome
leaves a Pauli byproduct behind. This package cancels those byproducts
symbolically with graph-state stabilizers, producing the exact classical
feedforward: which earlier outcomes flip each measurement angle, and
which X/Z corrections the output qubits need. A dense state-vector
simulator verifies every compiled pattern by enumerating all outcome
branches and checking that the corrected outputs coincide.
"""

from .catalog import chain5, hbranch, linear_chain
from .compiler import AdaptedAngle, SignalFlow, adapt_angles, eliminate, initial_byproduct
from .errors import (
    BranchCapError,
    DimensionMismatchError,
    EliminationError,
    InvalidQubitError,
    MbqcflowError,
    MissingOutcomeError,
    NoFlowError,
    NonConstantExponentError,
    NormalizationError,
    PatternFormatError,
    PatternValidationError,
    SymbolicAngleError,
)
from .gf2 import Gf2Expr
from .pattern import FlowMap, Pattern, Violation, find_flow, stabilizer, validate
from .patternio import PatternDocument, load_document, parse_document, render_document
from .pauli import PauliWord
from .simulator import (
    DEFAULT_BRANCH_CAP,
    PROB_TOL,
    STATE_TOL,
    BranchResult,
    StateVector,
    apply_pauli,
    check_z_substitution,
    enumerate_branches,
    fidelity,
    max_pairwise_infidelity,
    measure,
    prepare,
    reference_chain_unitary,
    run_branch,
    stabilizer_deviation,
)

__version__ = "0.1.0"

__all__ = [
    "AdaptedAngle",
    "BranchCapError",
    "BranchResult",
    "DEFAULT_BRANCH_CAP",
    "DimensionMismatchError",
    "EliminationError",
    "FlowMap",
    "Gf2Expr",
    "InvalidQubitError",
    "MbqcflowError",
    "MissingOutcomeError",
    "NoFlowError",
    "NonConstantExponentError",
    "NormalizationError",
    "PROB_TOL",
    "Pattern",
    "PatternDocument",
    "PatternFormatError",
    "PatternValidationError",
    "PauliWord",
    "STATE_TOL",
    "SignalFlow",
    "StateVector",
    "SymbolicAngleError",
    "Violation",
    "adapt_angles",
    "apply_pauli",
    "chain5",
    "check_z_substitution",
    "eliminate",
    "enumerate_branches",
    "fidelity",
    "find_flow",
    "hbranch",
    "initial_byproduct",
    "linear_chain",
    "load_document",
    "max_pairwise_infidelity",
    "measure",
    "parse_document",
    "prepare",
    "reference_chain_unitary",
    "render_document",
    "run_branch",
    "stabilizer",
    "stabilizer_deviation",
    "validate",
]
