"""Quantum discord dynamics of two qubits sharing a lossy cavity mode."""

from .correlations import (
    CorrelationTriple,
    MeasurementBasis,
    classical_correlation,
    conditional_ensemble,
    correlations,
    mutual_information,
)
from .dynamics import (
    IntegrationConfig,
    IntegrationError,
    Trajectory,
    TrajectorySample,
    analytic_single_excitation,
    integrate,
    steady_state_estimate,
)
from .model import (
    ModelParams,
    StateParams,
    initial_state_correlated,
    initial_state_factorized,
    interaction_hamiltonian,
    lindblad_rhs,
    subradiant_vacuum_projector,
    total_excitation_operator,
)
from .operators import (
    DensityMatrix,
    InvalidStateError,
    hermitian_eigendecomposition,
    kron,
    partial_trace,
    tensor,
    von_neumann_entropy,
)
from .runner import (
    ScenarioConfig,
    ScenarioResult,
    ScenarioSummary,
    run_scenario,
    run_sweep,
)

__all__ = [
    "CorrelationTriple",
    "MeasurementBasis",
    "classical_correlation",
    "conditional_ensemble",
    "correlations",
    "mutual_information",
    "IntegrationConfig",
    "IntegrationError",
    "Trajectory",
    "TrajectorySample",
    "analytic_single_excitation",
    "integrate",
    "steady_state_estimate",
    "ModelParams",
    "StateParams",
    "initial_state_correlated",
    "initial_state_factorized",
    "interaction_hamiltonian",
    "lindblad_rhs",
    "subradiant_vacuum_projector",
    "total_excitation_operator",
    "DensityMatrix",
    "InvalidStateError",
    "hermitian_eigendecomposition",
    "kron",
    "partial_trace",
    "tensor",
    "von_neumann_entropy",
    "ScenarioConfig",
    "ScenarioResult",
    "ScenarioSummary",
    "run_scenario",
    "run_sweep",
]

__version__ = "0.1.0"
