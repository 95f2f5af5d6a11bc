"""Two qubits coupled to a common lossy cavity mode.

Resonant interaction-picture Hamiltonian with equal couplings, photon loss as
the single dissipation channel. Tensor order is (qubit A, qubit B, cavity);
qubit basis is (ground, excited), so the two-qubit block ordering is
(gg, ge, eg, ee).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .operators import DensityMatrix, kron, tensor

SIGMA_MINUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
SIGMA_PLUS = SIGMA_MINUS.conj().T


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters: coupling, loss-to-coupling ratio, Fock truncation."""

    omega: float = 1.0
    gamma_ratio: float = 0.2
    fock_cutoff: int = 2

    def __post_init__(self) -> None:
        if not self.omega > 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if self.gamma_ratio < 0.0:
            raise ValueError(f"gamma_ratio must be nonnegative, got {self.gamma_ratio}")
        if self.fock_cutoff < 1:
            raise ValueError(f"fock_cutoff must be at least 1, got {self.fock_cutoff}")

    @property
    def gamma(self) -> float:
        """Cavity decay rate."""
        return self.gamma_ratio * self.omega

    @property
    def fock_dim(self) -> int:
        return self.fock_cutoff + 1

    @property
    def dims(self) -> tuple[int, int, int]:
        return (2, 2, self.fock_dim)

    @property
    def dim(self) -> int:
        return 4 * self.fock_dim


@dataclass(frozen=True)
class StateParams:
    """Angles parameterizing the shared-excitation initial state.

    Amplitudes are alpha = sin(theta)cos(phi) on |ge,0>, beta =
    sin(theta)sin(phi) on |eg,0> and gamma = cos(theta) on |gg,1>.
    """

    theta: float = math.pi / 3.0
    phi: float = 3.0 * math.pi / 4.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= math.pi / 2.0:
            raise ValueError(f"theta must lie in [0, pi/2], got {self.theta}")
        if not 0.0 <= self.phi <= math.pi:
            raise ValueError(f"phi must lie in [0, pi], got {self.phi}")

    @property
    def alpha(self) -> float:
        return math.sin(self.theta) * math.cos(self.phi)

    @property
    def beta(self) -> float:
        return math.sin(self.theta) * math.sin(self.phi)

    @property
    def gamma(self) -> float:
        return math.cos(self.theta)


def annihilation(fock_dim: int) -> np.ndarray:
    """Bosonic lowering operator truncated to ``fock_dim`` levels."""
    if fock_dim < 2:
        raise ValueError(f"fock_dim must be at least 2, got {fock_dim}")
    return np.diag(np.sqrt(np.arange(1, fock_dim, dtype=float)), k=1).astype(complex)


def qubit_lowering(which: int, fock_dim: int) -> np.ndarray:
    """Lowering operator of qubit 0 (A) or 1 (B) on the full space."""
    eye_f = np.eye(fock_dim, dtype=complex)
    eye_q = np.eye(2, dtype=complex)
    if which == 0:
        return tensor(SIGMA_MINUS, eye_q, eye_f)
    if which == 1:
        return tensor(eye_q, SIGMA_MINUS, eye_f)
    raise ValueError(f"which must be 0 or 1, got {which}")


def photon_annihilation(fock_dim: int) -> np.ndarray:
    """Cavity lowering operator on the full space."""
    return tensor(np.eye(4, dtype=complex), annihilation(fock_dim))


def total_excitation_operator(fock_dim: int) -> np.ndarray:
    """Sum of both qubit populations and the photon number, full space."""
    num_q = SIGMA_PLUS @ SIGMA_MINUS
    a = annihilation(fock_dim)
    eye_q = np.eye(2, dtype=complex)
    eye_f = np.eye(fock_dim, dtype=complex)
    return (
        tensor(num_q, eye_q, eye_f)
        + tensor(eye_q, num_q, eye_f)
        + tensor(eye_q, eye_q, a.conj().T @ a)
    )


def interaction_hamiltonian(params: ModelParams) -> np.ndarray:
    """Resonant exchange Hamiltonian with equal couplings for both qubits."""
    a = photon_annihilation(params.fock_dim)
    raising = qubit_lowering(0, params.fock_dim).conj().T + qubit_lowering(1, params.fock_dim).conj().T
    h = params.omega * (raising @ a)
    return h + h.conj().T


def photon_loss_dissipator(rho: np.ndarray, gamma: float, fock_dim: int) -> np.ndarray:
    """Photon-loss contribution gamma*(a rho a+ - {a+ a, rho}/2) alone."""
    a = photon_annihilation(fock_dim)
    n_op = a.conj().T @ a
    return gamma * (a @ rho @ a.conj().T) - 0.5 * gamma * (n_op @ rho + rho @ n_op)


class _GeneratorOps:
    """Precomputed operators for fast evaluation of the master equation."""

    def __init__(self, params: ModelParams) -> None:
        h = interaction_hamiltonian(params)
        a = photon_annihilation(params.fock_dim)
        n_op = a.conj().T @ a
        self.dim = params.dim
        self.gamma = params.gamma
        self.a = a
        self.a_dag = a.conj().T
        # Non-Hermitian drift absorbs the anticommutator part of the loss term.
        self.h_eff = h - 0.5j * params.gamma * n_op

    def rhs(self, rho: np.ndarray) -> np.ndarray:
        drift = self.h_eff @ rho
        out = -1j * (drift - drift.conj().T)
        if self.gamma != 0.0:
            out += self.gamma * (self.a @ rho @ self.a_dag)
        return out


@lru_cache(maxsize=None)
def _generator_ops(params: ModelParams) -> _GeneratorOps:
    return _GeneratorOps(params)


def lindblad_rhs(rho: DensityMatrix | np.ndarray, params: ModelParams) -> np.ndarray:
    """Right-hand side of the master equation at the given state."""
    mat = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    ops = _generator_ops(params)
    if mat.shape != (ops.dim, ops.dim):
        raise ValueError(f"state shape {mat.shape} does not match dimension {ops.dim}")
    return ops.rhs(mat)


def product_basis_vector(a: int, b: int, n: int, fock_dim: int) -> np.ndarray:
    """Unit vector |a b n> with qubit labels 0=ground, 1=excited."""
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError("qubit labels must be 0 or 1")
    if not 0 <= n < fock_dim:
        raise ValueError(f"photon number {n} outside cutoff {fock_dim - 1}")
    vec = np.zeros(4 * fock_dim, dtype=complex)
    vec[(2 * a + b) * fock_dim + n] = 1.0
    return vec


def collective_basis_matrix() -> np.ndarray:
    """Columns (gg, symmetric, antisymmetric, ee) in the bare two-qubit basis."""
    s = 1.0 / math.sqrt(2.0)
    cols = np.zeros((4, 4), dtype=complex)
    cols[0, 0] = 1.0                 # gg
    cols[2, 1] = s                   # (eg + ge)/sqrt(2)
    cols[1, 1] = s
    cols[2, 2] = s                   # (eg - ge)/sqrt(2)
    cols[1, 2] = -s
    cols[3, 3] = 1.0                 # ee
    return cols


def subradiant_vacuum_projector(fock_dim: int) -> np.ndarray:
    """Projector onto the antisymmetric qubit state with an empty cavity."""
    s = 1.0 / math.sqrt(2.0)
    vec = s * product_basis_vector(1, 0, 0, fock_dim) - s * product_basis_vector(0, 1, 0, fock_dim)
    return np.outer(vec, vec.conj())


def initial_atomic_state(state: StateParams) -> np.ndarray:
    """Two-qubit marginal of the shared-excitation state, basis (gg, ge, eg, ee)."""
    a, b, g = state.alpha, state.beta, state.gamma
    out = np.zeros((4, 4), dtype=complex)
    out[0, 0] = g * g
    out[1, 1] = a * a
    out[2, 2] = b * b
    out[1, 2] = a * b
    out[2, 1] = a * b
    return out


def initial_cavity_state(state: StateParams, fock_dim: int) -> np.ndarray:
    """Cavity marginal: vacuum with weight alpha^2 + beta^2, one photon with gamma^2."""
    diag = np.zeros(fock_dim, dtype=float)
    diag[0] = state.alpha**2 + state.beta**2
    diag[1] = state.gamma**2
    return np.diag(diag).astype(complex)


def initial_state_correlated(state: StateParams, fock_cutoff: int = 2) -> DensityMatrix:
    """Pure state sharing one excitation between the qubits and the cavity."""
    fock_dim = fock_cutoff + 1
    psi = (
        state.alpha * product_basis_vector(0, 1, 0, fock_dim)
        + state.beta * product_basis_vector(1, 0, 0, fock_dim)
        + state.gamma * product_basis_vector(0, 0, 1, fock_dim)
    )
    return DensityMatrix(np.outer(psi, psi.conj()), (2, 2, fock_dim))


def initial_state_factorized(state: StateParams, fock_cutoff: int = 2) -> DensityMatrix:
    """Product of the two marginals of the correlated state."""
    fock_dim = fock_cutoff + 1
    mat = kron(initial_atomic_state(state), initial_cavity_state(state, fock_dim))
    return DensityMatrix(mat, (2, 2, fock_dim))
