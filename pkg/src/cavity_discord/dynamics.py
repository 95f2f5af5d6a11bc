"""Fixed-step master-equation integration and the closed-form single-excitation solution."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .model import (
    ModelParams,
    StateParams,
    _generator_ops,
    product_basis_vector,
)
from .operators import DensityMatrix, partial_trace

TRACE_DRIFT_TOL = 1e-7
POSITIVITY_TOL = -1e-6


class IntegrationError(RuntimeError):
    """Integration produced an unphysical state; ``omega_t`` locates the failure."""

    def __init__(self, message: str, omega_t: float) -> None:
        super().__init__(f"{message} at omega*t = {omega_t:.6g}")
        self.omega_t = omega_t


@dataclass(frozen=True)
class IntegrationConfig:
    """Step size and sampling for the fixed-step integrator, in units of omega*t."""

    dt: float = 1e-3
    t_max: float = 30.0
    sample_every: int = 100

    def __post_init__(self) -> None:
        if not self.dt > 0.0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not self.t_max > 0.0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if self.sample_every < 1:
            raise ValueError(f"sample_every must be at least 1, got {self.sample_every}")
        if self.dt * self.sample_every > self.t_max + 1e-12:
            raise ValueError("sampling interval exceeds t_max")

    @property
    def n_samples(self) -> int:
        """Number of recorded samples, the initial state included."""
        return int(math.floor(self.t_max / (self.dt * self.sample_every) + 1e-9)) + 1


@dataclass(frozen=True, eq=False)
class TrajectorySample:
    omega_t: float
    rho_full: DensityMatrix
    rho_ab: DensityMatrix


@dataclass(eq=False)
class Trajectory:
    params: ModelParams
    config: IntegrationConfig
    samples: list[TrajectorySample] = field(default_factory=list)

    @property
    def omega_ts(self) -> np.ndarray:
        return np.array([s.omega_t for s in self.samples])

    def reduced_states(self) -> list[DensityMatrix]:
        return [s.rho_ab for s in self.samples]


def _record(traj: Trajectory, omega_t: float, rho: np.ndarray, dims: tuple[int, ...]) -> None:
    full = DensityMatrix(rho.copy(), dims)
    traj.samples.append(TrajectorySample(omega_t, full, partial_trace(full, (0, 1))))


def integrate(rho0: DensityMatrix, params: ModelParams, config: IntegrationConfig) -> Trajectory:
    """Integrate the master equation with classic fourth-order Runge-Kutta.

    Steps are uniform in omega*t. After every step the state is rehermitized
    and checked: trace drift beyond 1e-7 or an eigenvalue below -1e-6 aborts
    with ``IntegrationError``. Samples land every ``sample_every`` steps.
    """
    if rho0.dims != params.dims:
        raise ValueError(f"state dims {rho0.dims} do not match model dims {params.dims}")
    rho0.validate()

    ops = _generator_ops(params)
    # The generator is evaluated in physical time; steps are specified in
    # omega*t, so the physical step is dt/omega and omega_t(k) = k*dt exactly.
    h = config.dt / params.omega
    n_samples = config.n_samples
    n_steps = (n_samples - 1) * config.sample_every

    traj = Trajectory(params=params, config=config)
    rho = rho0.matrix.copy()
    _record(traj, 0.0, rho, params.dims)

    for step in range(1, n_steps + 1):
        k1 = ops.rhs(rho)
        k2 = ops.rhs(rho + 0.5 * h * k1)
        k3 = ops.rhs(rho + 0.5 * h * k2)
        k4 = ops.rhs(rho + h * k3)
        rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        rho = 0.5 * (rho + rho.conj().T)

        omega_t = step * config.dt
        if not np.all(np.isfinite(rho.view(np.float64))):
            raise IntegrationError("state became non-finite", omega_t)
        drift = abs(complex(np.trace(rho)) - 1.0)
        if drift > TRACE_DRIFT_TOL:
            raise IntegrationError(f"trace drifted by {drift:.3e}", omega_t)
        lo = float(np.linalg.eigvalsh(rho)[0])
        if lo < POSITIVITY_TOL:
            raise IntegrationError(f"eigenvalue {lo:.3e} broke positivity", omega_t)

        if step % config.sample_every == 0:
            _record(traj, omega_t, rho, params.dims)

    return traj


def analytic_single_excitation(state: StateParams, params: ModelParams, t: float) -> DensityMatrix:
    """Exact state at physical time ``t`` for the correlated initial condition.

    Within the single-excitation sector the antisymmetric qubit amplitude is
    frozen, while the symmetric and one-photon amplitudes mix through a 2x2
    non-Hermitian matrix whose exponential is taken by eigendecomposition.
    Lost norm accumulates in the absolute ground state.
    """
    if t < 0.0:
        raise ValueError(f"t must be nonnegative, got {t}")
    fock_dim = params.fock_dim
    s = 1.0 / math.sqrt(2.0)

    c_minus = (state.beta - state.alpha) * s
    v0 = np.array([(state.alpha + state.beta) * s, state.gamma], dtype=complex)

    m = np.array(
        [
            [0.0, math.sqrt(2.0) * params.omega],
            [math.sqrt(2.0) * params.omega, -0.5j * params.gamma],
        ],
        dtype=complex,
    )
    vals, vecs = np.linalg.eig(m)
    phases = np.exp(-1j * vals * t)
    v_t = vecs @ (phases * np.linalg.solve(vecs, v0))

    minus0 = s * (product_basis_vector(1, 0, 0, fock_dim) - product_basis_vector(0, 1, 0, fock_dim))
    plus0 = s * (product_basis_vector(1, 0, 0, fock_dim) + product_basis_vector(0, 1, 0, fock_dim))
    gg1 = product_basis_vector(0, 0, 1, fock_dim)
    gg0 = product_basis_vector(0, 0, 0, fock_dim)

    psi = c_minus * minus0 + v_t[0] * plus0 + v_t[1] * gg1
    weight = c_minus * c_minus + float(np.vdot(v_t, v_t).real)
    rho = np.outer(psi, psi.conj()) + max(1.0 - weight, 0.0) * np.outer(gg0, gg0.conj())
    return DensityMatrix(rho, params.dims)


def steady_state_estimate(traj: Trajectory, tail_fraction: float = 0.2) -> DensityMatrix:
    """Average reduced two-qubit state over the trailing fraction of samples."""
    if not 0.0 < tail_fraction <= 0.5:
        raise ValueError(f"tail_fraction must lie in (0, 0.5], got {tail_fraction}")
    n = len(traj.samples)
    if n < 10:
        raise ValueError(f"need at least 10 samples, got {n}")
    k = max(1, int(math.floor(n * tail_fraction)))
    acc = np.zeros((4, 4), dtype=complex)
    for sample in traj.samples[n - k :]:
        acc += sample.rho_ab.matrix
    acc /= k
    acc = 0.5 * (acc + acc.conj().T)
    return DensityMatrix(acc, (2, 2))
