"""Correlation measures for two-qubit states: mutual information, classical
correlation over projective measurements on qubit B, and quantum discord.

All entropies are base 2. The classical correlation maximizes
J(basis) = S(rho_A) - sum_i p_i S(rho_A given outcome i) over rank-one
projective measurements of qubit B, parameterized by two angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import (
    DensityMatrix,
    EIGENVALUE_FLOOR,
    InvalidStateError,
    entropy_of_spectrum,
    partial_trace,
    von_neumann_entropy,
)

DISCORD_FLOOR = -1e-6
_PROB_EPS = 1e-12

THETA_GRID_POINTS = 60
PHI_GRID_POINTS = 120
REFINE_TOL = 1e-10
MAX_REFINE_SWEEPS = 50
_GOLDEN_XTOL = 1e-12
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MeasurementBasis:
    """Orthonormal measurement basis on one qubit, two angles.

    In (ground, excited) coordinates the outcome vectors are
    (exp(i phi) sin(theta), cos(theta)) and (-cos(theta), exp(-i phi) sin(theta)).
    """

    theta: float
    phi: float

    def vectors(self) -> np.ndarray:
        st, ct = math.sin(self.theta), math.cos(self.theta)
        ph = complex(math.cos(self.phi), math.sin(self.phi))
        return np.array([[ph * st, ct], [-ct, ph.conjugate() * st]], dtype=complex)

    def projectors(self) -> np.ndarray:
        vecs = self.vectors()
        return np.einsum("ka,kb->kab", vecs, vecs.conj())


@dataclass(frozen=True)
class CorrelationTriple:
    """Mutual information, classical correlation and discord, in bits.

    ``mutual_info == classical + discord`` holds exactly in floating point by
    construction (see ``correlations``).
    """

    mutual_info: float
    classical: float
    discord: float
    basis: MeasurementBasis

    def __post_init__(self) -> None:
        if self.classical < -1e-9 or self.discord < 0.0:
            raise ValueError("correlation components must be nonnegative")


def _check_two_qubit(rho_ab: DensityMatrix) -> np.ndarray:
    if rho_ab.dims != (2, 2):
        raise ValueError(f"expected a two-qubit state, got dims {rho_ab.dims}")
    return rho_ab.matrix


def mutual_information(rho_ab: DensityMatrix) -> float:
    """S(A) + S(B) - S(AB) in bits."""
    _check_two_qubit(rho_ab)
    s_a = von_neumann_entropy(partial_trace(rho_ab, (0,)))
    s_b = von_neumann_entropy(partial_trace(rho_ab, (1,)))
    s_ab = von_neumann_entropy(rho_ab)
    return s_a + s_b - s_ab


def _entropy_2x2(mat: np.ndarray) -> float:
    """Entropy of a 2x2 Hermitian unit-trace matrix via closed-form eigenvalues."""
    half_diff = 0.5 * (mat[0, 0].real - mat[1, 1].real)
    mean = 0.5 * (mat[0, 0].real + mat[1, 1].real)
    r = math.hypot(half_diff, abs(mat[0, 1]))
    return entropy_of_spectrum(np.array([mean - r, mean + r]))


def _outcome_vectors(thetas: np.ndarray, phis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    st, ct = np.sin(thetas), np.cos(thetas)
    ph = np.exp(1j * phis)
    b0 = np.stack([ph * st, ct.astype(complex)], axis=-1)
    b1 = np.stack([-ct.astype(complex), ph.conj() * st], axis=-1)
    return b0, b1


def _j_values(rho_mat: np.ndarray, thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
    """J(basis) for a batch of measurement angles, vectorized.

    Conditional 2x2 blocks are contracted in one einsum per outcome and their
    eigenvalues taken in closed form; outcomes with probability below 1e-12
    contribute the maximally mixed conditional state.
    """
    rho4 = rho_mat.reshape(2, 2, 2, 2)
    rho_a = np.einsum("abcb->ac", rho4)
    s_a = _entropy_2x2(rho_a)

    j = np.full(thetas.shape, s_a, dtype=float)
    for vecs in _outcome_vectors(thetas, phis):
        block = np.einsum("kb,abcd,kd->kac", vecs.conj(), rho4, vecs)
        p = np.real(block[:, 0, 0] + block[:, 1, 1])
        half_diff = 0.5 * np.real(block[:, 0, 0] - block[:, 1, 1])
        r = np.hypot(half_diff, np.abs(block[:, 0, 1]))
        safe_p = np.where(p > _PROB_EPS, p, 1.0)
        lam = np.where(p > _PROB_EPS, 0.5 - r / safe_p, 0.5)
        lam = np.clip(lam, 0.0, 1.0)
        ent = np.zeros_like(lam)
        for w in (lam, 1.0 - lam):
            pos = w > 0.0
            ent[pos] -= w[pos] * np.log2(w[pos])
        j -= np.clip(p, 0.0, None) * ent
    return j


def _golden_max(fn, lo: float, hi: float) -> tuple[float, float]:
    """Golden-section maximization of a unimodal function on [lo, hi]."""
    a, b = lo, hi
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = fn(x1), fn(x2)
    while b - a > _GOLDEN_XTOL:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = fn(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = fn(x1)
    x = 0.5 * (a + b)
    return x, fn(x)


def classical_correlation(rho_ab: DensityMatrix) -> tuple[float, MeasurementBasis]:
    """Maximal J over projective measurements of qubit B, with the argmax basis.

    A fixed 60x120 grid over theta in [0, pi/2] and phi in [0, 2 pi) seeds the
    search (grid ties resolve to the earliest flattened index, theta-major);
    coordinate-wise golden-section sweeps then refine within one grid spacing
    until the improvement drops below 1e-10 or 50 sweeps have run.
    """
    mat = _check_two_qubit(rho_ab)
    thetas = np.linspace(0.0, math.pi / 2.0, THETA_GRID_POINTS)
    phis = np.linspace(0.0, 2.0 * math.pi, PHI_GRID_POINTS, endpoint=False)
    th_mesh, ph_mesh = np.meshgrid(thetas, phis, indexing="ij")
    j_grid = _j_values(mat, th_mesh.ravel(), ph_mesh.ravel())
    flat = int(np.argmax(j_grid))
    best_j = float(j_grid[flat])
    best_th = float(thetas[flat // PHI_GRID_POINTS])
    best_ph = float(phis[flat % PHI_GRID_POINTS])

    d_th = thetas[1] - thetas[0]
    d_ph = phis[1] - phis[0]

    def j_at(theta: float, phi: float) -> float:
        return float(_j_values(mat, np.array([theta]), np.array([phi]))[0])

    for _ in range(MAX_REFINE_SWEEPS):
        previous = best_j
        lo = max(0.0, best_th - d_th)
        hi = min(math.pi / 2.0, best_th + d_th)
        th, j_th = _golden_max(lambda x: j_at(x, best_ph), lo, hi)
        if j_th > best_j:
            best_th, best_j = th, j_th
        ph, j_ph = _golden_max(lambda x: j_at(best_th, x), best_ph - d_ph, best_ph + d_ph)
        if j_ph > best_j:
            best_ph, best_j = ph, j_ph
        if best_j - previous < REFINE_TOL:
            break

    if best_j < -1e-9:
        raise InvalidStateError(f"classical correlation {best_j} is negative")
    return max(best_j, 0.0), MeasurementBasis(best_th, best_ph % (2.0 * math.pi))


def conditional_ensemble(
    rho_ab: DensityMatrix, basis: MeasurementBasis
) -> list[tuple[float, DensityMatrix]]:
    """Outcome probabilities and conditional states of qubit A after measuring B."""
    mat = _check_two_qubit(rho_ab)
    rho4 = mat.reshape(2, 2, 2, 2)
    out: list[tuple[float, DensityMatrix]] = []
    for vec in basis.vectors():
        block = np.einsum("b,abcd,d->ac", vec.conj(), rho4, vec)
        p = float(np.trace(block).real)
        if p > _PROB_EPS:
            cond = block / p
        else:
            p = max(p, 0.0)
            cond = 0.5 * np.eye(2, dtype=complex)
        out.append((p, DensityMatrix(cond, (2,))))
    return out


def correlations(rho_ab: DensityMatrix) -> CorrelationTriple:
    """Mutual information, classical correlation and discord of a two-qubit state.

    Discord is formed as mutual information minus classical correlation; a
    value below -1e-6 raises, smaller negative debris clamps to zero, and the
    stored mutual information is rebuilt as classical + discord so the
    additive identity is exact in floating point.
    """
    info = mutual_information(rho_ab)
    classical, basis = classical_correlation(rho_ab)
    raw = info - classical
    if raw < DISCORD_FLOOR:
        raise InvalidStateError(f"discord {raw} below {DISCORD_FLOOR}")
    discord = max(raw, 0.0)
    return CorrelationTriple(classical + discord, classical, discord, basis)
