"""Shared random-state generators for the test suite."""

from __future__ import annotations

import numpy as np


def ginibre_density(rng: np.random.Generator, dim: int, rank: int | None = None) -> np.ndarray:
    """Random density matrix from the Ginibre-induced measure."""
    k = rank if rank is not None else dim
    g = rng.standard_normal((dim, k)) + 1j * rng.standard_normal((dim, k))
    mat = g @ g.conj().T
    return mat / np.trace(mat).real


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-ish unitary from the QR factorization of a complex Gaussian matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_pure_two_qubit(rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())
