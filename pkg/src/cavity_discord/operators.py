"""Dense linear-algebra primitives for finite-dimensional quantum states.

Everything here works on plain complex ndarrays; the only structured type is
``DensityMatrix``, which carries the tensor-factor dimensions alongside the
matrix so reduced states can be formed without guessing the layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

TRACE_TOL = 1e-9
HERMITICITY_TOL = 1e-9
EIGENVALUE_FLOOR = -1e-8


class InvalidStateError(ValueError):
    """Raised when a matrix that should be a density operator is not one."""


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Density operator on a tensor product of finite-dimensional factors.

    ``dims`` lists the factor dimensions in tensor order; ``matrix`` is the
    dense operator on the product space, stored in row-major Kronecker layout
    (leftmost factor varies slowest).
    """

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        mat = np.asarray(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        if any(d < 1 for d in dims):
            raise ValueError(f"factor dimensions must be positive, got {dims}")
        d = int(np.prod(dims))
        if mat.shape != (d, d):
            raise ValueError(f"matrix shape {mat.shape} does not match dims {dims}")
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def validate(self) -> "DensityMatrix":
        """Check unit trace, hermiticity and positivity; raise if violated."""
        tr = complex(np.trace(self.matrix))
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"trace {tr} deviates from 1 beyond {TRACE_TOL}")
        dev = float(np.max(np.abs(self.matrix - self.matrix.conj().T)))
        if dev > HERMITICITY_TOL:
            raise InvalidStateError(f"hermiticity deviation {dev} exceeds {HERMITICITY_TOL}")
        lo = float(np.linalg.eigvalsh(self.matrix)[0])
        if lo < EIGENVALUE_FLOOR:
            raise InvalidStateError(f"minimum eigenvalue {lo} below {EIGENVALUE_FLOOR}")
        return self


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the left factor outermost."""
    return np.kron(np.asarray(a), np.asarray(b))


def tensor(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of operators, left to right."""
    if not ops:
        raise ValueError("tensor requires at least one operator")
    return reduce(np.kron, ops)


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every tensor factor not listed in ``keep``.

    ``keep`` holds factor indices into ``rho.dims``; the reduced state keeps
    those factors in their original order.
    """
    dims = rho.dims
    n = len(dims)
    kept = sorted(set(int(k) for k in keep))
    if not kept:
        raise ValueError("keep must name at least one factor")
    if kept[0] < 0 or kept[-1] >= n:
        raise ValueError(f"keep {kept} out of range for {n} factors")
    if len(kept) == n:
        return DensityMatrix(rho.matrix.copy(), dims)

    arr = rho.matrix.reshape(dims + dims)
    # Row axis i gets label i; column axis i reuses label i (summing it out)
    # unless the factor is kept, in which case it gets a fresh label n+i.
    row_labels = list(range(n))
    col_labels = [n + i if i in kept else i for i in range(n)]
    out_labels = kept + [n + i for i in kept]
    reduced = np.einsum(arr, row_labels + col_labels, out_labels)
    new_dims = tuple(dims[i] for i in kept)
    d = int(np.prod(new_dims))
    return DensityMatrix(reduced.reshape(d, d), new_dims)


def hermitian_eigendecomposition(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and matching eigenvector columns of a Hermitian matrix."""
    mat = np.asarray(mat, dtype=complex)
    dev = float(np.max(np.abs(mat - mat.conj().T)))
    if dev > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian: deviation {dev}")
    vals, vecs = np.linalg.eigh(mat)
    return vals, vecs


def entropy_of_spectrum(eigenvalues: np.ndarray) -> float:
    """Shannon entropy in bits of a probability spectrum.

    Eigenvalues in (EIGENVALUE_FLOOR, 0) are rounding debris and are clamped
    to zero; anything more negative means the input was not a state.
    """
    w = np.asarray(eigenvalues, dtype=float)
    lo = float(w.min()) if w.size else 0.0
    if lo < EIGENVALUE_FLOOR:
        raise InvalidStateError(f"eigenvalue {lo} below {EIGENVALUE_FLOOR}")
    w = np.clip(w, 0.0, None)
    nz = w[w > 0.0]
    if nz.size == 0:
        return 0.0
    return max(float(-np.sum(nz * np.log2(nz))), 0.0)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy of a density matrix, in bits."""
    return entropy_of_spectrum(np.linalg.eigvalsh(rho.matrix))
