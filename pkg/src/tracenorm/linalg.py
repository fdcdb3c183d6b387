"""Dense real/complex linear algebra: Jacobi eigenvalues, singular values, trace norm.

Matrices are plain numpy arrays. Real matrices are just the zero-imaginary
case of complex ones; the Jacobi kernel below handles both with one set of
formulas (the rotation carries the phase of the pivot).

The kernel works on a stack of matrices of shape ``(batch, n, n)`` so the
exhaustive search can diagonalize thousands of small adjacency matrices per
call. A matrix that has converged is frozen, so its eigenvalues do not
depend on which batch it was processed in.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian

JACOBI_TOL = 1e-12
MAX_SWEEPS = 50
# Gram eigenvalues in [-GRAM_CLAMP * scale, 0) are roundoff and become 0.
GRAM_CLAMP = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Real values sorted non-increasing; ``kind`` is 'eigenvalues' or 'singular_values'."""

    values: np.ndarray
    kind: str

    def __post_init__(self):
        self.values.setflags(write=False)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def abs_sum(self) -> float:
        return float(np.sum(np.abs(self.values)))


@dataclass(frozen=True)
class JacobiResult:
    eigenvalues: np.ndarray  # (batch, n), sorted descending
    off_norm: np.ndarray  # off-diagonal Frobenius norm at exit
    frobenius: np.ndarray  # Frobenius norm of the input
    sweeps: int


def as_matrix(a) -> np.ndarray:
    """Coerce to a square 2-D array (ints and bools become float64)."""
    m = np.asarray(a)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if np.iscomplexobj(m):
        return m.astype(np.complex128, copy=False)
    return m.astype(np.float64, copy=False)


def is_real(a) -> bool:
    m = np.asarray(a)
    return not np.iscomplexobj(m) or not np.any(m.imag)


def kron(a, b) -> np.ndarray:
    """Kronecker product; block (i, j) is ``a[i, j] * b``."""
    return np.kron(np.asarray(a), np.asarray(b))


def adjoint(a) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def max_abs_entry(a) -> float:
    m = np.asarray(a)
    return float(np.max(np.abs(m))) if m.size else 0.0


def frobenius(a) -> float:
    return float(np.sqrt(np.sum(np.abs(np.asarray(a)) ** 2)))


def _is_integer_valued(m: np.ndarray) -> bool:
    if np.issubdtype(m.dtype, np.integer) or m.dtype == bool:
        return True
    return bool(np.all(np.isfinite(m)) and np.all(m == np.round(m.real)))


def check_hermitian(a) -> None:
    m = np.asarray(a)
    diff = m - np.conj(m).T
    if _is_integer_valued(m):
        ok = not np.any(diff)
    else:
        ok = bool(np.all(np.abs(diff) <= 1e-12))
    if not ok:
        raise NotHermitian("matrix differs from its Hermitian transpose")


def _off_norm(a: np.ndarray) -> np.ndarray:
    # a has shape (n, n, batch); sum only off-diagonal entries, total - diag cancels badly
    n = a.shape[0]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[mask]) ** 2, axis=0))


def jacobi(a, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS) -> JacobiResult:
    """Cyclic Jacobi on a stack of Hermitian matrices.

    Sweeps over all pairs (p, q), p < q, in row order until each matrix's
    off-diagonal Frobenius norm is at most ``tol`` times its Frobenius norm.
    No Hermitian check is done here; callers validate.
    """
    a = np.asarray(a)
    if a.ndim == 2:
        a = a[None]
    # work in (n, n, batch) layout so every entry is a contiguous batch vector
    a = np.ascontiguousarray(np.moveaxis(a, 0, -1),
                             dtype=np.complex128 if np.iscomplexobj(a) else np.float64)
    n = a.shape[0]
    fro = np.sqrt(np.sum(np.abs(a) ** 2, axis=(0, 1)))
    thresh = tol * fro
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]

    off = _off_norm(a)
    active = off > thresh
    sweeps = 0
    while active.any():
        if sweeps >= max_sweeps:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
        for p, q in pairs:
            apq = a[p, q]
            g = np.abs(apq)
            rot = active & (g > 0)
            if not rot.any():
                continue
            gs = np.where(rot, g, 1.0)
            e = np.where(rot, apq / gs, 1.0)
            with np.errstate(over="ignore"):
                theta = (a[q, q].real - a[p, p].real) / (2.0 * gs)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(rot, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            se = s * e
            sce = s * np.conj(e)

            col_p = a[:, p].copy()
            col_q = a[:, q].copy()
            a[:, p] = c * col_p - sce * col_q
            a[:, q] = se * col_p + c * col_q
            row_p = a[p].copy()
            row_q = a[q].copy()
            a[p] = c * row_p - se * row_q
            a[q] = sce * row_p + c * row_q
            a[p, q] = np.where(rot, 0.0, a[p, q])
            a[q, p] = np.where(rot, 0.0, a[q, p])
        sweeps += 1
        off = _off_norm(a)
        active = off > thresh

    eig = np.einsum("iib->bi", a).real.copy()
    eig = -np.sort(-eig, axis=1)
    return JacobiResult(eig, off, fro, sweeps)


def eigenvalues_batch(a) -> np.ndarray:
    """Descending eigenvalues of each Hermitian matrix in a ``(batch, n, n)`` stack."""
    return jacobi(a).eigenvalues


def hermitian_eigenvalues(a) -> Spectrum:
    m = as_matrix(a)
    check_hermitian(m)
    if m.shape[0] == 0:
        return Spectrum(np.zeros(0), "eigenvalues")
    return Spectrum(jacobi(m).eigenvalues[0], "eigenvalues")


def _gram_to_singular(gram_eigs: np.ndarray, scale: np.ndarray) -> np.ndarray:
    floor = -GRAM_CLAMP * np.maximum(scale, 1.0)
    if np.any(gram_eigs < floor[:, None]):
        raise NoConvergence("Gram matrix has a significantly negative eigenvalue")
    return np.sqrt(np.maximum(gram_eigs, 0.0))


def singular_values_batch(a) -> np.ndarray:
    """Descending singular values of each matrix in a stack.

    Hermitian matrices use ``|eigenvalues|`` directly; the rest go through the
    eigenvalues of ``a a*``. Squaring costs about half the digits of small
    singular values (a zero one comes back near 1e-8), which is acceptable for
    general matrices but not for graphs, whose kernels are large.
    """
    a = np.asarray(a)
    if a.ndim == 2:
        a = a[None]
    out = np.empty(a.shape[:2])
    herm = np.all(np.abs(a - np.conj(np.swapaxes(a, 1, 2))) <= 1e-12, axis=(1, 2))
    if herm.any():
        ev = np.abs(jacobi(a[herm]).eigenvalues)
        out[herm] = -np.sort(-ev, axis=1)
    if (~herm).any():
        b = a[~herm]
        gram = b @ np.conj(np.swapaxes(b, 1, 2))
        # exact Hermitian symmetry keeps the Jacobi kernel honest
        gram = 0.5 * (gram + np.conj(np.swapaxes(gram, 1, 2)))
        res = jacobi(gram)
        out[~herm] = _gram_to_singular(res.eigenvalues, res.frobenius)
    return out


def singular_values(a) -> Spectrum:
    m = as_matrix(a)
    if m.shape[0] == 0:
        return Spectrum(np.zeros(0), "singular_values")
    return Spectrum(singular_values_batch(m)[0], "singular_values")


def trace_norm(a) -> float:
    """Sum of singular values."""
    return float(np.sum(singular_values(a).values))


def trace_norms(a) -> np.ndarray:
    return singular_values_batch(a).sum(axis=1)


def hermitian_trace_norm(a) -> float:
    """Sum of absolute eigenvalues; equals :func:`trace_norm` for Hermitian input."""
    return hermitian_eigenvalues(a).abs_sum
