"""Small dense Hermitian eigensolver and helpers built on it.

Everything in this package lives on 2x2 and 4x4 complex Hermitian matrices,
so a cyclic Jacobi sweep is both fast and fully deterministic: the rotation
order is fixed, there is no pivoting heuristic, and repeated runs produce
bit-identical spectra.  numpy.linalg.eigh is deliberately not used here; it
serves as the independent oracle in the test suite instead.
"""

from __future__ import annotations

import numpy as np

from .errors import NumericalFailure

# Convergence targets for the Jacobi sweep.
_OFFDIAG_TOL = 1e-15
_MAX_SWEEPS = 60


def eigh_jacobi(matrix: np.ndarray, max_sweeps: int = _MAX_SWEEPS):
    """Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi.

    Sweeps the strict upper triangle in row-major order, annihilating one
    off-diagonal entry per rotation, until the off-diagonal Frobenius mass
    drops below machine precision relative to the matrix norm.

    Returns (eigenvalues ascending, eigenvector columns) like numpy's eigh.
    Raises NumericalFailure if the sweep limit is exhausted.
    """
    a = np.array(matrix, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    a = 0.5 * (a + a.conj().T)
    vecs = np.eye(n, dtype=complex)

    norm = np.linalg.norm(a)
    if norm == 0.0:
        return np.zeros(n), vecs

    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2), 0.0))
        if off <= _OFFDIAG_TOL * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= _OFFDIAG_TOL * norm:
                    continue
                phase = apq / mag
                # Rotation angle from the real symmetric problem obtained by
                # absorbing the phase of a_pq into column q.
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                # Plane rotation: col_p -> c*col_p - s*conj(phase)*col_q,
                # col_q -> s*phase*col_p + c*col_q, and the matching rows.
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0

                vcol_p = vecs[:, p].copy()
                vcol_q = vecs[:, q].copy()
                vecs[:, p] = c * vcol_p - s * np.conj(phase) * vcol_q
                vecs[:, q] = s * phase * vcol_p + c * vcol_q
    else:
        raise NumericalFailure(
            f"Jacobi eigensolver did not converge in {max_sweeps} sweeps"
        )

    vals = np.real(np.diag(a))
    order = np.argsort(vals, kind="stable")
    return vals[order], vecs[:, order]


def sqrtm_psd(matrix: np.ndarray, clamp_tol: float = 1e-9) -> np.ndarray:
    """Hermitian square root with boundary clamping.

    Eigenvalues in [-clamp_tol, 0) are treated as exact zeros so that states
    on the PSD boundary (e.g. after a simplex projection) do not produce NaNs.
    Eigenvalues below -clamp_tol indicate a genuinely non-PSD input.
    """
    vals, vecs = eigh_jacobi(matrix)
    if vals[0] < -clamp_tol:
        raise NumericalFailure(
            f"matrix is not positive semidefinite (min eigenvalue {vals[0]:.3e})"
        )
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def vn_entropy_bits(matrix: np.ndarray, clamp_tol: float = 1e-9) -> float:
    """Von Neumann entropy -Tr(rho log2 rho) with 0*log0 := 0."""
    vals, _ = eigh_jacobi(matrix)
    if vals[0] < -clamp_tol:
        raise NumericalFailure(
            f"entropy of a non-PSD matrix (min eigenvalue {vals[0]:.3e})"
        )
    vals = vals[vals > 0.0]
    return float(-np.sum(vals * np.log2(vals)))


def eigvals2x2_hermitian(trace: np.ndarray, det: np.ndarray):
    """Closed-form eigenvalue pair of 2x2 Hermitian matrices.

    Vectorized: `trace` and `det` may be arrays of matching shape.  The
    discriminant is clipped at zero against roundoff.
    """
    half = 0.5 * trace
    disc = np.sqrt(np.clip(half * half - det, 0.0, None))
    return half - disc, half + disc
