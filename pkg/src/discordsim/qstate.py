"""Two-qubit state layer: Pauli algebra, Bell-diagonal states, fidelity.

A Bell-diagonal (BD) state is fixed by three real coefficients (c1, c2, c3):

    rho = (I4 + c1 XX + c2 YY + c3 ZZ) / 4

It is diagonal in the Bell basis with eigenvalues

    (1 + c1 - c2 + c3)/4, (1 - c1 + c2 + c3)/4,
    (1 + c1 + c2 - c3)/4, (1 - c1 - c2 - c3)/4,

and is physical exactly when all four are nonnegative.  Everything here is
an immutable value; all functions are pure.

Computational basis order is |00>, |01>, |10>, |11> (qubit 1 first).
Density matrices serialize to JSON as a 4x4 nested list of [re, im] pairs
in that row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnphysicalParams
from .linalg import eigh_jacobi, sqrtm_psd

# Default tolerances; every check takes them as overridable arguments.
VALIDITY_TOL = 1e-10
PSD_SLACK = 1e-9

SIGMA_I = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

PAULI_BY_LABEL = {"I": SIGMA_I, "X": SIGMA_X, "Y": SIGMA_Y, "Z": SIGMA_Z}
PAULI_LABELS = ("I", "X", "Y", "Z")


def pauli_pair(p1: str, p2: str) -> np.ndarray:
    """Tensor product sigma_p1 (x) sigma_p2 for labels in {I, X, Y, Z}."""
    try:
        return np.kron(PAULI_BY_LABEL[p1], PAULI_BY_LABEL[p2])
    except KeyError as exc:
        raise KeyError(f"unknown Pauli label {exc.args[0]!r}; use I, X, Y or Z") from None


@dataclass(frozen=True)
class BDParams:
    """The (c1, c2, c3) triple of a Bell-diagonal state."""

    c1: float
    c2: float
    c3: float

    def bell_eigenvalues(self) -> np.ndarray:
        """Spectrum in the Bell basis (Phi+, Phi-, Psi+, Psi- order)."""
        c1, c2, c3 = self.c1, self.c2, self.c3
        return np.array(
            [
                (1 + c1 - c2 + c3) / 4,
                (1 - c1 + c2 + c3) / 4,
                (1 + c1 + c2 - c3) / 4,
                (1 - c1 - c2 - c3) / 4,
            ]
        )

    def is_physical(self, slack: float = PSD_SLACK) -> bool:
        return bool(np.min(self.bell_eigenvalues()) >= -slack)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)


@dataclass(frozen=True)
class DensityMatrix:
    """A validated 4x4 two-qubit density matrix.

    Construction checks Hermiticity and unit trace to `tol` and positive
    semidefiniteness to `psd_slack`; the stored array is hermitized and
    made read-only.
    """

    matrix: np.ndarray

    def __init__(self, matrix, tol: float = VALIDITY_TOL, psd_slack: float = PSD_SLACK):
        m = np.array(matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        herm_defect = np.max(np.abs(m - m.conj().T))
        if herm_defect > tol:
            raise UnphysicalParams(f"matrix is not Hermitian (defect {herm_defect:.3e})")
        trace_defect = abs(np.trace(m).real - 1.0) + abs(np.trace(m).imag)
        if trace_defect > tol:
            raise UnphysicalParams(f"trace differs from 1 by {trace_defect:.3e}")
        m = 0.5 * (m + m.conj().T)
        vals, _ = eigh_jacobi(m)
        if vals[0] < -psd_slack:
            raise UnphysicalParams(f"negative eigenvalue {vals[0]:.3e}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def eigenvalues(self) -> np.ndarray:
        vals, _ = eigh_jacobi(self.matrix)
        return vals

    def to_json_obj(self) -> list:
        """Nested [re, im] pairs, row-major, basis |00>..|11>."""
        return [
            [[float(z.real), float(z.imag)] for z in row] for row in self.matrix
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "DensityMatrix":
        m = np.array([[complex(re, im) for re, im in row] for row in obj])
        return cls(m)


def bd_state(c: BDParams) -> DensityMatrix:
    """Build the Bell-diagonal state for physical coefficients.

    Raises UnphysicalParams if any Bell eigenvalue is below -1e-9.
    """
    if not c.is_physical():
        raise UnphysicalParams(
            f"coefficients {c.as_tuple()} give Bell eigenvalues "
            f"{np.round(c.bell_eigenvalues(), 6).tolist()}"
        )
    m = (
        np.eye(4, dtype=complex)
        + c.c1 * pauli_pair("X", "X")
        + c.c2 * pauli_pair("Y", "Y")
        + c.c3 * pauli_pair("Z", "Z")
    ) / 4.0
    return DensityMatrix(m)


def bd_params_of(rho: DensityMatrix) -> BDParams:
    """Project a state onto its Bell-diagonal coefficients c_i = <sigma_i sigma_i>."""
    return BDParams(
        pauli_expectation(rho, "X", "X"),
        pauli_expectation(rho, "Y", "Y"),
        pauli_expectation(rho, "Z", "Z"),
    )


def pauli_expectation(rho: DensityMatrix, p1: str, p2: str) -> float:
    """Tr(rho sigma_p1 (x) sigma_p2); real for Hermitian observables."""
    return float(np.trace(rho.matrix @ pauli_pair(p1, p2)).real)


def fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Uhlmann-Jozsa fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 in [0, 1]."""
    root = sqrtm_psd(rho.matrix)
    inner = root @ sigma.matrix @ root
    vals, _ = eigh_jacobi(0.5 * (inner + inner.conj().T))
    f = float(np.sum(np.sqrt(np.clip(vals, 0.0, None))) ** 2)
    return min(max(f, 0.0), 1.0)
