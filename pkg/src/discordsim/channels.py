"""Independent per-qubit dephasing: coefficient flow, Kraus form, transition time.

Convention (fixed here and relied on everywhere else): a qubit with rate
gamma_i loses single-qubit coherence as exp(-gamma_i * t).  The two-qubit
Bell-diagonal coefficients c1 and c2 are products of both qubits'
coherences, so they decay as exp(-(gamma_h + gamma_c) t) = exp(-2*gbar*t)
with gbar the mean rate, while c3 (a population correlation) is untouched.
With gamma_i = 1/T2*_i, gbar reproduces (T2*_h + T2*_c) / (2 T2*_h T2*_c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IncompleteKraus, NoTransition
from .qstate import BDParams, DensityMatrix

_COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True)
class DephasingRates:
    """Per-qubit dephasing rates in 1/s (qubit 1 = gamma_h, qubit 2 = gamma_c)."""

    gamma_h: float
    gamma_c: float

    def __post_init__(self):
        if self.gamma_h < 0 or self.gamma_c < 0:
            raise ValueError("dephasing rates must be nonnegative")

    @property
    def mean(self) -> float:
        return 0.5 * (self.gamma_h + self.gamma_c)

    @classmethod
    def from_t2(cls, t2_h: float, t2_c: float) -> "DephasingRates":
        return cls(1.0 / t2_h, 1.0 / t2_c)


@dataclass(frozen=True)
class KrausPair:
    """Single-qubit Kraus pair; completeness k0'k0 + k1'k1 = I is checked."""

    k0: np.ndarray
    k1: np.ndarray

    def __init__(self, k0, k1):
        k0 = np.array(k0, dtype=complex)
        k1 = np.array(k1, dtype=complex)
        defect = np.max(np.abs(k0.conj().T @ k0 + k1.conj().T @ k1 - np.eye(2)))
        if defect > _COMPLETENESS_TOL:
            raise IncompleteKraus(f"completeness defect {defect:.3e}")
        k0.flags.writeable = False
        k1.flags.writeable = False
        object.__setattr__(self, "k0", k0)
        object.__setattr__(self, "k1", k1)


def dephase_bd(c0: BDParams, rates: DephasingRates, t: float) -> BDParams:
    """Coefficient flow under independent dephasing for time t >= 0."""
    if t < 0:
        raise ValueError("time must be nonnegative")
    decay = math.exp(-(rates.gamma_h + rates.gamma_c) * t)
    return BDParams(c0.c1 * decay, c0.c2 * decay, c0.c3)


def phase_damp_kraus(gamma: float, t: float) -> KrausPair:
    """Kraus pair of single-qubit phase damping with lambda = 1 - exp(-2 gamma t)."""
    if gamma < 0 or t < 0:
        raise ValueError("gamma and t must be nonnegative")
    lam = 1.0 - math.exp(-2.0 * gamma * t)
    k0 = np.diag([1.0, math.sqrt(1.0 - lam)]).astype(complex)
    k1 = np.diag([0.0, math.sqrt(lam)]).astype(complex)
    return KrausPair(k0, k1)


def apply_local_channel(rho: DensityMatrix, kraus1: KrausPair, kraus2: KrausPair) -> DensityMatrix:
    """Apply a product channel: rho' = sum_ij (K_i (x) K_j) rho (K_i (x) K_j)'."""
    out = np.zeros((4, 4), dtype=complex)
    for a in (kraus1.k0, kraus1.k1):
        for b in (kraus2.k0, kraus2.k1):
            op = np.kron(a, b)
            out += op @ rho.matrix @ op.conj().T
    return DensityMatrix(out)


def transition_time(c0: BDParams, gamma: float) -> float:
    """Time at which |c1(t)| decays to |c3|: (1 / 2 gamma) ln|c1(0)/c3(0)|.

    `gamma` is the mean per-qubit rate (DephasingRates.mean).  Raises
    NoTransition when |c1(0)| <= |c3(0)| or c3 = 0, i.e. when the maximum
    coefficient never switches from c1 to c3.
    """
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    if c0.c3 == 0.0 or abs(c0.c1) <= abs(c0.c3):
        raise NoTransition(
            f"|c1(0)| = {abs(c0.c1):g} never crosses |c3| = {abs(c0.c3):g}"
        )
    return math.log(abs(c0.c1 / c0.c3)) / (2.0 * gamma)
