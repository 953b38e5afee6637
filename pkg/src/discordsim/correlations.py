"""Correlation measures for Bell-diagonal states, in bits.

Closed forms for BD states:

    chi = max(|c1|, |c2|, |c3|)
    C   = (1-chi)/2 log2(1-chi) + (1+chi)/2 log2(1+chi)
    I   = 2 + sum_k lam_k log2 lam_k          (lam_k the Bell spectrum)
    D   = I - C

C is the classical correlation extractable by the best local projective
measurement; on BD states that optimum is attained along the axis of the
largest |c_i|, which gives the chi formula.  I is the quantum mutual
information.  On the family c2 = -c1*c3 the Bell spectrum factorizes and I
reduces to a sum of two binary-entropy terms in c1 and c3 alone; the
dephasing flow preserves that family, which is what pins D (for t < tbar)
and then C (for t > tbar) to exact plateaus.

discord_bruteforce is the independent oracle: it knows nothing about the
closed forms and optimizes the measured conditional entropy over a grid of
Bloch directions plus a local refinement.
"""

from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import minimize

from .channels import DephasingRates, dephase_bd
from .linalg import vn_entropy_bits
from .qstate import BDParams, DensityMatrix, SIGMA_X, SIGMA_Y, SIGMA_Z

_EIG_CLAMP = 1e-9


@dataclass(frozen=True)
class CorrelationTriple:
    """Classical correlation, quantum discord and total correlation in bits."""

    classical: float
    discord: float
    total: float


def chi(c: BDParams, clamp: bool = True) -> float:
    """Largest coefficient magnitude, clamped to 1 for unphysical inputs.

    Tomography noise can push |c_i| slightly above 1; the entropy formula
    is undefined there, so the value is clamped with a warning.
    """
    value = max(abs(c.c1), abs(c.c2), abs(c.c3))
    if value > 1.0 and clamp:
        warnings.warn(
            f"chi = {value:.6g} exceeds 1; clamping (unphysical input)",
            stacklevel=2,
        )
        value = 1.0
    return value


def _pair_entropy_term(c: float) -> float:
    """(1-c)/2 log2(1-c) + (1+c)/2 log2(1+c), with 0 log 0 := 0."""
    out = 0.0
    for sign in (-1.0, 1.0):
        v = 1.0 + sign * c
        if v > 0.0:
            out += 0.5 * v * math.log2(v)
    return out


def classical_correlation(c: BDParams) -> float:
    """Classical correlation of a BD state in bits."""
    return _pair_entropy_term(chi(c))


def total_correlation(c: BDParams) -> float:
    """Quantum mutual information of a BD state in bits.

    Both marginals are maximally mixed, so I = 2 - S(rho) with S from the
    Bell spectrum.  Slightly negative eigenvalues (unphysical inputs) are
    clamped and the spectrum renormalized, with a warning beyond the usual
    PSD slack.
    """
    lam = c.bell_eigenvalues()
    if np.min(lam) < -_EIG_CLAMP:
        warnings.warn(
            f"Bell eigenvalues {np.round(lam, 6).tolist()} are not a spectrum; "
            "clamping negatives (unphysical input)",
            stacklevel=2,
        )
    lam = np.clip(lam, 0.0, None)
    lam = lam / np.sum(lam)
    lam = lam[lam > 0.0]
    entropy = float(-np.sum(lam * np.log2(lam)))
    return 2.0 - entropy


def discord(c: BDParams) -> float:
    """Quantum discord D = I - C of a BD state in bits."""
    return total_correlation(c) - classical_correlation(c)


def correlation_triple(c: BDParams) -> CorrelationTriple:
    cc = classical_correlation(c)
    tc = total_correlation(c)
    return CorrelationTriple(classical=cc, discord=tc - cc, total=tc)


def correlation_trajectory(
    c0: BDParams, rates: DephasingRates, times: Sequence[float]
) -> list[CorrelationTriple]:
    """Correlation triple along the analytic dephasing flow.

    `times` must be sorted ascending.
    """
    times = list(times)
    if any(b < a for a, b in zip(times, times[1:])):
        raise ValueError("times must be sorted ascending")
    return [correlation_triple(dephase_bd(c0, rates, t)) for t in times]


def write_trajectory_csv(path, times: Sequence[float], cs: Sequence[BDParams]) -> None:
    """CSV with columns t, C, D, I, chi, c1, c2, c3 (one row per time point)."""
    if len(times) != len(cs):
        raise ValueError("times and coefficient lists differ in length")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "C", "D", "I", "chi", "c1", "c2", "c3"])
        for t, c in zip(times, cs):
            triple = correlation_triple(c)
            writer.writerow(
                [
                    repr(float(t)),
                    repr(triple.classical),
                    repr(triple.discord),
                    repr(triple.total),
                    repr(chi(c)),
                    repr(c.c1),
                    repr(c.c2),
                    repr(c.c3),
                ]
            )


def read_trajectory_csv(path) -> tuple[list[float], list[BDParams]]:
    """Inverse of write_trajectory_csv (triples are recomputed, not stored)."""
    times: list[float] = []
    cs: list[BDParams] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            times.append(float(row["t"]))
            cs.append(BDParams(float(row["c1"]), float(row["c2"]), float(row["c3"])))
    return times, cs


# --- brute-force discord oracle -------------------------------------------


def _entropy2_from_spectrum(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Binary von Neumann entropy given both eigenvalues (vectorized)."""
    out = np.zeros_like(lo)
    for lam in (lo, hi):
        mask = lam > 0.0
        out[mask] -= lam[mask] * np.log2(lam[mask])
    return out


def _measured_classical_info(rho_blocks: np.ndarray, s_a: float, directions: np.ndarray) -> np.ndarray:
    """S(rho_A) - sum_b p_b S(rho_A|b) for projective measurements on qubit 2.

    `rho_blocks` is rho reshaped to (2, 2, 2, 2) as [i, a, j, b] with (i, j)
    the qubit-1 indices.  `directions` is (N, 3) of unit Bloch vectors; each
    defines the projector pair (I +- n.sigma)/2.
    """
    n = np.asarray(directions, dtype=float)
    paulis = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])  # (3, 2, 2)
    ndots = np.einsum("nk,kab->nab", n, paulis)
    eye = np.eye(2, dtype=complex)
    avg_cond = np.zeros(len(n))
    for sign in (1.0, -1.0):
        proj = 0.5 * (eye + sign * ndots)  # (N, 2, 2)
        # Unnormalized conditional state of qubit 1: Tr_B[rho (I (x) proj)].
        sub = np.einsum("iajc,nca->nij", rho_blocks, proj)
        p = np.real(sub[:, 0, 0] + sub[:, 1, 1])
        det = np.real(sub[:, 0, 0] * sub[:, 1, 1] - sub[:, 0, 1] * sub[:, 1, 0])
        ok = p > 1e-12
        lam_lo = np.zeros(len(n))
        lam_hi = np.zeros(len(n))
        half = np.where(ok, 0.5, 0.0)
        disc = np.sqrt(np.clip(half * half - np.where(ok, det / np.maximum(p, 1e-300) ** 2, 0.0), 0.0, None))
        lam_lo[ok] = np.clip(half[ok] - disc[ok], 0.0, 1.0)
        lam_hi[ok] = np.clip(half[ok] + disc[ok], 0.0, 1.0)
        avg_cond += p * _entropy2_from_spectrum(lam_lo, lam_hi)
    return s_a - avg_cond


def mutual_information(rho: DensityMatrix) -> float:
    """S(rho_A) + S(rho_B) - S(rho_AB) in bits, for any two-qubit state."""
    blocks = rho.matrix.reshape(2, 2, 2, 2)
    rho_a = np.einsum("iaja->ij", blocks)
    rho_b = np.einsum("iaib->ab", blocks)
    return (
        vn_entropy_bits(rho_a) + vn_entropy_bits(rho_b) - vn_entropy_bits(rho.matrix)
    )


def discord_bruteforce(rho: DensityMatrix, grid_n: int = 256) -> float:
    """Quantum discord by direct optimization over qubit-2 measurements.

    Scans measurement directions on a (cos theta, phi) grid over the Bloch
    hemisphere (grid_n x grid_n, endpoints included so the coordinate axes
    are on-grid), then polishes the best point with Nelder-Mead.
    """
    if grid_n < 64:
        raise ValueError("grid_n must be at least 64")
    blocks = rho.matrix.reshape(2, 2, 2, 2)
    rho_a = np.einsum("iaja->ij", blocks)
    s_a = vn_entropy_bits(rho_a)
    info = mutual_information(rho)

    u = np.linspace(0.0, 1.0, grid_n)  # cos(theta); hemisphere suffices
    phi = np.linspace(0.0, 2.0 * np.pi, grid_n, endpoint=False)
    uu, pp = np.meshgrid(u, phi, indexing="ij")
    st = np.sqrt(np.clip(1.0 - uu**2, 0.0, None))
    dirs = np.stack([st * np.cos(pp), st * np.sin(pp), uu], axis=-1).reshape(-1, 3)

    j = _measured_classical_info(blocks, s_a, dirs)
    best = int(np.argmax(j))
    theta0 = math.acos(float(np.clip(dirs[best, 2], -1.0, 1.0)))
    phi0 = math.atan2(float(dirs[best, 1]), float(dirs[best, 0]))

    def neg_j(x):
        theta, ph = x
        d = np.array([[math.sin(theta) * math.cos(ph), math.sin(theta) * math.sin(ph), math.cos(theta)]])
        return -float(_measured_classical_info(blocks, s_a, d)[0])

    res = minimize(
        neg_j,
        x0=[theta0, phi0],
        method="Nelder-Mead",
        options={"xatol": 1e-8, "fatol": 1e-12, "maxiter": 400},
    )
    j_max = max(float(j[best]), -float(res.fun))
    return info - j_max
