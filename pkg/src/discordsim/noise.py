"""Per-qubit dephasing noise models and their spectra.

Two models, both zero-mean and stationary:

* white: delta-correlated phase noise with rate gamma.  Autocorrelation
  2*gamma*delta(t), two-sided spectrum S(w) = 2*gamma, ensemble coherence
  exp(-gamma t).
* Ornstein-Uhlenbeck: Gauss-Markov frequency noise (rad/s) with stddev
  sigma and correlation time tau_c.  Autocorrelation sigma^2 exp(-|t|/tau_c),
  two-sided spectrum S(w) = 2 sigma^2 tau_c / (1 + w^2 tau_c^2).

The free-evolution coherence exponent for OU noise has the closed form
chi(t) = sigma^2 tau_c (t - tau_c (1 - exp(-t/tau_c))), used both for
calibration and as an independent oracle for the spectral-overlap
quadrature in the filter-function module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np


@dataclass(frozen=True)
class WhiteNoise:
    """Independent white dephasing with per-qubit rates in 1/s."""

    gamma1: float
    gamma2: float

    def __post_init__(self):
        if self.gamma1 < 0 or self.gamma2 < 0:
            raise ValueError("white noise rates must be nonnegative")

    kind = "white"

    def rate(self, qubit: int) -> float:
        return (self.gamma1, self.gamma2)[qubit]

    def psd(self, qubit: int) -> Callable[[np.ndarray], np.ndarray]:
        g = self.rate(qubit)
        return lambda omega: np.full_like(np.asarray(omega, dtype=float), 2.0 * g)

    def psd_flat_limit(self, qubit: int) -> float:
        return 2.0 * self.rate(qubit)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "gamma1": self.gamma1, "gamma2": self.gamma2}


@dataclass(frozen=True)
class OUNoise:
    """Independent Ornstein-Uhlenbeck dephasing; sigma in rad/s, tau_c in s."""

    sigma1: float
    tau_c1: float
    sigma2: float
    tau_c2: float

    def __post_init__(self):
        if min(self.sigma1, self.tau_c1, self.sigma2, self.tau_c2) < 0:
            raise ValueError("OU noise parameters must be nonnegative")

    kind = "ornstein_uhlenbeck"

    def params(self, qubit: int) -> tuple[float, float]:
        return ((self.sigma1, self.tau_c1), (self.sigma2, self.tau_c2))[qubit]

    def psd(self, qubit: int) -> Callable[[np.ndarray], np.ndarray]:
        sigma, tau_c = self.params(qubit)

        def s(omega):
            omega = np.asarray(omega, dtype=float)
            return 2.0 * sigma**2 * tau_c / (1.0 + (omega * tau_c) ** 2)

        return s

    def psd_flat_limit(self, qubit: int) -> float:
        return 0.0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "sigma1": self.sigma1,
            "tau_c1": self.tau_c1,
            "sigma2": self.sigma2,
            "tau_c2": self.tau_c2,
        }


NoiseModel = Union[WhiteNoise, OUNoise]


def noise_from_dict(d: dict) -> NoiseModel:
    kind = d.get("kind")
    if kind == "white":
        return WhiteNoise(float(d["gamma1"]), float(d["gamma2"]))
    if kind in ("ornstein_uhlenbeck", "ou"):
        return OUNoise(
            float(d["sigma1"]), float(d["tau_c1"]),
            float(d["sigma2"]), float(d["tau_c2"]),
        )
    raise ValueError(f"unknown noise kind {kind!r}")


def calibrate_white_noise(gamma: float, time_step: float) -> float:
    """Per-step Gaussian phase-increment stddev sqrt(2 gamma dt).

    Accumulating such increments makes the ensemble single-qubit coherence
    decay as exp(-gamma t).
    """
    if gamma < 0 or time_step <= 0:
        raise ValueError("gamma must be >= 0 and time_step > 0")
    return math.sqrt(2.0 * gamma * time_step)


def ou_update_coefficients(time_step, tau_c: float, sigma: float):
    """(decay, kick) of the exact stationary update x' = decay*x + kick*xi."""
    dt = np.asarray(time_step, dtype=float)
    decay = np.exp(-dt / tau_c)
    kick = sigma * np.sqrt(-np.expm1(-2.0 * dt / tau_c))
    return decay, kick


def ou_path(sigma: float, tau_c: float, time_step: float, duration: float,
            seed: int) -> np.ndarray:
    """Stationary OU sample path on a uniform grid, endpoints included.

    x_0 ~ N(0, sigma^2); x_{k+1} = x_k e^(-dt/tau_c) + sigma
    sqrt(1 - e^(-2 dt/tau_c)) xi_k.  The update is exact for any step, so
    the sampled autocorrelation matches sigma^2 e^(-|dt|/tau_c) for all lags.
    """
    if sigma < 0 or tau_c <= 0 or time_step <= 0 or duration < 0:
        raise ValueError("ou_path arguments must be positive (sigma may be 0)")
    n_steps = int(round(duration / time_step))
    rng = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    decay, kick = ou_update_coefficients(time_step, tau_c, sigma)
    xi = rng.standard_normal(n_steps + 1)
    path = np.empty(n_steps + 1)
    path[0] = sigma * xi[0]
    for k in range(n_steps):
        path[k + 1] = decay * path[k] + kick * xi[k + 1]
    return path


def ou_free_decay_exponent(sigma: float, tau_c: float, t) -> np.ndarray:
    """Closed-form coherence exponent sigma^2 tau_c (t - tau_c(1 - e^(-t/tau_c)))."""
    t = np.asarray(t, dtype=float)
    return sigma**2 * tau_c * (t - tau_c * (-np.expm1(-t / tau_c)))


def ou_sigma_for_free_transition(tau_c: float, t_bar: float,
                                 c1_over_c3: float) -> float:
    """Sigma (same on both qubits) whose free-evolution dephasing reproduces
    a given discord transition time.

    The transition happens when the c1 coefficient has decayed to |c3|, i.e.
    when the two qubits' exponents sum to ln|c1(0)/c3|; with equal qubits
    each contributes half.
    """
    if tau_c <= 0 or t_bar <= 0 or c1_over_c3 <= 1.0:
        raise ValueError("need tau_c > 0, t_bar > 0 and |c1/c3| > 1")
    target = 0.5 * math.log(c1_over_c3)
    shape = tau_c * (t_bar - tau_c * (-math.expm1(-t_bar / tau_c)))
    return math.sqrt(target / shape)
