"""Harmonic bound-state model of a Lennard-Jones well.

Matching the L-J well depth to the displaced-oscillator energy shift gives
hbar omega = epsilon / gamma^2 with gamma^2 the (integer) number of bound
states; the levels are then E_m = (epsilon / gamma^2)(m + 1/2) for
m = -gamma^2 .. -1, and the level spacing epsilon / gamma^2 inverts to an
estimate of gamma^2 from an observed vibrational spacing.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .oscillator import OscillatorSpec

#: Position of the L-J minimum in units of sigma.
R_MIN_FACTOR = 2.0 ** (1.0 / 6.0)


@dataclass(frozen=True)
class LJSpec:
    """Well depth epsilon, length sigma, and bound-state count gamma_sq."""

    epsilon: float
    sigma: float
    gamma_sq: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise ValueError("epsilon must be positive and finite")
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise ValueError("sigma must be positive and finite")
        if not isinstance(self.gamma_sq, int) or isinstance(self.gamma_sq, bool) or self.gamma_sq < 1:
            raise ValueError("gamma_sq must be a positive integer")


def lj_potential(r: float, spec: LJSpec) -> float:
    """U(r) = 4 epsilon [(sigma/r)^12 - (sigma/r)^6]."""
    if not r > 0:
        raise ValueError("separation r must be positive")
    sr6 = (spec.sigma / r) ** 6
    return 4.0 * spec.epsilon * (sr6 * sr6 - sr6)


def lj_minimum(spec: LJSpec) -> tuple[float, float]:
    """The well minimum: (2^{1/6} sigma, -epsilon)."""
    return R_MIN_FACTOR * spec.sigma, -spec.epsilon


def fit_oscillator(spec: LJSpec, mu: float = 1.0, hbar: float = 1.0) -> OscillatorSpec:
    """Oscillator whose ladder matches the well: omega = epsilon / (gamma_sq hbar).

    The approximating well is centered at 2^{1/6} sigma; states map through
    x = r - 2^{1/6} sigma at the reporting layer.
    """
    if not mu > 0 or not hbar > 0:
        raise ValueError("mu and hbar must be positive")
    return OscillatorSpec(mu=mu, omega=spec.epsilon / (spec.gamma_sq * hbar), hbar=hbar)


def bound_levels(spec: LJSpec) -> list[tuple[int, float]]:
    """The gamma_sq bound levels (m, E_m), E_m = (epsilon/gamma^2)(m + 1/2).

    Levels are computed in exact rational arithmetic and rounded once, so
    the ladder is the correctly-rounded image of an exactly even ladder
    with spacing epsilon / gamma_sq.
    """
    eps = Fraction(spec.epsilon)
    g = spec.gamma_sq
    return [(m, float(eps * (2 * m + 1) / (2 * g))) for m in range(-g, 0)]


def estimate_gamma_sq(epsilon: float, delta_e: float) -> tuple[int, float]:
    """Invert the spacing relation: gamma_sq ~ epsilon / delta_e.

    Returns the nearest positive integer and the rounding residual
    |epsilon/delta_e - gamma_sq|.  A spacing larger than the well depth is
    unphysical for this model; it clamps to gamma_sq = 1 with a warning.
    """
    if not (math.isfinite(epsilon) and epsilon > 0):
        raise ValueError("epsilon must be positive and finite")
    if not (math.isfinite(delta_e) and delta_e > 0):
        raise ValueError("delta_e must be positive and finite")
    ratio = epsilon / delta_e
    if delta_e > epsilon:
        warnings.warn(
            f"level spacing {delta_e!r} exceeds well depth {epsilon!r}; clamping gamma_sq to 1",
            stacklevel=2,
        )
        return 1, abs(ratio - 1.0)
    g = max(1, round(ratio))
    return g, abs(ratio - g)


def harmonic_curve(r: float, spec: LJSpec, k: float) -> float:
    """Parabola -epsilon + k (r - 2^{1/6} sigma)^2 / 2 approximating the well."""
    if not k > 0:
        raise ValueError("force constant k must be positive")
    d = r - R_MIN_FACTOR * spec.sigma
    return -spec.epsilon + 0.5 * k * d * d


def curvature_matched_k(spec: LJSpec) -> float:
    """U''(r_min) = 72 epsilon / (2^{1/3} sigma^2), for comparison plots."""
    return 72.0 * spec.epsilon / (2.0 ** (1.0 / 3.0) * spec.sigma**2)
