"""The oscillator in a uniform electric field.

Adding the linear term q E x to the harmonic potential shifts the argument
of the parabolic cylinder functions by 2 gamma, where
gamma = q E / sqrt(2 mu hbar omega^3).  Two solution families follow:

* a continuous-gamma^2 branch, E_n = hbar omega (n + 1/2 - gamma^2), with
  states N_n D_n(z + 2 gamma);
* an integer branch valid when gamma^2 = 1, 2, 3, ..., where the spectrum
  keeps the free-oscillator form E_m = hbar omega (m + 1/2) for every
  integer m >= -gamma^2, realized by the same states with index
  m + gamma^2.

For integer gamma^2 the two families describe the same ladder, re-indexed
by m = n - gamma^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import Grid1D, QuadratureRule, overlap
from .oscillator import OscillatorSpec, _max_residual, _state_values, norm_const
from .pcf import eval_D


@dataclass(frozen=True)
class FieldSpec:
    """Charge q and uniform field magnitude; either sign is allowed."""

    q: float
    efield: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.q) and math.isfinite(self.efield)):
            raise ValueError("charge and field must be finite")


def gamma_of(field: FieldSpec, spec: OscillatorSpec) -> float:
    """Dimensionless coupling gamma = q E / sqrt(2 mu hbar omega^3)."""
    return field.q * field.efield / math.sqrt(2.0 * spec.mu * spec.hbar * spec.omega**3)


def energy_shifted(n: int, gamma: float, spec: OscillatorSpec) -> float:
    """Continuous-branch energy E_n = hbar omega (n + 1/2 - gamma^2)."""
    if n < 0:
        raise ValueError("quantum number must be non-negative")
    return spec.hbar * spec.omega * (n + 0.5 - gamma * gamma)


@dataclass(frozen=True)
class ShiftedState:
    """A displaced eigenstate N_k D_k(z + 2 gamma), k = pcf_index.

    ``m`` is the spectral label: equal to pcf_index on the continuous
    branch, and m = pcf_index - gamma^2 (possibly negative) on the integer
    branch.
    """

    m: int
    gamma: float
    spec: OscillatorSpec
    pcf_index: int

    def __post_init__(self) -> None:
        if self.pcf_index < 0:
            raise ValueError("pcf_index must be non-negative")
        if not math.isfinite(self.gamma):
            raise ValueError("gamma must be finite")

    @classmethod
    def continuous(cls, n: int, gamma: float, spec: OscillatorSpec) -> "ShiftedState":
        return cls(m=n, gamma=gamma, spec=spec, pcf_index=n)

    @classmethod
    def integer_branch(cls, m: int, gamma_sq: int, spec: OscillatorSpec) -> "ShiftedState":
        if not isinstance(gamma_sq, int) or isinstance(gamma_sq, bool) or gamma_sq < 1:
            raise ValueError("gamma_sq must be a positive integer")
        if m + gamma_sq < 0:
            raise ValueError("integer branch requires m + gamma_sq >= 0")
        return cls(m=m, gamma=math.sqrt(gamma_sq), spec=spec, pcf_index=m + gamma_sq)

    def __call__(self, x: float) -> float:
        return eval_psi_shifted(self, x)

    @property
    def charge_field_product(self) -> float:
        """q E consistent with this state's gamma."""
        s = self.spec
        return self.gamma * math.sqrt(2.0 * s.mu * s.hbar * s.omega**3)

    @property
    def x_center(self) -> float:
        """Displaced well center, -q E / (mu omega^2)."""
        s = self.spec
        return -self.charge_field_product / (s.mu * s.omega**2)


def eval_psi_shifted(state: ShiftedState, x: float) -> float:
    """N_k D_k(sqrt(2 mu omega / hbar) x + 2 gamma) with k = pcf_index."""
    s = state.spec
    z = s.z_scale * x + 2.0 * state.gamma
    return norm_const(state.pcf_index, s) * eval_D(state.pcf_index, z)


def expectation_x_shifted(state: ShiftedState, rule: QuadratureRule | None = None) -> float:
    """<x> by quadrature; equals -q E / (mu omega^2) for every index."""
    return overlap(state, lambda x: x * state(x), state.spec.gaussian_scale, rule)


def integer_branch_spectrum(
    gamma_sq: int, m_max: int, spec: OscillatorSpec
) -> list[tuple[int, float, int]]:
    """Ladder (m, E_m, pcf_index) for m = -gamma_sq .. m_max.

    E_m = hbar omega (m + 1/2) and pcf_index = m + gamma_sq runs 0, 1, 2...
    """
    if not isinstance(gamma_sq, int) or isinstance(gamma_sq, bool) or gamma_sq < 1:
        raise ValueError("gamma_sq must be a positive integer")
    if m_max < -gamma_sq:
        raise ValueError("empty range: m_max must be at least -gamma_sq")
    return [
        (m, spec.hbar * spec.omega * (m + 0.5), m + gamma_sq)
        for m in range(-gamma_sq, m_max + 1)
    ]


def potential_minimum(field: FieldSpec, spec: OscillatorSpec) -> tuple[float, float]:
    """Minimum of V(x) = mu omega^2 x^2 / 2 + q E x.

    x_min = -q E / (mu omega^2).  Substituting back gives
    e_min = -(q E)^2 / (2 mu omega^2); note the factor 2 in the
    denominator, which is what makes e_min = -hbar omega gamma^2 hold.
    """
    qe = field.q * field.efield
    x_min = -qe / (spec.mu * spec.omega**2)
    e_min = -(qe * qe) / (2.0 * spec.mu * spec.omega**2)
    return x_min, e_min


def field_hamiltonian_residual(state: ShiftedState, e: float, grid: Grid1D) -> float:
    """Max-norm residual of (H_field - E) Psi over the grid interior.

    H_field carries the potential mu omega^2 x^2 / 2 + q E x with q E
    reconstructed from the state's gamma.  The grid must cover the
    displaced well center to +/- 6 oscillator lengths.
    """
    spec = state.spec
    if grid.npoints < 50:
        raise ValueError("grid too coarse: at least 50 points required")
    x = grid.points()
    span = 6.0 * spec.length_scale
    slack = 1e-9 * spec.length_scale
    center = state.x_center
    if x[0] > center - span + slack or x[-1] < center + span - slack:
        raise ValueError("grid must cover the displaced center to +/- 6 oscillator lengths")
    psi = _state_values(state.pcf_index, spec, x, shift=2.0 * state.gamma)
    potential = 0.5 * spec.mu * spec.omega**2 * x * x + state.charge_field_product * x
    return _max_residual(psi, potential, e, spec, grid.h)
