"""The free 1D quantum harmonic oscillator in parabolic-cylinder form.

Energies E_n = hbar omega (n + 1/2); normalized eigenstates
psi_n(x) = N_n D_n(z) with z = sqrt(2 mu omega / hbar) x and
N_n = (mu omega / (hbar pi))^{1/4} / sqrt(n!).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import Grid1D, QuadratureRule, overlap
from .pcf import eval_D, pcf_poly
from .polys import poly_eval


@dataclass(frozen=True)
class OscillatorSpec:
    """Physical parameters: reduced mass, angular frequency, hbar."""

    mu: float = 1.0
    omega: float = 1.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        for name in ("mu", "omega", "hbar"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite")

    @property
    def z_scale(self) -> float:
        """Map x -> z: z = sqrt(2 mu omega / hbar) x."""
        return math.sqrt(2.0 * self.mu * self.omega / self.hbar)

    @property
    def length_scale(self) -> float:
        """Characteristic length sqrt(hbar / (mu omega))."""
        return math.sqrt(self.hbar / (self.mu * self.omega))

    @property
    def gaussian_scale(self) -> float:
        """Decay rate c of the eigenstates, |psi_n| ~ e^{-c x^2 / 2}."""
        return self.mu * self.omega / self.hbar


def energy(n: int, spec: OscillatorSpec) -> float:
    """E_n = hbar omega (n + 1/2)."""
    if n < 0:
        raise ValueError("quantum number must be non-negative")
    return spec.hbar * spec.omega * (n + 0.5)


def norm_const(n: int, spec: OscillatorSpec) -> float:
    """N_n = (mu omega / (hbar pi))^{1/4} / sqrt(n!).

    Above n = 20 the factorial goes through lgamma to avoid building huge
    integers just to take a root.
    """
    if n < 0:
        raise ValueError("quantum number must be non-negative")
    base = (spec.mu * spec.omega / (spec.hbar * math.pi)) ** 0.25
    if n <= 20:
        return base / math.sqrt(math.factorial(n))
    return base * math.exp(-0.5 * math.lgamma(n + 1.0))


def eval_psi(n: int, spec: OscillatorSpec, x: float) -> float:
    """psi_n(x) = N_n D_n(sqrt(2 mu omega / hbar) x)."""
    return norm_const(n, spec) * eval_D(n, spec.z_scale * x)


@dataclass(frozen=True)
class Eigenstate:
    """Callable eigenstate; ``shift`` is a dimensionless offset in z."""

    n: int
    spec: OscillatorSpec
    shift: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("quantum number must be non-negative")

    def __call__(self, x: float) -> float:
        return norm_const(self.n, self.spec) * eval_D(self.n, self.spec.z_scale * x + self.shift)

    @property
    def energy(self) -> float:
        return energy(self.n, self.spec)


def expectation_x(n: int, spec: OscillatorSpec, rule: QuadratureRule | None = None) -> float:
    """<psi_n | x | psi_n> by quadrature; zero by parity."""
    psi = Eigenstate(n, spec)
    return overlap(psi, lambda x: x * psi(x), spec.gaussian_scale, rule)


def _state_values(n: int, spec: OscillatorSpec, x: np.ndarray, shift: float = 0.0) -> np.ndarray:
    """Vectorized psi values on a grid (optionally z-shifted)."""
    z = spec.z_scale * x + shift
    return norm_const(n, spec) * poly_eval(pcf_poly(n).poly, z) * np.exp(-z * z / 4.0)


def _max_residual(psi: np.ndarray, potential: np.ndarray, e: float, spec: OscillatorSpec, h: float) -> float:
    """Max |H psi - E psi| over interior points, kinetic term by stencil."""
    kinetic = -(spec.hbar**2 / (2.0 * spec.mu)) * (psi[:-2] - 2.0 * psi[1:-1] + psi[2:]) / (h * h)
    return float(np.max(np.abs(kinetic + (potential[1:-1] - e) * psi[1:-1])))


def hamiltonian_residual(n: int, spec: OscillatorSpec, grid: Grid1D) -> float:
    """Max-norm eigen-residual of (H - E_n) psi_n on the grid interior.

    The kinetic term uses the central second difference, so the residual
    decays as O(h^2).  The grid must span [-6 l, 6 l] with l the oscillator
    length and carry at least 50 points.
    """
    if grid.npoints < 50:
        raise ValueError("grid too coarse: at least 50 points required")
    x = grid.points()
    span = 6.0 * spec.length_scale
    slack = 1e-9 * spec.length_scale
    if x[0] > -span + slack or x[-1] < span - slack:
        raise ValueError("grid must cover [-6, 6] oscillator lengths")
    psi = _state_values(n, spec, x)
    potential = 0.5 * spec.mu * spec.omega**2 * x * x
    return _max_residual(psi, potential, energy(n, spec), spec, grid.h)
