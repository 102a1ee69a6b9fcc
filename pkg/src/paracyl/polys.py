"""Exact integer polynomial algebra and physicists' Hermite polynomials.

A polynomial is a tuple of Python ints, index i holding the coefficient of
t**i; the empty tuple is the zero polynomial.  All arithmetic here is exact,
which is what makes the high-order constructions trustworthy: H_50 already
has coefficients far beyond 64-bit range.

The Hermite convention is the physicists' one (weight e^{-t^2}, leading
coefficient 2^n, squared norm 2^n n! sqrt(pi)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

#: Default order cap for the polynomial constructors.  A resource guard, not
#: a mathematical limit; pass a larger ``cap`` explicitly to go beyond it.
DEGREE_CAP = 200


@dataclass(frozen=True)
class PolyZ:
    """Univariate polynomial with exact arbitrary-precision integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be ints, got {type(c).__name__}")
        trimmed = tuple(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "coeffs", trimmed)

    @property
    def degree(self) -> int:
        """Polynomial degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs


ZERO = PolyZ()
ONE = PolyZ((1,))


def poly_eval(p: PolyZ, t):
    """Evaluate ``p`` at ``t`` by Horner's scheme.

    ``t`` may be an int (the result is then exact), a float, or a numpy
    array; the return type follows the argument.
    """
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_derivative(p: PolyZ) -> PolyZ:
    """Exact derivative d/dt of ``p``."""
    return PolyZ(tuple(i * c for i, c in enumerate(p.coeffs))[1:])


def _poly_sub(a: PolyZ, b: PolyZ) -> PolyZ:
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return PolyZ(tuple(x - y for x, y in zip(ca, cb)))


def _poly_scale(a: PolyZ, k: int) -> PolyZ:
    return PolyZ(tuple(k * c for c in a.coeffs))


def _poly_mul_t(a: PolyZ) -> PolyZ:
    """Multiply by t (shift every power up by one)."""
    return PolyZ((0,) + a.coeffs) if a.coeffs else ZERO


def _check_order(n: int, cap: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("order must be an int")
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > cap:
        raise ValueError(f"order {n} exceeds the configured cap {cap}")


@lru_cache(maxsize=None)
def _hermite_coeffs(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev, cur = (1,), (0, 2)
    for k in range(1, n):
        # H_{k+1} = 2 t H_k - 2 k H_{k-1}
        nxt = [0] * (k + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += 2 * c
        for i, c in enumerate(prev):
            nxt[i] -= 2 * k * c
        prev, cur = cur, tuple(nxt)
    return cur


def hermite_recurrence(n: int, cap: int = DEGREE_CAP) -> PolyZ:
    """H_n built by the three-term recurrence, with exact coefficients."""
    _check_order(n, cap)
    return PolyZ(_hermite_coeffs(n))


def hermite_rodrigues(n: int, cap: int = DEGREE_CAP) -> PolyZ:
    """H_n(t) = (-1)^n e^{t^2} d^n/dt^n e^{-t^2}, via exact cofactor algebra.

    Differentiating q(t) e^{-t^2} gives (q' - 2 t q) e^{-t^2}, so the
    cofactor of e^{-t^2} evolves as q -> q' - 2 t q starting from q = 1;
    the (-1)^n sign then yields H_n.
    """
    _check_order(n, cap)
    q = ONE
    for _ in range(n):
        q = _poly_sub(poly_derivative(q), _poly_scale(_poly_mul_t(q), 2))
    return q if n % 2 == 0 else _poly_scale(q, -1)
