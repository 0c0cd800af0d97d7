"""Special functions needed by the closed-form solutions.

Jacobi and Hermite polynomials by three-term recurrence, the Kummer
confluent hypergeometric M by its power series, parabolic cylinder
functions through the two-Kummer representation, and log-gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "JacobiParams",
    "jacobi",
    "kummer_m",
    "hermite",
    "parabolic_cylinder_d",
    "log_gamma",
    "reciprocal_gamma",
]

_KUMMER_MAX_TERMS = 500
# non-integer orders suffer cancellation between the two Kummer terms; the
# representation keeps ~8 significant digits out to |z| of about 6
_PCF_MAX_Z_NONINTEGER = 6.0
_PCF_MAX_Z = 20.0
_PCF_MAX_NU = 20.0


@dataclass(frozen=True)
class JacobiParams:
    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ValueError(f"degree must be a non-negative integer, got {self.n}")
        if self.alpha <= -1.0 or self.beta <= -1.0:
            raise ValueError("alpha and beta must exceed -1")


def jacobi(p: JacobiParams, x):
    """Jacobi polynomial P_n^(alpha,beta)(x) by forward recurrence in n.

    Evaluation slightly outside [-1, 1] is allowed for residual tests.
    """
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + 1e-12):
        raise ValueError("argument must lie in [-1, 1] (within 1e-12)")
    n, a, b = p.n, p.alpha, p.beta
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0)
        c2 = (2.0 * k + a + b - 1.0) * (a * a - b * b)
        c3 = (2.0 * k + a + b - 1.0) * (2.0 * k + a + b) * (2.0 * k + a + b - 2.0)
        c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b)
        p0, p1 = p1, ((c2 + c3 * x) * p1 - c4 * p0) / c1
    return p1


def kummer_m(a: float, b: float, z: float) -> float:
    """Confluent hypergeometric M(a, b, z) by direct series summation.

    The series terminates for non-positive integer a; otherwise summation
    stops when terms fall below 1e-17 of the partial sum.
    """
    if b <= 0.0 and b == int(b):
        raise ValueError(f"b must not be a non-positive integer, got {b}")
    total = 1.0
    term = 1.0
    terminating = a <= 0.0 and a == int(a)
    for k in range(_KUMMER_MAX_TERMS):
        term *= (a + k) * z / ((b + k) * (k + 1.0))
        total += term
        if terminating and a + k == 0.0:
            return total
        if abs(term) < 1e-17 * abs(total):
            return total
    raise ArithmeticError(f"Kummer series did not converge for a={a}, b={b}, z={z}")


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x); integer degree only."""
    if n < 0 or int(n) != n:
        raise ValueError(f"degree must be a non-negative integer, got {n}")
    x = np.asarray(x, dtype=float)
    h0 = np.ones_like(x)
    if n == 0:
        return h0
    h1 = 2.0 * x
    for k in range(1, n):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * k * h0
    return h1


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ValueError(f"log_gamma requires a positive argument, got {x}")
    return math.lgamma(x)


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x) for any real x; zero at the poles."""
    if x > 0.0:
        return math.exp(-log_gamma(x))
    if x == int(x):
        return 0.0
    # reflection: 1/Gamma(x) = Gamma(1-x)*sin(pi*x)/pi
    return math.exp(log_gamma(1.0 - x)) * math.sin(math.pi * x) / math.pi


def parabolic_cylinder_d(nu: float, z: float) -> float:
    """Weber parabolic cylinder function D_nu(z).

    Uses the two-Kummer representation; for non-negative integer nu one of
    the two terms drops out and the surviving series terminates, which
    reproduces the Hermite form 2^(-nu/2) e^(-z^2/4) H_nu(z/sqrt(2)).
    """
    if abs(nu) > _PCF_MAX_NU:
        raise ValueError(f"order out of supported range |nu| <= {_PCF_MAX_NU}")
    is_int = nu >= 0.0 and nu == int(nu)
    z_max = _PCF_MAX_Z if is_int else _PCF_MAX_Z_NONINTEGER
    if abs(z) > z_max:
        raise ValueError(f"argument out of supported range |z| <= {z_max} for nu={nu}")
    pre = 2.0 ** (nu / 2.0) * math.exp(-z * z / 4.0)
    c1 = math.sqrt(math.pi) * reciprocal_gamma((1.0 - nu) / 2.0)
    c2 = math.sqrt(2.0 * math.pi) * reciprocal_gamma(-nu / 2.0)
    term1 = c1 * kummer_m(-nu / 2.0, 0.5, z * z / 2.0) if c1 != 0.0 else 0.0
    term2 = c2 * z * kummer_m((1.0 - nu) / 2.0, 1.5, z * z / 2.0) if c2 != 0.0 else 0.0
    return pre * (term1 - term2)
