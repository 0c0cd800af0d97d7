"""Independent verification engine.

Finite-difference Hamiltonians on uniform grids, a symmetric tridiagonal
eigensolver, ODE residual evaluation, quadrature normalization, node and
maxima counting, and bracketed root finding.  Everything here is oblivious
to the closed-form results it is used to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "Grid",
    "WavefunctionSamples",
    "TridiagonalOperator",
    "SpectrumResult",
    "discretize",
    "discretize_sturm_liouville",
    "eigen_tridiagonal",
    "ode_residual",
    "second_derivative",
    "first_derivative",
    "quadrature_normalize",
    "count_features",
    "solve_bracketed",
]


@dataclass(frozen=True)
class Grid:
    """Uniform grid with at least 16 points."""

    min: float
    max: float
    count: int

    def __post_init__(self):
        if self.count < 16:
            raise ValueError(f"grid needs at least 16 points, got {self.count}")
        if not self.max > self.min:
            raise ValueError("grid max must exceed min")

    @property
    def h(self) -> float:
        return (self.max - self.min) / (self.count - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.count)


@dataclass
class WavefunctionSamples:
    """Sampled eigenfunction with optional normalization metadata."""

    grid: Grid
    values: np.ndarray
    norm: Optional[float] = None
    weight_label: str = "du"


@dataclass(frozen=True)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix (single off-diagonal array)."""

    diagonal: np.ndarray
    offdiagonal: np.ndarray

    def __post_init__(self):
        if len(self.offdiagonal) != len(self.diagonal) - 1:
            raise ValueError("off-diagonal must be one shorter than diagonal")


@dataclass
class SpectrumResult:
    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray]  # shape (count, k), columns normalized
    grid: Optional[Grid]


def discretize(V: Callable, grid: Grid) -> TridiagonalOperator:
    """Second-order discretization of -d^2/dz^2 + V with Dirichlet ends."""
    x = grid.points
    v = np.asarray(V(x), dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError("potential is not finite on the grid")
    h2 = grid.h**2
    return TridiagonalOperator(
        diagonal=2.0 / h2 + v,
        offdiagonal=np.full(grid.count - 1, -1.0 / h2),
    )


def discretize_sturm_liouville(
    p: Callable, q: Callable, grid: Grid
) -> TridiagonalOperator:
    """Discretize -(p(z) f')' + q(z) f with Dirichlet ends.

    Uses midpoint sampling of p, which keeps the matrix symmetric.
    """
    x = grid.points
    h = grid.h
    h2 = h**2
    # midpoints including the two ghost midpoints just outside the ends,
    # so Dirichlet endpoints carry the full two-sided stiffness
    mid = np.concatenate(([x[0] - 0.5 * h], 0.5 * (x[:-1] + x[1:]), [x[-1] + 0.5 * h]))
    p_mid = np.asarray(p(mid), dtype=float)
    qv = np.asarray(q(x), dtype=float)
    if not (np.all(np.isfinite(p_mid)) and np.all(np.isfinite(qv))):
        raise ValueError("coefficients are not finite on the grid")
    diag = qv + (p_mid[:-1] + p_mid[1:]) / h2
    return TridiagonalOperator(diagonal=diag, offdiagonal=-p_mid[1:-1] / h2)


def eigen_tridiagonal(
    op: TridiagonalOperator,
    k: int,
    grid: Optional[Grid] = None,
    weight: Optional[np.ndarray] = None,
) -> SpectrumResult:
    """Lowest k eigenpairs by Sturm-sequence bisection plus inverse iteration.

    With a diagonal ``weight`` w the generalized problem T f = E w f is
    solved through the symmetric fold w^(-1/2) T w^(-1/2).  Eigenvectors
    are returned in the original variable and normalized in the grid inner
    product (sum |f_i|^2 * h = 1 when a grid is given).
    """
    n = len(op.diagonal)
    if k > n:
        raise ValueError("requested more eigenpairs than matrix dimension")
    diag, off = op.diagonal, op.offdiagonal
    if weight is not None:
        if np.any(weight <= 0.0):
            raise ValueError("weight must be strictly positive")
        s = 1.0 / np.sqrt(weight)
        diag = diag * s * s
        off = off * s[:-1] * s[1:]
    vals, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1))
    if weight is not None:
        vecs = vecs * s[:, None]
    h = grid.h if grid is not None else 1.0
    w = weight[:, None] if weight is not None else 1.0
    vecs = vecs / np.sqrt(np.sum(w * vecs**2 * h, axis=0))
    return SpectrumResult(eigenvalues=vals, eigenvectors=vecs, grid=grid)


def second_derivative(f: np.ndarray, h: float) -> np.ndarray:
    """5-point second derivative on interior points, one-sided at the ends."""
    f = np.asarray(f)
    d2 = np.empty_like(f, dtype=complex if np.iscomplexobj(f) else float)
    d2[2:-2] = (-f[:-4] + 16 * f[1:-3] - 30 * f[2:-2] + 16 * f[3:-1] - f[4:]) / (12 * h * h)
    # 4th-order one-sided stencils for the two points at each end
    c = np.array([45, -154, 214, -156, 61, -10], dtype=float) / 12.0
    for i in (0, 1):
        d2[i] = np.dot(c, f[i : i + 6]) / (h * h)
        d2[-1 - i] = np.dot(c, f[-1 - i : -7 - i : -1]) / (h * h)
    return d2


def first_derivative(f: np.ndarray, h: float) -> np.ndarray:
    """5-point first derivative on interior points, one-sided at the ends."""
    f = np.asarray(f)
    d1 = np.empty_like(f, dtype=complex if np.iscomplexobj(f) else float)
    d1[2:-2] = (f[:-4] - 8 * f[1:-3] + 8 * f[3:-1] - f[4:]) / (12 * h)
    c = np.array([-25, 48, -36, 16, -3], dtype=float) / 12.0
    for i in (0, 1):
        d1[i] = np.dot(c, f[i : i + 5]) / h
        d1[-1 - i] = -np.dot(c, f[-1 - i : -6 - i : -1]) / h
    return d1


def ode_residual(f: np.ndarray, V, E: float, grid: Grid) -> float:
    """Sup norm of (-f'' + V f - E f)/||f||_inf over interior points."""
    f = np.asarray(f)
    if len(f) != grid.count:
        raise ValueError("sample count does not match grid")
    v = V(grid.points) if callable(V) else np.asarray(V)
    res = -second_derivative(f, grid.h) + v * f - E * f
    scale = np.max(np.abs(f))
    if scale == 0.0:
        raise ValueError("zero function has no normalized residual")
    return float(np.max(np.abs(res[2:-2])) / scale)


def quadrature_normalize(
    f: np.ndarray, weight, grid: Grid
) -> tuple[np.ndarray, float]:
    """Trapezoid normalization: returns (f/norm, norm) with
    integral(weight*|f|^2) = 1 afterwards."""
    f = np.asarray(f)
    w = np.ones_like(f, dtype=float) if weight is None else np.asarray(weight, dtype=float)
    norm_sq = np.trapezoid(w * np.abs(f) ** 2, dx=grid.h)
    if norm_sq <= 0.0:
        raise ValueError("cannot normalize a zero-norm function")
    norm = math.sqrt(norm_sq)
    return f / norm, norm


def count_features(f: np.ndarray) -> tuple[int, int]:
    """(interior sign changes of f, local maxima of |f|^2 above 1e-9*peak).

    Samples with |f| below 1e-9 of the peak are treated as zero so that
    round-off noise in eigenvector tails does not register as features.
    Plateaus (including a constant function) count as a single maximum.
    """
    f = np.asarray(f)
    n = len(f)
    if n < 3:
        raise ValueError("need at least 3 samples")
    peak = np.max(np.abs(f))
    if peak == 0.0:
        return 0, 0
    sign = np.sign(np.where(np.abs(f) > 1e-9 * peak, f, 0.0))
    nz = sign[sign != 0]
    changes = int(np.sum(nz[:-1] * nz[1:] < 0))
    d = np.abs(f) ** 2
    floor = 1e-9 * np.max(d)
    maxima = 0
    i = 0
    while i < n:
        j = i
        while j + 1 < n and d[j + 1] == d[i]:
            j += 1
        left_ok = i == 0 or d[i - 1] < d[i]
        right_ok = j == n - 1 or d[j + 1] < d[i]
        if left_ok and right_ok and d[i] > floor:
            maxima += 1
        i = j + 1
    return changes, maxima


def solve_bracketed(g: Callable, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Plain bisection; requires a sign change on [lo, hi]."""
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if glo * ghi > 0.0:
        raise ValueError("no sign change on the bracket")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            return mid
        if glo * gm < 0.0:
            hi, ghi = mid, gm
        else:
            lo, glo = mid, gm
    return 0.5 * (lo + hi)
