"""Closed-form spectra and eigenfunctions, with validity bookkeeping.

Every formula that can go complex is guarded: negative radicands produce
flagged-invalid results carrying the offending quantity, never silent
complex arithmetic.  The constant-velocity branch, the zero-energy mode,
the near-origin expansion, the energy-dependent-potential branch, and the
position-dependent-velocity (Scarf) branch are all here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import CatenoidParams
from .numeric import Grid, WavefunctionSamples, solve_bracketed
from .specfun import JacobiParams, hermite, jacobi, kummer_m, parabolic_cylinder_d

__all__ = [
    "QuantumNumbers",
    "JacobiBranchParams",
    "ScarfParams",
    "EnergyLevel",
    "jacobi_branch_params",
    "energy_constant_case",
    "eigenfunction_constant_case",
    "constant_case_rspace_solution",
    "constant_case_rspace_potential",
    "constant_case_epsilon_sq",
    "zero_energy_solution",
    "near_origin_quantization",
    "near_origin_solution",
    "energy_dependent_branch",
    "scarf_params_pdfv",
    "scarf_params_physical",
    "energy_pdfv",
    "eigenfunction_pdfv",
    "superpotential_pdfv",
    "partner_eigenfunction_pdfv",
    "partner_eigenfunction_constant",
]


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ValueError(f"principal number must be a non-negative integer, got {self.n}")
        if int(self.m) != self.m:
            raise ValueError(f"angular momentum must be an integer, got {self.m}")


@dataclass(frozen=True)
class EnergyLevel:
    """Magnitude of an energy level (both signs are admissible) plus a
    validity flag; ``reason`` names the offending radicand when invalid."""

    value: float
    valid: bool
    reason: str = ""


@dataclass(frozen=True)
class JacobiBranchParams:
    """Exponents and auxiliary constants of the polynomial branch.

    Radicands are stored so invalid (complex) parameters can be reported;
    the value fields hold NaN in that case.
    """

    m: int
    a: float
    b: float
    M1: float
    M2: float
    a_radicand: float
    b_radicand: float

    @property
    def all_real(self) -> bool:
        return self.a_radicand >= 0.0 and self.b_radicand >= 0.0

    @property
    def invalid_reason(self) -> str:
        parts = []
        if self.b_radicand < 0.0:
            parts.append(f"M1 = sqrt({self.b_radicand:g}) is complex")
        if self.a_radicand < 0.0:
            parts.append(f"M2 = sqrt({self.a_radicand:g}) is complex")
        return "; ".join(parts)


def jacobi_branch_params(m: int) -> JacobiBranchParams:
    """Exponents a, b and constants M1, M2 of the polynomial branch.

    a = sqrt(7+12m+4m^2)/4, b = sqrt(7-12m+4m^2)/4, M1 = 4b, M2 = 4a.
    Negative radicands are flagged instead of producing complex values.
    """
    ra = 7.0 + 12.0 * m + 4.0 * m * m
    rb = 7.0 - 12.0 * m + 4.0 * m * m
    a = 0.25 * math.sqrt(ra) if ra >= 0.0 else math.nan
    b = 0.25 * math.sqrt(rb) if rb >= 0.0 else math.nan
    return JacobiBranchParams(
        m=m,
        a=a,
        b=b,
        M1=4.0 * b if rb >= 0.0 else math.nan,
        M2=4.0 * a if ra >= 0.0 else math.nan,
        a_radicand=ra,
        b_radicand=rb,
    )


def _constant_case_radicand(jp: JacobiBranchParams, n: int) -> float:
    # The printed closed form omits the 8n term; the matching condition of
    # the polynomial branch requires it, and only with it does the closed
    # form eigenfunction satisfy its differential equation.
    m = jp.m
    s = jp.M1 + jp.M2
    return -27.0 + 4.0 * m * m + 2.0 * s + jp.M1 * jp.M2 + 8.0 * n * n + 8.0 * n + 4.0 * n * s


def energy_constant_case(
    params: CatenoidParams, v_F: float, qn: QuantumNumbers
) -> EnergyLevel:
    """|E_n| = v_F/(2*sqrt(2)*R) * sqrt(radicand) for the polynomial branch.

    Invalid when M1 or M2 is complex or the radicand is negative.
    """
    jp = jacobi_branch_params(qn.m)
    if not jp.all_real:
        return EnergyLevel(value=math.nan, valid=False, reason=jp.invalid_reason)
    rad = _constant_case_radicand(jp, qn.n)
    if rad < 0.0:
        return EnergyLevel(
            value=math.nan,
            valid=False,
            reason=f"energy radicand {rad:g} is negative",
        )
    return EnergyLevel(value=v_F / (2.0 * math.sqrt(2.0) * params.R) * math.sqrt(rad), valid=True)


def _regularized_branch(m: int) -> JacobiBranchParams:
    """Absolute-value regularization of complex radicands (plot support only)."""
    ra = abs(7.0 + 12.0 * m + 4.0 * m * m)
    rb = abs(7.0 - 12.0 * m + 4.0 * m * m)
    a, b = 0.25 * math.sqrt(ra), 0.25 * math.sqrt(rb)
    return JacobiBranchParams(m=m, a=a, b=b, M1=4 * b, M2=4 * a, a_radicand=ra, b_radicand=rb)


def eigenfunction_constant_case(
    params: CatenoidParams,
    qn: QuantumNumbers,
    u,
    exponent_shift: float = 1.0,
    normalize: bool = True,
    allow_invalid: bool = False,
):
    """Polynomial-branch eigenfunction in the meridian coordinate.

    (1-t)^(a-shift) (1+t)^(b-shift) P_n^(2a,2b)(t) with t = u/sqrt(u^2+R^2).
    shift = 1 is the printed form; shift = 3/4 is the value produced by the
    full chain of variable changes (the two differ by a smooth positive
    factor (1-t^2)^(1/4)).  Normalization is numeric over a truncated
    domain with measure du.
    """
    jp = jacobi_branch_params(qn.m)
    if not jp.all_real:
        if not allow_invalid:
            raise ValueError(f"invalid branch parameters: {jp.invalid_reason}")
        jp = _regularized_branch(qn.m)
    u = np.asarray(u, dtype=float)

    def raw(uu):
        t = uu / np.sqrt(uu * uu + params.R**2)
        pj = jacobi(JacobiParams(qn.n, 2.0 * jp.a, 2.0 * jp.b), t)
        return (1.0 - t) ** (jp.a - exponent_shift) * (1.0 + t) ** (jp.b - exponent_shift) * pj

    vals = raw(u)
    if not normalize:
        return vals
    uu = np.linspace(-40.0 * params.R, 40.0 * params.R, 16001)
    norm = math.sqrt(np.trapezoid(raw(uu) ** 2, uu))
    return vals / norm


def constant_case_rspace_solution(qn: QuantumNumbers, r, allow_invalid: bool = False):
    """r-space solution (1-r)^a (1+r)^b P_n^(2a,2b)(r) of the frozen-energy
    equation; this is the form whose differential-equation residual
    vanishes."""
    jp = jacobi_branch_params(qn.m)
    if not jp.all_real:
        if not allow_invalid:
            raise ValueError(f"invalid branch parameters: {jp.invalid_reason}")
        jp = _regularized_branch(qn.m)
    r = np.asarray(r, dtype=float)
    pj = jacobi(JacobiParams(qn.n, 2.0 * jp.a, 2.0 * jp.b), r)
    return (1.0 - r) ** jp.a * (1.0 + r) ** jp.b * pj


def constant_case_rspace_potential(m: int, r):
    """Potential of the frozen-energy r-space problem, without the
    eigenvalue term: (r^2-2)/(4(1-r^2)) + 3mr/(1-r^2) + (m^2+2)/(1-r^2) - 4."""
    r = np.asarray(r, dtype=float)
    q = 1.0 - r * r
    return (r * r - 2.0) / (4.0 * q) + 3.0 * m * r / q + (m * m + 2.0) / q - 4.0


def constant_case_epsilon_sq(qn: QuantumNumbers) -> float:
    """Dimensionless eigenvalue (E R / v_F)^2 of the polynomial branch."""
    jp = jacobi_branch_params(qn.m)
    if not jp.all_real:
        raise ValueError(f"invalid branch parameters: {jp.invalid_reason}")
    return _constant_case_radicand(jp, qn.n) / 8.0


def zero_energy_solution(m: int, x, amplitude: float = 1.0):
    """Zero-energy mode of the x-space problem.

    amplitude * [1+exp(2ix)]^2 * exp(-2i*[x - m*arctan(exp(ix))]),
    complex-valued, finite on compact subsets of (-pi/2, pi/2).
    """
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(np.abs(xs) >= math.pi / 2):
        raise ValueError("x must lie strictly inside (-pi/2, pi/2)")
    out = np.empty(xs.shape, dtype=complex)
    for i, xi in enumerate(xs):
        z = cmath.exp(2j * xi)
        out[i] = amplitude * (1.0 + z) ** 2 * cmath.exp(-2j * (xi - m * cmath.atan(cmath.exp(1j * xi))))
    return out[0] if scalar else out


def near_origin_quantization(n: int, m: int) -> EnergyLevel:
    """Dimensionless epsilon = sqrt(8n - 5(2+m^2))/2 of the near-origin
    expansion; real only when 8n >= 5(2+m^2)."""
    rad = 8.0 * n - 5.0 * (2.0 + m * m)
    if rad < 0.0:
        return EnergyLevel(
            value=math.nan,
            valid=False,
            reason=f"epsilon radicand 8n-5(2+m^2) = {rad:g} is negative",
        )
    return EnergyLevel(value=0.5 * math.sqrt(rad), valid=True)


def near_origin_degree(m: int, epsilon: float) -> float:
    """Polynomial degree (10 + 5m^2 + 4*eps^2)/8 of the near-origin solution."""
    return (10.0 + 5.0 * m * m + 4.0 * epsilon * epsilon) / 8.0


def near_origin_solution(m: int, epsilon: float, r, c1: float = 0.0, c2: float = 1.0):
    """Near-origin solution around the throat (validity region |r| <~ 0.2).

    c1 * e^(-3mr/2) H_alpha(3m/2 + r) + c2 * e^(-3mr/2) M(-alpha/2, 1/2,
    (3m/2+r)^2).  The polynomial (Hermite) path requires integer degree;
    the Kummer path works for any real degree.
    """
    alpha = near_origin_degree(m, epsilon)
    r = np.asarray(r, dtype=float)
    s = 1.5 * m + r
    damp = np.exp(-1.5 * m * r)
    out = np.zeros_like(r)
    if c1 != 0.0:
        if abs(alpha - round(alpha)) > 1e-9:
            raise ValueError(f"polynomial path needs an integer degree, got alpha={alpha}")
        out = out + c1 * damp * hermite(int(round(alpha)), s)
    if c2 != 0.0:
        ks = np.array([kummer_m(-alpha / 2.0, 0.5, si * si) for si in np.atleast_1d(s)])
        out = out + c2 * damp * ks.reshape(np.shape(s))
    return out


def _edp_f(m: int, eps_sq: float) -> float:
    return math.sqrt(-11.0 + 8.0 * m * m - 12.0 * eps_sq)


def energy_dependent_branch(
    m: int, n: int, r_count: int = 201
) -> tuple[float, WavefunctionSamples]:
    """Self-consistent level of the energy-dependent quadratic potential.

    The eigenvalue eps^2 enters its own potential, so the level is the
    root of f(n + 1/2) - 9m^2/f^2 - 7/2 + m^2 - eps^2 = 0 with
    f = sqrt(-11 + 8m^2 - 12 eps^2); this is exactly the condition under
    which the parabolic-cylinder profile solves the equation.  Requires
    8m^2 > 11 and searches eps^2 in [0, (8m^2-11)/12).
    """
    top = (8.0 * m * m - 11.0) / 12.0
    if top <= 0.0:
        raise ValueError("need 8m^2 > 11 for a real oscillator frequency")

    def g(eps_sq: float) -> float:
        f = _edp_f(m, eps_sq)
        return f * (n + 0.5) - 9.0 * m * m / (f * f) - 3.5 + m * m - eps_sq

    # scan for a sign change, then bisect it down to 1e-12
    lo_edge = 0.0
    hi_edge = top * (1.0 - 1e-9)
    samples = np.linspace(lo_edge, hi_edge, 201)
    vals = [g(s) for s in samples]
    root = None
    for i in range(len(samples) - 1):
        if vals[i] == 0.0:
            root = samples[i]
            break
        if vals[i] * vals[i + 1] < 0.0:
            root = solve_bracketed(g, samples[i], samples[i + 1], tol=1e-12)
            break
    if root is None:
        raise ValueError(f"no level in the admissible bracket for m={m}, n={n}")
    f = _edp_f(m, root)
    grid = Grid(-0.5, 0.5, r_count)
    r = grid.points
    arg = (6.0 * m + (8.0 * m * m - 11.0 - 12.0 * root) * r) / f**1.5
    z = np.array([parabolic_cylinder_d(float(n), ai) for ai in arg])
    return float(root), WavefunctionSamples(grid=grid, values=z)


def energy_dependent_residual(m: int, n: int, eps_sq: float) -> float:
    """Back-substitution residual of the quantization relation."""
    f = _edp_f(m, eps_sq)
    return abs(f * (n + 0.5) - 9.0 * m * m / (f * f) - 3.5 + m * m - eps_sq)


def energy_dependent_potential(m: int, eps_sq: float, r):
    """Quadratic-plus-linear potential whose coefficient carries eps^2."""
    r = np.asarray(r, dtype=float)
    return 3.0 * m * r + (-2.75 + 2.0 * m * m - 3.0 * eps_sq) * r * r - 3.5 + m * m


@dataclass(frozen=True)
class ScarfParams:
    """Parameters of the Scarf-shaped problem for the sec^2 velocity profile.

    ``branch`` records whether the values come from the printed closed
    forms or from the self-consistent (physical) root of the defining
    quartic; only the latter reproduces the numeric spectrum.
    """

    A: float
    B: float
    c: float
    lam: float
    valid: bool = True
    reason: str = ""
    branch: str = "printed"

    @property
    def jacobi_alpha(self) -> float:
        return self.A - self.B - 0.5

    @property
    def jacobi_beta(self) -> float:
        return self.A + self.B - 0.5

    @property
    def jacobi_exponents_classical(self) -> bool:
        return self.jacobi_alpha > -1.0 and self.jacobi_beta > -1.0


def scarf_params_pdfv(params: CatenoidParams, m: int, lam: float) -> ScarfParams:
    """Scarf parameters A, B, c from the printed closed forms.

    The denominator 8(-R + m(4R-2)) must be nonzero; complex intermediates
    are flagged.  Note that these printed values do not satisfy the
    potential-matching identities (see scarf_params_physical for the
    self-consistent branch).
    """
    if lam <= 0.0:
        raise ValueError("velocity scale must be positive")
    R = params.R
    den = 8.0 * (-R + m * (4.0 * R - 2.0))
    if abs(den) < 1e-9 * max(1.0, abs(R), abs(m)):
        raise ZeroDivisionError("parameter denominator -R + m(4R-2) vanishes")
    inner_c = (-3.0 + 4.0 * m * (1.0 + m - 2.0 * R) + 2.0 * R) * (
        -3.0 - 2.0 * R + 4.0 * m * (-1.0 + m + 2.0 * R)
    )
    if inner_c < 0.0:
        return ScarfParams(
            math.nan, math.nan, math.nan, lam, valid=False,
            reason=f"radicand under c, {inner_c:g}, is negative",
        )
    c_sq = -3.0 + 4.0 * m * m + math.sqrt(inner_c)
    if c_sq < 0.0:
        return ScarfParams(
            math.nan, math.nan, math.nan, lam, valid=False,
            reason=f"c^2 = {c_sq:g} is negative",
        )
    c = math.sqrt(c_sq)
    B = c / (2.0 * math.sqrt(2.0))
    inner_a = -3.0 + 4.0 * m * m * (1.0 + m - 2.0 * R) * (-3.0 - 2.0 * R + 4.0 * m * (-1.0 + m + 2.0 * R))
    if inner_a < 0.0:
        return ScarfParams(
            math.nan, B, c, lam, valid=False,
            reason=f"radicand inside A, {inner_a:g}, is negative",
        )
    A = (
        -4.0 * R
        + 8.0 * m * (2.0 * R - 1.0)
        + 4.0 * math.sqrt(2.0) * m * m * c
        - math.sqrt(2.0) * (3.0 + c * math.sqrt(inner_a))
    ) / den
    return ScarfParams(A, B, c, lam, branch="printed")


def scarf_params_physical(
    params: CatenoidParams, m: int, lam: float, root: str = "upper"
) -> ScarfParams:
    """Self-consistent Scarf parameters.

    The matching conditions A(A-1)+B^2 = m^2-1, B(2A-1) = (4mR-2m-R)/2
    reduce to a biquadratic in t = 2A-1 with two positive roots.  The
    "upper" root gives the parameter set whose eigenfunctions decay at the
    domain ends; the numeric spectrum of the Scarf operator matches
    (A+n)^2 - 1 only there.  The "lower" root, returned with the sign
    convention A -> (t-1)/2 of the -A*tan + B*sec superpotential, is the
    branch whose W^2 - W' reproduces the potential exactly.
    """
    if lam <= 0.0:
        raise ValueError("velocity scale must be positive")
    if root not in ("upper", "lower"):
        raise ValueError(f"root must be 'upper' or 'lower', got {root!r}")
    R = params.R
    label = f"physical-{root}"
    beta = 0.5 * (4.0 * m * R - 2.0 * m - R)
    disc = (4.0 * m * m - 3.0) ** 2 - 16.0 * beta * beta
    if disc < 0.0:
        return ScarfParams(
            math.nan, math.nan, math.nan, lam, valid=False,
            reason=f"quartic discriminant {disc:g} is negative", branch=label,
        )
    sign = 1.0 if root == "upper" else -1.0
    t_sq = 0.5 * ((4.0 * m * m - 3.0) + sign * math.sqrt(disc))
    if t_sq <= 0.0:
        return ScarfParams(
            math.nan, math.nan, math.nan, lam, valid=False,
            reason=f"quartic root t^2 = {t_sq:g} is not positive", branch=label,
        )
    t = math.sqrt(t_sq)
    a = 0.5 * (1.0 + t) if root == "upper" else 0.5 * (t - 1.0)
    return ScarfParams(
        A=a,
        B=beta / t,
        c=math.sqrt(2.0) * t,
        lam=lam,
        branch=label,
    )


def energy_pdfv(params: CatenoidParams, scarf: ScarfParams, qn: QuantumNumbers) -> EnergyLevel:
    """|E_n| = (lam/R) sqrt((A+n)^2 - 1); invalid when (A+n)^2 < 1."""
    if not scarf.valid or math.isnan(scarf.A):
        return EnergyLevel(math.nan, valid=False, reason=scarf.reason or "A is not real")
    rad = (scarf.A + qn.n) ** 2 - 1.0
    if rad < 0.0:
        return EnergyLevel(
            math.nan, valid=False, reason=f"(A+n)^2 - 1 = {rad:g} is negative"
        )
    return EnergyLevel(value=scarf.lam / params.R * math.sqrt(rad), valid=True)


def _pdfv_raw(params: CatenoidParams, scarf: ScarfParams, n: int, u, a_shift: float = 0.0):
    u = np.asarray(u, dtype=float)
    A = scarf.A + a_shift
    B = scarf.B
    t = u / np.sqrt(params.R**2 + u * u)
    pj = jacobi(JacobiParams(n, A - B - 0.5, A + B - 0.5), t)
    pref = np.sqrt(1.0 + u * u / params.R**2)
    return pref * (1.0 - t) ** (0.5 * (A - B)) * (1.0 + t) ** (0.5 * (A + B)) * pj


def _pdfv_weight(params: CatenoidParams, lam: float, u):
    vf = lam * (1.0 + np.square(u) / params.R**2)
    return 1.0 / vf**2


def eigenfunction_pdfv(
    params: CatenoidParams,
    scarf: ScarfParams,
    qn: QuantumNumbers,
    u,
    normalize: bool = True,
):
    """Eigenfunction of the sec^2-velocity problem in the meridian coordinate.

    sqrt(1+u^2/R^2) (1-t)^((A-B)/2) (1+t)^((A+B)/2) P_n^(A-B-1/2,A+B-1/2)(t)
    with t = u/sqrt(R^2+u^2); normalized with the Sturm-Liouville weight
    1/v_F(u)^2 implied by the eigenvalue placement.
    """
    if not scarf.valid:
        raise ValueError(f"invalid Scarf parameters: {scarf.reason}")
    if not scarf.jacobi_exponents_classical:
        raise ValueError(
            f"Jacobi exponents ({scarf.jacobi_alpha:g}, {scarf.jacobi_beta:g}) "
            "are outside the classical range"
        )
    vals = _pdfv_raw(params, scarf, qn.n, u)
    if not normalize:
        return vals
    uu = np.linspace(-60.0 * params.R, 60.0 * params.R, 24001)
    w = _pdfv_weight(params, scarf.lam, uu)
    norm = math.sqrt(np.trapezoid(w * _pdfv_raw(params, scarf, qn.n, uu) ** 2, uu))
    return vals / norm


def superpotential_pdfv(scarf: ScarfParams, x):
    """x-space superpotential -A tan(x) + B sec(x) of the Scarf problem."""
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= math.pi / 2):
        raise ValueError("x must lie strictly inside (-pi/2, pi/2)")
    return -scarf.A * np.tan(x) + scarf.B / np.cos(x)


def partner_eigenfunction_pdfv(
    params: CatenoidParams,
    scarf: ScarfParams,
    qn: QuantumNumbers,
    u,
    normalize: bool = True,
):
    """Partner-system eigenfunction sharing the level n+1 of the first system.

    By shape invariance the partner eigenfunction is the first-system form
    with A shifted to A+1; the test suite verifies it against the ladder
    image of the level-(n+1) eigenfunction.  Rejects parameter sets where
    the shared level would be the zero mode.
    """
    if not scarf.valid:
        raise ValueError(f"invalid Scarf parameters: {scarf.reason}")
    level = energy_pdfv(params, scarf, QuantumNumbers(qn.n + 1, qn.m))
    if not level.valid:
        raise ValueError(f"level n+1 is not valid: {level.reason}")
    shifted_energy = (scarf.A + qn.n + 1) ** 2 - scarf.A**2
    if not shifted_energy > 0.0:
        raise ValueError("the shared level coincides with the zero mode")
    vals = _pdfv_raw(params, scarf, qn.n, u, a_shift=1.0)
    if not normalize:
        return vals
    uu = np.linspace(-60.0 * params.R, 60.0 * params.R, 24001)
    w = _pdfv_weight(params, scarf.lam, uu)
    norm = math.sqrt(np.trapezoid(w * _pdfv_raw(params, scarf, qn.n, uu, a_shift=1.0) ** 2, uu))
    return vals / norm


def partner_eigenfunction_constant(
    params: CatenoidParams, qn: QuantumNumbers, u, normalize: bool = True
):
    """Partner-component state: ladder image of the level-(n+1) polynomial
    branch eigenfunction, (d/du + m/sqrt(R^2+u^2)) chi_(n+1) / sqrt(E_(n+1)).
    """
    level = energy_constant_case(params, 1.0, QuantumNumbers(qn.n + 1, qn.m))
    if not level.valid:
        raise ValueError(f"level n+1 is not valid: {level.reason}")
    if not level.value > 0.0:
        raise ValueError("the shared level coincides with the zero mode")
    u = np.asarray(u, dtype=float)
    h = 1e-6 * (1.0 + np.abs(u))

    def chi(uu):
        return eigenfunction_constant_case(params, QuantumNumbers(qn.n + 1, qn.m), uu, normalize=False)

    deriv = (-chi(u + 2 * h) + 8 * chi(u + h) - 8 * chi(u - h) + chi(u - 2 * h)) / (12 * h)
    w = qn.m / np.sqrt(params.R**2 + u * u)
    raw = deriv + w * chi(u)
    if not normalize:
        return raw / level.value
    uu = np.linspace(-40.0 * params.R, 40.0 * params.R, 16001)
    hh = 1e-6 * (1.0 + np.abs(uu))
    dv = (-chi(uu + 2 * hh) + 8 * chi(uu + hh) - 8 * chi(uu - hh) + chi(uu - 2 * hh)) / (12 * hh)
    full = dv + qn.m / np.sqrt(params.R**2 + uu * uu) * chi(uu)
    norm = math.sqrt(np.trapezoid(full**2, uu))
    return raw / norm
