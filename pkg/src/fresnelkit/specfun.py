"""Special functions used by every closed form in the package.

Scalar, deterministic implementations with explicit validity cutoffs:

* ``gamma``          complex Gamma (Lanczos rational approximation + reflection)
* ``fresnel_cs``     Fresnel integrals C(x) = int_0^x cos(w^2) dw, S likewise
* ``airy_ai``        Airy Ai for real and complex argument
* ``mittag_leffler`` E_{nu,1}(z) by truncated power series
* ``wright``         W_{alpha,beta}(z) by truncated power series
* ``bessel_i``       modified Bessel I_nu(x), small-order series form

No caching, no global state; everything here is pure and re-entrant.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError, SeriesBudgetError

__all__ = [
    "SeriesControl",
    "gamma",
    "lgamma_signed",
    "rgamma",
    "fresnel_cs",
    "FRESNEL_LIMIT",
    "airy_ai",
    "mittag_leffler",
    "wright",
    "bessel_i",
]

# int_0^inf cos(w^2) dw = int_0^inf sin(w^2) dw = sqrt(pi/2)/2
FRESNEL_LIMIT = 0.5 * math.sqrt(math.pi / 2.0)

# Maclaurin series loses ~2 digits at |x| = 3; quadrature bridges to the
# asymptotic region, which takes over at |x| >= 6.
_FRESNEL_SERIES_CUT = 3.0
_FRESNEL_ASYMP_CUT = 6.0

_ML_ABS_BUDGET = 30.0  # |z| budget for the Mittag-Leffler series in float64

# Lanczos g=7, n=9 coefficients (relative error ~1e-15 on Re z >= 0.5).
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_GL20_NODES, _GL20_WEIGHTS = np.polynomial.legendre.leggauss(20)


@dataclass(frozen=True)
class SeriesControl:
    """Truncation control for the power series evaluators.

    rel_tol: stop once two consecutive terms fall below rel_tol * max(1, |sum|)
    max_terms: hard budget before SeriesBudgetError
    """

    rel_tol: float = 1e-15
    max_terms: int = 500

    def __post_init__(self):
        if not (self.rel_tol > 0.0):
            raise DomainError("rel_tol must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")


_DEFAULT_CTL = SeriesControl()


def _is_nonpositive_integer(z: complex) -> bool:
    if z.imag != 0.0:
        return False
    x = z.real
    return x <= 0.0 and x == math.floor(x)


def gamma(z: complex) -> complex:
    """Complex Gamma function.

    Lanczos approximation on Re z >= 0.5, reflection
    Gamma(z) Gamma(1-z) = pi / sin(pi z) otherwise.  Relative error is
    ~1e-14 for |z| <= 50.  Raises PoleError at z in {0, -1, -2, ...}.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at z={z}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    zz = z - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (zz + k)
    w = zz + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * w ** (zz + 0.5) * cmath.exp(-w) * acc


def lgamma_signed(x: float) -> tuple[float, float]:
    """(log|Gamma(x)|, sign of Gamma(x)) for real non-pole x."""
    if x > 0.0:
        return math.lgamma(x), 1.0
    if x == math.floor(x):
        raise PoleError(f"gamma pole at x={x}")
    # reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    s = math.sin(math.pi * x)
    logabs = math.log(math.pi) - math.log(abs(s)) - math.lgamma(1.0 - x)
    return logabs, math.copysign(1.0, s)


def rgamma(x: float) -> float:
    """1 / Gamma(x) for real x; returns 0.0 exactly at the poles."""
    if x <= 0.0 and x == math.floor(x):
        return 0.0
    logabs, sign = lgamma_signed(x)
    if logabs < -745.0:  # 1/Gamma overflows; cannot happen for sane input
        raise DomainError(f"1/gamma overflow at x={x}")
    return sign * math.exp(-logabs)


# ---------------------------------------------------------------------------
# Fresnel integrals
# ---------------------------------------------------------------------------

def _fresnel_series(x: float) -> tuple[float, float]:
    # C: sum (-1)^k x^{4k+1} / ((2k)! (4k+1)),  S: sum (-1)^k x^{4k+3} / ((2k+1)! (4k+3))
    x4 = x ** 4
    p = 1.0  # (-x^4)^k / (2k)!
    q = 1.0  # (-x^4)^k / (2k+1)!
    c = x
    s = x ** 3 / 3.0
    for k in range(1, 80):
        p *= -x4 / ((2 * k - 1) * (2 * k))
        q *= -x4 / ((2 * k) * (2 * k + 1))
        dc = p * x / (4 * k + 1)
        ds = q * x ** 3 / (4 * k + 3)
        c += dc
        s += ds
        if abs(dc) < 1e-18 and abs(ds) < 1e-18:
            break
    return c, s


def _fresnel_bridge(x: float) -> tuple[float, float]:
    # Gauss-Legendre panels on [cut, x], one panel per phase interval of pi.
    a = _FRESNEL_SERIES_CUT
    edges = [a]
    k = math.ceil(a * a / math.pi)
    while True:
        e = math.sqrt(k * math.pi)
        if e >= x:
            break
        edges.append(e)
        k += 1
    edges.append(x)
    c = s = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        w = mid + half * _GL20_NODES
        ph = w * w
        c += half * float(np.dot(_GL20_WEIGHTS, np.cos(ph)))
        s += half * float(np.dot(_GL20_WEIGHTS, np.sin(ph)))
    c0, s0 = _SERIES_AT_CUT
    return c0 + c, s0 + s


def _fresnel_tail(x: float) -> complex:
    # int_x^inf e^{i w^2} dw = (1/2) int_{x^2}^inf e^{iv} v^{-1/2} dv,
    # expanded by repeated integration by parts; truncated at the smallest term.
    a = x * x
    coef = 1.0 + 0.0j
    acc = 0.0 + 0.0j
    apow = 1.0 / math.sqrt(a)
    prev = math.inf
    for m in range(0, 40):
        term = coef * apow
        if abs(term) >= prev:
            break
        acc += term
        prev = abs(term)
        coef *= -1j * (0.5 + m)
        apow /= a
    return 0.5j * cmath.exp(1j * a) * acc


def fresnel_cs(x: float) -> tuple[float, float]:
    """Fresnel integrals (C(x), S(x)) with C(x) = int_0^x cos(w^2) dw.

    Odd in x.  Absolute error <= ~1e-13 everywhere; x = +-inf returns the
    exact limit sqrt(pi/2)/2.
    """
    if math.isnan(x):
        raise DomainError("fresnel_cs: nan argument")
    if math.isinf(x):
        lim = FRESNEL_LIMIT if x > 0 else -FRESNEL_LIMIT
        return lim, lim
    ax = abs(x)
    if ax <= _FRESNEL_SERIES_CUT:
        c, s = _fresnel_series(ax)
    elif ax < _FRESNEL_ASYMP_CUT:
        c, s = _fresnel_bridge(ax)
    else:
        tail = _fresnel_tail(ax)
        c = FRESNEL_LIMIT - tail.real
        s = FRESNEL_LIMIT - tail.imag
    if x < 0.0:
        return -c, -s
    return c, s


_SERIES_AT_CUT = _fresnel_series(_FRESNEL_SERIES_CUT)


# ---------------------------------------------------------------------------
# Airy function
# ---------------------------------------------------------------------------

_AIRY_SERIES_CUT = 6.0      # Maclaurin pair loses ~4 digits here
_AIRY_REAL_BESSEL_CUT = 4.0  # real axis switches to the K_{1/3} integral
_AIRY_MAX_ABS = 80.0

_AI0 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))   # Ai(0)
_AIP0 = 1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))  # -Ai'(0)


def _airy_maclaurin(z: complex) -> complex:
    # Ai(z) = Ai(0) f(z) + Ai'(0) g(z) with
    # f = sum a_k z^{3k},  a_k = a_{k-1} / (3k (3k-1))
    # g = sum b_k z^{3k+1}, b_k = b_{k-1} / (3k (3k+1))
    z3 = z ** 3
    fa = 1.0 + 0.0j
    gb = 1.0 + 0.0j
    f = fa
    g = gb
    for k in range(1, 160):
        fa *= z3 / ((3 * k) * (3 * k - 1))
        gb *= z3 / ((3 * k) * (3 * k + 1))
        f += fa
        g += gb * 1.0
        if abs(fa) < 1e-18 * max(1.0, abs(f)) and abs(gb) < 1e-18 * max(1.0, abs(g)):
            break
    return _AI0 * f - _AIP0 * (g * z)


def _airy_real_bessel_k(x: float) -> float:
    # Ai(x) = (1/pi) sqrt(x/3) K_{1/3}(zeta), zeta = (2/3) x^{3/2}, with
    # K_{1/3}(zeta) = int_0^inf e^{-zeta cosh u} cosh(u/3) du.
    # The scaled integrand e^{-zeta(cosh u - 1)} cosh(u/3) is smooth and
    # positive: fixed Gauss-Legendre panels reach full precision.
    zeta = (2.0 / 3.0) * x ** 1.5
    umax = math.acosh(1.0 + 45.0 / zeta)
    edges = np.linspace(0.0, umax, 9)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        u = mid + half * _GL20_NODES
        vals = np.exp(-zeta * (np.cosh(u) - 1.0)) * np.cosh(u / 3.0)
        total += half * float(np.dot(_GL20_WEIGHTS, vals))
    return math.sqrt(x / 3.0) / math.pi * math.exp(-zeta) * total


def _airy_asymptotic(z: complex) -> complex:
    # Ai(z) ~ e^{-zeta} / (2 sqrt(pi) z^{1/4}) * sum (-1)^k u_k zeta^{-k},
    # zeta = (2/3) z^{3/2};  u_0 = 1, u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)).
    zeta = (2.0 / 3.0) * z ** 1.5
    acc = 1.0 + 0.0j
    term = 1.0 + 0.0j
    uk = 1.0
    prev = math.inf
    for k in range(1, 40):
        uk *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1))
        term = ((-1) ** k) * uk / zeta ** k
        if abs(term) >= prev:
            break
        acc += term
        prev = abs(term)
    pref = cmath.exp(-zeta) / (2.0 * math.sqrt(math.pi) * z ** 0.25)
    return pref * acc


def airy_ai(z: complex) -> complex:
    """Airy function Ai(z).

    Real z >= 4 uses the K_{1/3} Bessel integral (no cancellation, ~1e-15
    relative).  |z| <= 6 uses the Maclaurin pair.  Larger complex z with
    |arg z| <= 3pi/4 uses the asymptotic expansion; the deep oscillatory
    sector and |z| > 80 are out of the supported domain.
    """
    z = complex(z)
    if abs(z) > _AIRY_MAX_ABS:
        raise DomainError(f"airy_ai: |z|={abs(z):.3g} beyond supported cutoff {_AIRY_MAX_ABS}")
    if z.imag == 0.0 and z.real >= _AIRY_REAL_BESSEL_CUT:
        return complex(_airy_real_bessel_k(z.real))
    if abs(z) <= _AIRY_SERIES_CUT:
        return _airy_maclaurin(z)
    if abs(cmath.phase(z)) > 0.75 * math.pi:
        raise DomainError("airy_ai: |arg z| > 3pi/4 with |z| > 5 is unsupported")
    return _airy_asymptotic(z)


# ---------------------------------------------------------------------------
# Mittag-Leffler and Wright series
# ---------------------------------------------------------------------------

def mittag_leffler(nu: float, z: complex, ctl: SeriesControl = _DEFAULT_CTL) -> complex:
    """E_{nu,1}(z) = sum_k z^k / Gamma(nu k + 1), truncated power series.

    Valid for nu in (0, 2] with |z| <= 30 (the float64 series budget).
    Terms are formed as exp(k log z - lgamma(nu k + 1)) so nothing overflows.
    """
    if not (0.0 < nu <= 2.0):
        raise DomainError(f"mittag_leffler: nu={nu} outside (0, 2]")
    z = complex(z)
    if abs(z) > _ML_ABS_BUDGET:
        raise DomainError(f"mittag_leffler: |z|={abs(z):.3g} beyond series budget {_ML_ABS_BUDGET}")
    if z == 0.0:
        return 1.0 + 0.0j
    logz = cmath.log(z)
    acc = 1.0 + 0.0j  # k = 0 term
    small_streak = 0
    for k in range(1, ctl.max_terms + 1):
        term = cmath.exp(k * logz - math.lgamma(nu * k + 1.0))
        acc += term
        if abs(term) <= ctl.rel_tol * max(1.0, abs(acc)):
            small_streak += 1
            if small_streak >= 2:
                return acc
        else:
            small_streak = 0
    raise SeriesBudgetError(
        f"mittag_leffler(nu={nu}, |z|={abs(z):.3g}) not converged in {ctl.max_terms} terms")


def wright(alpha: float, beta: float, z: complex, ctl: SeriesControl = _DEFAULT_CTL) -> complex:
    """Wright function W_{alpha,beta}(z) = sum_k z^k / (k! Gamma(alpha k + beta)).

    Requires alpha > -1.  Gamma poles in the denominator contribute exact
    zero terms.  Terms are assembled in log space.
    """
    if alpha <= -1.0:
        raise DomainError(f"wright: alpha={alpha} must exceed -1")
    z = complex(z)
    if z == 0.0:
        return complex(rgamma(beta))
    logz = cmath.log(z)
    acc = 0.0 + 0.0j
    small_streak = 0
    for k in range(ctl.max_terms + 1):
        g = alpha * k + beta
        if g <= 0.0 and g == math.floor(g):
            continue  # pole of Gamma: zero term
        logabs_g, sign_g = lgamma_signed(g)
        term = sign_g * cmath.exp(k * logz - math.lgamma(k + 1.0) - logabs_g)
        acc += term
        if k > 0 and abs(term) <= ctl.rel_tol * max(1.0, abs(acc)):
            small_streak += 1
            if small_streak >= 2:
                return acc
        else:
            small_streak = 0
    raise SeriesBudgetError(
        f"wright(alpha={alpha}, beta={beta}, |z|={abs(z):.3g}) not converged "
        f"in {ctl.max_terms} terms")


def bessel_i(nu: float, x: float, ctl: SeriesControl = _DEFAULT_CTL) -> float:
    """Modified Bessel I_nu(x) for real x >= 0, ascending series form."""
    if x < 0.0:
        raise DomainError("bessel_i: x must be >= 0")
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    half = 0.5 * x
    loghalf = math.log(half)
    acc = 0.0
    small_streak = 0
    for k in range(ctl.max_terms + 1):
        g = k + nu + 1.0
        if g <= 0.0 and g == math.floor(g):
            continue
        logabs_g, sign_g = lgamma_signed(g)
        term = sign_g * math.exp((2 * k + nu) * loghalf - math.lgamma(k + 1.0) - logabs_g)
        acc += term
        if k > 0 and abs(term) <= ctl.rel_tol * max(1.0, abs(acc)):
            small_streak += 1
            if small_streak >= 2:
                return acc
        else:
            small_streak = 0
    raise SeriesBudgetError(f"bessel_i(nu={nu}, x={x}) not converged")
