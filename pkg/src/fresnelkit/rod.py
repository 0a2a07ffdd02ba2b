"""Flexural rod vibrations: free-line kernel, drift, boundary-value
solutions on the half line, finite-rod image series, survival measures.

The governing operator is u_tt = -(1/4) u_xxxx; its fundamental solution

    u(x, t) = cos(x^2/2t - pi/4) / sqrt(2 pi t)

is a sign-varying density of unit total integral.  The wave-operator
constant kappa = 1/2 is fixed, not a parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, FresnelKitError
from .kernels import Exponential, OscillatoryUnit, SignedKernel
from .quad import fresnel_phase_integral, integrate_adaptive, integrate_oscillatory

__all__ = [
    "BoundarySpec",
    "DriftSpec",
    "fresnel_kernel",
    "fresnel_kernel_drift",
    "kernel_zero",
    "area_decay_nodes",
    "lobe_area",
    "halfline_solution",
    "finite_rod_solution",
    "survival_measure",
    "free_kernel",
    "drift_kernel",
    "halfline_kernel",
]

_SQ2PI = math.sqrt(2.0 * math.pi)


def _check_t(t: float):
    if not (t > 0.0):
        raise DomainError(f"time must be positive, got t={t}")


@dataclass(frozen=True)
class DriftSpec:
    """Drift mu of the factored Schroedinger operators (d/dxx - mu d/dx)."""

    mu_drift: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.mu_drift):
            raise DomainError("mu_drift must be finite")


@dataclass(frozen=True)
class BoundarySpec:
    """Boundary condition at x = 0 plus geometry.

    kind: 'absorbing' (u = 0), 'reflecting' (u_x = 0) or 'elastic'
    (u_x - alpha u = 0, alpha > 0).  alpha = 0 is represented as
    'reflecting'.  geometry: 'halfline' or 'finite' with length L; the
    finite rod currently pairs only with reflecting ends.
    """

    kind: str
    y: float
    alpha: float = 0.0
    geometry: str = "halfline"
    L: float = 0.0

    def __post_init__(self):
        if self.kind not in ("absorbing", "reflecting", "elastic"):
            raise DomainError(f"unknown boundary kind {self.kind!r}")
        if not (self.y > 0.0):
            raise DomainError("start point y must be positive")
        if self.kind == "elastic" and not (self.alpha > 0.0):
            raise DomainError("elastic boundary needs alpha > 0 (alpha = 0 is reflecting)")
        if self.kind != "elastic" and self.alpha != 0.0:
            raise DomainError("alpha applies to the elastic condition only")
        if self.geometry not in ("halfline", "finite"):
            raise DomainError(f"unknown geometry {self.geometry!r}")
        if self.geometry == "finite":
            if not (self.L > 0.0):
                raise DomainError("finite geometry needs L > 0")
            if self.kind != "reflecting":
                raise DomainError("finite rod pairs only with reflecting ends")
            if not (self.y <= self.L):
                raise DomainError("need 0 < y <= L")


def fresnel_kernel(x, t: float):
    """Free-line kernel cos(x^2/2t - pi/4) / sqrt(2 pi t); unit total mass."""
    _check_t(t)
    x = np.asarray(x, dtype=float)
    out = np.cos(x * x / (2.0 * t) - math.pi / 4.0) / math.sqrt(2.0 * math.pi * t)
    return float(out) if out.ndim == 0 else out


def fresnel_kernel_drift(x, t: float, d: DriftSpec = DriftSpec()):
    """Drifted kernel e^{mu x} cos(x^2/2t - mu^2 t/2 - pi/4) / sqrt(2 pi t)."""
    _check_t(t)
    mu = d.mu_drift
    x = np.asarray(x, dtype=float)
    out = (np.exp(mu * x)
           * np.cos(x * x / (2.0 * t) - mu * mu * t / 2.0 - math.pi / 4.0)
           / math.sqrt(2.0 * math.pi * t))
    return float(out) if out.ndim == 0 else out


def kernel_zero(k: int, t: float) -> float:
    """k-th positive zero of the free kernel: x^2/2t - pi/4 = pi/2 + k pi."""
    _check_t(t)
    if k < 0:
        raise DomainError("k must be >= 0")
    return math.sqrt(2.0 * t * (0.75 * math.pi + k * math.pi))

def area_decay_nodes(k: int, t: float) -> float:
    """Lobe lattice alpha_k = sqrt(2 pi t (3/2 + k)) of the area-decay bound.

    Successive nodes bracket sign lobes whose areas decay like 1/alpha_k;
    note these nodes are not the exact zeros of the kernel (see
    kernel_zero), but the decay bound below holds on them.
    """
    _check_t(t)
    if k < 0:
        raise DomainError("k must be >= 0")
    return math.sqrt(2.0 * math.pi * t * (1.5 + k))


def lobe_area(k: int, t: float) -> float:
    """int of the free kernel between area-decay nodes alpha_k, alpha_{k+1}."""
    a, b = area_decay_nodes(k, t), area_decay_nodes(k + 1, t)
    return fresnel_phase_integral(a, b, t) / math.sqrt(2.0 * math.pi * t)


# ---------------------------------------------------------------------------
# Half-line boundary-value solutions
# ---------------------------------------------------------------------------

def _images(x, t, y, sign):
    x = np.asarray(x, dtype=float)
    out = (np.cos((x - y) ** 2 / (2.0 * t) - math.pi / 4.0)
           + sign * np.cos((x + y) ** 2 / (2.0 * t) - math.pi / 4.0)) / math.sqrt(2.0 * math.pi * t)
    return out


def _elastic_correction(s: float, t: float, alpha: float, tol: float) -> float:
    # third term of the elastic solution, rewritten with w = s + v so the
    # amplitude e^{-alpha v} stays bounded for any alpha
    amp = lambda w: np.exp(-alpha * (w - s))
    r = integrate_oscillatory(amp, t, s, math.inf, tol, envelope=("exp", alpha))
    return -2.0 * alpha / math.sqrt(2.0 * math.pi * t) * r.value


def _elastic_form1(x: float, t: float, y: float, alpha: float, tol: float) -> float:
    # cross-check form: absorbing images plus the w e^{-alpha w} integral
    # against the 3pi/4-shifted phase
    s = x + y
    g = lambda w: (w * np.exp(-alpha * (w - s))
                   * np.cos(w * w / (2.0 * t) - 3.0 * math.pi / 4.0))
    # reuse the oscillatory engine through the -pi/4 phase:
    # cos(p - 3pi/4) = -sin(p - pi/4) is handled by direct paneling instead
    from .quad import alternating_limit, oscillatory_lattice  # local import, no cycle

    edges = [s] + [w for w in (math.sqrt(2.0 * t * (0.75 * math.pi + k * math.pi))
                               for k in range(400)) if w > s]
    vals = []
    prev = s
    acc = 0.0
    for i, e in enumerate(edges[1:], start=1):
        r = integrate_adaptive(g, edges[i - 1], e, tol)
        vals.append(r.value)
        width = e - prev
        prev = e
        bound = max(abs(e), 1.0) * math.exp(-alpha * (e - s)) * width
        if bound < 0.1 * tol and i >= 8:
            break
    val, _ = alternating_limit(list(np.cumsum(vals)))
    images = float(_images(np.asarray(x, float), t, y, -1.0))
    return images + 2.0 * val / math.sqrt(2.0 * math.pi * t ** 3)


def _elastic_scalar(x: float, t: float, y: float, alpha: float,
                    tol: float = 1e-11, crosscheck: bool = True) -> float:
    val = float(_images(np.asarray(x, float), t, y, +1.0)) + _elastic_correction(x + y, t, alpha, tol)
    if crosscheck:
        other = _elastic_form1(x, t, y, alpha, tol)
        if abs(val - other) > 1e-9 * max(1.0, abs(val)):
            raise FresnelKitError(
                f"elastic forms disagree at (x={x}, y={y}, t={t}, alpha={alpha}): "
                f"{val!r} vs {other!r}")
    return val


def halfline_solution(x, t: float, b: BoundarySpec, tol: float = 1e-11,
                      crosscheck: bool = True):
    """Boundary-value solution on the half line started from y > 0.

    absorbing: difference of image kernels; reflecting: sum; elastic:
    image sum minus the 2 alpha e^{alpha(x+y)} exponential-amplitude
    oscillatory integral.  The two printed elastic forms are evaluated and
    must agree to 1e-9 (set crosscheck=False to skip the second form).
    Negative x is a domain error: the solutions live on x >= 0.
    """
    _check_t(t)
    if b.geometry != "halfline":
        raise DomainError("halfline_solution needs halfline geometry")
    xs = np.asarray(x, dtype=float)
    if np.any(xs < 0.0):
        raise DomainError("halfline solutions are defined for x >= 0 only")
    if b.kind == "absorbing":
        out = _images(xs, t, b.y, -1.0)
    elif b.kind == "reflecting":
        out = _images(xs, t, b.y, +1.0)
    else:
        flat = np.atleast_1d(xs)
        out = np.array([_elastic_scalar(float(xx), t, b.y, b.alpha, tol, crosscheck)
                        for xx in flat]).reshape(xs.shape)
    return float(out) if out.ndim == 0 else out


def finite_rod_solution(x, t: float, b: BoundarySpec, K: int = 50):
    """Neumann finite-rod solution as the symmetric image partial sum.

    Sums k in [-K, K] of the two image families; the series is only
    conditionally convergent, so the value is returned together with a
    stability flag comparing the K and K-1 symmetric partial sums.
    """
    _check_t(t)
    if b.geometry != "finite":
        raise DomainError("finite_rod_solution needs finite geometry")
    if K < 0:
        raise DomainError("K must be >= 0")
    xs = np.asarray(x, dtype=float)
    if np.any(xs < 0.0) or np.any(xs > b.L):
        raise DomainError("need 0 <= x <= L")
    ks = np.arange(-K, K + 1, dtype=float)[:, None]
    flat = np.atleast_1d(xs)[None, :]
    pref = 1.0 / math.sqrt(2.0 * math.pi * t)
    terms = (np.cos((flat - b.y + 2.0 * ks * b.L) ** 2 / (2.0 * t) - math.pi / 4.0)
             + np.cos((flat + b.y + 2.0 * ks * b.L) ** 2 / (2.0 * t) - math.pi / 4.0))
    total = pref * terms.sum(axis=0)
    if K == 0:
        delta = np.abs(total)
    else:
        delta = pref * np.abs(terms[0, :] + terms[-1, :])  # the |k| = K shell
    flag = bool(np.all(delta <= 0.05 * np.maximum(1.0, np.abs(total))))
    out = total.reshape(xs.shape)
    return (float(out), flag) if out.ndim == 0 else (out, flag)


# ---------------------------------------------------------------------------
# Survival measures
# ---------------------------------------------------------------------------

def _phase_halfline_vec(s_vals: np.ndarray, t: float) -> np.ndarray:
    """int_s^inf cos(w^2/2t - pi/4) dw for an array of lower limits."""
    return np.array([fresnel_phase_integral(float(s), math.inf, t) for s in s_vals])


def survival_measure(y: float, t: float, b: BoundarySpec, tol: float = 1e-9) -> float:
    """int_0^inf of the half-line solution over x.

    reflecting: exactly 1.  absorbing: closed Fresnel form of
    int_{-y}^{y} of the free kernel.  elastic: obtained by integrating the
    solution itself in x (images close through Fresnel integrals; the
    correction term's x-integral is exchanged with its v-integral and
    reduced by parts).  The signed measure makes this exceed 1 for
    moderate alpha; only the alpha -> 0 and alpha -> inf limits are
    monotone anchors.
    """
    _check_t(t)
    if b.geometry != "halfline":
        raise DomainError("survival_measure needs halfline geometry")
    if not (y > 0.0):
        raise DomainError("y must be positive")
    if b.kind == "reflecting":
        return 1.0
    if b.kind == "absorbing":
        return fresnel_phase_integral(-y, y, t) / _SQ2PI / math.sqrt(t)
    alpha = b.alpha
    # Exchanging the x and v integrals of the solution's correction term and
    # integrating the v factor by parts leaves
    #   survival = [absorbing part] + (2/sqrt(2 pi t)) J,
    #   J = int_0^inf e^{-alpha v} cos((v+y)^2/2t - pi/4) dv,
    # which stays well conditioned for every alpha.
    absorbing_part = fresnel_phase_integral(-y, y, t) / (_SQ2PI * math.sqrt(t))
    amp = lambda w: np.exp(-alpha * (w - y))
    j = integrate_oscillatory(amp, t, y, math.inf, tol, envelope=("exp", alpha)).value
    return absorbing_part + 2.0 * j / (_SQ2PI * math.sqrt(t))


def sectin_readings(y: float, t: float, alpha: float) -> dict:
    """Evaluate both sign readings of the printed elastic survival formula.

    The minus reading 2 e^{alpha y} int_y^inf e^{-alpha w} cos(w^2/2t - pi/4) dw
    converges (shifted to w = y + v); the plus reading grows without bound,
    so it is reported at two finite truncations to document the divergence.
    """
    _check_t(t)
    base = fresnel_phase_integral(-y, y, t) / (_SQ2PI * math.sqrt(t))
    amp_minus = lambda v: np.exp(-alpha * (v - y))
    r = integrate_oscillatory(amp_minus, t, y, math.inf, 1e-10, envelope=("exp", alpha))
    minus_reading = base + 2.0 * r.value / (_SQ2PI * math.sqrt(t))
    plus_vals = []
    for w_hi in (y + 6.0 * math.sqrt(t), y + 10.0 * math.sqrt(t)):
        g = lambda w: np.exp(alpha * (w - y)) * np.cos(w * w / (2.0 * t) - math.pi / 4.0)
        tol = 1e-10 * math.exp(alpha * (w_hi - y))
        rr = integrate_adaptive(g, y, w_hi, tol)
        plus_vals.append(base + 2.0 * rr.value / (_SQ2PI * math.sqrt(t)))
    return {
        "minus_reading": minus_reading,
        "plus_reading_truncations": tuple(plus_vals),
    }


# ---------------------------------------------------------------------------
# Kernel factories (SignedKernel interface for the verifier and transforms)
# ---------------------------------------------------------------------------

def free_kernel() -> SignedKernel:
    return SignedKernel(eval=fresnel_kernel, identity="fresnel",
                        params={}, envelope=OscillatoryUnit(centers=((0.0, 1.0),)))


def drift_kernel(d: DriftSpec) -> SignedKernel:
    # |u| <= e^{|mu| |x|} / sqrt(2 pi t): a growing bound, recorded as a
    # negative-rate exponential envelope; transforms over R are rejected.
    return SignedKernel(eval=lambda x, t: fresnel_kernel_drift(x, t, d),
                        identity="fresnel-drift", params={"mu_drift": d.mu_drift},
                        envelope=Exponential(rate=-abs(d.mu_drift), coef=1.0))


def halfline_kernel(b: BoundarySpec, raw: bool = False) -> SignedKernel:
    """Half-line solution as a SignedKernel in (x, t) with y, alpha frozen.

    raw=True drops the x >= 0 guard (the image formulas extend smoothly),
    which the finite-difference residual scans need near x = 0.
    """
    if b.geometry != "halfline":
        raise DomainError("halfline_kernel needs halfline geometry")
    if b.kind == "absorbing":
        ev = (lambda x, t: _images(np.asarray(x, float), t, b.y, -1.0)) if raw else \
            (lambda x, t: halfline_solution(x, t, b))
        centers = ((b.y, 1.0), (-b.y, -1.0))
    elif b.kind == "reflecting":
        ev = (lambda x, t: _images(np.asarray(x, float), t, b.y, +1.0)) if raw else \
            (lambda x, t: halfline_solution(x, t, b))
        centers = ((b.y, 1.0), (-b.y, 1.0))
    else:
        def ev_raw(x, t):
            flat = np.atleast_1d(np.asarray(x, dtype=float))
            out = np.array([_elastic_scalar(float(xx), t, b.y, b.alpha, crosscheck=False)
                            for xx in flat]).reshape(np.shape(x))
            return float(out) if out.ndim == 0 else out
        ev = ev_raw if raw else (lambda x, t: halfline_solution(x, t, b, crosscheck=False))
        centers = ((b.y, 1.0), (-b.y, 1.0))
    return SignedKernel(eval=ev, identity=f"halfline-{b.kind}",
                        params={"y": b.y, "alpha": b.alpha},
                        envelope=OscillatoryUnit(centers=centers))
