"""Quadrature and transform engines.

Adaptive Gauss-Kronrod integration, oscillatory integrals with quadratic
phase split at the phase-zero lattice, numeric Fourier and Laplace
transforms of signed kernels, and central finite-difference stencils.

All integrand callables must be numpy-vectorized: they receive ndarrays
and return arrays of the same shape (real or complex).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EnvelopeError, QuadratureError
from .kernels import Exponential, OscillatoryUnit, PowerLaw, SignedKernel
from .specfun import FRESNEL_LIMIT, fresnel_cs

__all__ = [
    "QuadResult",
    "StencilSpec",
    "integrate_adaptive",
    "integrate_oscillatory",
    "fresnel_phase_integral",
    "halfline_quadratic_exp",
    "oscillatory_lattice",
    "alternating_limit",
    "fourier_numeric",
    "laplace_numeric",
    "finite_diff",
    "default_step",
    "make_stencil",
]

_EPS = np.finfo(float).eps

# Gauss 7 / Kronrod 15 pair (QUADPACK dqk15 constants).
_XGK = np.array([
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0,
])
_WGK = np.array([
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478540,
    0.20443294007529889, 0.20948214108472782,
])
_WG = np.array([
    0.12948496616886969, 0.27970539148927664, 0.38183005050511894,
    0.41795918367346939,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])          # 15 ascending nodes
_WK15 = np.concatenate([_WGK[:-1], _WGK[::-1]])
_G_IDX = np.arange(1, 15, 2)                               # Gauss subset
_WG7 = np.concatenate([_WG[:-1], _WG[::-1]])


@dataclass(frozen=True)
class QuadResult:
    value: float | complex
    err_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.err_estimate < 0.0 or self.evaluations <= 0:
            raise DomainError("QuadResult invariants violated")


@dataclass(frozen=True)
class StencilSpec:
    """Central finite-difference stencil: derivative `order` on `points` nodes."""

    order: int
    step: float
    points: int

    def __post_init__(self):
        if self.order not in _STENCILS:
            raise DomainError(f"unsupported derivative order {self.order}")
        if self.points < self.order + 1:
            raise DomainError("points must be >= order + 1")
        if self.points != _STENCIL_POINTS[self.order]:
            raise DomainError(
                f"order {self.order} uses a {_STENCIL_POINTS[self.order]}-point stencil")
        if not (self.step > 0.0):
            raise DomainError("step must be positive")


def _gk_panel(f, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fx = np.asarray(f(mid + half * _NODES))
    k15 = half * np.sum(_WK15 * fx)
    g7 = half * np.sum(_WG7 * fx[_G_IDX])
    return k15, abs(k15 - g7), 15


def integrate_adaptive(f, a: float, b: float, tol: float = 1e-10,
                       max_depth: int = 50) -> QuadResult:
    """Adaptive Gauss-Kronrod integration of a vectorized callable on [a, b].

    Bisects until each panel's Kronrod error estimate fits within its share
    of `tol`.  Raises QuadratureError if the depth limit is exhausted with
    the error still above tolerance.
    """
    if not (a < b) or math.isinf(a) or math.isinf(b):
        raise DomainError("integrate_adaptive needs finite a < b")
    total = 0.0 + 0.0j
    total_err = 0.0
    evals = 0
    stack = [(a, b, tol, 0)]
    while stack:
        lo, hi, budget, depth = stack.pop()
        val, err, n = _gk_panel(f, lo, hi)
        evals += n
        if err <= budget or err <= _EPS * 50 * max(1.0, abs(val)):
            total += val
            total_err += err
            continue
        if depth >= max_depth:
            raise QuadratureError(
                f"integrate_adaptive: depth {max_depth} exhausted on "
                f"[{lo:.6g}, {hi:.6g}] with err {err:.3g} > {budget:.3g}")
        mid = 0.5 * (lo + hi)
        stack.append((lo, mid, budget / 2.0, depth + 1))
        stack.append((mid, hi, budget / 2.0, depth + 1))
    if abs(total.imag) == 0.0:
        return QuadResult(total.real, total_err, evals)
    return QuadResult(complex(total), total_err, evals)


# ---------------------------------------------------------------------------
# Oscillatory machinery for the quadratic phase w^2/2t - pi/4
# ---------------------------------------------------------------------------

def oscillatory_lattice(t: float, lo: float, hi: float) -> list[float]:
    """Splitting points w_k = sqrt(2t(3pi/4 + k pi/2)) inside (|lo|, hi).

    These are the zeros and extrema of cos(w^2/2t - pi/4); mirrored for
    negative arguments.
    """
    pts = []
    k = 0
    while True:
        w = math.sqrt(2.0 * t * (0.75 * math.pi + 0.5 * math.pi * k))
        if w >= hi:
            break
        if w > lo:
            pts.append(w)
        k += 1
        if k > 100000:
            raise QuadratureError("oscillatory lattice runaway")
    return pts


def fresnel_phase_integral(a: float, b: float, t: float, phi: float = -math.pi / 4.0) -> float:
    """Closed form of int_a^b cos(w^2/2t + phi) dw through the Fresnel C, S.

    a, b may be +-inf.  Used for every infinite unit-amplitude oscillatory
    tail in the package (truncating such tails is wrong by O(sqrt t / w)).
    """
    if t <= 0.0:
        raise DomainError("t must be positive")
    s = math.sqrt(2.0 * t)
    ca, sa = fresnel_cs(a / s if not math.isinf(a) else math.copysign(math.inf, a))
    cb, sb = fresnel_cs(b / s if not math.isinf(b) else math.copysign(math.inf, b))
    return s * (math.cos(phi) * (cb - ca) - math.sin(phi) * (sb - sa))


def halfline_quadratic_exp(a: float, t: float) -> complex:
    """int_a^inf e^{i v^2 / 2t} dv, valid for any real a (C, S are odd)."""
    s = math.sqrt(2.0 * t)
    ca, sa = fresnel_cs(a / s)
    return s * ((FRESNEL_LIMIT - ca) + 1j * (FRESNEL_LIMIT - sa))


def alternating_limit(partial_sums) -> tuple[float, float]:
    """Limit of a sequence with (eventually) alternating remainders.

    Iterated pairwise averaging (Euler transformation applied to the tail).
    Returns (limit, error estimate).
    """
    row = [complex(v) for v in partial_sums]
    if len(row) == 1:
        return row[0].real if row[0].imag == 0 else row[0], math.inf
    best = row[-1]
    prev_apex = row[-1]
    err = abs(row[-1] - row[-2])
    for _ in range(len(row) - 1):
        row = [0.5 * (row[i] + row[i + 1]) for i in range(len(row) - 1)]
        apex = row[-1]
        step = abs(apex - prev_apex)
        if step <= err:
            err = step
            best = apex
        prev_apex = apex
        if len(row) == 1:
            break
    if isinstance(best, complex) and best.imag == 0.0:
        best = best.real
    return best, err


def _panel_chain(f, edges, tol):
    """Integrate f over consecutive panels; returns (panel values, err, evals)."""
    vals = []
    err = 0.0
    evals = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        r = integrate_adaptive(f, lo, hi, tol)
        vals.append(r.value)
        err += r.err_estimate
        evals += r.evaluations
    return vals, err, evals


def integrate_oscillatory(amplitude, t: float, a: float, b: float,
                          tol: float = 1e-10, envelope=None) -> QuadResult:
    """int_a^b amplitude(w) cos(w^2/2t - pi/4) dw.

    The domain is split at the phase lattice of the quadratic phase.  For
    b = +inf the tail is handled by the closed Fresnel form when the
    amplitude is identically one (`amplitude=None`), or by explicit lobes
    plus alternating-tail acceleration when `envelope=("exp", rate)`
    declares exponential decay.  Other infinite tails are rejected.
    """
    if t <= 0.0:
        raise DomainError("t must be positive")
    if a == b:
        return QuadResult(0.0, 0.0, 1)

    if amplitude is None:
        # unit amplitude: fully closed form, including infinite endpoints
        val = fresnel_phase_integral(a, b, t)
        return QuadResult(val, 1e-14 * max(1.0, abs(val)), 2)

    if math.isinf(b):
        if envelope is None:
            raise EnvelopeError(
                "integrate_oscillatory: infinite tail needs envelope=('exp', rate) "
                "or unit amplitude")
        kind, rate = envelope
        if kind != "exp" or rate <= 0.0:
            raise EnvelopeError(f"unsupported tail envelope {envelope!r}")
        g = lambda w: amplitude(w) * np.cos(w * w / (2.0 * t) - math.pi / 4.0)
        # explicit panels over the lattice until the decay envelope or the
        # lobe alternation makes the remainder negligible
        start = max(a, 0.0)
        lattice = []
        k = 0
        w_prev = start
        amp0 = abs(float(np.max(np.abs(amplitude(np.array([a + 1e-3 * (1 + abs(a))]))))))
        # full lobes (panel edges at the kernel zeros) keep the partial sums
        # cleanly alternating for the tail acceleration
        while len(lattice) < 400:
            w = math.sqrt(2.0 * t * (0.75 * math.pi + math.pi * k))
            k += 1
            if w <= start:
                continue
            lattice.append(w)
            lobe_bound = amp0 * math.exp(-rate * (w - start)) * (w - w_prev)
            w_prev = w
            if lobe_bound < 0.1 * tol and len(lattice) >= 8:
                break
        edges = [a] + lattice
        vals, err, evals = _panel_chain(g, edges, tol / 2.0)
        psums = list(np.cumsum(vals))
        if len(psums) < 6:
            # decay dominated before alternation set in
            value = psums[-1]
            tail_err = amp0 * math.exp(-rate * (edges[-1] - start)) / rate
        else:
            value, tail_err = alternating_limit(psums[max(0, len(psums) - 30):])
        return QuadResult(value, err + tail_err, evals)

    pos = oscillatory_lattice(t, 0.0, max(abs(a), abs(b)))
    cuts = {w for w in pos if a < w < b} | {-w for w in pos if a < -w < b}
    edges = sorted({a, b} | cuts)
    g = lambda w: amplitude(w) * np.cos(w * w / (2.0 * t) - math.pi / 4.0)
    n = max(1, len(edges) - 1)
    vals, err, evals = _panel_chain(g, edges, tol / n)
    return QuadResult(float(np.sum(np.real(vals))), err, evals)


# ---------------------------------------------------------------------------
# Fourier transform of signed kernels
# ---------------------------------------------------------------------------

def _fourier_tail_oscillatory(env: OscillatoryUnit, beta: float, t: float, W: float) -> complex:
    """Closed form of int_W^inf e^{i beta x} * tail(x) dx + the mirrored left tail.

    tail(x) = sum_j w_j cos((x - c_j)^2 / 2t - pi/4) / sqrt(2 pi t)
    """
    amp = 1.0 / math.sqrt(2.0 * math.pi * t)
    total = 0.0 + 0.0j
    for c, wgt in env.centers:
        for bsign, csign in ((beta, c), (-beta, -c)):
            # right tail for bsign=beta; left tail folded to x -> -x otherwise
            ph1 = bsign * csign - bsign * bsign * t / 2.0 - math.pi / 4.0
            v1 = W - csign + bsign * t
            ph2 = bsign * csign + bsign * bsign * t / 2.0 + math.pi / 4.0
            v2 = W - csign - bsign * t
            piece = 0.5 * (np.exp(1j * ph1) * halfline_quadratic_exp(v1, t)
                           + np.exp(1j * ph2) * np.conj(halfline_quadratic_exp(v2, t)))
            total += wgt * amp * piece
    return complex(total)


def fourier_numeric(kernel: SignedKernel, beta: float, t: float,
                    tol: float = 1e-8) -> complex:
    """int_R e^{i beta x} kernel(x, t) dx by envelope-aware quadrature.

    The kernel's envelope declaration selects the tail treatment:
    OscillatoryUnit tails close through Fresnel integrals, exponential
    envelopes truncate at the decay horizon, power-law tails are mapped by
    x -> 1/u (beta = 0) or summed over beta-period lobes.
    """
    if t <= 0.0:
        raise DomainError("t must be positive")
    env = kernel.envelope
    if env is None:
        raise EnvelopeError(f"kernel {kernel.identity!r} declares no envelope")
    f = lambda x: np.exp(1j * beta * x) * kernel.eval(x, t)

    if isinstance(env, OscillatoryUnit):
        cmax = max(abs(c) for c, _ in env.centers)
        lat = oscillatory_lattice(t, 0.0, math.sqrt(2.0 * t * 30.75 * math.pi))
        W = cmax + lat[-1]
        edges = sorted({-W, W}
                       | {c + s * w for c, _ in env.centers for w in lat for s in (1.0, -1.0)
                          if -W < c + s * w < W}
                       | {c for c, _ in env.centers if -W < c < W})
        vals, err, evals = _panel_chain(f, edges, tol / max(1, len(edges)))
        body = complex(np.sum(vals))
        tail = _fourier_tail_oscillatory(env, beta, t, W)
        return body + tail

    if isinstance(env, Exponential):
        if env.rate <= 0.0:
            raise EnvelopeError("exponential envelope must decay for fourier_numeric")
        X = 40.0 / env.rate
        if env.xmax is not None:
            X = min(X, env.xmax)
        n_beta = max(4, int(abs(beta) * X / math.pi) + 1)
        edges = list(np.linspace(-X, X, n_beta + 1))
        vals, err, evals = _panel_chain(f, edges, tol / n_beta)
        return complex(np.sum(vals))

    if isinstance(env, PowerLaw):
        if env.exponent <= 1.0:
            raise EnvelopeError("power-law envelope must have exponent > 1")
        X = max(10.0 * env.xmin, 50.0 * t)
        edges = list(np.linspace(-X, X, 17))
        vals, err, evals = _panel_chain(f, edges, tol / 16)
        body = complex(np.sum(vals))
        if beta == 0.0:
            # map each tail by x -> 1/u; integrand stays smooth near u = 0
            gpos = lambda u: kernel.eval(1.0 / u, t) / (u * u)
            gneg = lambda u: kernel.eval(-1.0 / u, t) / (u * u)
            r1 = integrate_adaptive(gpos, 1e-300, 1.0 / X, tol / 4.0)
            r2 = integrate_adaptive(gneg, 1e-300, 1.0 / X, tol / 4.0)
            return body + r1.value + r2.value
        period = math.pi / abs(beta)
        for sign in (1.0, -1.0):
            ff = (lambda x, s=sign: np.exp(1j * beta * s * x) * kernel.eval(s * x, t))
            edges_t = [X + k * period for k in range(64)]
            vals_t, _, _ = _panel_chain(ff, edges_t, tol / 16.0)
            lim, _ = alternating_limit(list(np.cumsum(vals_t)))
            body += complex(lim)
        return body

    raise EnvelopeError(f"unsupported envelope {env!r}")


# ---------------------------------------------------------------------------
# Laplace transform
# ---------------------------------------------------------------------------

def laplace_numeric(f, mu: float, tol: float = 1e-9,
                    horizon: float | None = None) -> QuadResult:
    """int_0^inf e^{-mu t} f(t) dt for mu > 0.

    Integrable singularities of order t^{-gamma}, gamma < 1 are absorbed by
    the substitution t = u^4 near zero; a singularity of order >= 1 raises
    DomainError.  The default horizon 40/mu puts the discarded tail below
    double-precision relevance for integrands of polynomial growth.
    """
    if mu <= 0.0:
        raise DomainError("mu must be positive")
    if horizon is None:
        horizon = 40.0 / mu
    # singularity-order probe
    probes = np.array([1e-4, 1e-6, 1e-8]) * min(1.0, horizon)
    fv = np.abs(np.asarray(f(probes), dtype=float))
    if fv[-1] > 0.0 and fv[0] > 0.0:
        gam = math.log(fv[-1] / fv[0]) / math.log(probes[0] / probes[-1])
        if gam >= 0.98:
            raise DomainError(f"laplace_numeric: singularity order ~t^-{gam:.2f} at 0")
    s0 = min(1.0, horizon / 8.0)
    g = lambda u: np.exp(-mu * u ** 4) * np.asarray(f(u ** 4)) * 4.0 * u ** 3
    r1 = integrate_adaptive(g, 1e-300, s0 ** 0.25, tol / 2.0)
    n = max(4, int(mu * (horizon - s0) / 4.0))
    edges = list(np.geomspace(s0, horizon, n + 1))
    h = lambda s: np.exp(-mu * s) * np.asarray(f(s))
    vals, err2, ev2 = _panel_chain(h, edges, tol / 2.0)
    tail_bound = math.exp(-mu * horizon) * max(1.0, float(abs(np.asarray(f(np.array([horizon])))[0]))) * 2.0 / mu
    return QuadResult(r1.value + float(np.sum(np.real(vals))),
                      r1.err_estimate + err2 + tail_bound,
                      r1.evaluations + ev2 + 3)


# ---------------------------------------------------------------------------
# Finite differences
# ---------------------------------------------------------------------------

_STENCILS = {
    1: {-1: -0.5, 1: 0.5},
    2: {-2: -1.0 / 12, -1: 4.0 / 3, 0: -2.5, 1: 4.0 / 3, 2: -1.0 / 12},
    3: {-2: -0.5, -1: 1.0, 1: -1.0, 2: 0.5},
    4: {-3: -1.0 / 6, -2: 2.0, -1: -6.5, 0: 28.0 / 3, 1: -6.5, 2: 2.0, 3: -1.0 / 6},
}
_STENCIL_POINTS = {1: 3, 2: 5, 3: 5, 4: 7}
# balance truncation against h^-order roundoff amplification
_STEP_EXPONENT = {1: 1.0 / 3, 2: 1.0 / 6, 3: 1.0 / 5, 4: 1.0 / 6}


def default_step(order: int, x0: float = 0.0) -> float:
    if order not in _STEP_EXPONENT:
        raise DomainError(f"unsupported derivative order {order}")
    return _EPS ** _STEP_EXPONENT[order] * max(1.0, abs(x0))


def make_stencil(order: int, x0: float = 0.0, step: float | None = None) -> StencilSpec:
    """StencilSpec with the package default step for this order."""
    h = default_step(order, x0) if step is None else step
    return StencilSpec(order=order, step=h, points=_STENCIL_POINTS[order])


def finite_diff(f, x0: float, spec: StencilSpec) -> float:
    """Central finite-difference derivative of the given order at x0.

    The order 1..4 stencils use 3, 5, 5, 7 points; the 5-point second and
    7-point fourth stencils are exact on quartics and better than O(h^2).
    """
    coeffs = _STENCILS[spec.order]
    offs = np.array(sorted(coeffs))
    c = np.array([coeffs[int(o)] for o in offs])
    fx = np.asarray(f(x0 + spec.step * offs), dtype=float)
    return float(np.dot(c, fx)) / spec.step ** spec.order
