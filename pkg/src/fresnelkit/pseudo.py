"""Signed-measure machinery of the sign-varying pseudo-process.

n-point signed densities, cylinder-set measures by iterated oscillatory
quadrature, the non-Markov witness, superposition expansion of powers of
the transform, self-convolution, and the two Feynman-Kac constructions
(Trotter product and analytic half-sum), which provably disagree for a
constant potential and are therefore exposed separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quad import alternating_limit, halfline_quadratic_exp, integrate_adaptive
from .rod import fresnel_kernel

__all__ = [
    "PathGrid",
    "CylinderSet",
    "Potential",
    "npoint_density",
    "cylinder_measure",
    "markov_gap",
    "superposition_expand",
    "self_convolution",
    "self_convolution_quadrature",
    "feynman_kac_trotter",
    "feynman_kac_halfsum",
    "SNAP_FACTOR",
]

# box bounds beyond SNAP_FACTOR * sqrt(max t) count as infinite; the
# discarded oscillatory tail is then closed analytically instead of cut
SNAP_FACTOR = 30.0


def _validate_times(times):
    times = tuple(float(v) for v in times)
    if len(times) == 0:
        raise DomainError("need at least one time point")
    prev = 0.0
    for v in times:
        if not (v > prev):
            raise DomainError("times must satisfy 0 < t1 < ... < tn")
        prev = v
    return times


@dataclass(frozen=True)
class PathGrid:
    """Ordered times 0 < t1 < ... < tn with coordinates x1..xn
    (t0 = 0, x0 = 0 implicit)."""

    times: tuple
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "times", _validate_times(self.times))
        object.__setattr__(self, "coords", tuple(float(v) for v in self.coords))
        if len(self.times) != len(self.coords):
            raise DomainError("times and coords must have equal length")


@dataclass(frozen=True)
class CylinderSet:
    """Box event: intersection of {a_j <= x(t_j) <= b_j}."""

    times: tuple
    intervals: tuple

    def __post_init__(self):
        object.__setattr__(self, "times", _validate_times(self.times))
        ivals = tuple((float(a), float(b)) for a, b in self.intervals)
        object.__setattr__(self, "intervals", ivals)
        if len(self.times) != len(self.intervals):
            raise DomainError("times and intervals must have equal length")
        for a, b in ivals:
            if not (a < b) and not (a == b):
                raise DomainError("need a_j <= b_j")


@dataclass(frozen=True)
class Potential:
    """Non-negative potential for the Feynman-Kac functional.

    kind 'constant' uses the value c; kind 'tabulated' interpolates the
    sample grid linearly (non-negativity is validated on the samples).
    """

    kind: str
    c: float = 0.0
    grid_x: tuple = ()
    grid_k: tuple = ()

    def __post_init__(self):
        if self.kind not in ("constant", "tabulated"):
            raise DomainError(f"unknown potential kind {self.kind!r}")
        if self.kind == "constant" and self.c < 0.0:
            raise DomainError("constant potential must be >= 0")
        if self.kind == "tabulated":
            if len(self.grid_x) < 2 or len(self.grid_x) != len(self.grid_k):
                raise DomainError("tabulated potential needs matching sample arrays")
            if any(v < 0.0 for v in self.grid_k):
                raise DomainError("potential samples must be >= 0")

    def __call__(self, x):
        if self.kind == "constant":
            return np.full_like(np.asarray(x, dtype=float), self.c)
        return np.interp(np.asarray(x, dtype=float), self.grid_x, self.grid_k)


def npoint_density(g: PathGrid) -> float:
    """(2 pi)^{-n/2} prod dt_j^{-1/2} cos(sum (dx_j)^2/(2 dt_j) - n pi/4)."""
    ts = (0.0,) + g.times
    xs = (0.0,) + g.coords
    n = len(g.times)
    phase = 0.0
    scale = 1.0
    for j in range(1, n + 1):
        dt = ts[j] - ts[j - 1]
        phase += (xs[j] - xs[j - 1]) ** 2 / (2.0 * dt)
        scale *= math.sqrt(dt)
    return math.cos(phase - n * math.pi / 4.0) / ((2.0 * math.pi) ** (n / 2.0) * scale)


# ---------------------------------------------------------------------------
# Cylinder measures: iterated complex-kernel quadrature
# ---------------------------------------------------------------------------

def _kappa_int_closed(a: float, b: float, xprev: float, dt: float) -> complex:
    """int_a^b e^{i((x-xprev)^2/2dt - pi/4)} / sqrt(2 pi dt) dx, closed form."""
    pref = np.exp(-0.25j * math.pi) / math.sqrt(2.0 * math.pi * dt)
    lo = -math.inf if math.isinf(a) and a < 0 else a - xprev
    hi = math.inf if math.isinf(b) else b - xprev
    phi_lo = halfline_quadratic_exp(lo, dt) if not math.isinf(lo) else \
        math.sqrt(2.0 * math.pi * dt) * np.exp(0.25j * math.pi)
    phi_hi = halfline_quadratic_exp(hi, dt) if not math.isinf(hi) else 0.0
    return complex(pref * (phi_lo - phi_hi))


def _lattice_from(xprev: float, dt: float, count: int):
    ks = np.arange(count)
    return np.sqrt(2.0 * dt * (0.75 * math.pi + math.pi * ks))


def _level_integral(j, times, intervals, xprev, tol, nlobes=48):
    """Complex iterated integral over coordinates j..n-1 given x_{j-1}."""
    t_lo = 0.0 if j == 0 else times[j - 1]
    dt = times[j] - t_lo
    a, b = intervals[j]
    last = j == len(times) - 1
    if last:
        return _kappa_int_closed(a, b, xprev, dt)

    kappa = lambda x: (np.exp(1j * ((np.asarray(x, float) - xprev) ** 2 / (2.0 * dt)
                                    - math.pi / 4.0))
                       / math.sqrt(2.0 * math.pi * dt))

    def g(x):
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        inner = np.array([_level_integral(j + 1, times, intervals, float(xx), tol)
                          for xx in xs])
        return (kappa(xs) * inner).reshape(np.shape(x))

    offs = _lattice_from(xprev, dt, nlobes)
    total = 0.0 + 0.0j

    def finite_part(lo, hi):
        cuts = np.concatenate([xprev + offs, xprev - offs])
        edges = sorted({lo, hi} | {c for c in cuts if lo < c < hi})
        s = 0.0 + 0.0j
        for ll, hh in zip(edges[:-1], edges[1:]):
            s += integrate_adaptive(g, ll, hh, tol / max(1, len(edges))).value
        return s

    def tail(start, direction):
        # lobe chain beyond `start`; the inner integral decays like 1/x so
        # the alternating acceleration closes the conditional tail
        base = abs(start - xprev)
        ks = np.arange(nlobes)
        pts = np.sqrt(base * base + 2.0 * dt * math.pi * (ks + 1.0))
        edges = [start] + list(xprev + direction * pts)
        vals = [integrate_adaptive(g, min(lo, hi), max(lo, hi), tol / nlobes).value
                for lo, hi in zip(edges[:-1], edges[1:])]
        lim, _ = alternating_limit(list(np.cumsum(vals)))
        return lim

    lo_inf = math.isinf(a)
    hi_inf = math.isinf(b)
    lo_fin = xprev - offs[-1] if lo_inf else a
    hi_fin = xprev + offs[-1] if hi_inf else b
    total += finite_part(lo_fin, hi_fin)
    if hi_inf:
        total += tail(hi_fin, +1.0)
    if lo_inf:
        total += tail(lo_fin, -1.0)
    return complex(total)


def cylinder_measure(c: CylinderSet, tol: float = 1e-8) -> float:
    """Signed measure of a box event by iterated oscillatory quadrature.

    The innermost coordinate closes through Fresnel integrals; outer
    coordinates are split at their local quadratic-phase lattice.  Bounds
    beyond 30 sqrt(max t) are treated as infinite (their oscillatory tails
    are closed analytically, never truncated); coordinates whose interval
    becomes the whole line marginalize out exactly.  Dimension guard n <= 4.
    """
    n = len(c.times)
    if n > 4:
        raise DomainError("cylinder_measure supports n <= 4")
    snap = SNAP_FACTOR * math.sqrt(max(c.times))
    times, intervals = [], []
    for tj, (a, b) in zip(c.times, c.intervals):
        if a == b:
            return 0.0
        aa = -math.inf if a <= -snap else a
        bb = math.inf if b >= snap else b
        if math.isinf(aa) and math.isinf(bb):
            continue  # exact marginalization of a full-line coordinate
        times.append(tj)
        intervals.append((aa, bb))
    if not times:
        return 1.0
    val = _level_integral(0, times, intervals, 0.0, tol)
    return val.real


# ---------------------------------------------------------------------------
# non-Markov witness
# ---------------------------------------------------------------------------

def markov_gap(t1: float, t2: float, t3: float,
               x1: float, x2: float, x3: float) -> tuple[float, float]:
    """(conditional joint, product of conditionals) for t1 < t2 < t3.

    lhs: three-point density over the one-point density at (x2, t2).
    rhs: product of the two pair conditionals.  The two differ: the signed
    measure is not Markov.  Errors out near the zeros of the conditioning
    density.
    """
    if not (0.0 < t1 < t2 < t3):
        raise DomainError("need 0 < t1 < t2 < t3")
    cond = math.cos(x2 * x2 / (2.0 * t2) - math.pi / 4.0)
    if abs(cond) < 1e-6:
        raise DomainError("conditioning density vanishes at (x2, t2)")
    d3 = npoint_density(PathGrid((t1, t2, t3), (x1, x2, x3)))
    d1 = npoint_density(PathGrid((t2,), (x2,)))
    lhs = d3 / d1
    d12 = npoint_density(PathGrid((t1, t2), (x1, x2)))
    d23 = npoint_density(PathGrid((t2, t3), (x2, x3)))
    rhs = (d12 / d1) * (d23 / d1)
    return lhs, rhs


# ---------------------------------------------------------------------------
# superposition of waves and self-convolution
# ---------------------------------------------------------------------------

def superposition_expand(n: int) -> tuple[list[tuple[float, int]], float]:
    """cos^n(theta) = sum_k weight_k cos((n-2k) theta) + delta_weight.

    Components are (binomial(n,k)/2^{n-1}, n-2k); for even n the k = n/2
    term is the constant 2^{-n} binomial(n, n/2), reported separately as
    the Dirac weight of the superposed waves.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    comps = []
    kmax = (n // 2 - 1) if n % 2 == 0 else (n - 1) // 2
    for k in range(kmax + 1):
        comps.append((math.comb(n, k) / 2.0 ** (n - 1), n - 2 * k))
    delta = math.comb(n, n // 2) / 2.0 ** n if n % 2 == 0 else 0.0
    return comps, delta


def self_convolution(x: float, t: float) -> tuple[float, float]:
    """Convolution of two free kernels at equal t:
    (1/2) delta(x) + (1/2) cos(x^2/4t - pi/4)/sqrt(4 pi t).

    Returns (regular part, delta weight)."""
    if t <= 0.0:
        raise DomainError("t must be positive")
    reg = 0.5 * math.cos(x * x / (4.0 * t) - math.pi / 4.0) / math.sqrt(4.0 * math.pi * t)
    return reg, 0.5


def self_convolution_quadrature(x: float, t: float, periods: int = 6,
                                tol: float = 1e-10) -> float:
    """Windowed quadrature oracle for the regular part at x != 0.

    The product of kernels splits into a quadratic-phase part (closed
    Fresnel tails) and a linear-phase part whose window integral vanishes
    exactly over whole periods; the window is chosen accordingly.
    """
    if x == 0.0:
        raise DomainError("the x = 0 value is carried by the delta component")
    if t <= 0.0:
        raise DomainError("t must be positive")
    period = 2.0 * math.pi * t / abs(x)
    W = abs(x) / 2.0 + periods * period
    f = lambda w: fresnel_kernel(w, t) * fresnel_kernel(x - w, t)
    m = int(2.0 * W * W / (2.0 * t * math.pi)) + 8
    edges = np.unique(np.concatenate([
        [-W, W], np.linspace(-W, W, 4 * int(math.sqrt(m)) + 9)]))
    body = sum(integrate_adaptive(f, lo, hi, tol / len(edges)).value
               for lo, hi in zip(edges[:-1], edges[1:]))
    # tail of the quadratic-phase half: (1/4 pi t) cos(2(w - x/2)^2/2t + x^2/4t - pi/2)
    t_eff = t / 2.0
    phi = x * x / (4.0 * t) - math.pi / 2.0
    from .quad import fresnel_phase_integral
    tail = (fresnel_phase_integral(W - x / 2.0, math.inf, t_eff, phi)
            + fresnel_phase_integral(-math.inf, -W - x / 2.0, t_eff, phi)) / (4.0 * math.pi * t)
    # the linear-phase half integrates to (t/x) * [sin(Wx/t +- ...)] which the
    # whole-period window sends to its Abel mean: account for the exact
    # finite-window value so the limit is window independent
    lin = (math.sin(W * x / t - x * x / (2.0 * t))
           + math.sin(W * x / t + x * x / (2.0 * t))) * t / x / (4.0 * math.pi * t)
    return body + tail - lin


# ---------------------------------------------------------------------------
# Feynman-Kac functionals
# ---------------------------------------------------------------------------

def feynman_kac_trotter(p: Potential, x: float, t: float, n: int,
                        box: float, nodes_per_osc: float = 7.0) -> float:
    """Trotter approximation of E[exp(-int k(F(s)) ds)] started at x.

    Iterated quadrature of exp(-sum k(x_j) dt) against the n-point signed
    density over [x-box, x+box]^n with dt = t/n.  The transfer-matrix form
    keeps the cost linear in n; the node count guards the quadratic phase
    resolution.  Constant potentials factor out exactly.
    """
    if not (1 <= n <= 3):
        raise DomainError("feynman_kac_trotter supports n in [1, 3]")
    if t <= 0.0 or box <= 0.0:
        raise DomainError("need t > 0 and box > 0")
    dt = t / n
    if p.kind == "constant":
        iv = tuple((x - box, x + box) for _ in range(n))
        ts = tuple(dt * (j + 1) for j in range(n))
        shifted = CylinderSet(ts, tuple((a - x, b - x) for a, b in iv))
        return math.exp(-p.c * t) * cylinder_measure(shifted)
    # transfer-matrix tensor quadrature
    phase_rate = 2.0 * box / dt
    h = 2.0 * math.pi / (phase_rate * nodes_per_osc)
    npan = max(8, int(2.0 * box / h) + 1)
    if npan * 4 > 6000:
        raise DomainError("feynman_kac_trotter: node budget exceeded; shrink box or n")
    glx, glw = np.polynomial.legendre.leggauss(4)
    edges = np.linspace(x - box, x + box, npan + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    halves = 0.5 * np.diff(edges)
    u = (mids[:, None] + halves[:, None] * glx[None, :]).ravel()
    w = (halves[:, None] * glw[None, :]).ravel()
    damp = np.exp(-np.asarray(p(u)) * dt)
    pref = np.exp(-0.25j * math.pi) / math.sqrt(2.0 * math.pi * dt)
    vec = pref * np.exp(1j * (u - x) ** 2 / (2.0 * dt)) * damp * w
    for _ in range(n - 1):
        kern = pref * np.exp(1j * (u[None, :] - u[:, None]) ** 2 / (2.0 * dt))
        vec = (vec[:, None] * kern * (damp * w)[None, :]).sum(axis=0)
    return float(np.sum(vec).real)


def feynman_kac_halfsum(c: float, x: float, t: float) -> float:
    """Analytic half-sum construction for a constant potential: cos(c t).

    Disagrees with the Trotter limit e^{-ct}; both are exposed, neither is
    privileged."""
    if c < 0.0:
        raise DomainError("constant potential must be >= 0")
    if t <= 0.0:
        raise DomainError("t must be positive")
    return math.cos(c * t)
