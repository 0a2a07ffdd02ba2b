"""Signed space-time kernels and their tail envelopes.

A SignedKernel is the common currency between the solution modules and the
verification harness: a vectorized callable (x, t) -> value plus an identity
label, a frozen parameter record, and a declared large-|x| envelope that the
transform engines rely on for tail treatment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError

__all__ = ["SignedKernel", "OscillatoryUnit", "Exponential", "PowerLaw"]


@dataclass(frozen=True)
class OscillatoryUnit:
    """Bounded oscillation: beyond the largest |center| the kernel equals
    sum_j w_j cos((x - c_j)^2 / 2t - pi/4) / sqrt(2 pi t) exactly.

    centers: tuple of (center, weight) pairs.
    """

    centers: tuple = ((0.0, 1.0),)

    def bound(self, x, t):
        a = sum(abs(w) for _, w in self.centers) / math.sqrt(2.0 * math.pi * t)
        return np.full_like(np.asarray(x, dtype=float), a)


@dataclass(frozen=True)
class Exponential:
    """|kernel(x, t)| <= coef * exp(-rate * |x|) for |x| >= xmax-ish region.

    rate may be negative to record a growing bound (e.g. drifted kernels);
    transform engines reject non-decaying rates.  xmax, when set, is the
    evaluation cutoff of the kernel (evaluations beyond return 0).
    """

    rate: float
    coef: float = 1.0
    xmax: float | None = None

    def bound(self, x, t):
        return self.coef * np.exp(-self.rate * np.abs(np.asarray(x, dtype=float)))


@dataclass(frozen=True)
class PowerLaw:
    """|kernel(x, t)| <= coef * |x|^(-exponent) for |x| >= xmin."""

    exponent: float
    coef: float = 1.0
    xmin: float = 1.0

    def bound(self, x, t):
        ax = np.maximum(np.abs(np.asarray(x, dtype=float)), self.xmin)
        return self.coef * ax ** (-self.exponent)


@dataclass(frozen=True)
class SignedKernel:
    """A callable signed density u(x, t) with metadata.

    eval must be numpy-vectorized in x and finite for every t > 0; the
    envelope must truthfully bound |eval| at large |x| (the verifier spot
    checks this at random points).
    """

    eval: Callable
    identity: str
    params: dict = field(default_factory=dict)
    envelope: object = None

    def __call__(self, x, t):
        if t <= 0.0:
            raise DomainError(f"{self.identity}: t must be positive")
        return self.eval(x, t)
