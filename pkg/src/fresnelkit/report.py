"""Verification report record shared by the harness and the check helpers."""

from __future__ import annotations

from dataclasses import dataclass, asdict

from .errors import DomainError


@dataclass(frozen=True)
class VerificationReport:
    """One named check: measured value against its tolerance."""

    check_name: str
    measured: float
    tolerance: float
    passed: bool
    evaluations: int
    notes: str = ""

    def __post_init__(self):
        if self.passed != (self.measured <= self.tolerance):
            raise DomainError("passed must equal (measured <= tolerance)")

    def to_dict(self) -> dict:
        return asdict(self)
