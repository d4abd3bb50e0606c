"""Verification outcome record and series comparison."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import TruncatedLaurentSeries


@dataclass(frozen=True)
class VerificationOutcome:
    status: str  # "pass" | "fail" | "error"
    compared_order: int
    first_mismatch: tuple[int, Fraction, Fraction] | None = None
    message: str = ""

    def __post_init__(self):
        if (self.status == "fail") != (self.first_mismatch is not None):
            raise ValueError("first_mismatch must be present exactly when status is 'fail'")

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def compare_series(lhs: TruncatedLaurentSeries, rhs: TruncatedLaurentSeries,
                   message: str = "") -> VerificationOutcome:
    """Compare on the overlap of determined windows, reporting the compared order."""
    compared = min(lhs.order, rhs.order)
    lo = min(lhs.min_exp, rhs.min_exp)
    for e in range(lo, compared + 1):
        cl = lhs.coefficient(e)
        cr = rhs.coefficient(e)
        if cl != cr:
            return VerificationOutcome("fail", compared, (e, cl, cr),
                                       message or f"first mismatch at q^{e}")
    return VerificationOutcome("pass", compared, None, message)
