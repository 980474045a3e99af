"""Check reports: the uniform result type for all identity verifications."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import LaurentSeries


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    values: dict  # expression tag -> exact Fraction

    def to_json(self) -> dict:
        return {
            "exponent": self.exponent,
            "values": {tag: str(v) for tag, v in self.values.items()},
        }


@dataclass(frozen=True)
class CheckReport:
    id: str
    order: int  # exponent bound actually compared (guaranteed window)
    status: str  # "pass" | "fail"
    mismatch: Mismatch | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "order": self.order,
            "status": self.status,
            "mismatch": None if self.mismatch is None else self.mismatch.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CheckReport":
        mm = data.get("mismatch")
        mismatch = None
        if mm is not None:
            mismatch = Mismatch(
                exponent=int(mm["exponent"]),
                values={tag: Fraction(v) for tag, v in mm["values"].items()},
            )
        return cls(id=data["id"], order=int(data["order"]), status=data["status"],
                   mismatch=mismatch)

    def describe(self) -> str:
        if self.passed:
            return f"PASS {self.id} (order {self.order})"
        mm = self.mismatch
        vals = ", ".join(f"{tag}={v}" for tag, v in mm.values.items())
        return f"FAIL {self.id} at q^{mm.exponent}: {vals}"


def compare_expressions(check_id: str, exprs: dict[str, LaurentSeries],
                        order: int) -> CheckReport:
    """Compare all expressions coefficientwise below the guaranteed window.

    The window is min(order, every expression's truncation); a pass means
    every pair agrees on every exponent below it.  Failures carry the
    first bad exponent and the exact coefficient of every expression.
    """
    window = min([order] + [s.trunc for s in exprs.values()])
    lo = min(s.vmin for s in exprs.values())
    bad = None
    for k in range(lo, window):
        vals = {tag: s.coefficient(k) for tag, s in exprs.items()}
        if len(set(vals.values())) > 1:
            bad = Mismatch(exponent=k, values=vals)
            break
    if bad is None:
        return CheckReport(check_id, window, "pass")
    return CheckReport(check_id, window, "fail", bad)
