"""Structured pass/fail records shared by the verification layers."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .laurent import LaurentPoly


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    params: dict
    passed: bool
    witness: object = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing report carries no witness")
        if not self.passed and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    def to_json_dict(self) -> dict:
        out = {"id": self.check_id, "params": self.params, "pass": self.passed}
        if self.witness is not None:
            witness = self.witness
            if isinstance(witness, LaurentPoly):
                witness = witness.to_json_dict()
            out["witness"] = witness
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def sort_key(self) -> tuple[str, str]:
        return (self.check_id, json.dumps(self.params, sort_keys=True, default=str))


def poly_comparison(check_id: str, params: dict, lhs, rhs) -> VerificationReport:
    """Report exact equality of two polynomials, witnessing the difference."""
    diff = lhs - rhs
    if diff.is_zero:
        return VerificationReport(check_id, params, True)
    return VerificationReport(check_id, params, False, witness=diff)


def value_comparison(check_id: str, params: dict, expected, actual) -> VerificationReport:
    if expected == actual:
        return VerificationReport(check_id, params, True)
    return VerificationReport(
        check_id, params, False, witness={"expected": str(expected), "actual": str(actual)}
    )
