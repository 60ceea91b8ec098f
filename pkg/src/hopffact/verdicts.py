"""Pass/fail verdicts carrying a first-failure witness."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check.

    ``axiom`` names the first axiom family that failed and ``witness`` the
    basis multi-index where it failed; both are None on a pass.
    """

    ok: bool
    axiom: str | None = None
    witness: tuple | None = None
    detail: str | None = None

    def __bool__(self):
        return self.ok

    @staticmethod
    def passed() -> "Verdict":
        return Verdict(True)

    @staticmethod
    def failed(axiom: str, witness=None, detail: str | None = None) -> "Verdict":
        return Verdict(False, axiom, tuple(witness) if witness is not None else None, detail)

    def describe(self) -> str:
        if self.ok:
            return "pass"
        parts = [f"fail({self.axiom}"]
        if self.witness is not None:
            parts.append(f", witness={self.witness}")
        parts.append(")")
        if self.detail:
            parts.append(f" {self.detail}")
        return "".join(parts)
