"""Check reports: ordered, basis-indexed, JSON-serializable."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    indices: tuple
    passed: bool
    counterexample: tuple | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"claim": self.claim, "indices": list(self.indices), "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = list(self.counterexample)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    """Ordered list of claim results; passed iff every claim passed."""

    title: str = ""
    results: list[ClaimResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def violations(self) -> list[ClaimResult]:
        return [r for r in self.results if not r.passed]

    def record(self, claim: str, indices: tuple, passed: bool,
               counterexample: tuple | None = None, detail: str = "") -> None:
        self.results.append(ClaimResult(claim, tuple(indices), passed, counterexample, detail))

    def note(self, text: str) -> None:
        self.notes.append(text)

    def merge(self, other: "Report", prefix: str = "") -> None:
        for r in other.results:
            claim = f"{prefix}{r.claim}" if prefix else r.claim
            self.results.append(ClaimResult(claim, r.indices, r.passed, r.counterexample, r.detail))
        self.notes.extend(other.notes)

    def to_json(self) -> dict:
        out = {
            "title": self.title,
            "pass": self.passed,
            "claims": [r.to_json() for r in self.results],
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def render_text(self) -> str:
        lines = []
        if self.title:
            lines.append(f"== {self.title}: {'PASS' if self.passed else 'FAIL'} ==")
        for r in self.results:
            mark = "ok " if r.passed else "FAIL"
            idx = ",".join(str(i) for i in r.indices)
            line = f"[{mark}] {r.claim}" + (f" @ ({idx})" if r.indices else "")
            if not r.passed and r.counterexample is not None:
                line += f"  counterexample basis {tuple(r.counterexample)}"
            if r.detail:
                line += f"  ({r.detail})"
            lines.append(line)
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines)


class PreconditionError(ValueError):
    """A check's stated precondition failed; carries the offending report."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report
