"""Machine-readable results for law checks.

A Verdict is a single yes/no with a witness; an AxiomReport aggregates
many verdicts grouped by law name. Both serialize to plain dicts so the
CLI can emit them as JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """Outcome of one law instance on one configuration."""

    ok: bool
    law: str
    detail: str = ""
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        d = {"ok": self.ok, "law": self.law, "detail": self.detail}
        if self.witness is not None:
            d["witness"] = repr(self.witness)
        return d

    @classmethod
    def passed(cls, law: str, detail: str = "") -> "Verdict":
        return cls(True, law, detail)

    @classmethod
    def failed(cls, law: str, detail: str, witness=None) -> "Verdict":
        return cls(False, law, detail, witness)


@dataclass
class CheckResult:
    """Tally for a single named law across many configurations."""

    law: str
    checked: int = 0
    failures: list[Verdict] = field(default_factory=list)
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, verdict: Verdict) -> None:
        self.checked += 1
        if not verdict.ok:
            self.failures.append(verdict)

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "ok": self.ok,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": [v.to_dict() for v in self.failures],
        }


@dataclass
class AxiomReport:
    """Aggregate of all law tallies from one checking run."""

    results: dict[str, CheckResult] = field(default_factory=dict)
    inconclusive: bool = False
    notes: list[str] = field(default_factory=list)

    def law(self, name: str) -> CheckResult:
        if name not in self.results:
            self.results[name] = CheckResult(name)
        return self.results[name]

    def record(self, verdict: Verdict) -> None:
        self.law(verdict.law).record(verdict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    @property
    def total_checked(self) -> int:
        return sum(r.checked for r in self.results.values())

    def failures(self) -> list[Verdict]:
        out = []
        for r in self.results.values():
            out.extend(r.failures)
        return out

    def merge(self, other: "AxiomReport") -> None:
        for name, res in other.results.items():
            mine = self.law(name)
            mine.checked += res.checked
            mine.skipped += res.skipped
            mine.failures.extend(res.failures)
        self.inconclusive = self.inconclusive or other.inconclusive
        self.notes.extend(other.notes)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "inconclusive": self.inconclusive,
            "total_checked": self.total_checked,
            "laws": {name: r.to_dict() for name, r in sorted(self.results.items())},
            "notes": list(self.notes),
        }

    def summary_lines(self) -> list[str]:
        lines = []
        for name, r in sorted(self.results.items()):
            mark = "ok" if r.ok else "FAIL"
            extra = f", {r.skipped} skipped" if r.skipped else ""
            lines.append(f"{name}: {mark} ({r.checked} checked{extra})")
            for v in r.failures[:3]:
                lines.append(f"  counterexample: {v.detail}")
        if self.inconclusive:
            lines.append("inconclusive: closure incomplete at the given bound")
        return lines
