"""Uniform result rows for relation checks.

Every verification routine in this package (classical matrices, symbolic
algebra, numeric representations) produces a flat list of CheckResult rows,
one per relation instance.  A row carries a stable identifier, a boolean
outcome, a residual (``"exact-zero"`` for symbolic checks, a float for
numeric ones), and an optional human-readable detail string.  Keeping the
shape identical across layers lets the command-line driver serialize any
mixture of checks into a single report.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single relation instance."""

    id: str
    ok: bool
    residual: float | str | None = None
    detail: str = field(default="")

    def to_row(self) -> dict:
        """Serialize to the dict shape used in JSON reports."""
        return {
            "id": self.id,
            "status": "pass" if self.ok else "fail",
            "residual": self.residual,
            "detail": self.detail,
        }


def summarize(results: list[CheckResult]) -> dict:
    """Aggregate counts for a batch of check rows."""
    failed = [r.id for r in results if not r.ok]
    return {
        "total": len(results),
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "failing_ids": sorted(failed),
    }
