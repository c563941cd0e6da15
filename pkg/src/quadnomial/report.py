"""Verdicts, sweep reports and their CSV/JSON/table renderings."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from quadnomial.modring import ModInt, ModulusMismatch

COLUMNS = ("claim_id", "p", "n", "k", "lhs", "rhs", "modulus", "holds", "note")


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing one computed quantity with its closed form.

    ``lhs`` is the value from the fast path (or the only available path),
    ``oracle`` the exact value reduced to the same modulus when it was
    computed independently.  A verdict holds when lhs equals rhs and the
    oracle, if present, agrees with lhs.
    """

    claim_id: str
    p: int
    n: Optional[int]
    k: Optional[int]
    lhs: ModInt
    rhs: ModInt
    note: str = ""
    oracle: Optional[int] = None

    def __post_init__(self):
        if self.lhs.modulus != self.rhs.modulus:
            raise ModulusMismatch(
                f"{self.claim_id}: lhs mod {self.lhs.modulus} vs rhs mod {self.rhs.modulus}"
            )

    @property
    def modulus(self) -> int:
        return self.lhs.modulus

    @property
    def oracle_agrees(self) -> bool:
        return self.oracle is None or self.oracle % self.modulus == self.lhs.value

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and self.oracle_agrees

    @property
    def diagnosis(self) -> str:
        """'ok', 'claim' (closed form disagrees with computation), or
        'fast_path' (fast path disagrees with the exact oracle)."""
        if not self.oracle_agrees:
            return "fast_path"
        return "ok" if self.lhs == self.rhs else "claim"

    def sort_key(self):
        return (self.claim_id, self.p, -1 if self.n is None else self.n, -1 if self.k is None else self.k)

    def full_note(self) -> str:
        parts = [self.note] if self.note else []
        if not self.oracle_agrees:
            parts.append(f"oracle={self.oracle % self.modulus} disagrees with fast path")
        return "; ".join(parts)

    def row(self, signed: bool = False) -> dict:
        lhs = self.lhs.signed() if signed else self.lhs.value
        rhs = self.rhs.signed() if signed else self.rhs.value
        return {
            "claim_id": self.claim_id,
            "p": self.p,
            "n": self.n,
            "k": self.k,
            "lhs": lhs,
            "rhs": rhs,
            "modulus": self.modulus,
            "holds": self.holds,
            "note": self.full_note(),
        }


@dataclass(frozen=True)
class ErrataEntry:
    claim_id: str
    inputs: str
    detail: str

    def as_dict(self) -> dict:
        return {"claim_id": self.claim_id, "inputs": self.inputs, "detail": self.detail}


@dataclass
class SweepReport:
    verdicts: list[Verdict] = field(default_factory=list)
    errata: list[ErrataEntry] = field(default_factory=list)

    def extend(self, verdicts: Iterable[Verdict]):
        self.verdicts.extend(verdicts)

    def note_erratum(self, claim_id: str, inputs: str, detail: str):
        # one entry per (claim, detail); the first inputs that triggered it are kept
        if not any(e.claim_id == claim_id and e.detail == detail for e in self.errata):
            self.errata.append(ErrataEntry(claim_id, inputs, detail))

    def merge(self, other: SweepReport):
        self.extend(other.verdicts)
        for e in other.errata:
            self.note_erratum(e.claim_id, e.inputs, e.detail)

    def sorted(self) -> SweepReport:
        return SweepReport(
            sorted(self.verdicts, key=Verdict.sort_key),
            sorted(self.errata, key=lambda e: (e.claim_id, e.detail)),
        )

    @property
    def summary(self) -> dict[str, dict[str, int]]:
        total = Counter(v.claim_id for v in self.verdicts)
        ok = Counter(v.claim_id for v in self.verdicts if v.holds)
        return {
            cid: {"total": total[cid], "holds": ok[cid], "fails": total[cid] - ok[cid]}
            for cid in sorted(total)
        }

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.holds]

    @property
    def all_hold(self) -> bool:
        return not self.failures


def to_csv(report: SweepReport, signed: bool = False) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for v in report.verdicts:
        row = v.row(signed)
        row["n"] = "" if row["n"] is None else row["n"]
        row["k"] = "" if row["k"] is None else row["k"]
        row["holds"] = "true" if row["holds"] else "false"
        w.writerow(row)
    return buf.getvalue()


def to_json(report: SweepReport, config: Optional[dict] = None, signed: bool = False) -> str:
    doc = {
        "config": config or {},
        "verdicts": [v.row(signed) for v in report.verdicts],
        "summary": report.summary,
        "errata": [e.as_dict() for e in report.errata],
    }
    return json.dumps(doc, indent=2) + "\n"


def to_table(report: SweepReport, signed: bool = False) -> str:
    rows = []
    for v in report.verdicts:
        r = v.row(signed)
        rows.append(["" if r[c] is None else str(r[c]) for c in COLUMNS])
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(COLUMNS)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    lines = [fmt.format(*COLUMNS).rstrip()]
    lines += [fmt.format(*r).rstrip() for r in rows]
    lines.append("")
    for cid, s in report.summary.items():
        lines.append(f"{cid}: {s['holds']}/{s['total']} hold")
    for e in report.errata:
        lines.append(f"erratum {e.claim_id} [{e.inputs}]: {e.detail}")
    return "\n".join(lines) + "\n"


def parse_rows_csv(text: str) -> list[dict]:
    """Read rows back from :func:`to_csv` output with typed fields."""
    out = []
    for r in csv.DictReader(io.StringIO(text)):
        out.append(_typed(r))
    return out


def parse_rows_json(text: str) -> list[dict]:
    return [_typed(r) for r in json.loads(text)["verdicts"]]


def _typed(r: dict) -> dict:
    def opt(x):
        return None if x in ("", None) else int(x)

    holds = r["holds"]
    if isinstance(holds, str):
        holds = holds == "true"
    return {
        "claim_id": r["claim_id"],
        "p": int(r["p"]),
        "n": opt(r["n"]),
        "k": opt(r["k"]),
        "lhs": int(r["lhs"]),
        "rhs": int(r["rhs"]),
        "modulus": int(r["modulus"]),
        "holds": holds,
        "note": r["note"] or "",
    }
