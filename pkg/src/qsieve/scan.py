"""Sweep all orders (s, t) with t <= t_max for point-transitivity obstructions,
and compare the result against a transcribed exclusion table.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .exactmath import is_prime
from .obstruction import family_tag, main_inequality
from .params import GqOrder, basic_laws

CSV_HEADER = ("s", "t", "n_or_blank", "lhs", "rhs")


@dataclass(frozen=True, order=True)
class ScanRow:
    t: int
    s: int
    family: int | None
    lhs: int
    rhs: int

    @property
    def key(self) -> tuple[int, int]:
        return self.s, self.t

    def as_dict(self) -> dict:
        return {"s": self.s, "t": self.t, "n": self.family, "lhs": self.lhs, "rhs": self.rhs}


def scan_t(t: int) -> list[ScanRow]:
    """Rows for a single t, ascending in s."""
    rows = []
    for s in range(t + 1, t * t + 1):
        if not is_prime(s + 1):
            continue
        o = GqOrder(s, t)
        if not basic_laws(o).feasible:
            continue
        lhs, rhs, holds = main_inequality(o)
        if holds:
            continue
        tag = family_tag(o)
        rows.append(ScanRow(t, s, tag[1] if tag else None, lhs, rhs))
    return rows


def default_workers() -> int:
    raw = os.environ.get("QSIEVE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def scan(t_max: int, workers: int | None = None) -> list[ScanRow]:
    """All excluded orders with 2 <= t <= t_max, sorted by (t, s)."""
    if t_max < 2:
        raise ValueError(f"t_max must be >= 2, got {t_max}")
    ts = range(2, t_max + 1)
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        chunks = [scan_t(t) for t in ts]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves input order, so the merge is deterministic
            chunks = list(pool.map(scan_t, ts, chunksize=4))
    return [row for chunk in chunks for row in chunk]


# -- output -------------------------------------------------------------------


def to_csv(rows: list[ScanRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow((r.s, r.t, "" if r.family is None else r.family, r.lhs, r.rhs))
    return buf.getvalue()


def from_csv(text: str) -> list[ScanRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    rows = []
    for rec in reader:
        s, t, n, lhs, rhs = rec
        rows.append(ScanRow(int(t), int(s), int(n) if n else None, int(lhs), int(rhs)))
    return rows


def to_json(rows: list[ScanRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=1) + "\n"


def from_json(text: str) -> list[ScanRow]:
    return [ScanRow(d["t"], d["s"], d["n"], d["lhs"], d["rhs"]) for d in json.loads(text)]


def to_text(rows: list[ScanRow]) -> str:
    lines = [f"{'s':>6} {'t':>4} {'n':>3} {'lhs':>10} {'rhs':>10}"]
    for r in rows:
        n = "" if r.family is None else str(r.family)
        tag = " ***" if r.family is not None else ""
        lines.append(f"{r.s:>6} {r.t:>4} {n:>3} {r.lhs:>10} {r.rhs:>10}{tag}")
    lines.append(f"{len(rows)} rows")
    return "\n".join(lines) + "\n"


# -- golden tables ------------------------------------------------------------


class GoldenFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class GoldenRow:
    s: int
    t: int
    stars: int
    lineno: int = field(compare=False, default=0)


def parse_golden(text: str) -> list[GoldenRow]:
    """Parse `s,t,stars` lines; `#` starts a comment, blank lines are skipped.

    Stars may be 0 or 3, and 2 is tolerated so a verbatim transcription can
    carry the table's one double-asterisk entry.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise GoldenFormatError(lineno, f"expected 3 fields, got {len(parts)}")
        try:
            s, t, stars = (int(p) for p in parts)
        except ValueError:
            raise GoldenFormatError(lineno, f"non-integer field in {line!r}") from None
        if stars not in (0, 2, 3):
            raise GoldenFormatError(lineno, f"stars must be 0 or 3, got {stars}")
        if s < 1 or t < 1:
            raise GoldenFormatError(lineno, "s and t must be positive")
        rows.append(GoldenRow(s, t, stars, lineno))
    return rows


def load_golden(path: str | Path) -> list[GoldenRow]:
    return parse_golden(Path(path).read_text())


def bundled_golden_text() -> str:
    return resources.files("qsieve").joinpath("data/appendix_a.csv").read_text()


def normalize_golden(rows: list[GoldenRow]) -> list[GoldenRow]:
    """Drop exact repeats and read a double asterisk as the family tag."""
    seen = set()
    out = []
    for r in rows:
        r = GoldenRow(r.s, r.t, 3 if r.stars == 2 else r.stars, r.lineno)
        if (r.s, r.t, r.stars) in seen:
            continue
        seen.add((r.s, r.t, r.stars))
        out.append(r)
    return out


@dataclass
class DiffReport:
    missing: list[tuple[int, int]] = field(default_factory=list)  # in golden only
    extra: list[tuple[int, int]] = field(default_factory=list)  # computed only
    tag_mismatch: list[tuple[int, int, int, int | None]] = field(default_factory=list)
    duplicates: list[tuple[int, int]] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not (self.missing or self.extra or self.tag_mismatch or self.duplicates)

    def lines(self) -> list[str]:
        out = [f"missing {s},{t}" for s, t in self.missing]
        out += [f"extra {s},{t}" for s, t in self.extra]
        out += [
            f"tag {s},{t}: golden stars={stars}, computed n={'-' if n is None else n}"
            for s, t, stars, n in self.tag_mismatch
        ]
        out += [f"duplicate {s},{t}" for s, t in self.duplicates]
        return out


def compare_to_golden(rows: list[ScanRow], golden: list[GoldenRow]) -> DiffReport:
    """Set-based comparison of computed rows against golden rows."""
    diff = DiffReport()
    gold: dict[tuple[int, int], int] = {}
    for g in golden:
        if (g.s, g.t) in gold:
            diff.duplicates.append((g.s, g.t))
        gold.setdefault((g.s, g.t), g.stars)
    comp = {r.key: r for r in rows}
    diff.missing = sorted(set(gold) - set(comp), key=lambda k: (k[1], k[0]))
    diff.extra = sorted(set(comp) - set(gold), key=lambda k: (k[1], k[0]))
    for key in sorted(set(gold) & set(comp), key=lambda k: (k[1], k[0])):
        stars, n = gold[key], comp[key].family
        if (stars == 3) != (n is not None):
            diff.tag_mismatch.append((key[0], key[1], stars, n))
    return diff
