"""Table generation, the vertex-cover conjecture check, and the result cache.

The table runner computes one cell per (n, k) with n in [5, n_max] and
1 <= k <= (n-1)/2, reusing a line-oriented JSONL cache when provided and
emitting rows sorted by (n, k) so output never depends on computation order.
Cells that exhaust their time budget are reported with method "timeout" and
an empty alpha; they are never written to the cache.

The conjecture checker evaluates, for every cell, both equivalent forms of
the Behsaz-Hatami-Mahmoodian bound: alpha >= floor(4n/5) and, via
alpha + beta = 2n, beta <= n + ceil(n/5).  Each cell also gets a tag naming
which proven case covers it (small-k, bipartite, odd-odd, even-even,
odd-even) or "table-only" when only the computed table vouches for it.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Mapping

from .errors import BudgetExceededError, ConsistencyError, DomainError
from .solver import alpha

log = logging.getLogger(__name__)

CSV_HEADER = "n,k,alpha,method"


@dataclass(frozen=True)
class TableCell:
    n: int
    k: int
    alpha: int | None  # None exactly when method == "timeout"
    method: str
    elapsed_ms: int

    def to_json_line(self) -> str:
        return json.dumps(
            {"n": self.n, "k": self.k, "alpha": self.alpha, "method": self.method,
             "elapsed_ms": self.elapsed_ms},
            sort_keys=True,
        )


def table_cells(n_max: int) -> list[tuple[int, int]]:
    """All (n, k) pairs of the table up to n_max, sorted."""
    if n_max < 5:
        raise DomainError(f"n_max must be >= 5, got {n_max}")
    return [(n, k) for n in range(5, n_max + 1) for k in range(1, (n - 1) // 2 + 1)]


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------


def cache_load(path: str | Path) -> dict[tuple[int, int], TableCell]:
    """Load the JSONL cache; malformed lines are skipped with a warning,
    conflicting alpha values for one cell are a hard error."""
    out: dict[tuple[int, int], TableCell] = {}
    p = Path(path)
    if not p.exists():
        return out
    with p.open() as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                cell = TableCell(
                    int(rec["n"]), int(rec["k"]),
                    None if rec["alpha"] is None else int(rec["alpha"]),
                    str(rec["method"]), int(rec["elapsed_ms"]),
                )
            except (json.JSONDecodeError, KeyError, TypeError, ValueError):
                log.warning("%s:%d: skipping malformed cache line", p, lineno)
                continue
            prev = out.get((cell.n, cell.k))
            if prev is not None and prev.alpha != cell.alpha:
                raise ConsistencyError(
                    f"cache {p} has conflicting alpha for ({cell.n},{cell.k}): "
                    f"{prev.alpha} vs {cell.alpha}"
                )
            out[(cell.n, cell.k)] = cell
    return out


def cache_append(path: str | Path, cell: TableCell) -> None:
    with Path(path).open("a") as f:
        f.write(cell.to_json_line() + "\n")


# ---------------------------------------------------------------------------
# table generation
# ---------------------------------------------------------------------------


def _compute_cell(args: tuple[int, int, float | None]) -> TableCell:
    n, k, budget_secs = args
    deadline = None if budget_secs is None else time.monotonic() + budget_secs
    try:
        result = alpha(n, k, "auto", deadline=deadline)
    except BudgetExceededError:
        budget_ms = int((budget_secs or 0) * 1000)
        return TableCell(n, k, None, "timeout", budget_ms)
    return TableCell(n, k, result.value, result.method, result.elapsed_ms)


def generate_table(
    n_max: int,
    *,
    cache_path: str | Path | None = None,
    jobs: int = 1,
    budget_secs: float | None = 120.0,
    progress: bool = False,
) -> list[TableCell]:
    """Compute every table cell up to n_max, reusing and extending the cache.

    Cells run in a worker pool when jobs > 1; the cache is written only by
    this coordinating process, and the returned list is always sorted by
    (n, k) so the rendered output is deterministic.
    """
    wanted = table_cells(n_max)
    cached = cache_load(cache_path) if cache_path else {}
    done = {key: cached[key] for key in wanted if key in cached}
    todo = [key for key in wanted if key not in done]

    if todo:
        work = [(n, k, budget_secs) for n, k in todo]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                fresh = list(pool.map(_compute_cell, work))
        else:
            fresh = []
            for i, item in enumerate(work):
                fresh.append(_compute_cell(item))
                if progress and (i + 1) % 50 == 0:
                    log.info("computed %d/%d cells", i + 1, len(work))
        for cell in fresh:
            done[(cell.n, cell.k)] = cell
            if cache_path is not None and cell.method != "timeout":
                cache_append(cache_path, cell)

    return [done[key] for key in wanted]


def write_table_csv(cells: Iterable[TableCell], sink: IO[str]) -> None:
    """Render cells as CSV: header n,k,alpha,method, LF endings."""
    sink.write(CSV_HEADER + "\n")
    for cell in cells:
        alpha_str = "" if cell.alpha is None else str(cell.alpha)
        sink.write(f"{cell.n},{cell.k},{alpha_str},{cell.method}\n")


# ---------------------------------------------------------------------------
# conjecture
# ---------------------------------------------------------------------------


def conjecture_case(n: int, k: int) -> str:
    """Which proven case of the vertex-cover conjecture covers (n, k)."""
    if k <= 5:
        return "small-k"
    if n % 2 == 0 and k % 2 == 1:
        return "bipartite"
    if n % 2 == 1 and k % 2 == 1 and 2 * n >= 5 * (k + 1):
        return "odd-odd"
    if n % 2 == 0 and k % 2 == 0:
        return "even-even"
    if n % 2 == 1 and k % 2 == 0 and n > 3 * k:
        return "odd-even"
    return "table-only"


@dataclass(frozen=True)
class ConjectureCell:
    n: int
    k: int
    alpha: int
    threshold: int          # floor(4n/5)
    holds: bool             # alpha >= threshold
    beta: int               # 2n - alpha
    beta_bound: int         # n + ceil(n/5)
    beta_holds: bool        # beta <= beta_bound
    case: str

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "alpha": self.alpha,
            "threshold": self.threshold, "holds": self.holds,
            "beta": self.beta, "beta_bound": self.beta_bound,
            "beta_holds": self.beta_holds, "case": self.case,
        }


@dataclass
class ConjectureReport:
    n_max: int
    cells: list[ConjectureCell] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(c.holds and c.beta_holds for c in self.cells)

    def case_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for c in self.cells:
            counts[c.case] = counts.get(c.case, 0) + 1
        return counts

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "all_hold": self.all_hold,
            "case_counts": self.case_counts(),
            "cells": [c.to_dict() for c in self.cells],
        }


def check_conjecture(
    n_max: int,
    *,
    alphas: Mapping[tuple[int, int], int] | None = None,
    cache_path: str | Path | None = None,
    budget_secs: float | None = None,
) -> ConjectureReport:
    """Evaluate both conjecture forms on exact alpha for every cell <= n_max.

    Exact values come from `alphas` when given, else from the table runner
    (which may consult a cache).
    """
    if alphas is None:
        cells = generate_table(n_max, cache_path=cache_path, budget_secs=budget_secs)
        alphas = {(c.n, c.k): c.alpha for c in cells if c.alpha is not None}
    report = ConjectureReport(n_max)
    for n, k in table_cells(n_max):
        a = alphas.get((n, k))
        if a is None:
            raise ConsistencyError(f"no exact alpha available for ({n},{k})")
        threshold = 4 * n // 5
        beta = 2 * n - a
        beta_bound = n + (-(n // -5))
        report.cells.append(
            ConjectureCell(
                n, k, a, threshold, a >= threshold,
                beta, beta_bound, beta <= beta_bound,
                conjecture_case(n, k),
            )
        )
    return report
