"""Executable complexity classification for colouring problems on graph
classes excluding one induced cycle length and one induced path length, plus
the path-only table.

The classification is data: each case is a row with closed-form bounds on
(k, s, t), a status, and a stable label, so the audit can enumerate rows and
check totality, disjointness and hierarchy consistency over a probe grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .gadgets import remark_bound

COLOURING = "colouring"
PRECOLOURING_EXTENSION = "precolouring-extension"
LIST_COLOURING = "list-colouring"
PROBLEMS = (COLOURING, PRECOLOURING_EXTENSION, LIST_COLOURING)

P_TIME = "p-time"
NP_COMPLETE = "np-complete"
OPEN = "open"

_RANK = {P_TIME: 0, OPEN: 1, NP_COMPLETE: 2}


@dataclass(frozen=True)
class ClassEntry:
    status: str
    citation: str


Bound = int | None | Callable[[int], int]


@dataclass(frozen=True)
class _Row:
    label: str
    status: str
    k_lo: int = 1
    k_hi: int | None = None
    s_lo: int = 3
    s_hi: int | None = None
    t_lo: Bound = 1
    t_hi: Bound = None

    def matches(self, k: int, s: int, t: int) -> bool:
        if k < self.k_lo or (self.k_hi is not None and k > self.k_hi):
            return False
        if s < self.s_lo or (self.s_hi is not None and s > self.s_hi):
            return False
        t_lo = self.t_lo(k) if callable(self.t_lo) else self.t_lo
        t_hi = self.t_hi(k) if callable(self.t_hi) else self.t_hi
        if t < t_lo or (t_hi is not None and t > t_hi):
            return False
        return True


def _hardness_threshold(k: int) -> int:
    # Concrete stand-in for the k-dependent path-order constant: the forcer
    # construction's upper bound.
    return remark_bound(k)


_LIST_ROWS = (
    _Row("lc-npc-1", NP_COMPLETE, k_lo=4, s_lo=3, s_hi=3, t_lo=8),
    _Row("lc-npc-2", NP_COMPLETE, k_lo=4, s_lo=5, t_lo=6),
    _Row("lc-p-3", P_TIME, k_lo=1, k_hi=2),
    _Row("lc-p-4", P_TIME, k_lo=3, k_hi=3, s_lo=3, s_hi=3, t_hi=6),
    _Row("lc-p-5", P_TIME, k_lo=3, k_hi=3, s_lo=4, s_hi=4),
    _Row("lc-p-6", P_TIME, k_lo=3, k_hi=3, s_lo=5, t_hi=6),
    _Row("lc-p-7", P_TIME, k_lo=4, s_lo=3, s_hi=3, t_hi=6),
    _Row("lc-p-8", P_TIME, k_lo=4, s_lo=4, s_hi=4),
    _Row("lc-p-9", P_TIME, k_lo=4, s_lo=5, t_hi=5),
    _Row("lc-open-1", OPEN, k_lo=3, k_hi=3, s_lo=3, s_hi=3, t_lo=7),
    _Row("lc-open-2", OPEN, k_lo=3, k_hi=3, s_lo=5, t_lo=7),
    _Row("lc-open-3", OPEN, k_lo=4, s_lo=3, s_hi=3, t_lo=7, t_hi=7),
)

_PRECOL_ROWS = (
    _Row("pe-npc-1", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=3, s_hi=3, t_lo=10),
    _Row("pe-npc-2", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=5, s_hi=5, t_lo=7),
    _Row("pe-npc-3", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=6, s_hi=6, t_lo=7),
    _Row("pe-npc-4", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=7, s_hi=7, t_lo=8),
    _Row("pe-npc-5", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=8, t_lo=7),
    _Row("pe-npc-6", NP_COMPLETE, k_lo=5, s_lo=3, s_hi=3, t_lo=10),
    _Row("pe-npc-7", NP_COMPLETE, k_lo=5, s_lo=5, t_lo=6),
    _Row("pe-p-8", P_TIME, k_lo=1, k_hi=2),
    _Row("pe-p-9", P_TIME, k_lo=3, k_hi=3, s_lo=3, s_hi=3, t_hi=6),
    _Row("pe-p-10", P_TIME, k_lo=3, k_hi=3, s_lo=4, s_hi=4),
    _Row("pe-p-11", P_TIME, k_lo=3, k_hi=3, s_lo=5, t_hi=6),
    _Row("pe-p-12", P_TIME, k_lo=4, s_lo=3, s_hi=3, t_hi=6),
    _Row("pe-p-13", P_TIME, k_lo=4, s_lo=4, s_hi=4),
    _Row("pe-p-14", P_TIME, k_lo=4, s_lo=5, t_hi=5),
    _Row("pe-open-1", OPEN, k_lo=3, k_hi=3, s_lo=3, s_hi=3, t_lo=7),
    _Row("pe-open-2", OPEN, k_lo=3, k_hi=3, s_lo=5, t_lo=7),
    _Row("pe-open-3", OPEN, k_lo=4, k_hi=4, s_lo=3, s_hi=3, t_lo=7, t_hi=9),
    _Row("pe-open-4", OPEN, k_lo=4, k_hi=4, s_lo=5, t_lo=6, t_hi=6),
    _Row("pe-open-5", OPEN, k_lo=4, k_hi=4, s_lo=7, s_hi=7, t_lo=7, t_hi=7),
    _Row("pe-open-6", OPEN, k_lo=5, s_lo=3, s_hi=3, t_lo=7, t_hi=9),
)

_COLOURING_ROWS = (
    _Row("col-npc-1", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=3, s_hi=3, t_lo=22),
    _Row("col-npc-2", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=5, s_hi=5, t_lo=7),
    _Row("col-npc-3", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=6, s_hi=6, t_lo=7),
    _Row("col-npc-4", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=7, s_hi=7, t_lo=9),
    _Row("col-npc-5", NP_COMPLETE, k_lo=4, k_hi=4, s_lo=8, t_lo=7),
    _Row("col-npc-6", NP_COMPLETE, k_lo=5, s_lo=3, s_hi=3, t_lo=_hardness_threshold),
    _Row("col-npc-7", NP_COMPLETE, k_lo=5, s_lo=5, s_hi=5, t_lo=7),
    _Row("col-npc-8", NP_COMPLETE, k_lo=5, s_lo=6, t_lo=6),
    _Row("col-p-9", P_TIME, k_lo=1, k_hi=2),
    _Row("col-p-10", P_TIME, k_lo=3, k_hi=3, s_lo=3, s_hi=3, t_hi=7),
    _Row("col-p-11", P_TIME, k_lo=3, k_hi=3, s_lo=4, s_hi=4),
    _Row("col-p-12", P_TIME, k_lo=3, k_hi=3, s_lo=5, t_hi=7),
    _Row("col-p-13", P_TIME, k_lo=4, k_hi=4, s_lo=3, s_hi=3, t_hi=6),
    _Row("col-p-14", P_TIME, k_lo=4, k_hi=4, s_lo=4, s_hi=4),
    _Row("col-p-15", P_TIME, k_lo=4, k_hi=4, s_lo=5, s_hi=5, t_hi=6),
    _Row("col-p-16", P_TIME, k_lo=4, k_hi=4, s_lo=6, t_hi=5),
    _Row("col-p-17", P_TIME, k_lo=5, s_lo=3, s_hi=3, t_hi=lambda k: k + 2),
    _Row("col-p-18", P_TIME, k_lo=5, s_lo=4, s_hi=4),
    _Row("col-p-19", P_TIME, k_lo=5, s_lo=5, t_hi=5),
    _Row("col-open-1", OPEN, k_lo=3, k_hi=3, s_lo=3, s_hi=3, t_lo=8),
    _Row("col-open-2", OPEN, k_lo=3, k_hi=3, s_lo=5, t_lo=8),
    _Row("col-open-3", OPEN, k_lo=4, k_hi=4, s_lo=3, s_hi=3, t_lo=7, t_hi=21),
    _Row("col-open-4", OPEN, k_lo=4, k_hi=4, s_lo=6, t_lo=6, t_hi=6),
    _Row("col-open-5", OPEN, k_lo=4, k_hi=4, s_lo=7, s_hi=7, t_lo=7, t_hi=8),
    _Row(
        "col-open-6",
        OPEN,
        k_lo=5,
        s_lo=3,
        s_hi=3,
        t_lo=lambda k: k + 3,
        t_hi=lambda k: _hardness_threshold(k) - 1,
    ),
    _Row("col-open-7", OPEN, k_lo=5, s_lo=5, s_hi=5, t_lo=6, t_hi=6),
)

_ROWS = {
    LIST_COLOURING: _LIST_ROWS,
    PRECOLOURING_EXTENSION: _PRECOL_ROWS,
    COLOURING: _COLOURING_ROWS,
}


def _check_args(problem: str, k: int, s: int | None, t: int) -> None:
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}; pick one of {PROBLEMS}")
    if k < 1:
        raise ValueError("k must be positive")
    if s is not None and s < 3:
        raise ValueError("cycle order s must be at least 3")
    if t < 1:
        raise ValueError("path order t must be at least 1")


def classify_cs_pt(problem: str, k: int, s: int, t: int) -> ClassEntry:
    """Status of the problem on the class excluding an induced s-cycle and an
    induced t-path; exactly one case row matches."""
    _check_args(problem, k, s, t)
    hits = [row for row in _ROWS[problem] if row.matches(k, s, t)]
    if len(hits) != 1:
        raise RuntimeError(
            f"classification rows are not a partition at ({problem}, {k}, {s}, {t}): {hits}"
        )
    return ClassEntry(hits[0].status, hits[0].label)


# Path-only table.  Rows by excluded path order, columns by colour count.
_T_ROWS = ((1, 5), (6, 6), (7, 7), (8, None))
_K_COLUMNS = ((3, 3), (4, 4), (5, 5), (6, None))

_PT_TABLE = {
    COLOURING: (
        (P_TIME, P_TIME, P_TIME, P_TIME),
        (P_TIME, OPEN, NP_COMPLETE, NP_COMPLETE),
        (P_TIME, NP_COMPLETE, NP_COMPLETE, NP_COMPLETE),
        (OPEN, NP_COMPLETE, NP_COMPLETE, NP_COMPLETE),
    ),
    PRECOLOURING_EXTENSION: (
        (P_TIME, P_TIME, P_TIME, P_TIME),
        (P_TIME, OPEN, NP_COMPLETE, NP_COMPLETE),
        (OPEN, NP_COMPLETE, NP_COMPLETE, NP_COMPLETE),
        (OPEN, NP_COMPLETE, NP_COMPLETE, NP_COMPLETE),
    ),
    LIST_COLOURING: (
        (P_TIME, P_TIME, P_TIME, P_TIME),
        (P_TIME, NP_COMPLETE, NP_COMPLETE, NP_COMPLETE),
        (OPEN, NP_COMPLETE, NP_COMPLETE, NP_COMPLETE),
        (OPEN, NP_COMPLETE, NP_COMPLETE, NP_COMPLETE),
    ),
}


def classify_pt_free(problem: str, k: int, t: int) -> ClassEntry:
    """Status of the problem when only an induced t-path is excluded (k >= 3)."""
    _check_args(problem, k, None, t)
    if k < 3:
        raise ValueError("the path-only table starts at k = 3")
    ti = next(i for i, (lo, hi) in enumerate(_T_ROWS) if t >= lo and (hi is None or t <= hi))
    ki = next(i for i, (lo, hi) in enumerate(_K_COLUMNS) if k >= lo and (hi is None or k <= hi))
    status = _PT_TABLE[problem][ti][ki]
    t_label = f"t{_T_ROWS[ti][0]}" if _T_ROWS[ti][1] == _T_ROWS[ti][0] else (
        "t<=5" if ti == 0 else "t>=8"
    )
    return ClassEntry(status, f"pt:{problem}:{t_label}:k{_K_COLUMNS[ki][0]}")


PROBE_K = 12
PROBE_S = 12
PROBE_T = 30


def audit_tables() -> list[dict]:
    """Consistency audit over a finite probe grid.

    Checks (a) each (problem, k, s, t) matches exactly one case row, and each
    path-only cell is defined; (b) hierarchy consistency: plain colouring is a
    special case of precolouring extension, which is a special case of list
    colouring, so hardness may only grow along that chain (status rank must be
    monotone).  Returns one record per check with any violating triples.
    """
    records: list[dict] = []
    bad_partition: list[tuple] = []
    bad_rank: list[tuple] = []
    for k in range(1, PROBE_K + 1):
        for s in range(3, PROBE_S + 1):
            for t in range(1, PROBE_T + 1):
                statuses = {}
                for problem in PROBLEMS:
                    hits = [row for row in _ROWS[problem] if row.matches(k, s, t)]
                    if len(hits) != 1:
                        bad_partition.append((problem, k, s, t, [r.label for r in hits]))
                        continue
                    statuses[problem] = hits[0].status
                if len(statuses) == 3:
                    ranks = [
                        _RANK[statuses[COLOURING]],
                        _RANK[statuses[PRECOLOURING_EXTENSION]],
                        _RANK[statuses[LIST_COLOURING]],
                    ]
                    if not ranks[0] <= ranks[1] <= ranks[2]:
                        bad_rank.append((k, s, t, statuses))
    records.append(
        {
            "claim": "cs-pt rows form a partition of the probe grid",
            "citation": "audit:cs-pt-partition",
            "status": "pass" if not bad_partition else "fail",
            "witness": bad_partition[:20] or None,
        }
    )
    records.append(
        {
            "claim": "hardness rank is monotone along colouring <= precolouring <= list",
            "citation": "audit:cs-pt-hierarchy",
            "status": "pass" if not bad_rank else "fail",
            "witness": bad_rank[:20] or None,
        }
    )
    bad_pt: list[tuple] = []
    for k in range(3, PROBE_K + 1):
        for t in range(1, PROBE_T + 1):
            try:
                ranks = [_RANK[classify_pt_free(p, k, t).status] for p in PROBLEMS]
            except Exception as exc:  # totality failure
                bad_pt.append((k, t, repr(exc)))
                continue
            if not ranks[0] <= ranks[1] <= ranks[2]:
                bad_pt.append((k, t, "rank order violated"))
    records.append(
        {
            "claim": "path-only table is total and hierarchy-consistent",
            "citation": "audit:pt-table",
            "status": "pass" if not bad_pt else "fail",
            "witness": bad_pt[:20] or None,
        }
    )
    return records
