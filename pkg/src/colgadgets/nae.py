"""Positive-literal not-all-equal 3-SAT instances and a brute-force oracle.

Every reduction in this package starts from such an instance, and the
brute-force oracle is the independent reference the equivalence campaigns
compare the gadget solvers against.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

BRUTE_FORCE_LIMIT = 24


@dataclass(frozen=True)
class NaeInstance:
    """Variables x_1..x_n and an ordered list of ordered 3-variable clauses.

    Clause variables are distinct within a clause; the same clause may occur
    several times.  All literals are positive.
    """

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("instance needs at least one variable")
        for cl in self.clauses:
            if len(cl) != 3 or len(set(cl)) != 3:
                raise ValueError(f"clause {cl} must have three distinct variables")
            for i in cl:
                if not 1 <= i <= self.n:
                    raise ValueError(f"variable {i} outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.clauses)


def is_nae_satisfied(inst: NaeInstance, assignment: Sequence[bool]) -> bool:
    """True when every clause has at least one true and at least one false literal."""
    if len(assignment) != inst.n:
        raise ValueError(f"assignment length {len(assignment)} != {inst.n} variables")
    for i, j, k in inst.clauses:
        a, b, c = assignment[i - 1], assignment[j - 1], assignment[k - 1]
        if a == b == c:
            return False
    return True


def brute_force_nae(inst: NaeInstance) -> tuple[bool, ...] | None:
    """Least satisfying assignment in binary order (x_1 least significant), or
    None when unsatisfiable.  Guarded to n <= 24 variables."""
    if inst.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} variables, got {inst.n}")
    for code in range(1 << inst.n):
        assignment = tuple(bool(code >> b & 1) for b in range(inst.n))
        if is_nae_satisfied(inst, assignment):
            return assignment
    return None


def random_instance(n: int, m: int, seed: int) -> NaeInstance:
    """m clauses drawn uniformly over ordered distinct triples; deterministic in seed."""
    if n < 3:
        raise ValueError("need at least three variables to form a clause")
    rng = random.Random(seed)
    clauses = tuple(tuple(rng.sample(range(1, n + 1), 3)) for _ in range(m))
    return NaeInstance(n, clauses)


def fano_instance() -> NaeInstance:
    """The seven triples of the order-2 projective plane: the smallest
    positive-literal instance with no not-all-equal assignment."""
    lines = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))
    return NaeInstance(7, lines)
