"""
Exact simplex over the rationals with Bland's anti-cycling rule.

The tableau is kept in dictionary form: basic variables equal
b - A * (nonbasic variables), and the objective is value + c * (nonbasic).
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
CONTINUE = "continue"


class SimplexTableau:
    """Maximize c.x subject to A x <= b, x >= 0, with b >= 0."""

    def __init__(
        self,
        A: Sequence[Sequence[int]],
        b: Sequence[int],
        c: Sequence[int],
    ):
        self.m = len(b)
        self.n = len(c)
        self.A: List[List[Fraction]] = [[Fraction(v) for v in row] for row in A]
        self.b: List[Fraction] = [Fraction(v) for v in b]
        self.c: List[Fraction] = [Fraction(v) for v in c]
        if any(v < 0 for v in self.b):
            raise ValueError("slack basis needs a non-negative right-hand side")
        self.value = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        self.value += delta * self.b[i]
        for col in range(self.n):
            self.c[col] -= delta * self.A[i][col]
        self.c[j] = -delta
        for col in range(self.n):
            self.A[i][col] = 1 / piv if col == j else self.A[i][col] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if not f:
                continue
            for col in range(self.n):
                if col == j:
                    self.A[k][col] = -f / piv
                else:
                    self.A[k][col] -= f * self.A[i][col]
            self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_step(self) -> str:
        entering = [(self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0]
        if not entering:
            return OPTIMAL
        _, j = min(entering)
        ratios = [
            (self.b[i] / self.A[i][j], self.b_vars[i], i)
            for i in range(self.m)
            if self.A[i][j] > 0
        ]
        if not ratios:
            return UNBOUNDED
        _, _, i = min(ratios)
        self.pivot(i, j)
        return CONTINUE

    def maximize(self, target: Optional[Fraction] = None) -> str:
        """Run Bland's rule; stop early once the objective reaches target."""
        while True:
            if target is not None and self.value >= target:
                return OPTIMAL
            status = self.bland_step()
            if status != CONTINUE:
                logger.debug(f"simplex {status} after {self.pivots} pivots")
                return status
