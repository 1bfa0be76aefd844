"""
Integral closure of monomial ideals through the Newton polyhedron.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from math import prod
from typing import List, Optional, Sequence

from ..config.settings import settings
from ..core.budget import ensure_within_budget
from ..core.errors import AmbientMismatchError, PreconditionError, ZeroIdealError
from ..core.ideal import MonomialIdeal, product
from ..core.monomial import Monomial
from .simplex import UNBOUNDED, SimplexTableau

logger = logging.getLogger(__name__)


def newton_polyhedron_contains(
    point: Sequence[int], vertices: Sequence[Sequence[int]]
) -> bool:
    """point in conv(vertices) + R>=0^n, decided exactly.

    Maximizes sum(lambda) subject to sum(lambda_g * g) <= point, lambda >= 0.
    The point is inside iff the optimum reaches 1 or is unbounded.
    """
    if not vertices:
        return False
    if any(all(v <= p for v, p in zip(vertex, point)) for vertex in vertices):
        return True
    columns = list(vertices)
    A = [[vertex[i] for vertex in columns] for i in range(len(point))]
    tableau = SimplexTableau(A, list(point), [1] * len(columns))
    status = tableau.maximize(target=Fraction(1))
    return status == UNBOUNDED or tableau.value >= 1


def is_integral_over(u: Monomial, ideal: MonomialIdeal) -> bool:
    if ideal.is_zero:
        raise ZeroIdealError("integral closure of the zero ideal")
    if u.n != ideal.nvars:
        raise AmbientMismatchError(
            f"monomial {u} has {u.n} variables, ring has {ideal.nvars}"
        )
    return newton_polyhedron_contains(
        u.exponents, [g.exponents for g in ideal.gens]
    )


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Lattice points of the Newton polyhedron inside the generator box."""
    if ideal.is_zero:
        raise ZeroIdealError("integral closure of the zero ideal")
    n = ideal.nvars
    top = [max(g.exponents[i] for g in ideal.gens) for i in range(n)]
    ensure_within_budget(prod(t + 1 for t in top), "closure box")
    vertices = [g.exponents for g in ideal.gens]
    supports = [g.support() for g in ideal.gens]
    points = sorted(cartesian(*(range(t + 1) for t in top)), key=lambda p: (sum(p), p))
    found: List[Monomial] = []
    for point in points:
        candidate = Monomial(point)
        if any(g.divides(candidate) for g in found):
            continue
        if not any(s <= candidate.support() for s in supports):
            continue
        if newton_polyhedron_contains(point, vertices):
            found.append(candidate)
    logger.debug(f"closure of {ideal} scanned {len(points)} box points")
    return MonomialIdeal(n, tuple(found))


@dataclass(frozen=True)
class ClosureVerdict:
    member: bool
    k: Optional[int]
    bound: int

    def __str__(self) -> str:
        if self.member:
            return f"member({self.k})"
        return f"not-found-up-to-{self.bound}"


def closure_oracle(
    u: Monomial, ideal: MonomialIdeal, k_max: Optional[int] = None
) -> ClosureVerdict:
    """Least k <= k_max with u^k in I^k, by direct expansion."""
    bound = k_max if k_max is not None else settings.ORACLE_KMAX
    if bound < 1:
        raise PreconditionError(f"k_max must be positive, got {bound}")
    current = ideal
    for k in range(1, bound + 1):
        if k > 1:
            current = product(current, ideal)
        if current.contains(u**k):
            return ClosureVerdict(True, k, bound)
    return ClosureVerdict(False, None, bound)
