"""
Membership tests for the ideal classes.

universal lexsegment => lexsegment => strongly stable => Borel-fixed => Borel type
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from ..config.settings import settings
from ..core.budget import ensure_within_budget
from ..core.errors import NonSquarefreeError, PreconditionError, UnitIdealError
from ..core.ideal import MonomialIdeal, product, saturate
from ..core.monomial import Monomial, monomials_of_degree
from ..decompositions.primes import ass_primes
from ..polarization.polarized import PolarizedIdeal
from .types import IdealClass, check_characteristic

logger = logging.getLogger(__name__)


def is_borel_type(ideal: MonomialIdeal) -> bool:
    """I : x_i^inf = I : <x1..xi>^inf for every i."""
    n = ideal.nvars
    for i in range(1, n + 1):
        by_variable = saturate(ideal, MonomialIdeal.prime([i], n))
        by_segment = saturate(ideal, MonomialIdeal.prime(range(1, i + 1), n))
        if by_variable != by_segment:
            logger.debug(f"{ideal} fails the Borel-type saturation test at x{i}")
            return False
    return True


def is_borel_type_by_primes(ideal: MonomialIdeal) -> bool:
    """Every associated prime has the form <x1..xr>."""
    if ideal.is_zero or ideal.is_unit:
        return True
    for prime in ass_primes(ideal):
        if prime.vars != frozenset(range(1, len(prime.vars) + 1)):
            return False
    return True


def _exchange(u: Monomial, i: int, j: int, s: int = 1) -> Monomial:
    exponents = list(u.exponents)
    exponents[j - 1] -= s
    exponents[i - 1] += s
    return Monomial(tuple(exponents))


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    for g in ideal.gens:
        for j in g.support():
            for i in range(1, j):
                if not ideal.contains(_exchange(g, i, j)):
                    return False
    return True


def binomial_nonzero_mod(t: int, s: int, p: int) -> bool:
    """binomial(t, s) != 0 mod p, by comparing base-p digits."""
    while s:
        if s % p > t % p:
            return False
        s //= p
        t //= p
    return True


def is_borel_fixed(ideal: MonomialIdeal, characteristic: int = 0) -> bool:
    p = check_characteristic(characteristic)
    if p == 0:
        return is_strongly_stable(ideal)
    for g in ideal.gens:
        for j in g.support():
            t = g.exponents[j - 1]
            moves = [s for s in range(1, t + 1) if binomial_nonzero_mod(t, s, p)]
            for i in range(1, j):
                for s in moves:
                    if not ideal.contains(_exchange(g, i, j, s)):
                        return False
    return True


def is_lexsegment(ideal: MonomialIdeal) -> bool:
    """Each graded piece up to the top generator degree is a lex initial segment."""
    n = ideal.nvars
    for d in range(ideal.min_degree, ideal.max_degree + 1):
        ensure_within_budget(comb(n + d - 1, d) if n else 1, "lexsegment check")
        outside = False
        for u in monomials_of_degree(n, d):
            if ideal.contains(u):
                if outside:
                    logger.debug(f"{ideal} is not a lex segment in degree {d}")
                    return False
            else:
                outside = True
    return True


def universal_lexsegment_witness(ideal: MonomialIdeal) -> Optional[Tuple[int, ...]]:
    """The a-vector when u_i = x_i^{a_i} * prod_{j<i} x_j^{a_j - 1}, else None."""
    if ideal.is_unit or ideal.is_zero:
        return ()
    if len(ideal.gens) > ideal.nvars:
        return None
    witness = []
    for i, u in enumerate(ideal.gens, start=1):
        a_i = u.exponents[i - 1]
        if a_i < 1 or any(u.exponents[i:]):
            return None
        if any(u.exponents[j] != witness[j] - 1 for j in range(i - 1)):
            return None
        witness.append(a_i)
    return tuple(witness)


def satisfies_exchange_condition(ideal: MonomialIdeal) -> bool:
    """x_i (u / x_j^{b_j}) in I for all i < j with b_j > 0, on generators."""
    n = ideal.nvars
    for u in ideal.gens:
        for j in u.support():
            stripped = Monomial(u.exponents[: j - 1] + (0,) + u.exponents[j:])
            for i in range(1, j):
                if not ideal.contains(stripped * Monomial.var(i, n)):
                    return False
    return True


def satisfies_max_support_exchange(ideal: MonomialIdeal, u: Monomial) -> bool:
    """x_i (u / x_m^{b_m}) in I for every i < m = m(u)."""
    m = u.max_support()
    stripped = Monomial(u.exponents[: m - 1] + (0,) * (u.n - m + 1)) if m else u
    return all(
        ideal.contains(stripped * Monomial.var(i, u.n)) for i in range(1, m)
    )


def is_universal_lexsegment(
    ideal: MonomialIdeal,
) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    witness = universal_lexsegment_witness(ideal)
    return witness is not None, witness


def _squarefree_strongly_stable(
    gens: Sequence[FrozenSet[Hashable]], universe: Sequence[Hashable]
) -> bool:
    position = {v: k for k, v in enumerate(universe)}
    members = set(gens)

    def contains(candidate: FrozenSet[Hashable]) -> bool:
        return candidate in members or any(g <= candidate for g in gens)

    for u in gens:
        for i in u:
            for j in universe[: position[i]]:
                if j not in u and not contains((u - {i}) | {j}):
                    return False
    return True


def is_squarefree_strongly_stable(
    ideal: Union[MonomialIdeal, PolarizedIdeal],
    order: Optional[Sequence[int]] = None,
) -> bool:
    """Squarefree strong stability under the given variable order.

    A MonomialIdeal uses ``order`` (most significant variable first, default
    x1 > ... > xn); a PolarizedIdeal always uses its own slot order.
    """
    if isinstance(ideal, PolarizedIdeal):
        return _squarefree_strongly_stable(list(ideal.gens), ideal.universe())
    if not ideal.is_squarefree:
        raise NonSquarefreeError(f"{ideal} is not squarefree")
    universe = tuple(order) if order is not None else tuple(range(1, ideal.nvars + 1))
    if sorted(universe) != list(range(1, ideal.nvars + 1)):
        raise PreconditionError(f"order {list(universe)} is not a permutation of 1..n")
    return _squarefree_strongly_stable([g.support() for g in ideal.gens], universe)


@dataclass(frozen=True)
class StablyLexsegmentVerdict:
    holds: bool
    failing_power: Optional[int]
    bound: int

    def __str__(self) -> str:
        if self.holds:
            return f"true-up-to-{self.bound}"
        return f"false({self.failing_power})"


def is_stably_lexsegment(
    ideal: MonomialIdeal, k_max: Optional[int] = None
) -> StablyLexsegmentVerdict:
    """Bounded test: I^k is lexsegment for every k <= k_max."""
    bound = k_max if k_max is not None else settings.KMAX
    if bound < 1:
        raise PreconditionError(f"k_max must be positive, got {bound}")
    current = ideal
    for k in range(1, bound + 1):
        if k > 1:
            current = product(current, ideal)
        if not is_lexsegment(current):
            return StablyLexsegmentVerdict(False, k, bound)
    return StablyLexsegmentVerdict(True, None, bound)


def depth_universal_lex(ideal: MonomialIdeal) -> int:
    """depth S/I = n - |G(I)| for a universal lexsegment ideal."""
    if ideal.is_unit:
        raise UnitIdealError("depth of S/I is undefined for the unit ideal")
    holds, _ = is_universal_lexsegment(ideal)
    if not holds:
        raise PreconditionError(f"{ideal} is not universal lexsegment")
    return ideal.nvars - len(ideal.gens)


def satisfies(
    ideal_class: IdealClass,
    ideal: MonomialIdeal,
    characteristic: Optional[int] = None,
) -> bool:
    """Dispatch an IdealClass to its membership test."""
    p = settings.CHARACTERISTIC if characteristic is None else characteristic
    checks: Dict[IdealClass, Callable[[MonomialIdeal], bool]] = {
        IdealClass.BOREL_TYPE: is_borel_type,
        IdealClass.BOREL_FIXED: lambda i: is_borel_fixed(i, p),
        IdealClass.STRONGLY_STABLE: is_strongly_stable,
        IdealClass.LEXSEGMENT: is_lexsegment,
        IdealClass.UNIVERSAL_LEXSEGMENT: lambda i: is_universal_lexsegment(i)[0],
        IdealClass.SQUAREFREE_STRONGLY_STABLE: lambda i: i.is_squarefree
        and is_squarefree_strongly_stable(i),
        IdealClass.STABLY_LEXSEGMENT: lambda i: is_stably_lexsegment(i).holds,
    }
    return checks[IdealClass(ideal_class)](ideal)
