"""
Polarization of monomial ideals.

x_j^a becomes x_{j,1} * ... * x_{j,a}. Polarized variables stay (variable,
slot) pairs and are ordered x_{j,k} > x_{j',k'} iff j < j', or j = j' and
k < k'; the pair tuples sort the same way.
"""
import logging
from dataclasses import dataclass, field
from functools import cmp_to_key
from random import Random
from typing import FrozenSet, List, Optional, Tuple

from ..config.settings import settings
from ..core.errors import VariableIndexError
from ..core.ideal import MonomialIdeal, random_member
from ..core.monomial import Monomial, MonomialOrder, Ordering, compare

logger = logging.getLogger(__name__)

SlotVariable = Tuple[int, int]
SquarefreeMonomial = FrozenSet[SlotVariable]


def compare_polarized(s: SquarefreeMonomial, t: SquarefreeMonomial) -> Ordering:
    """Pure-lex comparison of squarefree monomials in slot variables."""
    difference = s ^ t
    if not difference:
        return Ordering.EQUAL
    return Ordering.GREATER if min(difference) in s else Ordering.LESS


def _descending(gens) -> Tuple[SquarefreeMonomial, ...]:
    key = cmp_to_key(lambda s, t: int(compare_polarized(s, t)))
    return tuple(sorted(gens, key=key, reverse=True))


def render_polarized(u: SquarefreeMonomial) -> str:
    if not u:
        return "1"
    return "*".join(f"x{j}_{k}" for j, k in sorted(u))


@dataclass(frozen=True)
class PolarizedIdeal:
    """A squarefree ideal in the slot variables x_{j,k} over n base variables."""

    nvars: int
    gens: Tuple[SquarefreeMonomial, ...] = ()
    extension: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        gens = {frozenset(g) for g in self.gens}
        for g in gens:
            for j, k in g:
                if not 1 <= j <= self.nvars or k < 1:
                    raise VariableIndexError(f"slot variable x{j}_{k} out of range")
        minimal = [g for g in gens if not any(h < g for h in gens)]
        object.__setattr__(self, "gens", _descending(minimal))
        extension = [0] * self.nvars
        for g in self.gens:
            for j, k in g:
                extension[j - 1] = max(extension[j - 1], k)
        object.__setattr__(self, "extension", tuple(extension))

    def universe(self) -> List[SlotVariable]:
        """The slot variables of the ring, most significant first."""
        return [
            (j, k)
            for j in range(1, self.nvars + 1)
            for k in range(1, self.extension[j - 1] + 1)
        ]

    def is_prefix_closed(self) -> bool:
        return all((j, k - 1) in g for g in self.gens for j, k in g if k > 1)

    def depolarize(self) -> MonomialIdeal:
        """Read slot counts back as exponents."""
        gens = []
        for g in self.gens:
            exponents = [0] * self.nvars
            for j, _ in g:
                exponents[j - 1] += 1
            gens.append(Monomial(tuple(exponents)))
        return MonomialIdeal(self.nvars, tuple(gens))

    def __str__(self) -> str:
        return "<" + ", ".join(render_polarized(g) for g in self.gens) + ">"


def polarize_monomial(u: Monomial) -> SquarefreeMonomial:
    return frozenset(
        (j, k) for j, a in enumerate(u.exponents, start=1) for k in range(1, a + 1)
    )


def polarize(ideal: MonomialIdeal) -> PolarizedIdeal:
    return PolarizedIdeal(ideal.nvars, tuple(polarize_monomial(g) for g in ideal.gens))


def exponent_vector(ideal: MonomialIdeal) -> Tuple[int, ...]:
    """Componentwise maximum of the generator exponents."""
    return tuple(
        max((g.exponents[i] for g in ideal.gens), default=0)
        for i in range(ideal.nvars)
    )


@dataclass
class OrderPreservationReport:
    pairs_checked: int = 0
    violations: List[Tuple[Monomial, Monomial]] = field(default_factory=list)

    @property
    def preserved(self) -> bool:
        return not self.violations


def order_preserving_check(
    ideal: MonomialIdeal, sample_size: Optional[int] = None, seed: Optional[int] = None
) -> OrderPreservationReport:
    """Compare pure-lex on members of I with the polarized order.

    Every pair of generators is checked, plus sample_size random member pairs.
    """
    report = OrderPreservationReport()
    if ideal.is_zero:
        return report
    rng = Random(settings.SEED if seed is None else seed)
    count = settings.ORDER_SAMPLE_SIZE if sample_size is None else sample_size
    pairs = [(u, v) for u in ideal.gens for v in ideal.gens]
    pairs += [
        (random_member(ideal, rng), random_member(ideal, rng)) for _ in range(count)
    ]
    for u, v in pairs:
        report.pairs_checked += 1
        expected = compare(u, v, MonomialOrder.PURE_LEX)
        if compare_polarized(polarize_monomial(u), polarize_monomial(v)) != expected:
            report.violations.append((u, v))
    if report.violations:
        logger.warning(
            f"polarization reversed {len(report.violations)} of "
            f"{report.pairs_checked} pairs for {ideal}"
        )
    return report
