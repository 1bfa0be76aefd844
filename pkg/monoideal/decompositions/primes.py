"""
Minimal and associated primes, localization kernels and irreducible
decompositions of monomial ideals.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..core.budget import ensure_within_budget
from ..core.errors import (
    AmbientMismatchError,
    PreconditionError,
    UnitIdealError,
    ZeroIdealError,
)
from ..core.ideal import MonomialIdeal, intersect
from ..core.monomial import Monomial, VarSet, check_indices
from ..utils.helpers import cache_result
from .complex import (
    SimplicialComplex,
    alexander_dual,
    minimal_transversals,
    set_key,
    stanley_reisner,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialPrime:
    """P_B = <x_i : i in B> in K[x1..xn]."""

    vars: VarSet
    nvars: int

    def __post_init__(self):
        object.__setattr__(self, "vars", check_indices(self.vars, self.nvars))

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "MonomialPrime":
        if any(g.degree != 1 for g in ideal.gens):
            raise PreconditionError(f"{ideal} is not a monomial prime")
        members = frozenset(i for g in ideal.gens for i in g.support())
        return cls(members, ideal.nvars)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.prime(self.vars, self.nvars)

    def sort_key(self):
        return set_key(self.vars)

    def __str__(self) -> str:
        return "<" + ", ".join(f"x{i}" for i in sorted(self.vars)) + ">"


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ZeroIdealError("operation needs a nonzero ideal")
    if ideal.is_unit:
        raise UnitIdealError("operation needs a proper ideal")


def _sorted_primes(primes) -> List[MonomialPrime]:
    return sorted(set(primes), key=MonomialPrime.sort_key)


def eliminating_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Faces are the variable sets missing the support of some generator."""
    _require_proper_nonzero(ideal)
    supports = [g.support() for g in ideal.gens]
    return SimplicialComplex(ideal.nvars, minimal_transversals(supports, ideal.nvars))


def min_primes(ideal: MonomialIdeal) -> List[MonomialPrime]:
    complex_ = eliminating_complex(ideal)
    return _sorted_primes(
        MonomialPrime(face, ideal.nvars) for face in complex_.minimal_nonfaces
    )


def localization_kernel(ideal: MonomialIdeal, prime: MonomialPrime) -> MonomialIdeal:
    """J(I, P): generators of I restricted to the variables of P."""
    if prime.nvars != ideal.nvars:
        raise AmbientMismatchError(
            f"ideal in {ideal.nvars} variables, prime in {prime.nvars}"
        )
    return MonomialIdeal(ideal.nvars, tuple(g.restrict(prime.vars) for g in ideal.gens))


def radical_via_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Stanley-Reisner ideal of the Alexander dual of the eliminating complex."""
    return stanley_reisner(alexander_dual(eliminating_complex(ideal)))


def _split_point(ideal: MonomialIdeal):
    for g in ideal.gens:
        support = sorted(g.support())
        if len(support) > 1:
            j = support[0]
            return g, Monomial.var(j, ideal.nvars, g.exponents[j - 1])
    return None


@cache_result(maxsize=8192)
def _irreducible_components(ideal: MonomialIdeal) -> Tuple[MonomialIdeal, ...]:
    split = _split_point(ideal)
    if split is None:
        return (ideal,)
    g, pure = split
    rest = g / pure
    left = ideal + MonomialIdeal(ideal.nvars, (pure,))
    right = ideal + MonomialIdeal(ideal.nvars, (rest,))
    components = _irreducible_components(left) + _irreducible_components(right)
    ensure_within_budget(len(components), "irreducible decomposition")
    return components


def irreducible_decomposition(ideal: MonomialIdeal) -> List[MonomialIdeal]:
    """Irredundant decomposition into ideals generated by pure powers."""
    _require_proper_nonzero(ideal)
    candidates = set(_irreducible_components(ideal))
    kept = [
        c
        for c in candidates
        if not any(other != c and other.is_subset(c) for other in candidates)
    ]
    kept.sort(key=lambda c: (_radical_prime(c).sort_key(), str(c)))
    logger.debug(f"{ideal} has {len(kept)} irreducible components")
    return kept


def _radical_prime(component: MonomialIdeal) -> MonomialPrime:
    return MonomialPrime(
        frozenset().union(*(g.support() for g in component.gens)), component.nvars
    )


def ass_primes(ideal: MonomialIdeal) -> List[MonomialPrime]:
    return _sorted_primes(
        _radical_prime(c) for c in irreducible_decomposition(ideal)
    )


def primary_components(
    ideal: MonomialIdeal,
) -> List[Tuple[MonomialPrime, MonomialIdeal]]:
    """Irreducible components grouped by radical and intersected per group."""
    grouped: Dict[MonomialPrime, MonomialIdeal] = {}
    for component in irreducible_decomposition(ideal):
        prime = _radical_prime(component)
        if prime in grouped:
            grouped[prime] = intersect(grouped[prime], component)
        else:
            grouped[prime] = component
    return [(p, grouped[p]) for p in _sorted_primes(grouped)]
