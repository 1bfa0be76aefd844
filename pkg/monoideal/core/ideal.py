"""
Monomial ideals in canonical form and the ideal operation table.

A MonomialIdeal always stores its minimal generators sorted descending in
pure-lex order, so two ideals are equal exactly when their dataclass fields
are equal.
"""
import logging
from dataclasses import dataclass
from random import Random
from typing import Iterable, Iterator, Optional, Tuple

from .budget import ensure_within_budget
from .errors import (
    AmbientMismatchError,
    PreconditionError,
    ZeroDivisorError,
    ZeroIdealError,
)
from .monomial import Monomial, check_indices, parse_exponents

logger = logging.getLogger(__name__)


def _canonical(raw: Iterable[Monomial], n: int) -> Tuple[Monomial, ...]:
    candidates = set(raw)
    ensure_within_budget(len(candidates), "minimalization")
    for u in candidates:
        if u.n != n:
            raise AmbientMismatchError(
                f"monomial {u} has {u.n} variables, ring has {n}"
            )
    kept = []
    for u in sorted(candidates, key=lambda m: (m.degree, m.exponents)):
        if not any(g.divides(u) for g in kept):
            kept.append(u)
    return tuple(sorted(kept, key=lambda m: m.exponents, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal of K[x1..xn] given by its minimal monomial generators."""

    nvars: int
    gens: Tuple[Monomial, ...] = ()

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError(f"negative variable count {self.nvars}")
        object.__setattr__(self, "gens", _canonical(self.gens, self.nvars))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.unit(n),))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        """m = <x1, ..., xn>."""
        return cls(n, tuple(Monomial.var(i, n) for i in range(1, n + 1)))

    @classmethod
    def prime(cls, indices: Iterable[int], n: int) -> "MonomialIdeal":
        """P_B = <x_i : i in B>."""
        return cls(n, tuple(Monomial.var(i, n) for i in check_indices(indices, n)))

    @classmethod
    def from_exponents(cls, rows: Iterable[Iterable[int]], n: int) -> "MonomialIdeal":
        return cls(n, parse_exponents([tuple(row) for row in rows], n))

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    @property
    def min_degree(self) -> int:
        return min((g.degree for g in self.gens), default=0)

    def contains(self, u: Monomial) -> bool:
        if u.n != self.nvars:
            raise AmbientMismatchError(
                f"monomial {u} has {u.n} variables, ring has {self.nvars}"
            )
        return any(g.divides(u) for g in self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return self.contains(u)

    def is_subset(self, other: "MonomialIdeal") -> bool:
        _check_ambient(self, other)
        return all(other.contains(g) for g in self.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.gens) + ">"


def _check_ambient(left: MonomialIdeal, right: MonomialIdeal) -> None:
    if left.nvars != right.nvars:
        raise AmbientMismatchError(
            f"ideals in {left.nvars} and {right.nvars} variables"
        )


def minimalize(raw: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Drop every monomial divisible by another one of the set."""
    return MonomialIdeal(n, tuple(raw))


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    return ideal.contains(u)


def ideal_sum(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(left, right)
    return MonomialIdeal(left.nvars, left.gens + right.gens)


def product(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(left, right)
    ensure_within_budget(len(left.gens) * len(right.gens), "product")
    return MonomialIdeal(
        left.nvars, tuple(u * v for u in left.gens for v in right.gens)
    )


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by repeated squaring, minimalizing after every product."""
    if k < 1:
        raise PreconditionError(f"ideal power needs k >= 1, got {k}")
    result: Optional[MonomialIdeal] = None
    base = ideal
    while k:
        if k & 1:
            result = base if result is None else product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    logger.debug(f"power produced {len(result.gens)} generators")
    return result


def intersect(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(left, right)
    ensure_within_budget(len(left.gens) * len(right.gens), "intersection")
    return MonomialIdeal(
        left.nvars, tuple(u.lcm(v) for u in left.gens for v in right.gens)
    )


def colon_monomial(ideal: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """I : v, generated by g / gcd(g, v)."""
    if v.n != ideal.nvars:
        raise AmbientMismatchError(
            f"monomial {v} has {v.n} variables, ring has {ideal.nvars}"
        )
    return MonomialIdeal(ideal.nvars, tuple(g.clipped_quotient(v) for g in ideal.gens))


def colon(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """I : J as the intersection of I : v over the generators v of J."""
    _check_ambient(ideal, divisor)
    if divisor.is_zero:
        raise ZeroDivisorError("colon by the zero ideal")
    result = colon_monomial(ideal, divisor.gens[0])
    for v in divisor.gens[1:]:
        result = intersect(result, colon_monomial(ideal, v))
    return result


def saturate(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """I : J^inf, iterating the colon until the chain stabilizes."""
    _check_ambient(ideal, divisor)
    if divisor.is_zero:
        raise ZeroDivisorError("saturation by the zero ideal")
    current = ideal
    while True:
        following = colon(current, divisor)
        if following == current:
            return current
        current = following


def radical_direct(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.nvars, tuple(g.radical() for g in ideal.gens))


def set_var_zero(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """The ideal I + <x_j>, written with generators avoiding x_j except x_j."""
    check_indices([j], ideal.nvars)
    x_j = Monomial.var(j, ideal.nvars)
    kept = tuple(g for g in ideal.gens if not x_j.divides(g))
    return MonomialIdeal(ideal.nvars, kept + (x_j,))


def delete_variable(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """Image of I under x_j -> 0, as an ideal of the ring without x_j."""
    check_indices([j], ideal.nvars)
    kept = []
    for g in ideal.gens:
        if g.exponents[j - 1]:
            continue
        kept.append(Monomial(g.exponents[: j - 1] + g.exponents[j:]))
    return MonomialIdeal(ideal.nvars - 1, tuple(kept))


def random_member(ideal: MonomialIdeal, rng: Random, spread: int = 2) -> Monomial:
    """A generator times a random monomial with exponents up to spread."""
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no monomials")
    g = rng.choice(ideal.gens)
    cofactor = Monomial(tuple(rng.randint(0, spread) for _ in range(ideal.nvars)))
    return g * cofactor
