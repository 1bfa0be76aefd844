"""
Exact monomial arithmetic over a fixed number of variables.

Variables are 1-based in every public signature (x1..xn) and 0-based in the
stored exponent tuple.
"""
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Callable, FrozenSet, Iterable, NamedTuple, Sequence, Tuple

from .errors import AmbientMismatchError, ResourceLimitError, VariableIndexError

VarSet = FrozenSet[int]

EXPONENT_LIMIT = 2**31


class MonomialOrder(str, Enum):
    """Monomial orders with x1 > x2 > ... > xn."""

    PURE_LEX = "pure-lex"
    GRADED_LEX = "graded-lex"


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def check_indices(indices: Iterable[int], n: int) -> VarSet:
    """Validate 1-based variable indices against the ambient size."""
    members = frozenset(indices)
    for i in members:
        if not 1 <= i <= n:
            raise VariableIndexError(f"variable index {i} outside 1..{n}")
    return members


@dataclass(frozen=True)
class Monomial:
    """A monomial x^a stored as its exponent vector."""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(e) for e in self.exponents)
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e >= EXPONENT_LIMIT:
                raise ResourceLimitError(f"exponent {e} overflows the exponent width")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> "Monomial":
        """The monomial x_i^power in n variables."""
        check_indices([i], n)
        exponents = [0] * n
        exponents[i - 1] = power
        return cls(tuple(exponents))

    @classmethod
    def from_support(cls, indices: Iterable[int], n: int) -> "Monomial":
        """The squarefree monomial x_B."""
        members = check_indices(indices, n)
        return cls(tuple(1 if i + 1 in members else 0 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def exponent(self, i: int) -> int:
        check_indices([i], self.n)
        return self.exponents[i - 1]

    def support(self) -> VarSet:
        """A(u): indices of the variables dividing u."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    def max_support(self) -> int:
        """m(u): the largest index in the support, 0 for the unit."""
        for i in range(self.n, 0, -1):
            if self.exponents[i - 1]:
                return i
        return 0

    def radical(self) -> "Monomial":
        return Monomial(tuple(1 if e else 0 for e in self.exponents))

    def restrict(self, indices: Iterable[int]) -> "Monomial":
        """u(A): keep the exponents indexed by A, zero the rest."""
        members = check_indices(indices, self.n)
        return Monomial(
            tuple(e if i + 1 in members else 0 for i, e in enumerate(self.exponents))
        )

    def b_degree(self, indices: Iterable[int]) -> int:
        members = check_indices(indices, self.n)
        return sum(self.exponents[i - 1] for i in members)

    def divides(self, other: "Monomial") -> bool:
        _check_ambient(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def clipped_quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other), i.e. exponent subtraction clipped at 0."""
        _check_ambient(self, other)
        return Monomial(
            tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents))
        )

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(tuple(e * k for e in self.exponents))

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        return "*".join(factors) if factors else "1"


class LatticeResult(NamedTuple):
    gcd: Monomial
    lcm: Monomial
    u_divides_v: bool


def _check_ambient(u: Monomial, v: Monomial) -> None:
    if u.n != v.n:
        raise AmbientMismatchError(f"monomials in {u.n} and {v.n} variables")


def sort_key(order: MonomialOrder) -> Callable[[Monomial], Tuple]:
    """Python sort key realising the given monomial order (ascending)."""
    if order is MonomialOrder.GRADED_LEX:
        return lambda u: (u.degree, u.exponents)
    return lambda u: u.exponents


def compare(
    u: Monomial, v: Monomial, order: MonomialOrder = MonomialOrder.PURE_LEX
) -> Ordering:
    """Total-order comparison of two monomials in the same ring."""
    _check_ambient(u, v)
    key = sort_key(order)
    left, right = key(u), key(v)
    if left == right:
        return Ordering.EQUAL
    return Ordering.GREATER if left > right else Ordering.LESS


def restrict(u: Monomial, indices: Iterable[int]) -> Monomial:
    return u.restrict(indices)


def b_degree(u: Monomial, indices: Iterable[int]) -> int:
    return u.b_degree(indices)


def lattice_ops(u: Monomial, v: Monomial) -> LatticeResult:
    """gcd, lcm and divisibility of two monomials."""
    return LatticeResult(u.gcd(v), u.lcm(v), u.divides(v))


def monomials_of_degree(n: int, d: int) -> Iterable[Monomial]:
    """All degree-d monomials in n variables, descending in lex order."""

    def fill(position: int, remaining: int) -> Iterable[Tuple[int, ...]]:
        if position == n - 1:
            yield (remaining,)
            return
        for e in range(remaining, -1, -1):
            for rest in fill(position + 1, remaining - e):
                yield (e,) + rest

    if n == 0:
        if d == 0:
            yield Monomial(())
        return
    for exponents in fill(0, d):
        yield Monomial(exponents)


def parse_exponents(rows: Sequence[Sequence[int]], n: int) -> Tuple[Monomial, ...]:
    """Build monomials from exponent rows, checking the row length."""
    monomials = []
    for row in rows:
        if len(row) != n:
            raise AmbientMismatchError(
                f"exponent row {list(row)} has length {len(row)}, expected {n}"
            )
        monomials.append(Monomial(tuple(row)))
    return tuple(monomials)
