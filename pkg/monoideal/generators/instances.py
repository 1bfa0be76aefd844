"""
Seeded random instances for every ideal class.

Class membership comes from the construction (closure under the defining
moves, or a structural shape), not from rejection, except for the stably
lexsegment class in three or more variables. All randomness flows from one
random.Random(seed).
"""
import logging
from itertools import islice
from random import Random
from typing import Callable, Dict, Iterable, List, Optional, Set

from ..classes.predicates import binomial_nonzero_mod, is_stably_lexsegment
from ..classes.types import IdealClass, check_characteristic
from ..config.settings import settings
from ..core.budget import ensure_within_budget
from ..core.errors import PreconditionError
from ..core.ideal import MonomialIdeal, intersect, power, product
from ..core.monomial import Monomial, monomials_of_degree
from ..decompositions.primes import MonomialPrime, min_primes

logger = logging.getLogger(__name__)


STABLY_LEX_ATTEMPTS = 20


def random_monomial(n: int, max_deg: int, rng: Random) -> Monomial:
    exponents = [0] * n
    for _ in range(rng.randint(1, max_deg)):
        exponents[rng.randrange(n)] += 1
    return Monomial(tuple(exponents))


def _closure(
    seeds: Iterable[Monomial], moves: Callable[[Monomial], Iterable[Monomial]]
) -> Set[Monomial]:
    seen = set(seeds)
    frontier = list(seen)
    while frontier:
        u = frontier.pop()
        for v in moves(u):
            if v not in seen:
                seen.add(v)
                frontier.append(v)
        ensure_within_budget(len(seen), "exchange closure")
    return seen


def _shift(u: Monomial, i: int, j: int, s: int = 1) -> Monomial:
    exponents = list(u.exponents)
    exponents[j - 1] -= s
    exponents[i - 1] += s
    return Monomial(tuple(exponents))


def borel_closure(seeds: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the seeds."""

    def moves(u: Monomial):
        return (_shift(u, i, j) for j in u.support() for i in range(1, j))

    return MonomialIdeal(n, tuple(_closure(seeds, moves)))


def _digit_closure(seeds: Iterable[Monomial], n: int, p: int) -> MonomialIdeal:
    def moves(u: Monomial):
        for j in u.support():
            t = u.exponents[j - 1]
            for s in range(1, t + 1):
                if binomial_nonzero_mod(t, s, p):
                    for i in range(1, j):
                        yield _shift(u, i, j, s)

    return MonomialIdeal(n, tuple(_closure(seeds, moves)))


def _squarefree_closure(seeds: Iterable[Monomial], n: int) -> MonomialIdeal:
    def moves(u: Monomial):
        support = u.support()
        for i in support:
            for j in range(1, i):
                if j not in support:
                    yield _shift(u, j, i)

    return MonomialIdeal(n, tuple(_closure(seeds, moves)))


def _universal_lexsegment(n: int, max_deg: int, max_gens: int, rng: Random):
    m = rng.randint(1, min(n, max_gens))
    a = [rng.randint(1, max_deg) for _ in range(m)]
    gens = []
    for i in range(1, m + 1):
        exponents = [a[j - 1] - 1 for j in range(1, i)] + [a[i - 1]]
        gens.append(Monomial(tuple(exponents) + (0,) * (n - i)))
    return MonomialIdeal(n, tuple(gens))


def _lexsegment(n: int, max_deg: int, max_gens: int, rng: Random):
    degrees = sorted({rng.randint(1, max_deg) for _ in range(rng.randint(1, 2))})
    gens: List[Monomial] = []
    for d in degrees:
        length = rng.randint(1, max_gens)
        gens.extend(islice(monomials_of_degree(n, d), length))
    return MonomialIdeal(n, tuple(gens))


def _strongly_stable(n: int, max_deg: int, max_gens: int, rng: Random):
    seeds = [random_monomial(n, max_deg, rng) for _ in range(rng.randint(1, max_gens))]
    return borel_closure(seeds, n)


def _borel_type(n: int, max_deg: int, max_gens: int, rng: Random):
    stable = _strongly_stable(n, max_deg, max_gens, rng)
    r = rng.randint(1, n)
    segment = MonomialIdeal(
        n, tuple(Monomial.var(i, n, rng.randint(1, max_deg)) for i in range(1, r + 1))
    )
    combine = rng.choice([MonomialIdeal.__add__, product, intersect])
    return combine(stable, segment)


def _stably_lexsegment(n: int, max_deg: int, max_gens: int, rng: Random):
    if n <= 2:
        return _lexsegment(n, max_deg, max_gens, rng)
    for _ in range(STABLY_LEX_ATTEMPTS):
        candidate = _lexsegment(n, max_deg, max_gens, rng)
        if is_stably_lexsegment(candidate, settings.KMAX).holds:
            return candidate
    logger.debug("no stably lexsegment sample found, using a power of m")
    return power(MonomialIdeal.maximal(n), rng.randint(1, max_deg))


def _squarefree_strongly_stable(n: int, max_deg: int, max_gens: int, rng: Random):
    seeds = []
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, min(n, max_deg))
        seeds.append(Monomial.from_support(rng.sample(range(1, n + 1), size), n))
    return _squarefree_closure(seeds, n)


_BUILDERS: Dict[IdealClass, Callable] = {
    IdealClass.UNIVERSAL_LEXSEGMENT: _universal_lexsegment,
    IdealClass.LEXSEGMENT: _lexsegment,
    IdealClass.STRONGLY_STABLE: _strongly_stable,
    IdealClass.BOREL_TYPE: _borel_type,
    IdealClass.STABLY_LEXSEGMENT: _stably_lexsegment,
    IdealClass.SQUAREFREE_STRONGLY_STABLE: _squarefree_strongly_stable,
}


def _check_parameters(n: int, max_deg: int, max_gens: int) -> None:
    for name, value in (("n", n), ("max_deg", max_deg), ("max_gens", max_gens)):
        if value < 1:
            raise PreconditionError(f"{name} must be positive, got {value}")


def gen_ideal(
    ideal_class: IdealClass,
    n: int,
    max_deg: int,
    max_gens: int,
    seed: int,
    characteristic: Optional[int] = None,
) -> MonomialIdeal:
    """A random ideal of the given class; equal arguments give equal ideals."""
    _check_parameters(n, max_deg, max_gens)
    ideal_class = IdealClass(ideal_class)
    rng = Random(seed)
    if ideal_class is IdealClass.BOREL_FIXED:
        p = check_characteristic(
            settings.CHARACTERISTIC if characteristic is None else characteristic
        )
        seeds = [
            random_monomial(n, max_deg, rng) for _ in range(rng.randint(1, max_gens))
        ]
        if p == 0:
            return borel_closure(seeds, n)
        return _digit_closure(seeds, n, p)
    return _BUILDERS[ideal_class](n, max_deg, max_gens, rng)


def random_ideal(n: int, max_deg: int, max_gens: int, seed: int) -> MonomialIdeal:
    _check_parameters(n, max_deg, max_gens)
    rng = Random(seed)
    count = rng.randint(1, max_gens)
    gens = tuple(random_monomial(n, max_deg, rng) for _ in range(count))
    return MonomialIdeal(n, gens)


def random_prime(n: int, rng: Random) -> MonomialPrime:
    size = rng.randint(1, n)
    return MonomialPrime(frozenset(rng.sample(range(1, n + 1), size)), n)


def containing_prime(ideal: MonomialIdeal, rng: Random) -> MonomialPrime:
    """A random monomial prime containing I: a minimal prime plus extra variables."""
    if ideal.is_zero:
        return random_prime(ideal.nvars, rng)
    if ideal.is_unit:
        raise PreconditionError("no prime contains the unit ideal")
    base = rng.choice(min_primes(ideal))
    extra = {i for i in range(1, ideal.nvars + 1) if rng.random() < 0.3}
    return MonomialPrime(base.vars | extra, ideal.nvars)
