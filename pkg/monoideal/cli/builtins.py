"""
Builtin function table shared by the parser (names, arity) and the session
(argument kinds, dispatch).

Argument kinds:
    I  monomial ideal          U  monomial, written as a principal ideal <u>
    J  polarized ideal         Q  monomial prime, written as <x1, x3>
    X  ideal or polarized      C  simplicial complex
    N  integer                 S  string
"""
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, Dict, Tuple

from ..classes import predicates
from ..closure.integral import closure_oracle, integral_closure, is_integral_over
from ..core.errors import (
    ArityError,
    InputFormatError,
    PreconditionError,
    UnknownNameError,
)
from ..core.ideal import MonomialIdeal, colon, intersect, radical_direct, saturate
from ..core.monomial import (
    Monomial,
    MonomialOrder,
    b_degree,
    compare,
    lattice_ops,
    restrict,
)
from ..core.regularity import verify_almost_regular_sequence
from ..decompositions.complex import alexander_dual, stanley_reisner
from ..decompositions.primes import (
    ass_primes,
    eliminating_complex,
    irreducible_decomposition,
    localization_kernel,
    min_primes,
    radical_via_dual,
)
from ..generators.instances import gen_ideal
from ..models.schemas import read_value
from ..polarization.polarized import exponent_vector, order_preserving_check, polarize
from ..polarization.structure import analyze_structure, depolarize_enumerate
from ..symbolic.powers import (
    symbolic_equals_ordinary,
    symbolic_power,
    symbolic_power_by_powers,
    symbolic_power_squarefree,
)

if TYPE_CHECKING:
    from .session import Session

GEN_MAX_DEG = 4
GEN_MAX_GENS = 4


@dataclass(frozen=True)
class Builtin:
    name: str
    kinds: str
    handler: Callable[..., Any]
    optional: int = 0

    @property
    def min_args(self) -> int:
        return len(self.kinds) - self.optional

    @property
    def max_args(self) -> int:
        return len(self.kinds)

    def check_arity(self, count: int) -> None:
        if not self.min_args <= count <= self.max_args:
            expected = (
                str(self.max_args)
                if self.optional == 0
                else f"{self.min_args} to {self.max_args}"
            )
            raise ArityError(f"{self.name} takes {expected} arguments, got {count}")


def _gen(session: "Session", name, seed=None, max_deg=None, max_gens=None):
    n = session.ring_size()
    if n < 1:
        raise PreconditionError("gen needs a ring of at least one variable")
    return gen_ideal(
        name,
        n,
        GEN_MAX_DEG if max_deg is None else max_deg,
        GEN_MAX_GENS if max_gens is None else max_gens,
        session.config.seed if seed is None else seed,
        session.config.characteristic,
    )


def _is_borel_fixed(session: "Session", ideal, characteristic=None):
    p = session.config.characteristic if characteristic is None else characteristic
    return predicates.is_borel_fixed(ideal, p)


def _is_stably_lexsegment(session: "Session", ideal, k_max=None):
    bound = session.config.kmax if k_max is None else k_max
    return predicates.is_stably_lexsegment(ideal, bound)


def _oracle(session: "Session", u, ideal, k_max=None):
    return closure_oracle(u, ideal, k_max)


def _order_check(session: "Session", ideal, sample_size=None):
    return order_preserving_check(ideal, sample_size, session.config.seed)


def _compare(session: "Session", u, v, order=None):
    try:
        chosen = MonomialOrder(order or MonomialOrder.PURE_LEX)
    except ValueError:
        raise PreconditionError(f"unknown monomial order {order!r}") from None
    return compare(u, v, chosen)


def _principal(u: Monomial) -> MonomialIdeal:
    return MonomialIdeal(u.n, (u,))


def _lattice(session: "Session", u, v):
    result = lattice_ops(u, v)
    return _principal(result.gcd), _principal(result.lcm), result.u_divides_v


def _load(session: "Session", path):
    """Read a JSON ideal, complex or polarized ideal into the session ring."""
    try:
        text = Path(path).read_text()
    except OSError as error:
        raise InputFormatError(f"cannot read {path}: {error.strerror}") from error
    value = read_value(text)
    session.adopt_ring(value.nvars)
    return value


def _pure(func: Callable[..., Any]) -> Callable[..., Any]:
    """Adapt a library function that does not need the session."""
    return lambda session, *args: func(*args)


_TABLE = (
    Builtin("closure", "I", _pure(integral_closure)),
    Builtin("radical", "I", _pure(radical_direct)),
    Builtin("saturate", "II", _pure(saturate)),
    Builtin("symbolic", "IN", _pure(symbolic_power)),
    Builtin("minprimes", "I", _pure(min_primes)),
    Builtin("assprimes", "I", _pure(ass_primes)),
    Builtin("jlocal", "IQ", _pure(localization_kernel)),
    Builtin("polarize", "I", _pure(polarize)),
    Builtin("depolarize", "J", _pure(depolarize_enumerate)),
    Builtin("analyze", "I", _pure(analyze_structure)),
    Builtin("gen", "SNNN", _gen, optional=3),
    Builtin("is_borel_type", "I", _pure(predicates.is_borel_type)),
    Builtin("is_borel_fixed", "IN", _is_borel_fixed, optional=1),
    Builtin("is_strongly_stable", "I", _pure(predicates.is_strongly_stable)),
    Builtin("is_lexsegment", "I", _pure(predicates.is_lexsegment)),
    Builtin(
        "is_universal_lexsegment",
        "I",
        _pure(lambda ideal: predicates.is_universal_lexsegment(ideal)[0]),
    ),
    Builtin(
        "is_sqfree_strongly_stable",
        "X",
        _pure(predicates.is_squarefree_strongly_stable),
    ),
    Builtin("is_stably_lexsegment", "IN", _is_stably_lexsegment, optional=1),
    Builtin("almost_regular", "I", _pure(verify_almost_regular_sequence)),
    Builtin("depth_ul", "I", _pure(predicates.depth_universal_lex)),
    Builtin("contains", "IU", _pure(lambda ideal, u: ideal.contains(u))),
    Builtin("is_integral", "UI", _pure(is_integral_over)),
    Builtin("oracle", "UIN", _oracle, optional=1),
    Builtin("exponent_vector", "I", _pure(exponent_vector)),
    Builtin("complex", "I", _pure(eliminating_complex)),
    Builtin("dual", "C", _pure(alexander_dual)),
    Builtin("stanley_reisner", "C", _pure(stanley_reisner)),
    Builtin("radical_dual", "I", _pure(radical_via_dual)),
    Builtin("irreducible", "I", _pure(irreducible_decomposition)),
    Builtin("symbolic_sqfree", "IN", _pure(symbolic_power_squarefree)),
    Builtin("symbolic_eq", "IN", _pure(symbolic_equals_ordinary)),
    Builtin("order_check", "IN", _order_check, optional=1),
    Builtin("intersect", "II", _pure(intersect)),
    Builtin("colon", "II", _pure(colon)),
    Builtin("is_borel_type_primes", "I", _pure(predicates.is_borel_type_by_primes)),
    Builtin("symbolic_by_powers", "IN", _pure(symbolic_power_by_powers)),
    Builtin("compare", "UUS", _compare, optional=1),
    Builtin("restrict", "UQ", _pure(lambda u, p: _principal(restrict(u, p.vars)))),
    Builtin("b_degree", "UQ", _pure(lambda u, p: b_degree(u, p.vars))),
    Builtin("lattice", "UU", _lattice),
    Builtin("load", "S", _load),
)

BUILTINS: Dict[str, Builtin] = {b.name: b for b in _TABLE}


def lookup(name: str, argc: int) -> Builtin:
    """Resolve a call site; raises UnknownNameError or ArityError."""
    builtin = BUILTINS.get(name)
    if builtin is None:
        raise UnknownNameError(f"unknown function {name!r}")
    builtin.check_arity(argc)
    return builtin


def names() -> Tuple[str, ...]:
    return tuple(sorted(BUILTINS))
