from functools import reduce

import pytest

from monoideal.core.errors import (
    AmbientMismatchError,
    PreconditionError,
    UnitIdealError,
    ZeroIdealError,
)
from monoideal.core.ideal import MonomialIdeal, intersect, radical_direct
from monoideal.decompositions.complex import (
    SimplicialComplex,
    alexander_dual,
    minimal_transversals,
    stanley_reisner,
)
from monoideal.decompositions.primes import (
    MonomialPrime,
    ass_primes,
    eliminating_complex,
    irreducible_decomposition,
    localization_kernel,
    min_primes,
    primary_components,
    radical_via_dual,
)


def prime(n, *members):
    return MonomialPrime(frozenset(members), n)


def test_eliminating_complex(identity_ideal):
    complex_ = eliminating_complex(identity_ideal)
    assert str(complex_) == "complex(n=3; nonfaces: {1}, {3})"
    assert complex_.facets() == (frozenset({2}),)
    assert complex_.is_face({2})
    assert complex_.is_nonface({1, 2})


def test_minimal_primes(identity_ideal):
    assert [str(p) for p in min_primes(identity_ideal)] == ["<x1>", "<x3>"]


def test_localization_kernels(identity_ideal):
    assert str(localization_kernel(identity_ideal, prime(3, 1))) == "<x1>"
    assert str(localization_kernel(identity_ideal, prime(3, 3))) == "<x3^2>"


def test_borel_type_kernel_away_from_first_variable(stable_ideal):
    assert localization_kernel(stable_ideal, prime(2, 2)).is_unit


def test_localization_kernel_checks_ambient(identity_ideal):
    with pytest.raises(AmbientMismatchError):
        localization_kernel(identity_ideal, prime(2, 1))


def test_alexander_dual_is_an_involution(identity_ideal):
    complex_ = eliminating_complex(identity_ideal)
    dual = alexander_dual(complex_)
    assert dual.minimal_nonfaces == (frozenset({1, 3}),)
    assert alexander_dual(dual) == complex_


def test_radical_routes_agree(identity_ideal, squarefree_six):
    for ideal in (identity_ideal, squarefree_six):
        assert radical_via_dual(ideal) == radical_direct(ideal)


def test_stanley_reisner_ideal():
    complex_ = SimplicialComplex(3, (frozenset({1, 2}), frozenset({3})))
    assert str(stanley_reisner(complex_)) == "<x1*x2, x3>"


def test_irreducible_decomposition(identity_ideal):
    components = irreducible_decomposition(identity_ideal)
    assert [str(c) for c in components] == ["<x1>", "<x3^2>", "<x1^2, x2>"]
    assert reduce(intersect, components) == identity_ideal


def test_associated_primes(identity_ideal, squarefree_six):
    assert [str(p) for p in ass_primes(identity_ideal)] == [
        "<x1>",
        "<x3>",
        "<x1, x2>",
    ]
    assert ass_primes(squarefree_six) == min_primes(squarefree_six)


def test_primary_components(identity_ideal):
    rendered = [(str(p), str(q)) for p, q in primary_components(identity_ideal)]
    assert rendered == [
        ("<x1>", "<x1>"),
        ("<x3>", "<x3^2>"),
        ("<x1, x2>", "<x1^2, x2>"),
    ]


def test_minimal_transversals():
    family = [frozenset({1, 2}), frozenset({2, 3})]
    assert minimal_transversals(family, 3) == (frozenset({2}), frozenset({1, 3}))
    assert minimal_transversals([], 3) == (frozenset(),)


def test_prime_operations_need_proper_nonzero_ideals():
    with pytest.raises(UnitIdealError):
        min_primes(MonomialIdeal.unit(2))
    with pytest.raises(ZeroIdealError):
        irreducible_decomposition(MonomialIdeal.zero(2))


def test_prime_from_ideal():
    assert MonomialPrime.from_ideal(MonomialIdeal.prime([1, 3], 3)) == prime(3, 1, 3)
    with pytest.raises(PreconditionError):
        MonomialPrime.from_ideal(MonomialIdeal.from_exponents([[2, 0]], 2))
