import pytest

from monoideal.core.errors import NonSquarefreeError, PreconditionError
from monoideal.core.ideal import MonomialIdeal, power
from monoideal.symbolic.powers import (
    symbolic_equals_ordinary,
    symbolic_power,
    symbolic_power_by_powers,
    symbolic_power_squarefree,
)

TRIANGLE = MonomialIdeal.from_exponents([[1, 1, 0], [0, 1, 1], [1, 0, 1]], 3)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_symbolic_powers_of_identity_example(identity_ideal, k):
    expected = MonomialIdeal.from_exponents([[k, 0, 2 * k]], 3)
    assert symbolic_power(identity_ideal, k) == expected
    assert symbolic_power_by_powers(identity_ideal, k) == expected


def test_squarefree_route_agrees():
    assert symbolic_power_squarefree(TRIANGLE, 2) == symbolic_power(TRIANGLE, 2)
    assert symbolic_power(TRIANGLE, 2).contains(
        MonomialIdeal.from_exponents([[1, 1, 1]], 3).gens[0]
    )


def test_squarefree_route_rejects_other_ideals(identity_ideal):
    with pytest.raises(NonSquarefreeError):
        symbolic_power_squarefree(identity_ideal, 2)


def test_power_must_be_positive(identity_ideal):
    with pytest.raises(PreconditionError):
        symbolic_power(identity_ideal, 0)


def test_certificate_for_complete_intersection():
    certificate = symbolic_equals_ordinary(MonomialIdeal.prime([1, 2], 3), 2)
    assert certificate.equal
    assert certificate.ass_in_min
    assert [str(p) for p in certificate.ass_power] == ["<x1, x2>"]


def test_certificate_with_embedded_primes(identity_ideal):
    certificate = symbolic_equals_ordinary(identity_ideal, 2)
    assert not certificate.equal
    assert not certificate.ass_in_min
    assert certificate.ass_in_ass


def test_certificate_for_triangle():
    certificate = symbolic_equals_ordinary(TRIANGLE, 2)
    assert not certificate.equal
    assert not certificate.ass_in_min
    assert symbolic_power(TRIANGLE, 2) != power(TRIANGLE, 2)
