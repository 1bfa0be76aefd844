import pytest

from monoideal.classes.predicates import is_squarefree_strongly_stable
from monoideal.core.errors import (
    UnitIdealError,
    UnsupportedShapeError,
    VariableIndexError,
    ZeroIdealError,
)
from monoideal.core.ideal import MonomialIdeal
from monoideal.polarization.polarized import (
    PolarizedIdeal,
    exponent_vector,
    order_preserving_check,
    polarize,
)
from monoideal.polarization.structure import (
    analyze_structure,
    build_from_structure,
    depolarize_enumerate,
    satisfies_super_stable_hypothesis,
    split_blocks,
)


def ideal(n, *rows):
    return MonomialIdeal.from_exponents(rows, n)


MIXED = ideal(2, [2, 0], [1, 2])


def test_polarization_of_strongly_stable_ideal(stable_ideal):
    polarized = polarize(stable_ideal)
    assert str(polarized) == "<x1_1*x1_2*x1_3, x1_1*x1_2*x2_1, x1_1*x2_1*x2_2>"
    assert not is_squarefree_strongly_stable(polarized)
    # x1_3 * (x1_1*x2_1*x2_2 / x2_2) is the missing exchange
    missing = frozenset({(1, 1), (1, 3), (2, 1)})
    assert not any(g <= missing for g in polarized.gens)


def test_polarization_of_universal_lexsegment_example():
    i = ideal(
        8,
        [3, 0, 0, 0, 0, 0, 0, 0],
        [2, 1, 1, 0, 0, 0, 0, 0],
        [2, 1, 0, 1, 0, 0, 0, 0],
        [2, 1, 0, 0, 3, 3, 0, 0],
        [2, 1, 0, 0, 3, 2, 2, 0],
        [2, 1, 0, 0, 3, 2, 1, 2],
    )
    polarized = polarize(i)
    assert exponent_vector(i) == (3, 1, 1, 1, 3, 3, 2, 2)
    assert polarized.extension == exponent_vector(i)
    assert is_squarefree_strongly_stable(polarized)


def test_extension_and_round_trip():
    i = ideal(2, [3, 0], [1, 2])
    polarized = polarize(i)
    assert polarized.extension == (3, 2)
    assert polarized.is_prefix_closed()
    assert polarized.depolarize() == i


def test_exponent_vector(identity_ideal):
    assert exponent_vector(identity_ideal) == (2, 1, 2)


def test_slot_variables_are_checked():
    with pytest.raises(VariableIndexError):
        PolarizedIdeal(2, (frozenset({(3, 1)}),))
    with pytest.raises(VariableIndexError):
        PolarizedIdeal(2, (frozenset({(1, 0)}),))


def test_order_preserved_on_generators(stable_ideal):
    report = order_preserving_check(stable_ideal, sample_size=0)
    assert report.preserved
    assert report.pairs_checked == 9


def test_order_check_with_samples_is_seeded(identity_ideal):
    first = order_preserving_check(identity_ideal, sample_size=10, seed=4)
    second = order_preserving_check(identity_ideal, sample_size=10, seed=4)
    assert first.pairs_checked == 4 + 10
    assert first == second


def test_split_blocks():
    assert split_blocks([1, 2, 3, 4], frozenset({2, 3})) == [
        (frozenset(), frozenset({1})),
        (frozenset({2, 3}), frozenset({4})),
    ]
    assert split_blocks([1, 2], frozenset({1, 2})) == [
        (frozenset({1, 2}), frozenset())
    ]


def test_build_from_structure():
    assert build_from_structure((2, 2), frozenset({2}), 2) == MIXED
    assert build_from_structure((2, 3), frozenset(), 2) == ideal(2, [2, 0], [1, 3])


def test_analyze_structure():
    report = analyze_structure(MIXED)
    assert report.exponent_vector == (2, 2)
    assert report.A == frozenset({2})
    assert report.B == frozenset({1})
    assert report.reconstructs
    assert report.polarization_sss
    assert report.consistent


def test_analyze_structure_preconditions():
    with pytest.raises(ZeroIdealError):
        analyze_structure(MonomialIdeal.zero(2))
    with pytest.raises(UnitIdealError):
        analyze_structure(MonomialIdeal.unit(2))
    with pytest.raises(UnsupportedShapeError):
        analyze_structure(ideal(2, [2, 0], [1, 1]))


def test_depolarization_enumerates_preimages():
    report = depolarize_enumerate(polarize(MIXED))
    assert report.ideals == [MIXED]
    assert report.candidates_checked == 4
    assert report.predicted == 4
    assert not report.matches_prediction


def test_depolarization_rejects_extension_one():
    with pytest.raises(UnsupportedShapeError):
        depolarize_enumerate(polarize(ideal(2, [2, 0], [1, 1])))


def test_super_stable_hypothesis():
    assert satisfies_super_stable_hypothesis(MIXED)
    assert not satisfies_super_stable_hypothesis(ideal(2, [2, 0], [0, 2]))
    assert not satisfies_super_stable_hypothesis(ideal(2, [0, 2]))
    assert not satisfies_super_stable_hypothesis(MonomialIdeal.unit(2))
