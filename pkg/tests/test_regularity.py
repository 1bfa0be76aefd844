from monoideal.core.ideal import MonomialIdeal
from monoideal.core.regularity import verify_almost_regular_sequence


def test_strongly_stable_ideal_is_almost_regular(stable_ideal):
    report = verify_almost_regular_sequence(stable_ideal)
    assert report.regular
    assert [step.index for step in report.steps] == [2, 1]


def test_last_variable_generator_fails():
    report = verify_almost_regular_sequence(MonomialIdeal.from_exponents([[0, 1]], 2))
    assert not report.regular
    assert report.steps[0].index == 2
    assert not report.steps[0].passed
