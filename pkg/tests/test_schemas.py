import pytest
from pydantic import ValidationError

from monoideal.core.errors import InputFormatError
from monoideal.core.ideal import MonomialIdeal
from monoideal.decompositions.complex import SimplicialComplex
from monoideal.models.schemas import (
    ComplexModel,
    IdealModel,
    PolarizedModel,
    read_value,
)
from monoideal.polarization.polarized import polarize


def test_ideal_model_dump(stable_ideal):
    model = IdealModel.from_ideal(stable_ideal)
    assert model.model_dump() == {"nvars": 2, "gens": [[3, 0], [2, 1], [1, 2]]}
    assert model.to_ideal() == stable_ideal


def test_ideal_model_from_json():
    model = IdealModel.model_validate_json('{"nvars": 2, "gens": [[1, 1], [2, 0]]}')
    assert str(model.to_ideal()) == "<x1^2, x1*x2>"


@pytest.mark.parametrize(
    "payload",
    [
        {"nvars": 2, "gens": [[1, 0, 0]]},
        {"nvars": 2, "gens": [[-1, 0]]},
        {"nvars": -1, "gens": []},
    ],
)
def test_ideal_model_rejects_bad_rows(payload):
    with pytest.raises(ValidationError):
        IdealModel.model_validate(payload)


def test_complex_model(identity_ideal):
    complex_ = SimplicialComplex(3, (frozenset({3}), frozenset({1})))
    model = ComplexModel.from_complex(complex_)
    assert model.minimal_nonfaces == [[1], [3]]
    assert model.to_complex() == complex_
    with pytest.raises(ValidationError):
        ComplexModel(nvars=2, minimal_nonfaces=[[3]])


def test_polarized_model(stable_ideal):
    polarized = polarize(stable_ideal)
    model = PolarizedModel.from_polarized(polarized)
    assert model.extension == [3, 2]
    assert model.gens[0] == [(1, 1), (1, 2), (1, 3)]
    assert model.to_polarized() == polarized
    with pytest.raises(ValidationError):
        PolarizedModel(extension=[1], gens=[[(1, 2)]])


def test_zero_ideal_model():
    assert IdealModel.from_ideal(MonomialIdeal.zero(3)).gens == []


def test_polarized_model_checks_extension():
    with pytest.raises(ValidationError):
        PolarizedModel(extension=[3], gens=[[(1, 1), (1, 2)]])


def test_read_value_picks_the_format(stable_ideal):
    ideal_json = '{"nvars": 2, "gens": [[1, 2], [2, 1], [3, 0]]}'
    assert read_value(ideal_json) == stable_ideal
    complex_ = read_value('{"nvars": 3, "minimal_nonfaces": [[1], [3]]}')
    assert complex_ == SimplicialComplex(3, (frozenset({1}), frozenset({3})))
    polarized = read_value(
        PolarizedModel.from_polarized(polarize(stable_ideal)).model_dump_json()
    )
    assert polarized == polarize(stable_ideal)


@pytest.mark.parametrize("text", ["not json", "[1, 2]", '{"nvars": 1, "gens": [[-2]]}'])
def test_read_value_rejects_bad_input(text):
    with pytest.raises(InputFormatError):
        read_value(text)
