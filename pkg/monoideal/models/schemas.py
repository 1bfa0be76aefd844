"""
JSON wire formats for ideals, simplicial complexes and polarized ideals.
"""
import json
from typing import List, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from ..core.errors import InputFormatError
from ..core.ideal import MonomialIdeal
from ..core.monomial import Monomial
from ..decompositions.complex import SimplicialComplex
from ..polarization.polarized import PolarizedIdeal


class IdealModel(BaseModel):
    """{"nvars": 3, "gens": [[3,0,0],[1,2,0]]}"""

    nvars: int = Field(ge=0)
    gens: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _rows_match_ring(self) -> "IdealModel":
        for row in self.gens:
            if len(row) != self.nvars:
                raise ValueError(f"exponent row {row} has length {len(row)}")
            if any(e < 0 for e in row):
                raise ValueError(f"exponent row {row} has a negative entry")
        return self

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "IdealModel":
        return cls(nvars=ideal.nvars, gens=[list(g.exponents) for g in ideal.gens])

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(
            self.nvars, tuple(Monomial(tuple(row)) for row in self.gens)
        )


class ComplexModel(BaseModel):
    """{"nvars": n, "minimal_nonfaces": [[1],[3]]}, 1-based and sorted."""

    nvars: int = Field(ge=0)
    minimal_nonfaces: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _indices_in_range(self) -> "ComplexModel":
        for face in self.minimal_nonfaces:
            if any(not 1 <= i <= self.nvars for i in face):
                raise ValueError(f"face {face} leaves the vertex set 1..{self.nvars}")
        return self

    @classmethod
    def from_complex(cls, complex_: SimplicialComplex) -> "ComplexModel":
        return cls(
            nvars=complex_.nvars,
            minimal_nonfaces=[sorted(face) for face in complex_.minimal_nonfaces],
        )

    def to_complex(self) -> SimplicialComplex:
        return SimplicialComplex(
            self.nvars, tuple(frozenset(face) for face in self.minimal_nonfaces)
        )


class PolarizedModel(BaseModel):
    """{"extension": [3,2], "gens": [[[1,1],[1,2],[1,3]], ...]}"""

    extension: List[int]
    gens: List[List[Tuple[int, int]]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _slots_in_range(self) -> "PolarizedModel":
        n = len(self.extension)
        reached = [0] * n
        for gen in self.gens:
            for j, k in gen:
                if not 1 <= j <= n or not 1 <= k <= self.extension[j - 1]:
                    raise ValueError(f"slot variable [{j},{k}] outside the extension")
                reached[j - 1] = max(reached[j - 1], k)
        if reached != self.extension:
            raise ValueError(f"extension {self.extension} does not match {reached}")
        return self

    @classmethod
    def from_polarized(cls, polarized: PolarizedIdeal) -> "PolarizedModel":
        return cls(
            extension=list(polarized.extension),
            gens=[sorted(g) for g in polarized.gens],
        )

    def to_polarized(self) -> PolarizedIdeal:
        return PolarizedIdeal(
            len(self.extension), tuple(frozenset(g) for g in self.gens)
        )


WireValue = Union[MonomialIdeal, SimplicialComplex, PolarizedIdeal]


def read_value(text: str) -> WireValue:
    """Decode an ideal, complex or polarized ideal; the keys pick the format."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise InputFormatError(f"invalid JSON: {error.msg}") from error
    if not isinstance(data, dict):
        raise InputFormatError("expected a JSON object")
    try:
        if "extension" in data:
            return PolarizedModel.model_validate(data).to_polarized()
        if "minimal_nonfaces" in data:
            return ComplexModel.model_validate(data).to_complex()
        return IdealModel.model_validate(data).to_ideal()
    except ValidationError as error:
        detail = error.errors()[0]
        raise InputFormatError(f"invalid payload: {detail['msg']}") from error
