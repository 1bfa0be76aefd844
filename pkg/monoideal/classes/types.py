from enum import Enum
from typing import NewType

from sympy import isprime

from ..core.errors import InvalidCharacteristicError

Characteristic = NewType("Characteristic", int)


class IdealClass(str, Enum):
    """Ideal classes, from the weakest to the most restrictive."""

    BOREL_TYPE = "borel-type"
    BOREL_FIXED = "borel-fixed"
    STRONGLY_STABLE = "strongly-stable"
    LEXSEGMENT = "lexsegment"
    UNIVERSAL_LEXSEGMENT = "universal-lexsegment"
    SQUAREFREE_STRONGLY_STABLE = "squarefree-strongly-stable"
    STABLY_LEXSEGMENT = "stably-lexsegment"


def check_characteristic(value: int) -> Characteristic:
    if value != 0 and not (value > 0 and isprime(value)):
        raise InvalidCharacteristicError(
            f"characteristic must be 0 or a prime, got {value}"
        )
    return Characteristic(value)
