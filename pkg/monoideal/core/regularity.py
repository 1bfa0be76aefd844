import logging
from dataclasses import dataclass, field
from typing import List

from .ideal import (
    MonomialIdeal,
    colon_monomial,
    delete_variable,
    saturate,
    set_var_zero,
)
from .monomial import Monomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlmostRegularStep:
    """One step x_i of the check, performed in K[x1..xi]."""

    index: int
    ideal: MonomialIdeal
    colon: MonomialIdeal
    saturation: MonomialIdeal
    passed: bool


@dataclass
class AlmostRegularReport:
    steps: List[AlmostRegularStep] = field(default_factory=list)

    @property
    def regular(self) -> bool:
        return all(step.passed for step in self.steps)


def verify_almost_regular_sequence(ideal: MonomialIdeal) -> AlmostRegularReport:
    """Check that xn, ..., x1 is an almost regular sequence on S/I.

    x_i is almost regular on S/I_i when (I_i : x_i) / I_i has finite length,
    i.e. I_i : x_i lies in the saturation I_i : m^inf.
    """
    report = AlmostRegularReport()
    current = ideal
    for i in range(ideal.nvars, 0, -1):
        quotient = colon_monomial(current, Monomial.var(i, i))
        saturation = saturate(current, MonomialIdeal.maximal(i))
        passed = quotient.is_subset(saturation)
        report.steps.append(AlmostRegularStep(i, current, quotient, saturation, passed))
        if not passed:
            logger.debug(f"x{i} is not almost regular modulo {current}")
        current = delete_variable(set_var_zero(current, i), i)
    return report
