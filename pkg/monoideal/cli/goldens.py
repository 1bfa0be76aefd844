"""
Worked examples run through the full script path by ``monoideal selftest``.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..core.errors import MonoidealError
from .render import render_text
from .session import Session, SessionConfig

logger = logging.getLogger(__name__)

IDENTITY = "<x1^2*x3^2, x1*x2*x3^2>"
LEX = "<x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3>"
STABLE = "<x1^3, x1^2*x2, x1*x2^2>"
SQUAREFREE = "<x1*x2*x3, x1*x4*x5, x2*x4*x6, x3*x5*x6>"
SUPER_STABLE = (
    "<x1^3, x1^2*x2*x3, x1^2*x2*x4, x1^2*x2*x5^3*x6^3, "
    "x1^2*x2*x5^3*x6^2*x7^2, x1^2*x2*x5^3*x6^2*x7*x8^2>"
)


@dataclass(frozen=True)
class Golden:
    name: str
    script: str
    expected: Tuple[str, ...]


GOLDENS = (
    Golden(
        "colon-not-borel-fixed",
        "ring 3; I = <x1^3, x1*x2^2>; I : <x2>; "
        "is_borel_fixed(I, 2); is_borel_fixed(I : <x2>, 2)",
        ("<x1^3, x1*x2>", "true", "false"),
    ),
    Golden(
        "product-not-lexsegment",
        f"ring 3; I = {LEX}; is_lexsegment(I); is_lexsegment(I^2); "
        "is_stably_lexsegment(I, 2)",
        ("true", "false", "false(2)"),
    ),
    Golden(
        "universal-not-stably-lex",
        "ring 3; is_universal_lexsegment(<x1, x2>); "
        "is_lexsegment(<x1^2, x1*x2, x2^2>); depth_ul(<x1, x2>); "
        "symbolic_eq(<x1, x2>, 2)",
        (
            "true",
            "false",
            "1",
            "equal=true ass_in_min=true ass_in_ass=true ass_power=[<x1, x2>]",
        ),
    ),
    Golden(
        "identity-example",
        f"ring 3; I = {IDENTITY}; symbolic(I, 2); minprimes(I); assprimes(I); "
        "irreducible(I); jlocal(I, <x1>); jlocal(I, <x3>); is_borel_type(I)",
        (
            "<x1^2*x3^4>",
            "[<x1>, <x3>]",
            "[<x1>, <x3>, <x1, x2>]",
            "[<x1>, <x3^2>, <x1^2, x2>]",
            "<x1>",
            "<x3^2>",
            "false",
        ),
    ),
    Golden(
        "strongly-stable-polarization",
        f"ring 2; I = {STABLE}; is_borel_type(I); almost_regular(I); polarize(I)",
        ("true", "true", "<x1_1*x1_2*x1_3, x1_1*x1_2*x2_1, x1_1*x2_1*x2_2>"),
    ),
    Golden(
        "closure-not-equal",
        f"ring 6; I = {SQUAREFREE}; u = <x1*x2*x3*x4*x5*x6>; closure(I); "
        "contains(I^2, u); is_integral(u, I^2); oracle(u, I^2, 4)",
        (SQUAREFREE, "false", "true", "member(2)"),
    ),
    Golden(
        "closure-of-powers",
        "ring 2; closure(<x1^2, x2^2>)",
        ("<x1^2, x1*x2, x2^2>",),
    ),
    Golden(
        "structure-and-depolarization",
        "ring 2; I = <x1^2, x1*x2^2>; analyze(I); depolarize(polarize(I))",
        (
            "a=(2, 2) W={1, 2} A={2} B={1} candidate=<x1^2, x1*x2^2> "
            "reconstructs=true polarization_sss=true",
            "found 1 of predicted 4: [<x1^2, x1*x2^2>]",
        ),
    ),
    Golden(
        "universal-lexsegment-polarization",
        f"ring 8; I = {SUPER_STABLE}; exponent_vector(I); "
        "is_sqfree_strongly_stable(polarize(I))",
        ("(3, 1, 1, 1, 3, 3, 2, 2)", "true"),
    ),
    Golden("unit-ideal", "ring 3; <1>; <>", ("<1>", "<>")),
)


@dataclass(frozen=True)
class GoldenResult:
    golden: Golden
    actual: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.actual == self.golden.expected


def run_golden(golden: Golden) -> GoldenResult:
    session = Session(SessionConfig())
    try:
        actual = tuple(render_text(value) for value in session.run(golden.script))
    except MonoidealError as error:
        logger.error(f"golden {golden.name} raised {error}")
        actual = (f"error[{error.code}]",)
    return GoldenResult(golden, actual)


def run_goldens() -> List[GoldenResult]:
    results = [run_golden(golden) for golden in GOLDENS]
    failed = [r.golden.name for r in results if not r.passed]
    logger.info(f"selftest: {len(results) - len(failed)} of {len(results)} passed")
    return results
