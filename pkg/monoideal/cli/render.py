"""
Text and JSON renderings of session values.
"""
from functools import singledispatch
from typing import Any

from ..classes.predicates import StablyLexsegmentVerdict
from ..closure.integral import ClosureVerdict
from ..core.ideal import MonomialIdeal
from ..core.monomial import Ordering, VarSet
from ..core.regularity import AlmostRegularReport
from ..decompositions.complex import SimplicialComplex
from ..decompositions.primes import MonomialPrime
from ..models.schemas import ComplexModel, IdealModel, PolarizedModel
from ..polarization.polarized import OrderPreservationReport, PolarizedIdeal
from ..polarization.structure import DepolarizationReport, StructureReport
from ..symbolic.powers import SymbolicCertificate
from ..utils.helpers import dump_json


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _set(members: VarSet) -> str:
    return "{" + ", ".join(str(i) for i in sorted(members)) + "}"


@singledispatch
def render_text(value: Any) -> str:
    return str(value)


@render_text.register
def _(value: bool) -> str:
    return _flag(value)


@render_text.register
def _(value: Ordering) -> str:
    return value.name.lower()


@render_text.register
def _(value: tuple) -> str:
    return "(" + ", ".join(render_text(v) for v in value) + ")"


@render_text.register
def _(value: list) -> str:
    return "[" + ", ".join(render_text(v) for v in value) + "]"


@render_text.register
def _(value: AlmostRegularReport) -> str:
    failed = [step.index for step in value.steps if not step.passed]
    if not failed:
        return "true"
    return "false(" + ", ".join(f"x{i}" for i in failed) + ")"


@render_text.register
def _(value: SymbolicCertificate) -> str:
    return (
        f"equal={_flag(value.equal)} ass_in_min={_flag(value.ass_in_min)} "
        f"ass_in_ass={_flag(value.ass_in_ass)} "
        f"ass_power={render_text(value.ass_power)}"
    )


@render_text.register
def _(value: OrderPreservationReport) -> str:
    if value.preserved:
        return f"preserved({value.pairs_checked})"
    return f"violated({len(value.violations)} of {value.pairs_checked})"


@render_text.register
def _(value: StructureReport) -> str:
    return (
        f"a={render_text(value.exponent_vector)} W={_set(value.W)} "
        f"A={_set(value.A)} B={_set(value.B)} candidate={value.candidate} "
        f"reconstructs={_flag(value.reconstructs)} "
        f"polarization_sss={_flag(value.polarization_sss)}"
    )


@render_text.register
def _(value: DepolarizationReport) -> str:
    return (
        f"found {len(value.ideals)} of predicted {value.predicted}: "
        f"{render_text(value.ideals)}"
    )


@singledispatch
def to_data(value: Any) -> Any:
    """JSON-ready form of a value."""
    return value


@to_data.register
def _(value: Ordering) -> Any:
    return value.name.lower()


@to_data.register
def _(value: tuple) -> Any:
    return [to_data(v) for v in value]


@to_data.register
def _(value: list) -> Any:
    return [to_data(v) for v in value]


@to_data.register
def _(value: MonomialIdeal) -> Any:
    return IdealModel.from_ideal(value).model_dump()


@to_data.register
def _(value: PolarizedIdeal) -> Any:
    return PolarizedModel.from_polarized(value).model_dump(mode="json")


@to_data.register
def _(value: SimplicialComplex) -> Any:
    return ComplexModel.from_complex(value).model_dump()


@to_data.register
def _(value: MonomialPrime) -> Any:
    return sorted(value.vars)


@to_data.register
def _(value: StablyLexsegmentVerdict) -> Any:
    return {
        "holds": value.holds,
        "failing_power": value.failing_power,
        "bound": value.bound,
    }


@to_data.register
def _(value: ClosureVerdict) -> Any:
    return {"member": value.member, "k": value.k, "bound": value.bound}


@to_data.register
def _(value: AlmostRegularReport) -> Any:
    return {
        "regular": value.regular,
        "steps": [
            {
                "index": step.index,
                "colon": to_data(step.colon),
                "saturation": to_data(step.saturation),
                "passed": step.passed,
            }
            for step in value.steps
        ],
    }


@to_data.register
def _(value: SymbolicCertificate) -> Any:
    return {
        "equal": value.equal,
        "ass_in_min": value.ass_in_min,
        "ass_in_ass": value.ass_in_ass,
        "ass_power": to_data(value.ass_power),
        "min_primes": to_data(value.min_primes),
        "ass_primes": to_data(value.ass_primes),
    }


@to_data.register
def _(value: OrderPreservationReport) -> Any:
    return {
        "preserved": value.preserved,
        "pairs_checked": value.pairs_checked,
        "violations": [
            [list(u.exponents), list(v.exponents)] for u, v in value.violations
        ],
    }


@to_data.register
def _(value: StructureReport) -> Any:
    return {
        "exponent_vector": list(value.exponent_vector),
        "W": sorted(value.W),
        "A": sorted(value.A),
        "B": sorted(value.B),
        "blocks": [[sorted(a), sorted(b)] for a, b in value.blocks],
        "candidate": to_data(value.candidate),
        "reconstructs": value.reconstructs,
        "polarization_sss": value.polarization_sss,
    }


@to_data.register
def _(value: DepolarizationReport) -> Any:
    return {
        "ideals": to_data(value.ideals),
        "candidates_checked": value.candidates_checked,
        "predicted": value.predicted,
    }


def render(value: Any, output_format: str = "text") -> str:
    if output_format == "json":
        return dump_json(to_data(value))
    return render_text(value)
