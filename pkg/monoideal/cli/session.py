"""
Evaluation of parsed scripts against a stateful session.
"""
import logging
from functools import singledispatchmethod
from typing import Any, Callable, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from ..classes.types import check_characteristic
from ..config.settings import settings
from ..core.errors import (
    AmbientMismatchError,
    DslTypeError,
    MonoidealError,
    UnboundNameError,
    VariableIndexError,
)
from ..core.ideal import MonomialIdeal, colon, ideal_sum, intersect, power, product
from ..core.monomial import Monomial
from ..decompositions.complex import SimplicialComplex
from ..decompositions.primes import MonomialPrime
from ..monitoring.analytics import OperationAnalytics
from ..polarization.polarized import PolarizedIdeal
from .ast import (
    Assign,
    BinOp,
    Call,
    ExprStmt,
    IdealLit,
    IntLit,
    Name,
    Node,
    Power,
    Program,
    RingStmt,
    StrLit,
)
from .builtins import lookup
from .parser import parse

logger = logging.getLogger(__name__)

IdealOperation = Callable[[MonomialIdeal, MonomialIdeal], MonomialIdeal]

BINARY_OPERATIONS: Dict[str, IdealOperation] = {
    "+": ideal_sum,
    "*": product,
    "&": intersect,
    ":": colon,
}

OPERATION_NAMES = {"+": "sum", "*": "product", "&": "intersect", ":": "colon"}

KIND_NAMES = {
    "I": "an ideal",
    "J": "a polarized ideal",
    "X": "an ideal or a polarized ideal",
    "C": "a simplicial complex",
    "N": "an integer",
    "S": "a string",
    "U": "a monomial <u>",
    "Q": "a monomial prime <x_i, ...>",
}


class SessionConfig(BaseModel):
    """Effective configuration of one session."""

    characteristic: int = Field(default=0, ge=0)
    kmax: int = Field(default=5, ge=1)
    max_terms: int = Field(default=1_000_000, ge=1)
    seed: int = 0
    output_format: Literal["text", "json"] = "text"

    @field_validator("characteristic")
    @classmethod
    def _zero_or_prime(cls, value: int) -> int:
        return check_characteristic(value)

    @classmethod
    def from_settings(cls) -> "SessionConfig":
        return cls(
            characteristic=settings.CHARACTERISTIC,
            kmax=settings.KMAX,
            max_terms=settings.MAX_TERMS,
            seed=settings.SEED,
            output_format=settings.OUTPUT_FORMAT,
        )


class Session:
    """Ring size, bindings and configuration shared by consecutive statements."""

    def __init__(
        self,
        config: Optional[SessionConfig] = None,
        analytics: Optional[OperationAnalytics] = None,
    ):
        self.config = config or SessionConfig.from_settings()
        self.analytics = analytics or OperationAnalytics()
        self.nvars: Optional[int] = None
        self.bindings: Dict[str, Any] = {}
        self._inferred_nvars = 0

    def run(self, text: str) -> List[Any]:
        """Parse and execute a script; returns the values of its expressions."""
        return self.execute(parse(text))

    def execute(self, program: Program) -> List[Any]:
        if self.nvars is None:
            self._inferred_nvars = program.max_variable()
        results = []
        for statement in program.statements:
            value = self.evaluate(statement)
            if isinstance(statement, ExprStmt):
                results.append(value)
        return results

    def ring_size(self) -> int:
        if self.nvars is None:
            self.nvars = self._inferred_nvars
            logger.debug(f"no ring declared, inferred {self.nvars} variables")
        return self.nvars

    def adopt_ring(self, nvars: int) -> None:
        """Take the ring size of a loaded value, or check it against ours."""
        if self.nvars is None:
            logger.debug(f"ring size {nvars} taken from loaded input")
            self.nvars = nvars
        elif self.nvars != nvars:
            raise AmbientMismatchError(
                f"loaded value has {nvars} variables, ring has {self.nvars}"
            )

    def evaluate(self, node: Node) -> Any:
        """Evaluate a node; errors get the offending sub-expression attached."""
        try:
            return self._evaluate(node)
        except MonoidealError as error:
            if error.expression is None:
                error.expression = node.to_source()
            raise

    @singledispatchmethod
    def _evaluate(self, node: Node) -> Any:
        raise DslTypeError(f"cannot evaluate {type(node).__name__}")

    @_evaluate.register
    def _(self, node: RingStmt) -> None:
        if self.nvars is not None and self.nvars != node.nvars and self.bindings:
            logger.debug(f"ring changed to {node.nvars}, dropping bindings")
            self.bindings.clear()
        self.nvars = node.nvars

    @_evaluate.register
    def _(self, node: Assign) -> None:
        self.bindings[node.target] = self.evaluate(node.expr)

    @_evaluate.register
    def _(self, node: ExprStmt) -> Any:
        return self.evaluate(node.expr)

    @_evaluate.register
    def _(self, node: IntLit) -> int:
        return node.value

    @_evaluate.register
    def _(self, node: StrLit) -> str:
        return node.value

    @_evaluate.register
    def _(self, node: Name) -> Any:
        if node.ident not in self.bindings:
            raise UnboundNameError(f"name {node.ident!r} is not bound")
        return self.bindings[node.ident]

    @_evaluate.register
    def _(self, node: IdealLit) -> MonomialIdeal:
        n = self.ring_size()
        gens = []
        for mono in node.monos:
            exponents = [0] * n
            for index, exponent in mono:
                if index > n:
                    raise VariableIndexError(
                        f"x{index} is outside the ring of {n} variables"
                    )
                exponents[index - 1] = exponent
            gens.append(Monomial(tuple(exponents)))
        return MonomialIdeal(n, tuple(gens))

    @_evaluate.register
    def _(self, node: BinOp) -> MonomialIdeal:
        left = self._coerce(self.evaluate(node.left), "I", node.op)
        right = self._coerce(self.evaluate(node.right), "I", node.op)
        operation = OPERATION_NAMES[node.op]
        with self.analytics.track(operation):
            result = BINARY_OPERATIONS[node.op](left, right)
        self.analytics.record_result(operation, result)
        return result

    @_evaluate.register
    def _(self, node: Power) -> MonomialIdeal:
        base = self._coerce(self.evaluate(node.base), "I", "^")
        with self.analytics.track("power"):
            result = power(base, node.exponent)
        self.analytics.record_result("power", result)
        return result

    @_evaluate.register
    def _(self, node: Call) -> Any:
        builtin = lookup(node.name, len(node.args))
        for arg, kind in zip(node.args, builtin.kinds):
            if kind == "U" and isinstance(arg, IdealLit) and len(arg.monos) != 1:
                raise DslTypeError(
                    f"{node.name} expects {KIND_NAMES['U']}, got {arg.to_source()}"
                )
        args = [
            self._coerce(self.evaluate(arg), kind, node.name)
            for arg, kind in zip(node.args, builtin.kinds)
        ]
        with self.analytics.track(node.name):
            result = builtin.handler(self, *args)
        self.analytics.record_result(node.name, result)
        return result

    def _coerce(self, value: Any, kind: str, where: str) -> Any:
        """Check a value against an argument kind and convert it."""
        accepted = {
            "I": isinstance(value, MonomialIdeal),
            "J": isinstance(value, PolarizedIdeal),
            "X": isinstance(value, (MonomialIdeal, PolarizedIdeal)),
            "C": isinstance(value, SimplicialComplex),
            "N": isinstance(value, int) and not isinstance(value, bool),
            "S": isinstance(value, str),
            "U": isinstance(value, MonomialIdeal) and len(value.gens) == 1,
            "Q": isinstance(value, MonomialIdeal),
        }[kind]
        if not accepted:
            raise DslTypeError(
                f"{where} expects {KIND_NAMES[kind]}, got {describe(value)}"
            )
        if kind == "U":
            return value.gens[0]
        if kind == "Q":
            return MonomialPrime.from_ideal(value)
        return value


def describe(value: Any) -> str:
    if isinstance(value, MonomialIdeal):
        return f"the ideal {value}"
    if isinstance(value, bool):
        return "a boolean"
    return type(value).__name__
