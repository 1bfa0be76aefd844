"""
Abstract syntax of the expression language.

Every node renders back to source with ``to_source()``; rendering a parsed
canonical text gives the same text.
"""
from dataclasses import dataclass
from typing import Tuple

# Binary operators share one precedence tier, above "+".
PRODUCT_OPERATORS = ("*", "&", ":")


@dataclass(frozen=True)
class Node:
    line: int
    column: int

    def to_source(self) -> str:
        raise NotImplementedError

    def max_variable(self) -> int:
        return 0


@dataclass(frozen=True)
class IntLit(Node):
    value: int

    def to_source(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class StrLit(Node):
    value: str

    def to_source(self) -> str:
        return f'"{self.value}"'


@dataclass(frozen=True)
class Name(Node):
    ident: str

    def to_source(self) -> str:
        return self.ident


# A monomial literal is a tuple of (variable index, power); () is "1".
MonoLit = Tuple[Tuple[int, int], ...]


def _render_mono(mono: MonoLit) -> str:
    if not mono:
        return "1"
    return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in mono)


@dataclass(frozen=True)
class IdealLit(Node):
    monos: Tuple[MonoLit, ...]

    def to_source(self) -> str:
        return "<" + ", ".join(_render_mono(m) for m in self.monos) + ">"

    def max_variable(self) -> int:
        return max((i for m in self.monos for i, _ in m), default=0)


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node

    def to_source(self) -> str:
        left = self.left.to_source()
        right = self.right.to_source()
        if self.op == "+":
            if isinstance(self.right, BinOp) and self.right.op == "+":
                right = f"({right})"
            return f"{left} + {right}"
        if isinstance(self.left, BinOp) and self.left.op == "+":
            left = f"({left})"
        if isinstance(self.right, BinOp):
            right = f"({right})"
        return f"{left} {self.op} {right}"

    def max_variable(self) -> int:
        return max(self.left.max_variable(), self.right.max_variable())


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int

    def to_source(self) -> str:
        base = self.base.to_source()
        if isinstance(self.base, (BinOp, Power)):
            base = f"({base})"
        return f"{base}^{self.exponent}"

    def max_variable(self) -> int:
        return self.base.max_variable()


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: Tuple[Node, ...]

    def to_source(self) -> str:
        return f"{self.name}(" + ", ".join(a.to_source() for a in self.args) + ")"

    def max_variable(self) -> int:
        return max((a.max_variable() for a in self.args), default=0)


@dataclass(frozen=True)
class RingStmt(Node):
    nvars: int

    def to_source(self) -> str:
        return f"ring {self.nvars}"


@dataclass(frozen=True)
class Assign(Node):
    target: str
    expr: Node

    def to_source(self) -> str:
        return f"{self.target} = {self.expr.to_source()}"

    def max_variable(self) -> int:
        return self.expr.max_variable()


@dataclass(frozen=True)
class ExprStmt(Node):
    expr: Node

    def to_source(self) -> str:
        return self.expr.to_source()

    def max_variable(self) -> int:
        return self.expr.max_variable()


@dataclass(frozen=True)
class Program:
    statements: Tuple[Node, ...]

    def to_source(self) -> str:
        return "; ".join(s.to_source() for s in self.statements)

    def max_variable(self) -> int:
        return max((s.max_variable() for s in self.statements), default=0)
