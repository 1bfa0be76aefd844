import pytest

from monoideal.cli.ast import (
    Assign,
    BinOp,
    Call,
    ExprStmt,
    IdealLit,
    Name,
    Power,
    RingStmt,
)
from monoideal.cli.parser import parse, tokenize
from monoideal.core.errors import ArityError, DslSyntaxError, UnknownNameError


def expression(text):
    (statement,) = parse(text).statements
    return statement.expr


def test_statement_kinds():
    program = parse("ring 3; I = <x1>; closure(I)")
    ring, assign, call = program.statements
    assert isinstance(ring, RingStmt) and ring.nvars == 3
    assert isinstance(assign, Assign) and assign.target == "I"
    assert isinstance(call, ExprStmt) and isinstance(call.expr, Call)


def test_product_binds_tighter_than_sum():
    node = expression("I + J * K")
    assert isinstance(node, BinOp) and node.op == "+"
    assert isinstance(node.right, BinOp) and node.right.op == "*"


def test_product_tier_is_left_associative():
    node = expression("I : J & K")
    assert node.op == "&"
    assert node.left.op == ":"


def test_power_binds_tightest():
    node = expression("I * J^2")
    assert isinstance(node.right, Power)
    assert node.right.exponent == 2
    assert isinstance(node.right.base, Name)


@pytest.mark.parametrize(
    "text",
    [
        "ring 3",
        "I = <x1^2, x1*x2>",
        "I + J * K",
        "(I + J) * K",
        "I * (J : K)",
        "I : J : K",
        "(I * J)^2",
        "closure(<x1^2, x2^2>)",
        'gen("lexsegment", 3)',
        "<1>",
        "<>",
        "ring 2; I = <x1>; symbolic(I, 2)",
    ],
)
def test_canonical_text_round_trips(text):
    assert parse(text).to_source() == text


def test_unclosed_ideal_reports_position():
    with pytest.raises(DslSyntaxError) as excinfo:
        parse("<x1")
    assert (excinfo.value.line, excinfo.value.column) == (1, 4)


def test_zero_variable_index_reports_position():
    with pytest.raises(DslSyntaxError) as excinfo:
        parse("ring 3;\n I = <x0>")
    assert (excinfo.value.line, excinfo.value.column) == (2, 7)
    assert "start at 1" in str(excinfo.value)


def test_stray_character():
    with pytest.raises(DslSyntaxError):
        list(tokenize("<x1> $ <x2>"))


def test_statements_need_separators():
    with pytest.raises(DslSyntaxError):
        parse("ring 2 <x1>")


def test_unknown_function():
    with pytest.raises(UnknownNameError) as excinfo:
        parse("ring 2; frobnicate(<x1>)")
    assert excinfo.value.expression == "frobnicate(<x1>)"


def test_wrong_arity():
    with pytest.raises(ArityError):
        parse("closure(<x1>, <x2>)")
    with pytest.raises(ArityError):
        parse("oracle(<x1>)")
    parse("is_borel_fixed(<x1>)")
    parse("is_borel_fixed(<x1>, 2)")


def test_comments_and_blank_statements():
    program = parse("# setup\nring 2;;\n<x1> # trailing\n")
    assert len(program.statements) == 2


def test_max_variable():
    assert parse("I = <x1*x4>; closure(<x2>)").max_variable() == 4
    assert parse("ring 2").max_variable() == 0


def test_ring_is_an_ordinary_name():
    program = parse("ring = <x1>; ring")
    assert isinstance(program.statements[0], Assign)
    assert isinstance(program.statements[1].expr, Name)


def test_repeated_variables_merge():
    node = expression("<x2*x1*x2^2>")
    assert isinstance(node, IdealLit)
    assert node.monos == (((1, 1), (2, 3)),)
    assert node.to_source() == "<x1*x2^3>"
