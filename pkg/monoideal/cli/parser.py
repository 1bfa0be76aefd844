"""
Tokenizer and recursive descent parser for ideal scripts.

GRAMMAR

program   := { stmt ";" }
stmt      := "ring" INT | IDENT "=" expr | expr
expr      := term { "+" term }
term      := factor { ("*" | "&" | ":") factor }
factor    := atom [ "^" INT ]
atom      := INT | STRING | IDENT | call | ideal_lit | "(" expr ")"
ideal_lit := "<" [ mono { "," mono } ] ">"
mono      := "1" | var { "*" var }
var       := "x" INT [ "^" INT ]
call      := NAME "(" [ expr { "," expr } ] ")"

Whitespace and newlines separate tokens; "#" starts a comment that runs to
the end of the line.
"""
import re
from typing import Dict, Iterator, List, NamedTuple

from ..core.errors import DslSyntaxError, MonoidealError
from .ast import (
    PRODUCT_OPERATORS,
    Assign,
    BinOp,
    Call,
    ExprStmt,
    IdealLit,
    IntLit,
    MonoLit,
    Name,
    Node,
    Power,
    Program,
    RingStmt,
    StrLit,
)
from .builtins import lookup

TOKEN_SPEC = [
    ("INT", r"\d+"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("STRING", r'"[^"\n]*"'),
    ("OP", r"[+*&:^()<>,=;]"),
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r]+|#[^\n]*"),
    ("MISMATCH", r"."),
]
TOKEN_RE = re.compile("|".join(f"(?P<{name}>{regex})" for name, regex in TOKEN_SPEC))
VARIABLE_RE = re.compile(r"x(\d+)$")


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int

    def __str__(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.text)


def tokenize(text: str) -> Iterator[Token]:
    line, line_start = 1, 0
    for match in TOKEN_RE.finditer(text):
        kind = match.lastgroup
        column = match.start() - line_start + 1
        if kind == "NEWLINE":
            line, line_start = line + 1, match.end()
        elif kind == "MISMATCH":
            message = f"unexpected character {match.group()!r}"
            raise DslSyntaxError(message, line, column)
        elif kind != "SKIP":
            yield Token(kind, match.group(), line, column)
    yield Token("EOF", "", line, len(text) - line_start + 1)


def syntax_error(tok: Token, message: str) -> DslSyntaxError:
    return DslSyntaxError(message, tok.line, tok.column)


class Parser:
    """Parses one script into a Program."""

    def __init__(self, text: str):
        self.tokens: List[Token] = list(tokenize(text))
        self.pos = 0

    # Token helpers

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ("OP", "INT", "IDENT") and tok.text == text

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if not self.at(text):
            raise syntax_error(tok, f"expected {text!r}, found {tok}")
        return self.advance()

    def expect_int(self) -> Token:
        tok = self.peek()
        if tok.kind != "INT":
            raise syntax_error(tok, f"expected an integer, found {tok}")
        return self.advance()

    # Grammar functions

    def program(self) -> Program:
        statements: List[Node] = []
        while self.peek().kind != "EOF":
            if self.at(";"):
                self.advance()
                continue
            statements.append(self.statement())
            if self.peek().kind != "EOF":
                self.expect(";")
        return Program(tuple(statements))

    def statement(self) -> Node:
        tok = self.peek()
        if tok.kind == "IDENT" and tok.text == "ring" and self.peek(1).kind == "INT":
            self.advance()
            return RingStmt(tok.line, tok.column, int(self.advance().text))
        if tok.kind == "IDENT" and self.peek(1).text == "=":
            self.advance()
            self.advance()
            return Assign(tok.line, tok.column, tok.text, self.expression())
        return ExprStmt(tok.line, tok.column, self.expression())

    def expression(self) -> Node:
        node = self.term()
        while self.at("+"):
            tok = self.advance()
            node = BinOp(tok.line, tok.column, "+", node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind == "OP" and self.peek().text in PRODUCT_OPERATORS:
            tok = self.advance()
            node = BinOp(tok.line, tok.column, tok.text, node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.at("^"):
            tok = self.advance()
            node = Power(tok.line, tok.column, node, int(self.expect_int().text))
        return node

    def atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return IntLit(tok.line, tok.column, int(tok.text))
        if tok.kind == "STRING":
            self.advance()
            return StrLit(tok.line, tok.column, tok.text[1:-1])
        if tok.kind == "IDENT":
            self.advance()
            if self.at("("):
                return self.call(tok)
            return Name(tok.line, tok.column, tok.text)
        if self.at("<"):
            return self.ideal_literal()
        if self.at("("):
            self.advance()
            node = self.expression()
            self.expect(")")
            return node
        raise syntax_error(tok, f"unexpected {tok}")

    def call(self, name: Token) -> Node:
        self.expect("(")
        args: List[Node] = []
        if not self.at(")"):
            args.append(self.expression())
            while self.at(","):
                self.advance()
                args.append(self.expression())
        self.expect(")")
        node = Call(name.line, name.column, name.text, tuple(args))
        try:
            lookup(name.text, len(args))
        except MonoidealError as error:
            error.expression = node.to_source()
            raise
        return node

    def ideal_literal(self) -> Node:
        start = self.expect("<")
        monos: List[MonoLit] = []
        if not self.at(">"):
            monos.append(self.monomial())
            while self.at(","):
                self.advance()
                monos.append(self.monomial())
        self.expect(">")
        return IdealLit(start.line, start.column, tuple(monos))

    def monomial(self) -> MonoLit:
        if self.at("1"):
            self.advance()
            return ()
        powers: Dict[int, int] = {}
        index, exponent = self.variable()
        powers[index] = powers.get(index, 0) + exponent
        while self.at("*"):
            self.advance()
            index, exponent = self.variable()
            powers[index] = powers.get(index, 0) + exponent
        return tuple(sorted(powers.items()))

    def variable(self):
        tok = self.peek()
        match = VARIABLE_RE.match(tok.text) if tok.kind == "IDENT" else None
        if match is None:
            raise syntax_error(tok, f"expected a variable, found {tok}")
        index = int(match.group(1))
        if index < 1:
            raise syntax_error(tok, "variable indices start at 1")
        self.advance()
        exponent = 1
        if self.at("^"):
            self.advance()
            exponent = int(self.expect_int().text)
        return index, exponent


def parse(text: str) -> Program:
    return Parser(text).program()
