"""Surface syntax for external-number arithmetic.

Grammar (whitespace insignificant, "^" binds tightest):

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := ("-")* atom ("^" int)?
    atom   := int | "x" | "O(" ("1" | "x" ("^" int)?) ")" | "all"
            | "e(" expr ")" | "u(" expr ")" | "inv(" expr ")" | "(" expr ")"

"/" is always coset division; rational constants are written as fractions
of integer literals (3/4), which evaluate to the same precise element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .external import EN_ONE, ExternalNumber, magnitude_coset, precise
from .magnitude import MAG_ALL, Magnitude, ox
from .ratfun import Q, X

__all__ = [
    "EvalError",
    "Expr",
    "parse",
    "evaluate",
    "evaluate_text",
    "PARSE_ERROR",
    "DIVISION_BY_MAGNITUDE",
    "UNITY_OF_MAGNITUDE",
    "ZERO_DENOMINATOR",
]

PARSE_ERROR = "ParseError"
DIVISION_BY_MAGNITUDE = "DivisionByMagnitude"
UNITY_OF_MAGNITUDE = "UnityOfMagnitude"
ZERO_DENOMINATOR = "ZeroDenominator"


class EvalError(Exception):
    """Parse or evaluation failure, with the character span it points at."""

    def __init__(self, kind: str, span: tuple[int, int], message: str):
        super().__init__(f"{kind} at {span[0]}..{span[1]}: {message}")
        self.kind = kind
        self.span = span
        self.message = message


# -- abstract syntax ---------------------------------------------------------


@dataclass(frozen=True)
class IntLit:
    value: int
    span: tuple[int, int]


@dataclass(frozen=True)
class VarX:
    span: tuple[int, int]


@dataclass(frozen=True)
class LastValue:
    span: tuple[int, int]


@dataclass(frozen=True)
class MagLit:
    mag: Magnitude
    span: tuple[int, int]


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    span: tuple[int, int]


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class MagnitudeOf:
    operand: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class UnityOf:
    operand: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class InverseOf:
    operand: "Expr"
    span: tuple[int, int]


Expr = (
    IntLit
    | VarX
    | LastValue
    | MagLit
    | Neg
    | Pow
    | Add
    | Sub
    | Mul
    | Div
    | MagnitudeOf
    | UnityOf
    | InverseOf
)


# -- lexer ----------------------------------------------------------------------


_SYMBOLS = "+-*/^()"


def _tokenize(text: str):
    """Yield (kind, value, start, end); kinds: int, name, one of the symbols."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "0123456789":
            j = i
            while j < n and text[j] in "0123456789":
                j += 1
            tokens.append(("int", int(text[i:j]), i, j))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i, j))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i, i + 1))
            i += 1
            continue
        raise EvalError(PARSE_ERROR, (i, i + 1), f"unexpected character {ch!r}")
    tokens.append(("eof", None, n, n))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_last: bool):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allow_last = allow_last

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        if tok[0] != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise EvalError(PARSE_ERROR, (tok[2], tok[3]), f"expected {kind!r}")
        return self.next()

    def fail(self, message):
        tok = self.peek()
        raise EvalError(PARSE_ERROR, (tok[2], tok[3]), message)

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            self.fail("unexpected trailing input")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()
            rhs = self.term()
            cls = Add if op[0] == "+" else Sub
            node = cls(node, rhs, (node.span[0], rhs.span[1]))
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.next()
            rhs = self.factor()
            cls = Mul if op[0] == "*" else Div
            node = cls(node, rhs, (node.span[0], rhs.span[1]))
        return node

    def factor(self) -> Expr:
        signs = []
        while self.peek()[0] == "-":
            signs.append(self.next())
        node = self.atom()
        if self.peek()[0] == "^":
            self.next()
            k = self.signed_int()
            node = Pow(node, k[0], (node.span[0], k[1]))
        for s in reversed(signs):
            node = Neg(node, (s[2], node.span[1]))
        return node

    def signed_int(self) -> tuple[int, int]:
        """Integer with optional minus sign; returns (value, end offset)."""
        neg = False
        if self.peek()[0] == "-":
            self.next()
            neg = True
        tok = self.expect("int")
        return (-tok[1] if neg else tok[1], tok[3])

    def atom(self) -> Expr:
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.next()
            return IntLit(tok[1], (tok[2], tok[3]))
        if kind == "(":
            self.next()
            node = self.expr()
            close = self.expect(")")
            return _respan(node, (tok[2], close[3]))
        if kind == "name":
            return self.name_atom()
        self.fail("expected a value")

    def name_atom(self) -> Expr:
        tok = self.next()
        name = tok[1]
        if name == "x":
            return VarX((tok[2], tok[3]))
        if name == "all":
            return MagLit(MAG_ALL, (tok[2], tok[3]))
        if name == "_":
            if not self.allow_last:
                raise EvalError(PARSE_ERROR, (tok[2], tok[3]), "unknown name '_'")
            return LastValue((tok[2], tok[3]))
        if name == "O":
            return self.magnitude_atom(tok)
        if name in ("e", "u", "inv"):
            self.expect("(")
            node = self.expr()
            close = self.expect(")")
            span = (tok[2], close[3])
            wrapper = {"e": MagnitudeOf, "u": UnityOf, "inv": InverseOf}[name]
            return wrapper(node, span)
        raise EvalError(PARSE_ERROR, (tok[2], tok[3]), f"unknown name {name!r}")

    def magnitude_atom(self, otok) -> MagLit:
        """O(1), O(x) or O(x^k)."""
        self.expect("(")
        tok = self.peek()
        if tok[0] == "int" and tok[1] == 1:
            self.next()
            n = 0
        elif tok[0] == "name" and tok[1] == "x":
            self.next()
            n = 1
            if self.peek()[0] == "^":
                self.next()
                n = self.signed_int()[0]
        else:
            self.fail("expected 1 or x inside O(...)")
        close = self.expect(")")
        return MagLit(ox(n), (otok[2], close[3]))


def _respan(node: Expr, span: tuple[int, int]) -> Expr:
    cls = type(node)
    fields = {f: getattr(node, f) for f in node.__dataclass_fields__}
    fields["span"] = span
    return cls(**fields)


def parse(text: str, allow_last: bool = False) -> Expr:
    """Parse to an AST or raise EvalError(ParseError) with a span."""
    return _Parser(text, allow_last).parse()


# -- evaluator ------------------------------------------------------------------


def _require_invertible(value: ExternalNumber, span, context: str):
    if value.is_magnitude:
        kind = ZERO_DENOMINATOR if value.mag.is_zero else DIVISION_BY_MAGNITUDE
        raise EvalError(kind, span, f"{context} by the magnitude {value}")


def evaluate(node: Expr, last: ExternalNumber | None = None) -> ExternalNumber:
    """Evaluate an AST to an external number; raises EvalError for guarded ops."""
    if isinstance(node, IntLit):
        return precise(Q(node.value))
    if isinstance(node, VarX):
        return precise(X)
    if isinstance(node, LastValue):
        if last is None:
            raise EvalError(PARSE_ERROR, node.span, "no previous value for '_'")
        return last
    if isinstance(node, MagLit):
        return magnitude_coset(node.mag)
    if isinstance(node, Neg):
        return -evaluate(node.operand, last)
    if isinstance(node, Add):
        return evaluate(node.left, last) + evaluate(node.right, last)
    if isinstance(node, Sub):
        return evaluate(node.left, last) - evaluate(node.right, last)
    if isinstance(node, Mul):
        return evaluate(node.left, last) * evaluate(node.right, last)
    if isinstance(node, Div):
        lhs = evaluate(node.left, last)
        rhs = evaluate(node.right, last)
        _require_invertible(rhs, node.right.span, "division")
        return lhs * rhs.inverse()
    if isinstance(node, Pow):
        base = evaluate(node.base, last)
        if node.exponent < 0:
            _require_invertible(base, node.span, "negative power")
            return base.inverse() ** (-node.exponent)
        if node.exponent == 0:
            return EN_ONE
        return base ** node.exponent
    if isinstance(node, MagnitudeOf):
        return magnitude_coset(evaluate(node.operand, last).mag)
    if isinstance(node, UnityOf):
        value = evaluate(node.operand, last)
        if value.is_magnitude:
            raise EvalError(UNITY_OF_MAGNITUDE, node.span, f"unity of the magnitude {value}")
        return value.unity()
    if isinstance(node, InverseOf):
        value = evaluate(node.operand, last)
        _require_invertible(value, node.span, "inverse")
        return value.inverse()
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(text: str, last: ExternalNumber | None = None) -> ExternalNumber:
    """parse + evaluate in one step."""
    return evaluate(parse(text, allow_last=last is not None), last)
