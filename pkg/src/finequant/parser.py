"""Recursive-descent reader for superfunctions and symbols.

Grammar (whitespace-insensitive)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' nat]
    atom   := nat ['/' nat] | 'x' | 'z' | ('t' | 'g' | 'e') nat | '(' expr ')'

The optional leading sign lets printed values with a negative first term
read back unchanged.  Error offsets are byte offsets into the UTF-8 source.
"""

import re
from fractions import Fraction

from .errors import ParseError
from .fsym import CANONICAL, CONTACT, FSym
from .superring import SuperPoly

SUPERFUNCTION = "superfunction"
CONTACT_SYMBOL = "contact-symbol"
CANONICAL_SYMBOL = "canonical-symbol"
KINDS = (SUPERFUNCTION, CONTACT_SYMBOL, CANONICAL_SYMBOL)

_TOKEN = re.compile(r"(?:(?P<nat>\d+)|(?P<gen>[tge])(?P<idx>\d+)|(?P<var>[xz])|(?P<op>[-+*/^()]))")
_ALLOWED = {
    SUPERFUNCTION: set("xt"),
    CONTACT_SYMBOL: set("xtzg"),
    CANONICAL_SYMBOL: set("xtze"),
}


class _Reader:
    def __init__(self, src, n, kind):
        self.src = src
        self.n = n
        self.kind = kind
        self.tokens = self._tokenize()
        self.pos = 0

    def _offset(self, char_index):
        return len(self.src[:char_index].encode("utf-8"))

    def fail(self, message, char_index):
        raise ParseError(message, self._offset(char_index))

    def _tokenize(self):
        out = []
        i = 0
        src = self.src
        while True:
            while i < len(src) and src[i].isspace():
                i += 1
            if i == len(src):
                break
            m = _TOKEN.match(src, i)
            if not m:
                self.fail(f"unexpected character {src[i]!r}", i)
            start = i
            if m.group("nat") is not None:
                out.append(("nat", int(m.group("nat")), start))
            elif m.group("gen") is not None:
                out.append(("gen", (m.group("gen"), int(m.group("idx"))), start))
            elif m.group("var") is not None:
                out.append(("var", m.group("var"), start))
            else:
                out.append(("op", m.group("op"), start))
            i = m.end()
        out.append(("end", None, len(src)))
        return out

    # -- token helpers ------------------------------------------------------
    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at_op(self, *ops):
        kind, value, _ = self.peek()
        return kind == "op" and value in ops

    def expect_op(self, op):
        kind, value, where = self.take()
        if kind != "op" or value != op:
            self.fail(f"expected {op!r}", where)

    # -- values -------------------------------------------------------------
    def const(self, value):
        if self.kind == SUPERFUNCTION:
            return SuperPoly.const(self.n, value)
        flavor = CONTACT if self.kind == CONTACT_SYMBOL else CANONICAL
        return FSym(self.n, {((0, 0), 0): value}, 0, flavor) if value else FSym(self.n, {}, 0, flavor)

    def generator(self, letter, index, where):
        if letter not in _ALLOWED[self.kind]:
            self.fail(f"generator {letter!r} is not allowed in a {self.kind}", where)
        if letter in "tge" and not 1 <= index <= self.n:
            self.fail(f"index {index} outside 1..{self.n}", where)
        if self.kind == SUPERFUNCTION:
            if letter == "x":
                return SuperPoly.x(self.n)
            return SuperPoly.theta(self.n, index)
        flavor = CONTACT if self.kind == CONTACT_SYMBOL else CANONICAL
        if letter == "x":
            return FSym.monomial(self.n, xexp=1, flavor=flavor)
        if letter == "z":
            return FSym.monomial(self.n, zexp=1, flavor=flavor)
        if letter == "t":
            return FSym.monomial(self.n, thetas=(index,), flavor=flavor)
        return FSym.monomial(self.n, moments=(index,), flavor=flavor)

    # -- grammar ------------------------------------------------------------
    def expr(self):
        negate = False
        if self.at_op("+", "-"):
            negate = self.take()[1] == "-"
        value = self.term()
        if negate:
            value = -value
        while self.at_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.at_op("*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        kind, _, where = self.peek()
        value, odd = self.atom()
        if self.at_op("^"):
            self.take()
            ekind, exponent, ewhere = self.take()
            if ekind != "nat":
                self.fail("exponent must be a nonnegative integer literal", ewhere)
            if odd and exponent >= 2:
                self.fail("square of an odd generator", where)
            value = value ** exponent
        return value

    def atom(self):
        kind, value, where = self.take()
        if kind == "nat":
            num = value
            if self.at_op("/"):
                self.take()
                dkind, den, dwhere = self.take()
                if dkind != "nat":
                    self.fail("expected a denominator", dwhere)
                if den == 0:
                    self.fail("zero denominator", dwhere)
                return self.const(Fraction(num, den)), False
            return self.const(num), False
        if kind == "var":
            return self.generator(value, 0, where), False
        if kind == "gen":
            letter, index = value
            return self.generator(letter, index, where), True
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner, False
        if kind == "end":
            self.fail("unexpected end of input", where)
        self.fail(f"unexpected {value!r}", where)

    def parse(self):
        value = self.expr()
        kind, value_, where = self.peek()
        if kind != "end":
            self.fail(f"unexpected {value_!r}", where)
        return value


def parse(src, n, kind=SUPERFUNCTION, delta=0):
    """Read ``src`` into a :class:`SuperPoly` or a :class:`FSym` of weight ``delta``."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if isinstance(src, bytes):
        try:
            src = src.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not valid UTF-8", exc.start) from None
    value = _Reader(src, n, kind).parse()
    if kind != SUPERFUNCTION and delta:
        value = value.with_delta(delta)
    return value
