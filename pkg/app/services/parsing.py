"""
Parser for the polynomial input language

Grammar: terms joined by ``+``/``-``; a term is a product (``*``) of
integer or ``a/b`` literals and variables with optional ``^`` exponents.
Whitespace is insignificant.
"""

import re
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional, Tuple

from app.models.ring import PolyRing, Polynomial
from app.utils.exceptions import CharacteristicError, ParseError, UnknownVariableError

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/−]))")


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            offset = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character '{text[offset]}'", offset)
        kind = match.lastgroup
        value = match.group(kind)
        if value == "−":
            value = "-"
        tokens.append(Token(kind, value, match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.index = 0
        self.domain = ring.field.domain

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.take()
        if token.kind != kind:
            raise ParseError(f"expected {kind}, got '{token.text}'", token.position)
        return token

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty polynomial", 0)
        result = self.ring.zero
        sign = 1
        first = True
        while True:
            token = self.peek()
            if token is not None and token.kind == "op" and token.text in "+-":
                self.take()
                sign = -sign if token.text == "-" else sign
                nxt = self.peek()
                if nxt is not None and nxt.kind == "op" and nxt.text in "+-":
                    raise ParseError("repeated sign", nxt.position)
            elif not first:
                if token is None:
                    break
                raise ParseError(f"expected '+' or '-', got '{token.text}'", token.position)
            result += self.term(sign)
            first = False
            sign = 1
            if self.peek() is None:
                break
        return result

    def term(self, sign: int) -> Polynomial:
        coefficient = Fraction(sign)
        exponents = [0] * self.ring.ngens
        while True:
            token = self.take()
            if token.kind == "number":
                coefficient *= self.literal(token)
            elif token.kind == "name":
                if token.text not in self.ring.variables:
                    raise UnknownVariableError(f"unknown variable {token.text}", token.position)
                power = 1
                nxt = self.peek()
                if nxt is not None and nxt.kind == "op" and nxt.text == "^":
                    self.take()
                    power = int(self.expect("number").text)
                exponents[self.ring.index(token.text)] += power
            else:
                raise ParseError(f"unexpected '{token.text}'", token.position)
            nxt = self.peek()
            if nxt is None or not (nxt.kind == "op" and nxt.text == "*"):
                break
            self.take()
        return self.ring.monomial(exponents, self.coerce(coefficient, token.position))

    def literal(self, token: Token) -> Fraction:
        numerator = int(token.text)
        nxt = self.peek()
        if nxt is None or not (nxt.kind == "op" and nxt.text == "/"):
            return Fraction(numerator)
        self.take()
        denominator_token = self.expect("number")
        denominator = int(denominator_token.text)
        if denominator == 0:
            raise ParseError("division by zero", denominator_token.position)
        p = self.ring.field.characteristic
        if p and denominator % p == 0:
            raise CharacteristicError(
                f"literal {numerator}/{denominator} is undefined in characteristic {p}", token.position
            )
        return Fraction(numerator, denominator)

    def coerce(self, value: Fraction, position: int):
        domain = self.domain
        if self.ring.field.characteristic and value.denominator % self.ring.field.characteristic == 0:
            raise CharacteristicError(f"coefficient {value} is undefined in characteristic "
                                      f"{self.ring.field.characteristic}", position)
        return domain.convert(value.numerator) / domain.convert(value.denominator)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse text into a normalized polynomial of ring"""
    return _Parser(text, ring).parse()


def split_list(text: str, offset: int = 0) -> Iterator[Tuple[str, int]]:
    """Split a comma-separated list, yielding (piece, absolute offset)"""
    start = 0
    for match in re.finditer(",", text):
        yield text[start:match.start()], offset + start
        start = match.end()
    yield text[start:], offset + start


def parse_generators(text: str, ring: PolyRing, offset: int = 0, source: Optional[str] = None) -> List[Polynomial]:
    """Parse ``g1, ..., gk``; errors are reported relative to source when given"""
    if text.strip() == "":
        return []
    polys = []
    for piece, start in split_list(text, offset):
        try:
            polys.append(parse_polynomial(piece, ring))
        except ParseError as exc:
            if source is None:
                raise exc.relocate(start - offset, text) from None
            raise exc.relocate(start, source) from None
    return polys
