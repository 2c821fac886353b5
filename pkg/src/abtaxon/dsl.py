"""Text syntax for group expressions.

Grammar (whitespace is insignificant)::

    expr  := "0" | term ("+" term)*
    term  := atom ("^" mult)?
    atom  := "Z" | "Q"
           | "Z(" nat ")" | "Z(" nat "^" nat ")" | "Z(" nat "^inf)"
           | "B(" nat ")"
           | "TF(" nat (";" nat ("," nat)*)? ")"
    mult  := nat | "w" | "w" nat          w = aleph_0, w k = aleph_k

``⊕`` is accepted for ``+`` and ``∞`` for ``inf``.  :func:`render` emits the
canonical ASCII form, and ``parse_group_expr(render(g)) == g``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    ONE,
    Cyclic,
    FreeZ,
    GroupExpr,
    Prufer,
    Rational,
    TorsionFreeFR,
    UnboundedDSC,
    ValidationError,
    aleph,
    factorization_hint,
    finite,
    is_prime,
    normalize,
)

ALIASES = {"⊕": "+", "∞": "inf"}
PUNCT = set("()+^;,")


class ParseError(ValueError):
    def __init__(self, line: int, column: int, expected: str, found: str, hint: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        self.hint = hint
        super().__init__(self._message())

    @property
    def position(self):
        return (self.line, self.column)

    def _message(self) -> str:
        msg = f"line {self.line}, column {self.column}: expected {self.expected}, found {self.found}"
        return f"{msg} ({self.hint})" if self.hint else msg


class DSLValidationError(ParseError, ValidationError):
    """Well-formed syntax naming an invalid group (non-prime base, zero rank...)."""


@dataclass(frozen=True)
class Token:
    kind: str  # "nat", "word", "punct", "end"
    text: str
    offset: int

    def describe(self) -> str:
        return "end of input" if self.kind == "end" else repr(self.text)


def _line_col(text: str, offset: int):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def tokenize(text: str):
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in ALIASES:
            alias = ALIASES[c]
            yield Token("punct" if alias in PUNCT else "word", alias, i)
            i += 1
        elif c in PUNCT:
            yield Token("punct", c, i)
            i += 1
        elif "0" <= c <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            yield Token("nat", text[i:j], i)
            i = j
        elif c.isascii() and c.isalpha():
            j = i
            while j < n and text[j].isascii() and text[j].isalpha():
                j += 1
            yield Token("word", text[i:j], i)
            i = j
        else:
            line, col = _line_col(text, i)
            raise ParseError(line, col, "a term", f"unexpected character {c!r}")
    yield Token("end", "", n)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(tokenize(text))
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, expected: str, tok: Token = None, hint: str = "") -> ParseError:
        tok = tok or self.tok
        line, col = _line_col(self.text, tok.offset)
        return ParseError(line, col, expected, tok.describe(), hint)

    def invalid(self, tok: Token, expected: str, hint: str = "") -> DSLValidationError:
        line, col = _line_col(self.text, tok.offset)
        return DSLValidationError(line, col, expected, tok.describe(), hint)

    def accept(self, text: str) -> bool:
        if self.tok.kind != "nat" and self.tok.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.tok
        if not self.accept(text):
            raise self.error(repr(text))
        return tok

    def nat(self, what: str = "a natural number"):
        tok = self.tok
        if tok.kind != "nat":
            raise self.error(what)
        self.pos += 1
        return int(tok.text), tok

    def prime(self):
        value, tok = self.nat("a prime")
        if not is_prime(value):
            raise self.invalid(tok, "a prime", factorization_hint(value))
        return value

    def positive(self, what: str):
        value, tok = self.nat(what)
        if value < 1:
            raise self.invalid(tok, what)
        return value

    def parse(self) -> GroupExpr:
        if self.tok.kind == "nat" and self.tok.text == "0" and self.tokens[self.pos + 1].kind == "end":
            return GroupExpr.zero()
        raw = [self.term()]
        while self.accept("+"):
            raw.append(self.term())
        if self.tok.kind != "end":
            raise self.error("'+' or end of input")
        try:
            return normalize(raw)
        except ValidationError as exc:  # should be caught per-token above
            raise self.invalid(self.tokens[0], "a valid group", str(exc)) from exc

    def term(self):
        atom = self.atom()
        mult = ONE
        if self.accept("^"):
            mult = self.mult()
        return atom, mult

    def mult(self):
        tok = self.tok
        if self.accept("w"):
            if self.tok.kind == "nat":
                k, _ = self.nat()
                return aleph(k)
            return aleph(0)
        if tok.kind == "nat":
            return finite(self.positive("a multiplicity >= 1"))
        raise self.error("a multiplicity (natural >= 1, 'w' or 'w<k>')")

    def atom(self):
        tok = self.tok
        if self.accept("Q"):
            return Rational()
        if self.accept("Z"):
            if not self.accept("("):
                return FreeZ()
            p = self.prime()
            if self.accept("^"):
                if self.accept("inf"):
                    self.expect(")")
                    return Prufer(p)
                if self.tok.kind != "nat":
                    raise self.error("an exponent or 'inf'")
                k = self.positive("an exponent >= 1")
                self.expect(")")
                return Cyclic(p, k)
            self.expect(")")
            return Cyclic(p, 1)
        if self.accept("B"):
            self.expect("(")
            p = self.prime()
            self.expect(")")
            return UnboundedDSC(p)
        if self.accept("TF"):
            self.expect("(")
            rank = self.positive("a rank >= 1")
            primes = []
            if self.accept(";"):
                primes.append(self.prime())
                while self.accept(","):
                    primes.append(self.prime())
            self.expect(")")
            return TorsionFreeFR(rank, tuple(primes))
        raise self.error("an atom (Z, Q, Z(p^k), Z(p^inf), B(p), TF(n;...))", tok)


def parse_group_expr(text) -> GroupExpr:
    """Parse DSL text (``str`` or UTF-8 ``bytes``) into a normalized expression."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            prefix = bytes(text[: exc.start]).decode("utf-8")
            line, col = _line_col(prefix, len(prefix))
            raise ParseError(line, col, "UTF-8 text", f"invalid byte 0x{text[exc.start]:02x}") from exc
    return _Parser(text).parse()


def render(g: GroupExpr) -> str:
    return str(g)
