"""Text formats: element expressions, field literals and signature files.

Element grammar::

    element  := term (('+' | '-') term)*
    term     := factor (('*' factor) | ('/' nat))*
    factor   := atom ['^' nat]
    atom     := 'x[' element (',' element)* ']' | 't' nat | 'd' nat
              | 'th' | nat | '(' element ')'

Products are evaluated left to right with the algebra product, so
``d1*t1`` is the normal-ordered ``t1*d1 + 1``.  The entries of ``x[...]``
must be scalars; they give the coordinates of alpha in F^(l2+l3).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .algebra import Signature, WeylElement
from .errors import AlphaNotInGamma, ParseError, UnknownAxis
from .lattice import gamma_make, gamma_member
from .numberfield import NumberField

__all__ = [
    "parse_element", "parse_field_element", "parse_vector", "parse_matrix",
    "format_element", "format_matrix", "parse_signature", "format_signature", "load_signature",
]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<th>th)|(?P<t>t\d+)|(?P<d>d\d+)|(?P<x>x\[)|(?P<op>[-+*/^(),\]]))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, sig: Signature, text: str):
        self.sig = sig
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> WeylElement:
        out = self.element()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return out

    def element(self):
        sign = 1
        _, val, _ = self.peek()
        if val in ("+", "-"):
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            _, val, _ = self.peek()
            if val == "+":
                self.take()
                acc = acc + self.term()
            elif val == "-":
                self.take()
                acc = acc - self.term()
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            _, val, _ = self.peek()
            if val == "*":
                self.take()
                acc = acc * self.factor()
            elif val == "/":
                self.take()
                kind, num, pos = self.take()
                if kind != "num":
                    raise ParseError("only division by a natural number is supported", pos)
                if int(num) == 0:
                    raise ParseError("division by zero", pos)
                acc = acc.scale(Fraction(1, int(num)))
            else:
                return acc

    def factor(self):
        base = self.atom()
        _, val, _ = self.peek()
        if val == "^":
            self.take()
            kind, num, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a natural number", pos)
            return base ** int(num)
        return base

    def atom(self):
        sig = self.sig
        kind, val, pos = self.take()
        if kind == "num":
            return sig.scalar(int(val))
        if kind == "th":
            return sig.scalar(sig.field.theta)
        if kind == "t":
            q = int(val[1:])
            if not 1 <= q <= sig.l1 + sig.l2:
                raise UnknownAxis(f"t{q} is not a variable of this algebra", pos)
            return sig.t(q)
        if kind == "d":
            p = int(val[1:])
            if not 1 <= p <= sig.ell:
                raise UnknownAxis(f"d{p} is not a variable of this algebra", pos)
            return sig.d(p)
        if kind == "x":
            coords = [self.scalar_entry()]
            while self.peek()[1] == ",":
                self.take()
                coords.append(self.scalar_entry())
            self.expect("]")
            if len(coords) != sig.n:
                raise ParseError(f"x[...] needs {sig.n} coordinates, got {len(coords)}", pos)
            alpha = gamma_member(sig.gamma, coords)
            if alpha is None:
                raise AlphaNotInGamma("exponent is not an element of Gamma", pos)
            return sig.x(alpha)
        if val == "(":
            inner = self.element()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)

    def scalar_entry(self):
        pos = self.peek()[2]
        value = self.element()
        if not value.is_scalar():
            raise ParseError("coordinates inside x[...] must be scalars", pos)
        return value.scalar_value()


def parse_element(sig: Signature, text: str) -> WeylElement:
    return _Parser(sig, text).parse()


@lru_cache(maxsize=None)
def _scalar_signature(field: NumberField) -> Signature:
    return Signature(1, 0, 0, gamma_make(field, 0, []))


def parse_field_element(field: NumberField, text: str):
    """A field literal such as ``1/2 + 3*th``."""
    value = parse_element(_scalar_signature(field), text)
    if not value.is_scalar():
        raise ParseError(f"{text!r} is not a field element")
    return value.scalar_value()


def _split_top(text):
    """Split on commas that are not nested in brackets or parentheses."""
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return parts


def _strip_brackets(text):
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"expected a bracketed list, got {text!r}")
    return s[1:-1]


def parse_vector(field: NumberField, text: str):
    inner = _strip_brackets(text)
    if not inner.strip():
        return ()
    return tuple(parse_field_element(field, part) for part in _split_top(inner))


def parse_matrix(field: NumberField, text: str):
    inner = _strip_brackets(text)
    if not inner.strip():
        return []
    return [list(parse_vector(field, row)) for row in _split_top(inner)]


def format_matrix(rows) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in rows) + "]"


# --- printing ---------------------------------------------------------------

def _power(name, e):
    return name if e == 1 else f"{name}^{e}"


def _monomial_factors(sig, mono):
    factors = []
    if any(mono.alpha):
        coords = sig.gamma.embed(mono.alpha)
        factors.append("x[" + ",".join(str(c) for c in coords) + "]")
    factors += [_power(f"t{q + 1}", e) for q, e in enumerate(mono.i) if e]
    factors += [_power(f"d{p + 1}", e) for p, e in enumerate(mono.mu) if e]
    return "*".join(factors)


def _format_term(sig, mono, c, alone):
    body = _monomial_factors(sig, mono)
    if not body:
        text = str(c)
        if not alone and not c.is_rational():
            text = f"({text})"
        return text
    if c.is_rational():
        q = c.rational()
        if q == 1:
            return body
        if q == -1:
            return "-" + body
        return f"{q}*{body}"
    return f"({c})*{body}"


def format_element(u: WeylElement) -> str:
    terms = u.sorted_terms()
    if not terms:
        return "0"
    alone = len(terms) == 1
    out = ""
    for k, (mono, c) in enumerate(terms):
        s = _format_term(u.sig, mono, c, alone)
        if k == 0:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


# --- signature files ----------------------------------------------------------

def parse_signature(text: str) -> Signature:
    """Read the line-oriented ``key = value`` format (``#`` starts a comment)."""
    values = {}
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "gen":
            gens.append(value)
        elif key in ("l1", "l2", "l3", "minpoly"):
            if key in values:
                raise ParseError(f"line {lineno}: duplicate key {key!r}")
            values[key] = value
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    for key in ("l1", "l2", "l3"):
        if key not in values:
            raise ParseError(f"missing key {key!r}")
        if not re.fullmatch(r"\d+", values[key]):
            raise ParseError(f"{key} must be a natural number")
    l1, l2, l3 = (int(values[k]) for k in ("l1", "l2", "l3"))
    minpoly = [Fraction(p.strip()) for p in _split_top(_strip_brackets(values.get("minpoly", "[0, 1]")))]
    field = NumberField(minpoly)
    vectors = [parse_vector(field, g) for g in gens]
    return Signature(l1, l2, l3, gamma_make(field, l2 + l3, vectors))


def load_signature(path) -> Signature:
    with open(path, encoding="utf-8") as fh:
        return parse_signature(fh.read())


def format_signature(sig: Signature) -> str:
    lines = [f"l1 = {sig.l1}", f"l2 = {sig.l2}", f"l3 = {sig.l3}",
             "minpoly = [" + ", ".join(str(c) for c in sig.field.minpoly) + "]"]
    for b in sig.gamma.basis:
        lines.append("gen = [" + ", ".join(str(c) for c in b) + "]")
    return "\n".join(lines) + "\n"
