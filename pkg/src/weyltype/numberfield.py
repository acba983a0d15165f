"""Exact arithmetic in Q or a simple extension Q(theta).

A field is given by a monic minimal polynomial with rational coefficients,
listed from the constant term upwards: ``[-2, 0, 1]`` is theta^2 - 2.
Elements are coordinate vectors in the power basis 1, theta, ...,
theta^(d-1).  Nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as _cartesian

from .errors import FieldMismatch, NotMonic, RationalRootFound

__all__ = ["NumberField", "FieldElement", "field_make", "QQ"]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


# --- dense univariate polynomials over Q, lowest degree first -----------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for k, bk in enumerate(b):
            a[shift + k] -= c * bk
        a = _trim(a)
    return _trim(q), a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    lead = r0[-1]
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _rational_root(coeffs):
    """A rational root of the polynomial, or None (rational root theorem)."""
    if coeffs[0] == 0:
        return Fraction(0)
    denom = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * denom) for c in coeffs]
    # drop a common content so the candidate sets stay small
    content = math.gcd(*ints)
    ints = [c // content for c in ints]
    for p, q in _cartesian(_divisors(ints[0]), _divisors(ints[-1])):
        for sign in (1, -1):
            r = Fraction(sign * p, q)
            acc = Fraction(0)
            for c in reversed(ints):
                acc = acc * r + c
            if acc == 0:
                return r
    return None


class NumberField:
    """The field Q[theta]/(minpoly).

    For degree 1 this is Q itself.  Irreducibility is certified by the
    absence of rational roots, which is complete up to degree 3; for higher
    degrees ``irreducibility_checked`` is False and the caller vouches for it.
    """

    __slots__ = ("minpoly", "degree", "irreducibility_checked", "_reduction", "_hash",
                 "zero", "one")

    def __init__(self, minpoly):
        coeffs = [_as_fraction(c) for c in minpoly]
        if len(coeffs) < 2:
            raise NotMonic("minimal polynomial must have degree at least 1")
        if coeffs[-1] != 1:
            raise NotMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
        d = len(coeffs) - 1
        if d > 1:
            root = _rational_root(coeffs)
            if root is not None:
                raise RationalRootFound(root)
        self.minpoly = tuple(coeffs)
        self.degree = d
        self.irreducibility_checked = d <= 3
        # theta^k for d <= k <= 2d-2 written in the power basis
        table = []
        cur = [-c for c in coeffs[:-1]]
        for _ in range(max(d - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            cur = [a - top * c for a, c in zip(cur, coeffs[:-1])]
        self._reduction = tuple(table)
        self._hash = hash(("NumberField", self.minpoly))
        self.zero = FieldElement(self, (Fraction(0),) * d)
        self.one = FieldElement(self, (Fraction(1),) + (Fraction(0),) * (d - 1))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.degree == 1:
            return "QQ"
        return f"NumberField({[str(c) for c in self.minpoly]})"

    def __call__(self, x) -> FieldElement:
        """Coerce an int, Fraction or element of this field."""
        if isinstance(x, FieldElement):
            if x.field is not self and x.field != self:
                raise FieldMismatch(f"{x!r} does not belong to {self!r}")
            return x
        c = _as_fraction(x)
        return FieldElement(self, (c,) + (Fraction(0),) * (self.degree - 1))

    @property
    def theta(self) -> FieldElement:
        if self.degree == 1:
            return FieldElement(self, (-self.minpoly[0],))
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return FieldElement(self, tuple(coords))

    def from_coords(self, coords) -> FieldElement:
        coords = tuple(_as_fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def from_poly(self, coeffs) -> FieldElement:
        """Reduce an arbitrary polynomial in theta modulo the minimal polynomial."""
        coeffs = [_as_fraction(c) for c in coeffs]
        if len(coeffs) <= self.degree:
            return FieldElement(self, tuple(coeffs) + (Fraction(0),) * (self.degree - len(coeffs)))
        _, r = _poly_divmod(coeffs, self.minpoly)
        return FieldElement(self, tuple(r) + (Fraction(0),) * (self.degree - len(r)))


def field_make(minpoly) -> NumberField:
    return NumberField(minpoly)



class FieldElement:
    """An immutable element of a NumberField."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("operands live in different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        d = field.degree
        if d == 1:
            return FieldElement(field, (self.coords[0] * other.coords[0],))
        conv = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        conv[i + j] += a * b
        out = conv[:d]
        for k, c in enumerate(conv[d:]):
            if c:
                for j, r in enumerate(field._reduction[k]):
                    out[j] += c * r
        return FieldElement(field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError("division by zero in number field")
        field = self.field
        if field.degree == 1:
            return FieldElement(field, (1 / self.coords[0],))
        g, s, _ = _poly_xgcd(list(self.coords), list(field.minpoly))
        if len(g) != 1:
            raise ZeroDivisionError("element is a zero divisor; minimal polynomial is reducible")
        return field.from_poly(s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in number field")
            return FieldElement(self.field, tuple(a / other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coords == other.coords and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self.coords[0] == other and not any(self.coords[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "th" if k == 1 else f"th^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


QQ = NumberField([0, 1])
