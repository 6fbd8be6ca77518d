"""Exact arithmetic in Q and in the real quadratic extension Q[sqrt(p)].

Every decision this package makes reduces to the sign of a field element,
so nothing here ever touches floating point.  Rationals are
``fractions.Fraction``; an element a + b*sqrt(p) is stored as its pair of
rational coordinates together with the field parameter p.  Signs come from
integer comparisons only (a**2 against p*b**2), which is exact because p is
required not to be the square of a rational.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt

__all__ = [
    "Rat",
    "FieldParam",
    "Quad",
    "quad_sign",
    "quad_conj",
    "parse_rat",
    "format_rat",
    "parse_quad",
    "format_quad",
]

Rat = Fraction

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_QUAD_RE = re.compile(
    r"^\s*([+-]?\d+(?:/\d+)?)"
    r"(?:\s*([+-])\s*([+-]?\d+(?:/\d+)?)\s*\*\s*sqrt)?\s*$"
)


def parse_rat(text: str) -> Fraction:
    """Parse ``int`` or ``int/int`` (denominator unsigned and nonzero)."""
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _fraction_sign(q: Fraction) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


@dataclass(frozen=True)
class FieldParam:
    """The radicand p of Q[sqrt(p)]: a positive rational that is not a square.

    Squareness is decided exactly: a canonical fraction is a rational square
    iff its numerator and denominator are both perfect squares.
    """

    p: Fraction

    def __post_init__(self) -> None:
        p = self.p if isinstance(self.p, Fraction) else Fraction(self.p)
        object.__setattr__(self, "p", p)
        if p <= 0:
            raise ValueError(f"field parameter must be positive, got {p}")
        if _is_perfect_square(p.numerator) and _is_perfect_square(p.denominator):
            raise ValueError(f"field parameter {p} is the square of a rational")

    def quad(self, a: int | str | Fraction, b: int | str | Fraction = 0) -> Quad:
        return Quad(Fraction(a), Fraction(b), self)

    @property
    def zero(self) -> Quad:
        return self.quad(0)

    @property
    def one(self) -> Quad:
        return self.quad(1)

    @property
    def sqrt_p(self) -> Quad:
        return self.quad(0, 1)

    def __str__(self) -> str:
        return f"Q[sqrt({format_rat(self.p)})]"


@total_ordering
@dataclass(frozen=True, eq=False)
class Quad:
    """The field element a + b*sqrt(p), stored exactly.

    Values are immutable and hashable (canonical Fraction storage makes
    equality structural), so they are safe dict keys and safe to share
    between threads.  Binary operations require identical field parameters;
    plain ``int``/``Fraction`` operands are promoted into the field.
    """

    a: Fraction
    b: Fraction
    field: FieldParam

    def __post_init__(self) -> None:
        if not isinstance(self.a, Fraction):
            object.__setattr__(self, "a", Fraction(self.a))
        if not isinstance(self.b, Fraction):
            object.__setattr__(self, "b", Fraction(self.b))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    def conj(self) -> Quad:
        """The image a - b*sqrt(p) under the nontrivial field automorphism."""
        return Quad(self.a, -self.b, self.field)

    def norm(self) -> Fraction:
        """x * conj(x) collapsed to its rational value a**2 - p*b**2."""
        return self.a * self.a - self.field.p * self.b * self.b

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(p).

        When a and b disagree in sign the comparison reduces to a**2 versus
        p*b**2; equality there would force sqrt(p) rational, which the field
        parameter rules out.
        """
        sa = _fraction_sign(self.a)
        sb = _fraction_sign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        lhs = self.a * self.a
        rhs = self.field.p * self.b * self.b
        if lhs == rhs:
            raise ArithmeticError("field parameter admits a rational square root")
        return sa if lhs > rhs else sb

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: object) -> Quad | None:
        if isinstance(other, Quad):
            if other.field != self.field:
                raise ValueError(
                    f"field parameter mismatch: {self.field} vs {other.field}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Quad(Fraction(other), Fraction(0), self.field)
        return None

    def __add__(self, other: Quad | int | Fraction) -> Quad:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other: Quad | int | Fraction) -> Quad:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other: Quad | int | Fraction) -> Quad:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> Quad:
        return Quad(-self.a, -self.b, self.field)

    def __mul__(self, other: Quad | int | Fraction) -> Quad:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return Quad(
            self.a * o.a + p * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.field,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Quad | int | Fraction) -> Quad:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero field element")
        n = o.norm()
        return self * Quad(o.a / n, -o.b / n, self.field)

    def __rtruediv__(self, other: Quad | int | Fraction) -> Quad:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quad):
            return NotImplemented
        return self.field == other.field and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.field))

    def __lt__(self, other: Quad) -> bool:
        # Comparisons stay Quad-to-Quad (use field.quad(..) to lift numbers);
        # mixing bare numbers into == and < would break hash consistency.
        if not isinstance(other, Quad):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(
                f"field parameter mismatch: {self.field} vs {other.field}"
            )
        return (self - other).sign() < 0

    def __str__(self) -> str:
        return format_quad(self)

    def __repr__(self) -> str:
        return f"Quad({format_quad(self)!r}, p={format_rat(self.field.p)})"


def quad_sign(x: Quad) -> int:
    return x.sign()


def quad_conj(x: Quad) -> Quad:
    return x.conj()


def parse_quad(text: str, field: FieldParam) -> Quad:
    """Parse ``<rat>`` or ``<rat> (+|-) <rat>*sqrt`` into the given field."""
    m = _QUAD_RE.match(text)
    if m is None:
        raise ValueError(f"malformed field-element literal: {text!r}")
    a = parse_rat(m.group(1))
    if m.group(2) is None:
        return Quad(a, Fraction(0), field)
    b = parse_rat(m.group(3))
    if m.group(2) == "-":
        b = -b
    return Quad(a, b, field)


def format_quad(x: Quad) -> str:
    """Canonical literal; ``parse_quad(format_quad(x)) == x`` always."""
    if not x.b:
        return format_rat(x.a)
    op = "+" if x.b > 0 else "-"
    return f"{format_rat(x.a)} {op} {format_rat(abs(x.b))}*sqrt"
