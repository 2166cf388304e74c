"""Exact arithmetic in the imaginary quadratic orders O_d for d in {1, 3, 7}.

Elements are written a + b*tau_d with integer a, b, where

    tau_1 = i                (tau^2 = -1)
    tau_3 = w = (-1+i*sqrt3)/2   (tau^2 = -1 - tau)
    tau_7 = (1+i*sqrt7)/2    (tau^2 = tau - 2)

Coefficients are plain Python ints, so there is no overflow anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

SUPPORTED_D = (1, 3, 7)

# tau^2 = c0 + c1*tau
_TAU_SQ = {1: (-1, 0), 3: (-1, -1), 7: (-2, 1)}
# conj(tau) = c0 + c1*tau
_TAU_CONJ = {1: (0, -1), 3: (-1, -1), 7: (1, -1)}
# Re(tau) as an exact rational
_TAU_RE = {1: Fraction(0), 3: Fraction(-1, 2), 7: Fraction(1, 2)}
# tau = re + (imag coefficient) * i*sqrt(d)
_TAU_ISQRTD = {1: Fraction(1), 3: Fraction(1, 2), 7: Fraction(1, 2)}
_TAU_SYMBOL = {1: "i", 3: "w", 7: "t7"}


class RingMismatchError(ValueError):
    """Raised when combining elements of different rings O_d."""


def _check_d(d: int) -> None:
    if d not in SUPPORTED_D:
        raise ValueError(f"unsupported ring selector d={d!r}; must be one of {SUPPORTED_D}")


@dataclass(frozen=True)
class QuadInt:
    """a + b*tau_d with arbitrary-precision integer a, b."""

    d: int
    a: int
    b: int

    def __post_init__(self):
        _check_d(self.d)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(d: int) -> "QuadInt":
        return QuadInt(d, 0, 0)

    @staticmethod
    def one(d: int) -> "QuadInt":
        return QuadInt(d, 1, 0)

    @staticmethod
    def of_int(d: int, n: int) -> "QuadInt":
        return QuadInt(d, n, 0)

    @staticmethod
    def tau(d: int) -> "QuadInt":
        return QuadInt(d, 0, 1)

    @staticmethod
    def sqrt_minus_d(d: int) -> "QuadInt":
        """i*sqrt(d) as an element of O_d."""
        _check_d(d)
        if d == 1:
            return QuadInt(1, 0, 1)
        if d == 3:
            return QuadInt(3, 1, 2)   # i*sqrt3 = 1 + 2w
        return QuadInt(7, -1, 2)      # i*sqrt7 = 2*tau7 - 1

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "QuadInt":
        if isinstance(other, QuadInt):
            if other.d != self.d:
                raise RingMismatchError(f"cannot mix O_{self.d} and O_{other.d}")
            return other
        if isinstance(other, int):
            return QuadInt(self.d, other, 0)
        return NotImplemented

    def __add__(self, other) -> "QuadInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadInt(self.d, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadInt(self.d, self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "QuadInt":
        return (-self) + other

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.d, -self.a, -self.b)

    def __mul__(self, other) -> "QuadInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c0, c1 = _TAU_SQ[self.d]
        # (a + b t)(a' + b' t) = aa' + (ab' + a'b) t + bb' t^2
        bb = self.b * other.b
        return QuadInt(
            self.d,
            self.a * other.a + bb * c0,
            self.a * other.b + self.b * other.a + bb * c1,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadInt":
        if n < 0:
            raise ValueError("negative powers are not defined in O_d")
        result = QuadInt.one(self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "QuadInt":
        c0, c1 = _TAU_CONJ[self.d]
        return QuadInt(self.d, self.a + self.b * c0, self.b * c1)

    def norm(self) -> int:
        """x * conj(x), always a nonnegative rational integer."""
        n = self * self.conj()
        assert n.b == 0, "norm left the rational integers"
        return n.a

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return not self.is_zero() and self.norm() == 1

    # -- real / imaginary decomposition -----------------------------------

    def real_part(self) -> Fraction:
        return Fraction(self.a) + self.b * _TAU_RE[self.d]

    def isqrtd_coeff(self) -> Fraction:
        """Rational c with self = real_part + c * i*sqrt(d)."""
        return self.b * _TAU_ISQRTD[self.d]

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def approx(self) -> complex:
        return complex(self.real_part()) + 1j * float(self.isqrtd_coeff()) * math.sqrt(self.d)


def units(d: int) -> list[QuadInt]:
    """All units of O_d: 4 for d=1, 6 for d=3, 2 for d=7."""
    _check_d(d)
    one = QuadInt.one(d)
    us = [one, -one]
    if d == 1:
        i = QuadInt.tau(1)
        us += [i, -i]
    elif d == 3:
        w = QuadInt.tau(3)
        w2 = w * w
        us += [w, -w, w2, -w2]
    return us


@dataclass(frozen=True)
class QuadRat:
    """num/den with num in O_d and positive integer denominator, reduced."""

    num: QuadInt
    den: int

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = math.gcd(math.gcd(abs(num.a), abs(num.b)), den)
        if g > 1:
            num = QuadInt(num.d, num.a // g, num.b // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def d(self) -> int:
        return self.num.d

    @staticmethod
    def of(x) -> "QuadRat":
        if isinstance(x, QuadRat):
            return x
        if isinstance(x, QuadInt):
            return QuadRat(x, 1)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadRat")

    @staticmethod
    def zero(d: int) -> "QuadRat":
        return QuadRat(QuadInt.zero(d), 1)

    @staticmethod
    def one(d: int) -> "QuadRat":
        return QuadRat(QuadInt.one(d), 1)

    @staticmethod
    def of_fraction(d: int, q: Fraction | int) -> "QuadRat":
        q = Fraction(q)
        return QuadRat(QuadInt.of_int(d, q.numerator), q.denominator)

    def _coerce(self, other):
        if isinstance(other, QuadRat):
            if other.d != self.d:
                raise RingMismatchError(f"cannot mix O_{self.d} and O_{other.d}")
            return other
        if isinstance(other, QuadInt):
            return QuadRat(self.num._coerce(other), 1)
        if isinstance(other, int):
            return QuadRat(QuadInt.of_int(self.d, other), 1)
        return NotImplemented

    def __add__(self, other) -> "QuadRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other) -> "QuadRat":
        return (-self) + other

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.num, self.den)

    def __mul__(self, other) -> "QuadRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadRat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(i sqrt d)")
        # 1/(n/d) = d * conj(n) / norm(n)
        return QuadRat(self.num * other.num.conj() * other.den, self.den * other.num.norm())

    def conj(self) -> "QuadRat":
        return QuadRat(self.num.conj(), self.den)

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integral(self) -> bool:
        return self.den == 1

    def real_part(self) -> Fraction:
        return self.num.real_part() / self.den

    def isqrtd_coeff(self) -> Fraction:
        return self.num.isqrtd_coeff() / self.den

    def as_fraction(self) -> Fraction:
        """The value as a rational; raises if not real."""
        if self.isqrtd_coeff() != 0:
            raise ValueError(f"{self} is not rational")
        return self.real_part()

    def key(self) -> tuple[int, int, int]:
        """(numerator-a, numerator-b, denominator), the canonical sort key."""
        return (self.num.a, self.num.b, self.den)

    def approx(self) -> complex:
        return self.num.approx() / self.den

    def __str__(self) -> str:
        if self.den == 1:
            return render(self.num)
        return f"({render(self.num)})/{self.den}"


def qi_approx(x: QuadInt | QuadRat) -> complex:
    """Floating approximation, good to >= 12 significant digits below 2**53."""
    return x.approx()


def render(x: QuadInt) -> str:
    """Textual form 'a+b*w' / 'a+b*i' / 'a+b*t7'; exact round-trip via parse."""
    sym = _TAU_SYMBOL[x.d]
    if x.b == 0:
        return str(x.a)
    tpart = f"{x.b}*{sym}" if abs(x.b) != 1 else (sym if x.b == 1 else f"-{sym}")
    if x.a == 0:
        return tpart
    sign = "+" if not tpart.startswith("-") else ""
    return f"{x.a}{sign}{tpart}"


_TERM_RE = re.compile(r"^([+-]?)(\d+)?\*?(i|w|t7)?$")


def parse(d: int, text: str) -> QuadInt:
    """Inverse of render: accepts forms like '3', '-w', '1+2*w', '2*t7-1'."""
    _check_d(d)
    sym = _TAU_SYMBOL[d]
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element string")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", s)
    a = b = 0
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse {term!r} as an element of O_{d}")
        sign, digits, tau = m.groups()
        if tau is not None and tau != sym:
            raise ValueError(f"symbol {tau!r} does not belong to O_{d}")
        coef = int((sign or "") + (digits if digits is not None else "1"))
        if tau is None:
            a += coef
        else:
            b += coef
    return QuadInt(d, a, b)
