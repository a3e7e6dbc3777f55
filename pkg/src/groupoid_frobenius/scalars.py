"""Exact coefficient fields: the rationals and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field
elements are :class:`ModP` instances, kept in canonical form with a
representative in ``[0, p)``.  A *field* object (``QQ`` or ``GF(p)``)
converts Python numbers into its elements and supplies ``zero``/``one``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class NotPIntegral(ArithmeticError):
    """A rational number with denominator divisible by p was reduced mod p."""


class ModP:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int | None:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return _reduce_fraction(other, self.p)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModP(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModP(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModP(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModP(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * ModP(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModP(v, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return ModP(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return (self.value - v) % self.p == 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"

    def __str__(self):
        return str(self.value)


def _reduce_fraction(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise NotPIntegral(f"{x} is not {p}-integral")
    return x.numerator * pow(x.denominator, -1, p) % p


class Rationals:
    """The field Q, with elements represented as Fractions."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, ModP):
            raise TypeError("cannot lift a prime-field element to Q")
        return Fraction(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The field F_p."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{x.p}")
            return x
        if isinstance(x, Fraction):
            return ModP(_reduce_fraction(x, self.p), self.p)
        return ModP(int(x), self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of(x) -> Rationals | PrimeField:
    if isinstance(x, ModP):
        return GF(x.p)
    return QQ


def format_rational(x) -> str:
    """Encode an exact scalar as ``"num/den"`` (denominator dropped when 1)."""
    if isinstance(x, ModP):
        return str(x.value)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
