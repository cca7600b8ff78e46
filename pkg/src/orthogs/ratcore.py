"""Exact scalars: rationals, Pochhammer symbols, symbolic Gamma products and
elements of a real quadratic field Q(sqrt(D)).

Rationals are :class:`fractions.Fraction` throughout. Gamma values are never
evaluated; they are carried as :class:`GammaProduct` and reduced with the
recurrence ``Gamma(a + 1) = a * Gamma(a)`` until every argument lies in
``(0, 1]``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import PoleError, RadicandMismatch

RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def rat(x: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"expected an exact rational, got {type(x).__name__}")
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse a strict ``"p/q"`` or ``"p"`` string (optional leading ``-``).

    Whitespace, decimals and exponents are rejected.
    """
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: RationalLike) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Ascending factorial ``a (a+1) ... (a+n-1)``; ``pochhammer(a, 0) == 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a = Fraction(a)
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def pochhammer_concat_check(a: RationalLike, n: int, m: int) -> bool:
    """Whether ``(a)_n (a+n)_m == (a)_{n+m}``."""
    a = Fraction(a)
    return pochhammer(a, n) * pochhammer(a + n, m) == pochhammer(a, n + m)


def factorial(n: int) -> Fraction:
    return Fraction(math.factorial(n))


def binomial(n: int, m: int) -> Fraction:
    return Fraction(math.comb(n, m))


def is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    p, q = x.numerator, x.denominator
    return math.isqrt(p) ** 2 == p and math.isqrt(q) ** 2 == q


def rational_sqrt(x: Fraction) -> Fraction:
    if not is_rational_square(x):
        raise ValueError(f"{x} is not the square of a rational")
    return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))


# ---------------------------------------------------------------------------
# Gamma products
# ---------------------------------------------------------------------------


def _merge(factors: Iterable[tuple[Fraction, int]]) -> tuple[tuple[Fraction, int], ...]:
    acc: dict[Fraction, int] = {}
    for arg, exp in factors:
        acc[arg] = acc.get(arg, 0) + exp
    return tuple(sorted((a, e) for a, e in acc.items() if e != 0))


@dataclass(frozen=True)
class GammaProduct:
    """``coeff * prod Gamma(a)**e * 2**two_exponent``.

    ``factors`` is a sorted tuple of ``(argument, exponent)`` pairs with
    non-zero exponents. Arguments must be positive: non-positive integers are
    poles, and negative non-integers lie outside the convergence region of
    every weight used here, so both are rejected.
    """

    coeff: Fraction = Fraction(1)
    factors: tuple[tuple[Fraction, int], ...] = ()
    two_exponent: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "two_exponent", Fraction(self.two_exponent))
        merged = _merge((Fraction(a), int(e)) for a, e in self.factors)
        for arg, _ in merged:
            if arg <= 0:
                raise PoleError(f"Gamma argument {arg} is not positive")
        object.__setattr__(self, "factors", merged)

    @classmethod
    def gamma(cls, a: RationalLike, exponent: int = 1) -> GammaProduct:
        return cls(factors=((Fraction(a), exponent),))

    @classmethod
    def beta(cls, a: RationalLike, b: RationalLike) -> GammaProduct:
        """``B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)``."""
        a, b = Fraction(a), Fraction(b)
        return cls(factors=((a, 1), (b, 1), (a + b, -1)))

    @classmethod
    def power_of_two(cls, q: RationalLike) -> GammaProduct:
        return cls(two_exponent=Fraction(q))

    @property
    def gamma_map(self) -> Mapping[Fraction, int]:
        return dict(self.factors)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other: GammaProduct | RationalLike) -> GammaProduct:
        if isinstance(other, GammaProduct):
            return GammaProduct(
                self.coeff * other.coeff,
                self.factors + other.factors,
                self.two_exponent + other.two_exponent,
            )
        if isinstance(other, (int, Fraction)):
            return GammaProduct(self.coeff * other, self.factors, self.two_exponent)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> GammaProduct:
        if self.coeff == 0:
            raise ZeroDivisionError("inverse of a zero Gamma product")
        return GammaProduct(
            1 / self.coeff,
            tuple((a, -e) for a, e in self.factors),
            -self.two_exponent,
        )

    def __truediv__(self, other: GammaProduct | RationalLike) -> GammaProduct:
        if isinstance(other, GammaProduct):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return GammaProduct(self.coeff / other, self.factors, self.two_exponent)
        return NotImplemented

    def __rtruediv__(self, other: RationalLike) -> GammaProduct:
        return self.inverse() * other

    def __pow__(self, k: int) -> GammaProduct:
        if k < 0:
            return self.inverse() ** (-k)
        return GammaProduct(
            self.coeff**k,
            tuple((a, e * k) for a, e in self.factors),
            self.two_exponent * k,
        )

    def canonical(self) -> GammaProduct:
        return gamma_canonicalize(self)

    def __str__(self) -> str:
        parts = [format_rational(self.coeff)]
        for arg, exp in self.factors:
            term = f"Gamma({format_rational(arg)})"
            parts.append(term if exp == 1 else f"{term}^{exp}")
        if self.two_exponent:
            parts.append(f"2^({format_rational(self.two_exponent)})")
        return "*".join(parts)


def gamma_canonicalize(g: GammaProduct) -> GammaProduct:
    """Reduce every Gamma argument into ``(0, 1]``.

    ``Gamma(a + k) = (a)_k Gamma(a)`` moves the rational Pochhammer factor into
    the coefficient. The integer part of the power of two is absorbed as well,
    leaving ``two_exponent`` in ``[0, 1)``. A zero product has no factors.
    """
    if g.coeff == 0:
        return GammaProduct(Fraction(0))
    coeff = g.coeff
    reduced: list[tuple[Fraction, int]] = []
    for arg, exp in g.factors:
        k = math.ceil(arg) - 1
        base = arg - k
        if k:
            coeff *= pochhammer(base, k) ** exp
        reduced.append((base, exp))
    whole = math.floor(g.two_exponent)
    coeff *= Fraction(2) ** whole
    return GammaProduct(coeff, tuple(reduced), g.two_exponent - whole)


# ---------------------------------------------------------------------------
# Quadratic extension Q(sqrt(D))
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuadExtScalar:
    """``rat + rad * sqrt(radicand)`` with a positive rational radicand.

    When the radicand is a rational square the radical part is folded into
    the rational part, so componentwise equality is always sound.
    """

    rat: Fraction
    rad: Fraction = Fraction(0)
    radicand: Fraction = field(default=Fraction(1))

    def __post_init__(self) -> None:
        a, b, d = Fraction(self.rat), Fraction(self.rad), Fraction(self.radicand)
        if d <= 0:
            raise ValueError("radicand must be positive")
        if b and is_rational_square(d):
            a, b = a + b * rational_sqrt(d), Fraction(0)
        object.__setattr__(self, "rat", a)
        object.__setattr__(self, "rad", b)
        object.__setattr__(self, "radicand", d)

    @classmethod
    def sqrt(cls, radicand: RationalLike) -> QuadExtScalar:
        return cls(Fraction(0), Fraction(1), Fraction(radicand))

    def _coerce(self, other: object) -> QuadExtScalar:
        if isinstance(other, QuadExtScalar):
            if other.radicand != self.radicand:
                raise RadicandMismatch(
                    f"sqrt({other.radicand}) mixed with sqrt({self.radicand})"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExtScalar(Fraction(other), Fraction(0), self.radicand)
        raise TypeError(f"cannot combine QuadExtScalar with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExtScalar(self.rat + o.rat, self.rad + o.rad, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> QuadExtScalar:
        return QuadExtScalar(-self.rat, -self.rad, self.radicand)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        a, b, c, d = self.rat, self.rad, o.rat, o.rad
        return QuadExtScalar(a * c + b * d * self.radicand, a * d + b * c, self.radicand)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExtScalar:
        return QuadExtScalar(self.rat, -self.rad, self.radicand)

    def norm(self) -> Fraction:
        """``a**2 - b**2 * D``, the product with the conjugate."""
        return self.rat**2 - self.rad**2 * self.radicand

    def inverse(self) -> QuadExtScalar:
        n = self.norm()
        if n == 0:
            # radicand is never a square after folding, so this means self == 0
            raise ZeroDivisionError("division by zero in Q(sqrt(D))")
        c = self.conjugate()
        return QuadExtScalar(c.rat / n, c.rad / n, self.radicand)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> QuadExtScalar:
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExtScalar(Fraction(1), Fraction(0), self.radicand)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.rad)

    def is_rational(self) -> bool:
        return self.rad == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExtScalar):
            return (self.rat, self.rad, self.radicand) == (other.rat, other.rad, other.radicand)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.rad == 0 and self.rat == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.rad == 0:
            return hash(self.rat)
        return hash((self.rat, self.rad, self.radicand))

    def __repr__(self) -> str:
        return f"QuadExtScalar({self})"

    def __str__(self) -> str:
        a, b = format_rational(self.rat), format_rational(self.rad)
        return f"{a} + {b}*sqrt({format_rational(self.radicand)})"


def quadext_arith(x: QuadExtScalar, y: QuadExtScalar, op: str) -> QuadExtScalar:
    """Apply ``op`` in ``{"add", "mul", "div"}`` to two field elements."""
    if x.radicand != y.radicand:
        raise RadicandMismatch(f"sqrt({x.radicand}) mixed with sqrt({y.radicand})")
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")
