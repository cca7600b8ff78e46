"""Hermite, Laguerre and Jacobi polynomials two ways: from the explicit
hypergeometric-type sums, and by Gram-Schmidt on exact moments.

Jacobi work happens in powers of ``t = (1 - x) / 2``, which turns the
weight's moments into Beta values; :func:`to_monomial` converts back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from . import gschmidt
from .errors import ParameterOutOfRange
from .gschmidt import MomentTable
from .ratcore import GammaProduct, RationalLike, binomial, factorial, pochhammer

Family = Literal["hermite", "laguerre", "jacobi"]
Basis = Literal["monomial", "shifted"]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class MomentFunctional:
    family: Family
    alpha: Fraction | None = None
    beta: Fraction | None = None

    def __post_init__(self) -> None:
        if self.family == "hermite":
            if self.alpha is not None or self.beta is not None:
                raise ParameterOutOfRange("hermite takes no parameters")
            return
        if self.family not in ("laguerre", "jacobi"):
            raise ParameterOutOfRange(f"unknown family {self.family!r}")
        if self.alpha is None:
            raise ParameterOutOfRange(f"{self.family} needs alpha")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= -1:
            raise ParameterOutOfRange(f"alpha={self.alpha} must exceed -1")
        if self.family == "laguerre":
            if self.beta is not None:
                raise ParameterOutOfRange("laguerre takes no beta")
            return
        if self.beta is None:
            raise ParameterOutOfRange("jacobi needs beta")
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.beta <= -1:
            raise ParameterOutOfRange(f"beta={self.beta} must exceed -1")

    @classmethod
    def hermite(cls) -> MomentFunctional:
        return cls("hermite")

    @classmethod
    def laguerre(cls, alpha: RationalLike) -> MomentFunctional:
        return cls("laguerre", Fraction(alpha))

    @classmethod
    def jacobi(cls, alpha: RationalLike, beta: RationalLike) -> MomentFunctional:
        return cls("jacobi", Fraction(alpha), Fraction(beta))

    @property
    def basis(self) -> Basis:
        return "shifted" if self.family == "jacobi" else "monomial"

    def scale(self) -> GammaProduct:
        """The constant divided out of every inner product."""
        if self.family == "hermite":
            return GammaProduct.gamma(HALF)
        if self.family == "laguerre":
            return GammaProduct.gamma(self.alpha + 1)
        a, b = self.alpha, self.beta
        return GammaProduct.power_of_two(a + b + 1) * GammaProduct.beta(a + 1, b + 1)

    def exact_moment(self, i: int, j: int) -> GammaProduct:
        """The full inner product of basis elements ``i`` and ``j``."""
        s = i + j
        if self.family == "hermite":
            if s % 2:
                return GammaProduct(Fraction(0))
            return GammaProduct.gamma(Fraction(s, 2) + HALF)
        if self.family == "laguerre":
            return GammaProduct.gamma(s + self.alpha + 1)
        a, b = self.alpha, self.beta
        return GammaProduct.power_of_two(a + b + 1) * GammaProduct.beta(s + a + 1, b + 1)

    def table(self, size: int) -> MomentTable:
        return MomentTable.from_function(size, lambda i, j: moment(self, i, j), self.scale())


def moment(F: MomentFunctional, i: int, j: int) -> Fraction:
    """``<basis_i, basis_j>`` divided by ``F.scale()``."""
    s = i + j
    if F.family == "hermite":
        return Fraction(0) if s % 2 else pochhammer(HALF, s // 2)
    if F.family == "laguerre":
        return pochhammer(F.alpha + 1, s)
    return pochhammer(F.alpha + 1, s) / pochhammer(F.alpha + F.beta + 2, s)


_PRESETS = {
    "legendre": (Fraction(0), Fraction(0)),
    "chebyshev1": (-HALF, -HALF),
    "chebyshev2": (HALF, HALF),
}


def preset(name: str, lam: RationalLike | None = None) -> MomentFunctional:
    """Jacobi special cases: ``legendre``, ``chebyshev1``, ``chebyshev2`` and
    ``gegenbauer`` (which needs ``lam > -1/2``)."""
    if name == "gegenbauer":
        if lam is None:
            raise ParameterOutOfRange("gegenbauer needs lambda")
        lam = Fraction(lam)
        if lam <= -HALF:
            raise ParameterOutOfRange(f"gegenbauer lambda={lam} must exceed -1/2")
        return MomentFunctional.jacobi(lam - HALF, lam - HALF)
    if name not in _PRESETS:
        raise ParameterOutOfRange(f"unknown preset {name!r}")
    return MomentFunctional.jacobi(*_PRESETS[name])


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Coefficients by ascending power of ``x`` (monomial) or ``t`` (shifted)."""

    basis: Basis
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.basis not in ("monomial", "shifted"):
            raise ValueError(f"unknown basis {self.basis!r}")
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __mul__(self, c: RationalLike) -> Polynomial:
        return Polynomial(self.basis, tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> Fraction:
        """Evaluate at ``x``; shifted polynomials substitute ``t = (1 - x)/2``."""
        var = Fraction(x) if self.basis == "monomial" else (1 - Fraction(x)) / 2
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * var + c
        return out


def to_monomial(p: Polynomial) -> Polynomial:
    """Expand ``sum c_m ((1 - x)/2)^m`` in powers of ``x``."""
    if p.basis == "monomial":
        return p
    out = [Fraction(0)] * max(len(p.coeffs), 1)
    for m, c in enumerate(p.coeffs):
        for r in range(m + 1):
            out[r] += c * binomial(m, r) * (-1) ** r / 2**m
    return Polynomial("monomial", tuple(out))


def closed_hermite(n: int, standard: bool = False) -> Polynomial:
    """``sum_m (-1)^m / (m! (n-2m)!) (2x)^(n-2m)``.

    The sum as written is ``H_n / n!`` in the physicists' normalization;
    ``standard=True`` multiplies by ``n!`` (so ``H_2 = 4x^2 - 2``).
    """
    _check_degree(n)
    c = [Fraction(0)] * (n + 1)
    for m in range(n // 2 + 1):
        c[n - 2 * m] = Fraction((-1) ** m * 2 ** (n - 2 * m)) / (factorial(m) * factorial(n - 2 * m))
    p = Polynomial("monomial", tuple(c))
    return p * factorial(n) if standard else p


def closed_laguerre(n: int, alpha: RationalLike) -> Polynomial:
    _check_degree(n)
    alpha = Fraction(alpha)
    if alpha <= -1:
        raise ParameterOutOfRange(f"alpha={alpha} must exceed -1")
    top = pochhammer(alpha + 1, n)
    c = [
        (-1) ** m * top / (factorial(m) * factorial(n - m) * pochhammer(alpha + 1, m))
        for m in range(n + 1)
    ]
    return Polynomial("monomial", tuple(c))


def closed_jacobi(n: int, alpha: RationalLike, beta: RationalLike) -> Polynomial:
    """Shifted-basis coefficients of ``J_n^(alpha, beta)``."""
    _check_degree(n)
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= -1 or beta <= -1:
        raise ParameterOutOfRange(f"alpha={alpha}, beta={beta} must exceed -1")
    top = pochhammer(alpha + 1, n)
    c = [
        top
        * (-1) ** m
        * pochhammer(alpha + beta + n + 1, m)
        / (factorial(m) * factorial(n - m) * pochhammer(alpha + 1, m))
        for m in range(n + 1)
    ]
    return Polynomial("shifted", tuple(c))


def closed_form(F: MomentFunctional, n: int) -> Polynomial:
    if F.family == "hermite":
        return closed_hermite(n)
    if F.family == "laguerre":
        return closed_laguerre(n, F.alpha)
    return closed_jacobi(n, F.alpha, F.beta)


def _check_degree(n: int) -> None:
    if n < 0:
        raise ParameterOutOfRange(f"degree {n} is negative")


# ---------------------------------------------------------------------------
# Gram-Schmidt construction and the scaling relations
# ---------------------------------------------------------------------------


def gs_polynomial(F: MomentFunctional, n: int) -> Polynomial:
    """Monic Gram-Schmidt output of degree ``n`` via the cofactor formula."""
    _check_degree(n)
    return Polynomial(F.basis, gschmidt.gs_determinant(F.table(n + 1), n))


def scaling_factor(F: MomentFunctional, n: int) -> Fraction:
    """``c`` with ``gs_polynomial(F, n) == c * closed_form(F, n)``."""
    if F.family == "hermite":
        return factorial(n) / 2**n
    sign = (-1) ** n
    if F.family == "laguerre":
        return sign * factorial(n)
    return sign * factorial(n) / pochhammer(F.alpha + F.beta + n + 1, n)


def scaling_check(F: MomentFunctional, n: int) -> bool:
    return gs_polynomial(F, n) == closed_form(F, n) * scaling_factor(F, n)


def laguerre_cofactor_ratio(n: int, m: int, alpha: RationalLike) -> Fraction:
    """``d_{n,m} / d_{n,n}`` for Laguerre monomial moments:
    ``n! (alpha+1)_n / (m! (n-m)! (alpha+1)_m)``."""
    a1 = Fraction(alpha) + 1
    return factorial(n) * pochhammer(a1, n) / (factorial(m) * factorial(n - m) * pochhammer(a1, m))


def hermite_cofactor_ratio(degree: int, m: int) -> Fraction:
    """Same-parity cofactor ratio of the rearranged Hermite Gram matrix.

    For ``degree = 2n`` this is ``(2n)! / (2^(2(n-m)) (n-m)! (2m)!)`` and for
    ``degree = 2n + 1`` it is ``(2n+1)! / (2^(2(n-m)) (n-m)! (2m+1)!)``.
    """
    n, odd = divmod(degree, 2)
    return factorial(degree) / (2 ** (2 * (n - m)) * factorial(n - m) * factorial(2 * m + odd))


def hermite_parity_order(degree: int) -> list[int]:
    """Basis order used for ``h_degree``: the opposite parity first, then the
    same parity as ``degree``, each ascending."""
    other = [d for d in range(degree + 1) if (d - degree) % 2]
    same = [d for d in range(degree + 1) if (d - degree) % 2 == 0]
    return other + same


def hermite_parity_gs(degree: int) -> Polynomial:
    """``h_degree`` from the block structure of the rearranged Gram matrix.

    After reordering, only the same-parity powers ``x^(2m + odd)`` have
    non-zero cofactors, and their ratios are the Laguerre ratios with
    ``alpha = -1/2`` (even degree) or ``alpha = 1/2`` (odd degree).
    """
    _check_degree(degree)
    n, odd = divmod(degree, 2)
    alpha = HALF if odd else -HALF
    first_same = len(hermite_parity_order(degree)) - (n + 1)
    c = [Fraction(0)] * (degree + 1)
    for m in range(n + 1):
        pos = first_same + m
        c[2 * m + odd] = (-1) ** (pos + degree) * laguerre_cofactor_ratio(n, m, alpha)
    return Polynomial("monomial", tuple(c))


def hermite_rearranged_ratios(degree: int) -> list[Fraction]:
    """``d_{N, pos(x^(2m+odd))} / d_{N,N}`` for ``m = 0..n`` computed by Bareiss
    on the rearranged Hermite Gram matrix (``N = degree``)."""
    order = hermite_parity_order(degree)
    table = MomentFunctional.hermite().table(degree + 1).permuted(order)
    n, odd = divmod(degree, 2)
    dnn = gschmidt.gram_minor(table, degree, degree)
    return [
        gschmidt.gram_minor(table, degree, order.index(2 * m + odd)) / dnn for m in range(n + 1)
    ]


def hermite_zero_cofactors(degree: int) -> bool:
    """Whether every opposite-parity cofactor of the rearranged matrix vanishes."""
    order = hermite_parity_order(degree)
    table = MomentFunctional.hermite().table(degree + 1).permuted(order)
    return all(
        gschmidt.gram_minor(table, degree, pos) == 0
        for pos, d in enumerate(order)
        if (d - degree) % 2
    )


def orthogonal_sequence(F: MomentFunctional, n: int) -> list[Polynomial]:
    return [gs_polynomial(F, k) for k in range(n + 1)]


def family_inner(F: MomentFunctional, p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return F.table(max(len(p), len(q), 1)).inner(p, q)
