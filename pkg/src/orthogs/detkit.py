"""Exact determinants.

``bareiss_det`` is the brute-force oracle. Everything else evaluates a
generalized Vandermonde determinant by its product formula, and each one has
an ``*_matrix`` builder so the two routes can be compared entry for entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IndexOutOfRange, NotSquare, ZeroDenominator
from .ratcore import GammaProduct, RationalLike, binomial, gamma_canonicalize, pochhammer

Matrix = list[list[Fraction]]


def as_matrix(rows: Sequence[Sequence[RationalLike]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def bareiss_det(rows: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Fraction-free elimination with first-nonzero row pivoting.

    The empty matrix has determinant 1.
    """
    a = as_matrix(rows)
    n = len(a)
    if any(len(row) != n for row in a):
        raise NotSquare(f"{n} rows but row lengths {[len(r) for r in a]}")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def _vec(z: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in z)


def shift(z: Sequence[RationalLike], c: RationalLike) -> tuple[Fraction, ...]:
    """The parallel shift ``z + c``."""
    return tuple(Fraction(x) + c for x in z)


def vandermonde_delta(z: Sequence[RationalLike]) -> Fraction:
    """``prod_{i<j} (z_j - z_i)``."""
    z = _vec(z)
    out = Fraction(1)
    for j in range(len(z)):
        for i in range(j):
            out *= z[j] - z[i]
    return out


def vandermonde_matrix(z: Sequence[RationalLike]) -> Matrix:
    z = _vec(z)
    return [[zj**i for zj in z] for i in range(len(z))]


def eset(n: int, m: int) -> tuple[Fraction, ...]:
    """``(1, 2, ..., n+1)`` with the entry ``m+1`` removed."""
    if n < 1 or not 0 <= m <= n:
        raise IndexOutOfRange(f"need 0 <= m <= n and n >= 1, got n={n}, m={m}")
    return tuple(Fraction(k) for k in range(1, n + 2) if k != m + 1)


def eset_ratio(n: int, m: int) -> Fraction:
    """``Delta(e_n^m) / Delta(e_n^n)``, which is the binomial ``C(n, m)``."""
    return vandermonde_delta(eset(n, m)) / vandermonde_delta(eset(n, n))


def pochhammer_matrix(z: Sequence[RationalLike]) -> Matrix:
    z = _vec(z)
    return [[pochhammer(zj, i) for zj in z] for i in range(len(z))]


def pochhammer_matrix_det(z: Sequence[RationalLike]) -> Fraction:
    """``det[(z_j)_i]``: row ``i`` is a monic degree-``i`` polynomial in ``z_j``,
    so row operations reduce it to the plain Vandermonde determinant."""
    return vandermonde_delta(z)


@dataclass(frozen=True)
class ScaledDeterminant:
    """``scale * rational_part``; ``scale`` holds the Gamma prefactors."""

    scale: GammaProduct
    rational_part: Fraction

    def canonical(self) -> GammaProduct:
        return gamma_canonicalize(self.scale * self.rational_part)

    def __str__(self) -> str:
        return str(self.canonical())


def det_gamma(z: Sequence[RationalLike]) -> ScaledDeterminant:
    """``det[Gamma(z_j + i)] = (prod_j Gamma(z_j)) * Delta(z)``."""
    z = _vec(z)
    scale = GammaProduct(factors=tuple((zj, 1) for zj in z))
    return ScaledDeterminant(gamma_canonicalize(scale), vandermonde_delta(z))


def _check_ratio_denominators(z: tuple[Fraction, ...], w: Fraction) -> None:
    n = len(z)
    for zj in z:
        for r in range(n - 1):
            if zj + w + r == 0:
                raise ZeroDenominator(f"(z_j + w)_i vanishes for z_j={zj}, w={w}")


def pochhammer_ratio_matrix(z: Sequence[RationalLike], w: RationalLike) -> Matrix:
    z, w = _vec(z), Fraction(w)
    _check_ratio_denominators(z, w)
    return [[pochhammer(zj, i) / pochhammer(zj + w, i) for zj in z] for i in range(len(z))]


def pochhammer_ratio_det(z: Sequence[RationalLike], w: RationalLike) -> Fraction:
    """``det[(z_j)_i / (z_j + w)_i] = prod_j (w)_j / (z_j + w)_{n-1} * Delta(z)``."""
    z, w = _vec(z), Fraction(w)
    _check_ratio_denominators(z, w)
    n = len(z)
    out = vandermonde_delta(z)
    for j, zj in enumerate(z):
        out *= pochhammer(w, j) / pochhammer(zj + w, n - 1)
    return out


def ratio_det_recursive_oracle(z: Sequence[RationalLike], w: RationalLike) -> Fraction:
    """Evaluate ``det[(z_j)_i / (z_j + w)_i]`` by one-column elimination steps.

    Subtracting a multiple of each row from the next clears the first column
    and leaves the same kind of matrix on ``z_1..z_{n-1}`` with ``w + 1``, up
    to the factor ``prod_{i>=1} w (z_i - z_0) / ((z_i + w)(z_0 + w + i - 1))``.
    """
    z, w = _vec(z), Fraction(w)
    _check_ratio_denominators(z, w)
    out = Fraction(1)
    while len(z) > 1:
        z0 = z[0]
        for i in range(1, len(z)):
            out *= w * (z[i] - z0) / ((z[i] + w) * (z0 + w + i - 1))
        z, w = z[1:], w + 1
    return out


def det_beta(z: Sequence[RationalLike], w: RationalLike) -> ScaledDeterminant:
    """``det[B(z_j + i, w)] = prod_j Gamma(z_j) Gamma(w+j) / Gamma(z_j+w+n-1) * Delta(z)``."""
    z, w = _vec(z), Fraction(w)
    n = len(z)
    factors: list[tuple[Fraction, int]] = []
    for j, zj in enumerate(z):
        factors += [(zj, 1), (w + j, 1), (zj + w + n - 1, -1)]
    scale = gamma_canonicalize(GammaProduct(factors=tuple(factors)))
    return ScaledDeterminant(scale, vandermonde_delta(z))


def _column_factored_det(entries: list[list[GammaProduct]]) -> GammaProduct:
    # Canonicalized entries in one column share their Gamma/power-of-two
    # part; pull it out and run Bareiss on the rational coefficients.
    n = len(entries)
    coeffs: Matrix = [[Fraction(0)] * n for _ in range(n)]
    out = GammaProduct()
    for j in range(n):
        column = [gamma_canonicalize(entries[i][j]) for i in range(n)]
        ref = column[0]
        for i, g in enumerate(column):
            if (g.factors, g.two_exponent) != (ref.factors, ref.two_exponent):
                raise ValueError("column entries do not share a Gamma part")
            coeffs[i][j] = g.coeff
        out = out * GammaProduct(1, ref.factors, ref.two_exponent)
    return gamma_canonicalize(out * bareiss_det(coeffs))


def gamma_matrix(z: Sequence[RationalLike]) -> list[list[GammaProduct]]:
    z = _vec(z)
    return [[GammaProduct.gamma(zj + i) for zj in z] for i in range(len(z))]


def beta_matrix(z: Sequence[RationalLike], w: RationalLike) -> list[list[GammaProduct]]:
    z, w = _vec(z), Fraction(w)
    return [[GammaProduct.beta(zj + i, w) for zj in z] for i in range(len(z))]


def det_gamma_oracle(z: Sequence[RationalLike]) -> GammaProduct:
    """Brute-force ``det[Gamma(z_j + i)]`` from the explicit entries."""
    return _column_factored_det(gamma_matrix(z))


def det_beta_oracle(z: Sequence[RationalLike], w: RationalLike) -> GammaProduct:
    """Brute-force ``det[B(z_j + i, w)]`` from the explicit entries."""
    return _column_factored_det(beta_matrix(z, w))


def binomial_ratio_oracle(n: int, m: int) -> Fraction:
    """``eset_ratio`` recomputed from two Bareiss determinants."""
    return bareiss_det(vandermonde_matrix(eset(n, m))) / bareiss_det(
        vandermonde_matrix(eset(n, n))
    )


def binomial_check(n: int, m: int) -> bool:
    return eset_ratio(n, m) == binomial(n, m)
