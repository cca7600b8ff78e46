"""Exterior algebra over a rational inner-product space, with the Hodge star.

Basis blades are bitmasks over ``e_0..e_{m-1}``. Coefficients live in
``Q(sqrt(D))`` with ``D = det G``: the volume form is ``e_{0..m-1} / sqrt(D)``
and that is the only radical the star ever introduces.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .detkit import bareiss_det
from .errors import (
    DegreeMismatch,
    DependentBasis,
    NotPositiveDefinite,
    RadicandMismatch,
    SpaceMismatch,
)
from .gschmidt import CoeffVector, MomentTable, gram_minor
from .ratcore import QuadExtScalar, RationalLike


def blade_indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def blade_mask(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def reorder_sign(a: int, b: int) -> int:
    """Sign of sorting ``e_A ^ e_B`` into ascending order (``a & b == 0``)."""
    swaps = 0
    a >>= 1
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


class InnerProductSpace:
    """``R^m`` with Gram matrix ``G``; the ordered basis is positively oriented."""

    def __init__(self, gram: Sequence[Sequence[RationalLike]]):
        g = tuple(tuple(Fraction(x) for x in row) for row in gram)
        m = len(g)
        if m == 0 or any(len(r) != m for r in g):
            raise ValueError("Gram matrix must be non-empty and square")
        if any(g[i][j] != g[j][i] for i in range(m) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        for k in range(1, m + 1):
            if bareiss_det([row[:k] for row in g[:k]]) <= 0:
                raise NotPositiveDefinite(f"leading minor of order {k} is not positive")
        self.gram = g
        self.dim = m
        self.det = bareiss_det(g)
        self._grade_cache: dict[int, tuple[list[int], list[list[Fraction]]]] = {}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, InnerProductSpace) and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"InnerProductSpace(dim={self.dim}, det={self.det})"

    @property
    def full_mask(self) -> int:
        return (1 << self.dim) - 1

    def scalar(self, x: RationalLike | QuadExtScalar) -> QuadExtScalar:
        if isinstance(x, QuadExtScalar):
            if x.radicand != self.det:
                raise RadicandMismatch(f"sqrt({x.radicand}) scalar in a space with det {self.det}")
            return x
        return QuadExtScalar(Fraction(x), Fraction(0), self.det)

    def blades(self, p: int) -> list[int]:
        return [blade_mask(c) for c in combinations(range(self.dim), p)]

    def blade_inner(self, a: int, b: int) -> Fraction:
        """``det(<e_i, e_j>)`` over the index sets of two equal-grade blades."""
        ia, ib = blade_indices(a), blade_indices(b)
        return bareiss_det([[self.gram[i][j] for j in ib] for i in ia])

    def grade_gram(self, p: int) -> tuple[list[int], list[list[Fraction]]]:
        """Blades of grade ``p`` and the Gram matrix of the induced inner product."""
        if p not in self._grade_cache:
            bl = self.blades(p)
            self._grade_cache[p] = (bl, [[self.blade_inner(a, b) for b in bl] for a in bl])
        return self._grade_cache[p]

    def basis_vector(self, i: int) -> MultiVector:
        return MultiVector(self, {1 << i: 1})

    def blade(self, indices: Iterable[int]) -> MultiVector:
        return MultiVector(self, {blade_mask(indices): 1})

    def one(self) -> MultiVector:
        return MultiVector(self, {0: 1})

    def vector(self, coeffs: Sequence[RationalLike | QuadExtScalar]) -> MultiVector:
        return MultiVector(self, {1 << i: c for i, c in enumerate(coeffs)})


class MultiVector:
    """Element of the exterior algebra; zero coordinates are dropped."""

    __slots__ = ("space", "coords")

    def __init__(self, space: InnerProductSpace, coords: Mapping[int, RationalLike | QuadExtScalar]):
        self.space = space
        clean: dict[int, QuadExtScalar] = {}
        for mask, c in coords.items():
            if mask & ~space.full_mask:
                raise ValueError(f"blade {mask:b} outside a {space.dim}-dimensional space")
            c = space.scalar(c)
            if c:
                clean[mask] = c
        self.coords = clean

    def _same(self, other: MultiVector) -> None:
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch("multivectors from different spaces")

    @property
    def grades(self) -> set[int]:
        return {bin(m).count("1") for m in self.coords}

    @property
    def degree(self) -> int:
        """Grade of a homogeneous element (0 for the zero element)."""
        g = self.grades
        if len(g) > 1:
            raise DegreeMismatch(f"not homogeneous: grades {sorted(g)}")
        return g.pop() if g else 0

    def grade(self, p: int) -> MultiVector:
        return MultiVector(self.space, {m: c for m, c in self.coords.items() if bin(m).count("1") == p})

    def scalar_part(self) -> QuadExtScalar:
        return self.coords.get(0, self.space.scalar(0))

    def __getitem__(self, mask: int) -> QuadExtScalar:
        return self.coords.get(mask, self.space.scalar(0))

    def __add__(self, other: MultiVector) -> MultiVector:
        self._same(other)
        out = dict(self.coords)
        for m, c in other.coords.items():
            out[m] = out[m] + c if m in out else c
        return MultiVector(self.space, out)

    def __neg__(self) -> MultiVector:
        return MultiVector(self.space, {m: -c for m, c in self.coords.items()})

    def __sub__(self, other: MultiVector) -> MultiVector:
        return self + (-other)

    def __mul__(self, lam: RationalLike | QuadExtScalar) -> MultiVector:
        if isinstance(lam, MultiVector):
            return NotImplemented
        lam = self.space.scalar(lam)
        return MultiVector(self.space, {m: c * lam for m, c in self.coords.items()})

    __rmul__ = __mul__

    def __xor__(self, other: MultiVector) -> MultiVector:
        return wedge(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self.space == other.space and self.coords == other.coords

    def __repr__(self) -> str:
        terms = ", ".join(f"{blade_indices(m)}: {c}" for m, c in sorted(self.coords.items()))
        return f"MultiVector({{{terms}}})"


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    a._same(b)
    out: dict[int, QuadExtScalar] = {}
    for ma, ca in a.coords.items():
        for mb, cb in b.coords.items():
            if ma & mb:
                continue
            term = ca * cb
            if reorder_sign(ma, mb) < 0:
                term = -term
            key = ma | mb
            out[key] = out[key] + term if key in out else term
    return MultiVector(a.space, out)


def wedge_all(vectors: Sequence[MultiVector], space: InnerProductSpace) -> MultiVector:
    out = space.one()
    for v in vectors:
        out = wedge(out, v)
    return out


def pform_inner(a: MultiVector, b: MultiVector) -> QuadExtScalar:
    """``<a, b>`` extended bilinearly from ``det(<w_i, w'_j>)`` on blades."""
    a._same(b)
    if a.coords and b.coords and a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree}")
    total = a.space.scalar(0)
    for ma, ca in a.coords.items():
        for mb, cb in b.coords.items():
            g = a.space.blade_inner(ma, mb)
            if g:
                total = total + ca * cb * g
    return total


def volume_form(space: InnerProductSpace) -> MultiVector:
    """``Omega = e_{0..m-1} / sqrt(det G)``."""
    inv_sqrt = QuadExtScalar(Fraction(0), 1 / space.det, space.det)
    return MultiVector(space, {space.full_mask: inv_sqrt})


def _solve(gram: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    # Gauss-Jordan on a positive definite matrix: pivots never vanish.
    n = len(rhs)
    a = [list(row) + [r] for row, r in zip(gram, rhs)]
    for k in range(n):
        piv = a[k][k]
        for j in range(k, n + 1):
            a[k][j] /= piv
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                for j in range(k, n + 1):
                    a[i][j] -= f * a[k][j]
    return [a[i][n] for i in range(n)]


def hodge_star(a: MultiVector) -> MultiVector:
    """The ``*a`` with ``<*a, b> Omega = a ^ b`` for every ``b`` of complementary grade.

    ``a ^ e_J = c_J e_full = c_J sqrt(D) Omega``, so ``*a`` solves the linear
    system ``G_{m-p} x = sqrt(D) c`` in the induced Gram matrix of grade
    ``m - p``. Rational and radical parts are solved separately. Mixed-grade
    input is handled by linearity.
    """
    space = a.space
    m, full = space.dim, space.full_mask
    out: dict[int, QuadExtScalar] = {}
    for p in sorted(a.grades):
        part = a.grade(p)
        blades, gram = space.grade_gram(m - p)
        c = []
        for mb in blades:
            acc = space.scalar(0)
            for ma, ca in part.coords.items():
                if ma | mb == full and not ma & mb:
                    acc = acc + (ca if reorder_sign(ma, mb) > 0 else -ca)
            c.append(acc)
        # sqrt(D) * (x + y sqrt(D)) = D y + x sqrt(D)
        rat_rhs = [space.det * ci.rad for ci in c]
        rad_rhs = [ci.rat for ci in c]
        xs, ys = _solve(gram, rat_rhs), _solve(gram, rad_rhs)
        for mb, x, y in zip(blades, xs, ys):
            out[mb] = QuadExtScalar(x, y, space.det)
    return MultiVector(space, out)


def star_properties_check(
    space: InnerProductSpace, samples: Iterable[tuple[MultiVector, MultiVector]]
) -> bool:
    """Check on each ``(alpha, beta)`` pair of equal degree ``p``:
    ``**alpha == (-1)^(p(m-p)) alpha``, ``<*alpha, *beta> == <alpha, beta>`` and
    ``<alpha, beta> == *(beta ^ *alpha) == *(alpha ^ *beta)``, plus ``*1 == Omega``."""
    m = space.dim
    if hodge_star(space.one()) != volume_form(space):
        return False
    for alpha, beta in samples:
        p = alpha.degree
        sa, sb = hodge_star(alpha), hodge_star(beta)
        if hodge_star(sa) != alpha * (-1) ** (p * (m - p)):
            return False
        ip = pform_inner(alpha, beta)
        if pform_inner(sa, sb) != ip:
            return False
        if hodge_star(wedge(beta, sa)) != space.one() * ip:
            return False
        if hodge_star(wedge(alpha, sb)) != space.one() * ip:
            return False
    return True


def defining_relation_check(alpha: MultiVector) -> bool:
    """``<*alpha, e_J> Omega == alpha ^ e_J`` for every blade of complementary grade."""
    space = alpha.space
    p = alpha.degree
    star = hodge_star(alpha)
    omega = volume_form(space)
    for mb in space.blades(space.dim - p):
        beta = MultiVector(space, {mb: 1})
        if omega * pform_inner(star, beta) != wedge(alpha, beta):
            return False
    return True


# ---------------------------------------------------------------------------
# Gram-Schmidt through the star
# ---------------------------------------------------------------------------


def span_space(M: MomentTable, k: int) -> InnerProductSpace:
    """``V_k = span(v_0..v_k)`` with Gram matrix from the moment table."""
    try:
        return InnerProductSpace([row[: k + 1] for row in M.moments[: k + 1]])
    except NotPositiveDefinite as exc:
        raise DependentBasis(str(exc)) from exc


def hodge_prime(M: MomentTable, k: int) -> MultiVector:
    """``u'_k = *(v_0 ^ ... ^ v_{k-1})`` inside ``V_k``."""
    space = span_space(M, k)
    return hodge_star(space.blade(range(k)))


def gs_hodge(M: MomentTable, k: int) -> CoeffVector:
    """``u_k = sqrt(d_{k+1,k+1}) / d_{k,k} * u'_k`` as rational coefficients."""
    u = hodge_prime(M, k)
    space = u.space
    factor = QuadExtScalar.sqrt(space.det) / gram_minor(M, k, k)
    out = []
    for i in range(k + 1):
        c = u[1 << i] * factor
        if not c.is_rational():
            raise ArithmeticError(f"coefficient {c} of u_{k} is not rational")
        out.append(c.rat)
    return tuple(out)


def determinant_row_check(M: MomentTable, k: int) -> bool:
    """``<u'_k, v_r> sqrt(d_{k+1,k+1})`` equals the Gram determinant whose last
    row is ``<v_j, v_r>``, for every basis vector ``v_r`` of ``V_k``."""
    u = hodge_prime(M, k)
    space = u.space
    root = QuadExtScalar.sqrt(space.det)
    top = [list(M.moments[i][: k + 1]) for i in range(k)]
    for r in range(k + 1):
        rows = top + [[M[j, r] for j in range(k + 1)]]
        if pform_inner(u, space.basis_vector(r)) * root != bareiss_det(rows):
            return False
    return True
