"""Gram-Schmidt over an abstract basis ``v_0, v_1, ...`` known only through
its table of inner products.

A :class:`MomentTable` stores ``<v_i, v_j> / kappa`` for one shared constant
``kappa``. Both constructions below only ever form ratios of inner products
or of same-size Gram determinants, so ``kappa`` cancels and is kept purely
as metadata.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .detkit import bareiss_det
from .errors import DependentBasis, IndexOutOfRange
from .ratcore import GammaProduct, RationalLike

CoeffVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class MomentTable:
    moments: tuple[tuple[Fraction, ...], ...]
    scale: GammaProduct = field(default_factory=GammaProduct)

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.moments)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("moment table must be a non-empty square matrix")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"moment table not symmetric at ({i}, {j})")
        object.__setattr__(self, "moments", rows)

    @classmethod
    def from_function(cls, size: int, inner, scale: GammaProduct | None = None) -> MomentTable:
        rows = [[inner(i, j) for j in range(size)] for i in range(size)]
        return cls(tuple(map(tuple, rows)), scale or GammaProduct())

    @property
    def size(self) -> int:
        return len(self.moments)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.moments[i][j]

    def truncate(self, size: int) -> MomentTable:
        return MomentTable(tuple(row[:size] for row in self.moments[:size]), self.scale)

    def permuted(self, order: Sequence[int]) -> MomentTable:
        """Table for the reordered basis ``(v_order[0], v_order[1], ...)``."""
        return MomentTable(
            tuple(tuple(self.moments[a][b] for b in order) for a in order), self.scale
        )

    def scaled(self, c: RationalLike) -> MomentTable:
        return MomentTable(tuple(tuple(c * x for x in row) for row in self.moments), self.scale)

    def inner(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """Bilinear ``<sum u_i v_i, sum v_j v_j>`` through the table."""
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.moments[i]
                total += ui * sum((vj * row[j] for j, vj in enumerate(v) if vj), Fraction(0))
        return total

    def leading_minor(self, k: int) -> Fraction:
        """Determinant of the top-left ``k x k`` block (1 for ``k = 0``)."""
        return bareiss_det([row[:k] for row in self.moments[:k]])


def gram_minor(M: MomentTable, k: int, omit: int) -> Fraction:
    """Cofactor ``d_{k,omit}``: rows ``v_0..v_{k-1}`` against columns
    ``v_0..v_k`` with ``v_omit`` removed. ``d_{0,0} = 1``."""
    if not 0 <= omit <= k <= M.size - 1:
        raise IndexOutOfRange(f"need 0 <= omit <= k < {M.size}, got k={k}, omit={omit}")
    cols = [c for c in range(k + 1) if c != omit]
    return bareiss_det([[M[r, c] for c in cols] for r in range(k)])


def gs_recursive(M: MomentTable, k: int) -> CoeffVector:
    """``u_k = v_k - sum_i <v_k, u_i>/<u_i, u_i> u_i`` with every ``u_i`` built
    the same way."""
    return gs_recursive_sequence(M, k)[k]


def gs_recursive_sequence(M: MomentTable, k: int) -> list[CoeffVector]:
    if not 0 <= k < M.size:
        raise IndexOutOfRange(f"degree {k} outside a table of size {M.size}")
    us: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for n in range(k + 1):
        u = [Fraction(0)] * (k + 1)
        u[n] = Fraction(1)
        vn = list(u)
        for ui, nrm in zip(us, norms):
            c = M.inner(vn, ui) / nrm
            for j in range(n):
                u[j] -= c * ui[j]
        nrm = M.inner(u, u)
        if nrm == 0:
            raise DependentBasis(f"<u_{n}, u_{n}> vanishes")
        us.append(u)
        norms.append(nrm)
    return [tuple(u[: n + 1]) for n, u in enumerate(us)]


def gs_determinant(M: MomentTable, k: int) -> CoeffVector:
    """Cofactor expansion ``c_i = (-1)^(i+k) d_{k,i} / d_{k,k}``."""
    dkk = gram_minor(M, k, k)
    if dkk == 0:
        raise DependentBasis(f"d_{{{k},{k}}} vanishes")
    return tuple(
        (-1) ** (i + k) * gram_minor(M, k, i) / dkk if i < k else Fraction(1)
        for i in range(k + 1)
    )


def orthogonality_check(M: MomentTable, vectors: Sequence[Sequence[Fraction]]) -> bool:
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            if M.inner(vectors[a], vectors[b]) != 0:
                return False
    return True


def norm_identity_check(M: MomentTable, k: int) -> bool:
    """``<u_k, u_k> == d_{k+1,k+1} / d_{k,k}``."""
    u = gs_determinant(M, k)
    return M.inner(u, u) == M.leading_minor(k + 1) / M.leading_minor(k)


def permutation_invariance_check(M: MomentTable, k: int, perm: Sequence[int]) -> bool:
    """Reorder ``v_0..v_{k-1}`` by ``perm`` (``v_k`` stays last) and compare
    ``u_k`` after mapping the coefficients back."""
    if sorted(perm) != list(range(k)):
        raise ValueError(f"{perm} is not a permutation of 0..{k - 1}")
    order = list(perm) + [k]
    moved = gs_determinant(M.truncate(k + 1).permuted(order), k)
    back = [Fraction(0)] * (k + 1)
    for pos, idx in enumerate(order):
        back[idx] = moved[pos]
    return tuple(back) == gs_determinant(M, k)
