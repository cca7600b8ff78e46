"""Identity suites behind ``orthogs verify``.

Each check walks a deterministic list of cases (seeded per check, so suites
can run in any combination and still report identically) and records the
first counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable

from . import classical, detkit, exterior, gschmidt
from .classical import MomentFunctional
from .ratcore import (
    GammaProduct,
    QuadExtScalar,
    binomial,
    format_rational,
    gamma_canonicalize,
    parse_rational,
    pochhammer_concat_check,
)

LAGUERRE_ALPHAS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(5, 2))
JACOBI_PARAMS = (
    (Fraction(0), Fraction(0)),
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(-1, 2), Fraction(-1, 2)),
    (Fraction(1), Fraction(2)),
)
HODGE_MAX_K = 5
SUITES = ("ratcore", "detkit", "gschmidt", "classical", "exterior")


def grid() -> list[MomentFunctional]:
    """Families and parameters exercised by the acceptance suites."""
    out = [MomentFunctional.laguerre(a) for a in LAGUERRE_ALPHAS]
    out += [MomentFunctional.jacobi(a, b) for a, b in JACOBI_PARAMS]
    out.append(MomentFunctional.hermite())
    return out


def describe(F: MomentFunctional) -> str:
    if F.family == "hermite":
        return "hermite"
    if F.family == "laguerre":
        return f"laguerre(alpha={format_rational(F.alpha)})"
    return f"jacobi(alpha={format_rational(F.alpha)}, beta={format_rational(F.beta)})"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.cases} cases)"
        if self.counterexample:
            text += f": first counterexample {self.counterexample}"
        return text


def run_check(name: str, cases: Iterable[tuple], predicate: Callable[..., bool]) -> CheckResult:
    """Apply ``predicate(*case)`` to every case tuple."""
    count = 0
    first = None
    for case in cases:
        count += 1
        args = case
        try:
            ok = predicate(*args)
        except Exception as exc:  # a raised error is a failed identity
            ok = False
            detail = f"{type(exc).__name__}: {exc}"
        else:
            detail = ""
        if not ok and first is None:
            first = f"{_show(args)} {detail}".strip()
    return CheckResult(name, first is None, count, first)


def single(values: Iterable) -> list[tuple]:
    return [(v,) for v in values]


def _show(args: tuple) -> str:
    def one(x):
        if isinstance(x, Fraction):
            return format_rational(x)
        if isinstance(x, MomentFunctional):
            return describe(x)
        if isinstance(x, (list, tuple)):
            return "(" + ", ".join(one(y) for y in x) + ")"
        return str(x)

    return "[" + "; ".join(one(a) for a in args) + "]"


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def random_rational(rng: random.Random, lo: int = -12, hi: int = 12, den: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_distinct(rng: random.Random, n: int, positive: bool = False) -> tuple[Fraction, ...]:
    out: list[Fraction] = []
    while len(out) < n:
        x = random_rational(rng, 1, 30, 4) if positive else random_rational(rng)
        if x not in out:
            out.append(x)
    return tuple(out)


def random_pd_gram(rng: random.Random, m: int) -> list[list[Fraction]]:
    """``A^T A + I`` for a random rational ``A``: always positive definite."""
    a = [[random_rational(rng, -3, 3, 3) for _ in range(m)] for _ in range(m)]
    return [
        [sum((a[r][i] * a[r][j] for r in range(m)), Fraction(0)) + (i == j) for j in range(m)]
        for i in range(m)
    ]


def random_form(rng: random.Random, space: exterior.InnerProductSpace, p: int) -> exterior.MultiVector:
    coords = {}
    for mask in space.blades(p):
        if rng.random() < 0.7:
            rad = random_rational(rng, -3, 3, 3) if rng.random() < 0.3 else 0
            coords[mask] = QuadExtScalar(random_rational(rng, -5, 5, 4), rad, space.det)
    return exterior.MultiVector(space, coords)


def random_permutations(rng: random.Random, k: int, count: int) -> list[tuple[int, ...]]:
    if k <= 4:
        perms = list(permutations(range(k)))
        rng.shuffle(perms)
        base = perms[:count]
        return base + [rng.choice(perms) for _ in range(count - len(base))]
    out = []
    for _ in range(count):
        p = list(range(k))
        rng.shuffle(p)
        out.append(tuple(p))
    return out


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_ratcore(seed: int, instances: int) -> list[CheckResult]:
    rng = _rng(seed, "pochhammer")
    poch_cases = [(random_rational(rng), rng.randint(0, 12), rng.randint(0, 12)) for _ in range(instances)]

    rng = _rng(seed, "gamma")

    def rand_gamma() -> GammaProduct:
        factors = tuple((random_rational(rng, 1, 40, 4), rng.randint(-2, 2)) for _ in range(3))
        return GammaProduct(random_rational(rng), factors, random_rational(rng, -6, 6, 3))

    gamma_cases = [(rand_gamma(), rand_gamma()) for _ in range(instances)]

    def canon_ok(g: GammaProduct, h: GammaProduct) -> bool:
        cg = gamma_canonicalize(g)
        idem = gamma_canonicalize(cg) == cg
        mult = gamma_canonicalize(g * h) == gamma_canonicalize(cg * gamma_canonicalize(h))
        in_range = all(0 < a <= 1 for a, _ in cg.factors) and 0 <= cg.two_exponent < 1
        return idem and mult and in_range

    rng = _rng(seed, "quadext")
    field_cases = []
    for _ in range(instances):
        d = Fraction(rng.randint(2, 30), rng.randint(1, 5))
        x, y, z = (QuadExtScalar(random_rational(rng), random_rational(rng), d) for _ in range(3))
        field_cases.append((x, y, z))

    def field_ok(x: QuadExtScalar, y: QuadExtScalar, z: QuadExtScalar) -> bool:
        checks = [
            (x + y) + z == x + (y + z),
            (x * y) * z == x * (y * z),
            x * (y + z) == x * y + x * z,
            x + y == y + x and x * y == y * x,
            x * x.conjugate() == x.rat**2 - x.rad**2 * x.radicand,
        ]
        if y:
            checks.append((x / y) * y == x)
        return all(checks)

    rng = _rng(seed, "serial")
    serial_cases = [Fraction(rng.randint(-10**12, 10**12), rng.randint(1, 10**9)) for _ in range(instances)]

    return [
        run_check("ratcore.pochhammer_concat", poch_cases, pochhammer_concat_check),
        run_check("ratcore.gamma_canonical_idempotent_multiplicative", gamma_cases, canon_ok),
        run_check("ratcore.quadext_field_axioms", field_cases, field_ok),
        run_check(
            "ratcore.rational_round_trip",
            single(serial_cases),
            lambda q: parse_rational(format_rational(q)) == q,
        ),
    ]


def _det_sizes(rng: random.Random, size: int, instances: int) -> list[int]:
    return [rng.randint(1, size) for _ in range(instances)]


def suite_detkit(seed: int, size: int, instances: int) -> list[CheckResult]:
    rng = _rng(seed, "vandermonde")
    vander = [random_distinct(rng, n) for n in _det_sizes(rng, size, instances)]
    shifts = [(z, random_rational(rng)) for z in vander]

    rng = _rng(seed, "binomial")
    binom_cases = []
    for _ in range(instances):
        n = rng.randint(1, size)
        binom_cases.append((n, rng.randint(0, n)))

    rng = _rng(seed, "gamma")
    poch_cases = [random_distinct(rng, n) for n in _det_sizes(rng, size, instances)]
    gamma_cases = [random_distinct(rng, n, positive=True) for n in _det_sizes(rng, size, instances)]

    rng = _rng(seed, "beta")
    beta_cases = [
        (random_distinct(rng, n, positive=True), random_rational(rng, 1, 20, 4))
        for n in _det_sizes(rng, size, instances)
    ]

    rng = _rng(seed, "ratio")
    ratio_cases = []
    while len(ratio_cases) < instances:
        z = random_distinct(rng, rng.randint(1, size))
        w = random_rational(rng)
        if w != 0 and all(zj + w + r != 0 for zj in z for r in range(len(z))):
            ratio_cases.append((z, w))

    def swap_negates(z: tuple[Fraction, ...]) -> bool:
        if len(z) < 2:
            return True
        swapped = (z[1], z[0]) + z[2:]
        return (
            detkit.vandermonde_delta(swapped) == -detkit.vandermonde_delta(z)
            and detkit.pochhammer_matrix_det(swapped) == -detkit.pochhammer_matrix_det(z)
        )

    return [
        run_check(
            "detkit.vandermonde_product_vs_bareiss",
            single(vander),
            lambda z: detkit.vandermonde_delta(z) == detkit.bareiss_det(detkit.vandermonde_matrix(z)),
        ),
        run_check(
            "detkit.shift_invariance",
            shifts,
            lambda z, c: detkit.vandermonde_delta(detkit.shift(z, c)) == detkit.vandermonde_delta(z),
        ),
        run_check("detkit.antisymmetry", single(vander), swap_negates),
        run_check(
            "detkit.binomial_ratio_vs_bareiss",
            binom_cases,
            lambda n, m: detkit.eset_ratio(n, m) == detkit.binomial_ratio_oracle(n, m) == binomial(n, m),
        ),
        run_check(
            "detkit.binomial_ratio_table",
            [(n, m) for n in range(1, 11) for m in range(n + 1)],
            lambda n, m: detkit.eset_ratio(n, m) == binomial(n, m),
        ),
        run_check(
            "detkit.pochhammer_core_vs_bareiss",
            single(poch_cases),
            lambda z: detkit.pochhammer_matrix_det(z) == detkit.bareiss_det(detkit.pochhammer_matrix(z)),
        ),
        run_check(
            "detkit.gamma_det_vs_entrywise_oracle",
            single(gamma_cases),
            lambda z: detkit.det_gamma(z).canonical() == detkit.det_gamma_oracle(z),
        ),
        run_check(
            "detkit.beta_det_vs_entrywise_oracle",
            beta_cases,
            lambda z, w: detkit.det_beta(z, w).canonical() == detkit.det_beta_oracle(z, w),
        ),
        run_check(
            "detkit.beta_gamma_consistency",
            beta_cases,
            _beta_gamma_consistent,
        ),
        run_check(
            "detkit.pochhammer_ratio_vs_bareiss",
            ratio_cases,
            lambda z, w: detkit.pochhammer_ratio_det(z, w)
            == detkit.bareiss_det(detkit.pochhammer_ratio_matrix(z, w)),
        ),
        run_check(
            "detkit.pochhammer_ratio_vs_recursive_oracle",
            ratio_cases,
            lambda z, w: detkit.pochhammer_ratio_det(z, w) == detkit.ratio_det_recursive_oracle(z, w),
        ),
    ]


def _beta_gamma_consistent(z: tuple[Fraction, ...], w: Fraction) -> bool:
    n = len(z)
    b = detkit.det_beta(z, w)
    undo = GammaProduct(
        factors=tuple((zj + w + n - 1, 1) for zj in z) + tuple((w + j, -1) for j in range(n))
    )
    g = detkit.det_gamma(z)
    lhs = gamma_canonicalize(b.scale * undo)
    return lhs == g.scale and b.rational_part == g.rational_part


def suite_gschmidt(seed: int, max_degree: int) -> list[CheckResult]:
    tables = [(F, F.table(max_degree + 1)) for F in grid()]
    degree_cases = [(F, M, k) for F, M in tables for k in range(max_degree + 1)]

    def paths_agree(F, M, k) -> bool:
        det = gschmidt.gs_determinant(M, k)
        if gschmidt.gs_recursive(M, k) != det:
            return False
        return k > HODGE_MAX_K or exterior.gs_hodge(M, k) == det

    def monic(F, M, k) -> bool:
        return gschmidt.gs_determinant(M, k)[-1] == 1 and gschmidt.gs_recursive(M, k)[-1] == 1

    def orthogonal(F, M) -> bool:
        us = [gschmidt.gs_determinant(M, k) for k in range(max_degree + 1)]
        return gschmidt.orthogonality_check(M, us)

    rng = _rng(seed, "perm")
    perm_cases = [
        (F, M, k, perm)
        for F, M in tables
        for k in range(2, max_degree + 1)
        for perm in random_permutations(rng, k, 5)
    ]

    rng = _rng(seed, "scaling")
    scale_cases = [(F, M, random_rational(rng, 1, 50, 7)) for F, M in tables]

    def scale_invariant(F, M, c) -> bool:
        S = M.scaled(c)
        return all(
            gschmidt.gs_determinant(S, k) == gschmidt.gs_determinant(M, k)
            and gschmidt.gs_recursive(S, k) == gschmidt.gs_recursive(M, k)
            for k in range(max_degree + 1)
        )

    return [
        run_check("gschmidt.path_equality", degree_cases, paths_agree),
        run_check("gschmidt.monic", degree_cases, monic),
        run_check("gschmidt.orthogonality", tables, orthogonal),
        run_check(
            "gschmidt.norm_identity",
            degree_cases,
            lambda F, M, k: gschmidt.norm_identity_check(M, k),
        ),
        run_check(
            "gschmidt.permutation_invariance",
            perm_cases,
            lambda F, M, k, perm: gschmidt.permutation_invariance_check(M, k, perm),
        ),
        run_check("gschmidt.positive_scaling_invariance", scale_cases, scale_invariant),
    ]


def suite_classical(seed: int, max_degree: int) -> list[CheckResult]:
    degree_cases = [(F, n) for F in grid() for n in range(max_degree + 1)]
    hermite = MomentFunctional.hermite()
    legendre = classical.preset("legendre")
    hermite_degrees = single(range(max_degree + 1))

    def exact_moment_ok(F: MomentFunctional, n: int) -> bool:
        return all(
            gamma_canonicalize(F.scale() * classical.moment(F, i, n))
            == gamma_canonicalize(F.exact_moment(i, n))
            for i in range(n + 1)
        )

    def ratios_ok(degree: int) -> bool:
        n = degree // 2
        bareiss = classical.hermite_rearranged_ratios(degree)
        alpha = Fraction(1, 2) if degree % 2 else Fraction(-1, 2)
        lag = [classical.laguerre_cofactor_ratio(n, m, alpha) for m in range(n + 1)]
        closed = [classical.hermite_cofactor_ratio(degree, m) for m in range(n + 1)]
        return bareiss == lag == closed and classical.hermite_zero_cofactors(degree)

    spot = [
        ("l_2^0", lambda: classical.gs_polynomial(MomentFunctional.laguerre(0), 2).coeffs == (2, -4, 1)),
        ("h_2", lambda: classical.gs_polynomial(hermite, 2).coeffs == (Fraction(-1, 2), 0, 1)),
        ("J_1^(0,0)", lambda: classical.to_monomial(classical.closed_jacobi(1, 0, 0)).coeffs == (0, 1)),
    ]

    return [
        run_check("classical.moment_scale_factorization", degree_cases, exact_moment_ok),
        run_check("classical.scaling_relations", degree_cases, classical.scaling_check),
        run_check(
            "classical.degree_and_monic",
            degree_cases,
            lambda F, n: (p := classical.gs_polynomial(F, n)).degree == n and p.leading == 1,
        ),
        run_check(
            "classical.hermite_parity_vs_generic",
            hermite_degrees,
            lambda n: classical.hermite_parity_gs(n) == classical.gs_polynomial(hermite, n),
        ),
        run_check("classical.hermite_cofactor_ratios", hermite_degrees, ratios_ok),
        run_check(
            "classical.legendre_at_one",
            single(range(max_degree + 1)),
            lambda n: classical.to_monomial(classical.closed_form(legendre, n))(1) == 1,
        ),
        run_check("classical.spot_values", single(name for name, _ in spot), lambda name: dict(spot)[name]()),
    ]


def suite_exterior(seed: int, dim: int, instances: int, max_degree: int) -> list[CheckResult]:
    rng = _rng(seed, "star")
    star_cases = []
    for i in range(instances):
        m = 1 + i % dim
        space = exterior.InnerProductSpace(random_pd_gram(rng, m))
        samples = [(random_form(rng, space, p), random_form(rng, space, p)) for p in range(m + 1)]
        star_cases.append((space, samples))

    def defining(space, samples) -> bool:
        return all(exterior.defining_relation_check(a) for a, _ in samples)

    def linear(space, samples) -> bool:
        for a, b in samples:
            lam = QuadExtScalar(random_rational(rng), random_rational(rng), space.det)
            lhs = exterior.hodge_star(a * lam + b)
            if lhs != exterior.hodge_star(a) * lam + exterior.hodge_star(b):
                return False
        return True

    top = min(max_degree, HODGE_MAX_K)
    hodge_cases = [(F, F.table(top + 1), k) for F in grid() for k in range(top + 1)]

    def star_prefix_orthogonal(F, M, k) -> bool:
        u = exterior.hodge_prime(M, k)
        return all(
            exterior.pform_inner(u, u.space.basis_vector(i)) == 0 for i in range(k)
        )

    def norms(F, M, k) -> bool:
        u = exterior.hodge_prime(M, k)
        dkk = gschmidt.gram_minor(M, k, k)
        top_inner = exterior.pform_inner(u, u.space.basis_vector(k))
        return (
            exterior.pform_inner(u, u) == dkk
            and top_inner * top_inner == M.leading_minor(k + 1)
            and top_inner == QuadExtScalar.sqrt(u.space.det)
        )

    return [
        run_check("exterior.star_properties", star_cases, exterior.star_properties_check),
        run_check("exterior.defining_relation", star_cases, defining),
        run_check("exterior.linearity", star_cases, linear),
        run_check("exterior.star_prefix_orthogonal", hodge_cases, star_prefix_orthogonal),
        run_check("exterior.norm_identities", hodge_cases, norms),
        run_check(
            "exterior.determinant_row_identity",
            hodge_cases,
            lambda F, M, k: exterior.determinant_row_check(M, k),
        ),
        run_check(
            "exterior.gs_hodge_equals_determinant",
            hodge_cases,
            lambda F, M, k: exterior.gs_hodge(M, k) == gschmidt.gs_determinant(M, k),
        ),
    ]


def run_suites(
    suite: str = "all",
    *,
    max_degree: int = 8,
    seed: int = 42,
    size: int = 6,
    instances: int = 100,
    dim: int = 5,
) -> list[CheckResult]:
    names = SUITES if suite == "all" else (suite,)
    results: list[CheckResult] = []
    for name in names:
        if name == "ratcore":
            results += suite_ratcore(seed, instances)
        elif name == "detkit":
            results += suite_detkit(seed, size, instances)
        elif name == "gschmidt":
            results += suite_gschmidt(seed, max_degree)
        elif name == "classical":
            results += suite_classical(seed, max_degree)
        elif name == "exterior":
            results += suite_exterior(seed, dim, instances, max_degree)
        else:
            raise ValueError(f"unknown suite {name!r}")
    return results


def report(results: list[CheckResult]) -> str:
    failed = sum(not r.passed for r in results)
    lines = [r.line() for r in results]
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"
