"""Acceptance criteria 1-10, each as one test that prints a PASS/FAIL line.

Everything is compared with ``==`` on exact rationals (or exact elements of
``Q(sqrt(D))``); there is no tolerance anywhere.

    pytest tests/test_acceptance.py -v -s
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from math import factorial

import pytest

from orthogs import classical, detkit, exterior, gschmidt, verify
from orthogs.classical import MomentFunctional, Polynomial
from orthogs.ratcore import QuadExtScalar

MAX_DEGREE = 8
HODGE_K = 5
INSTANCES = 100
DET_SIZE = 6
SEED = 42

GRID = verify.grid()
TABLES = {verify.describe(F): (F, F.table(MAX_DEGREE + 1)) for F in GRID}


@pytest.fixture
def announce(capsys):
    def emit(number, title, failures, cases, extra=""):
        status = "PASS" if not failures else "FAIL"
        line = f"[criterion {number:>2}] {status} {title} ({cases} cases{extra})"
        if failures:
            line += f": first failure {failures[0]}"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def test_criterion_01_path_equality(announce):
    start = time.perf_counter()
    failures, cases = [], 0
    for name, (F, M) in TABLES.items():
        for k in range(MAX_DEGREE + 1):
            cases += 1
            det = gschmidt.gs_determinant(M, k)
            if gschmidt.gs_recursive(M, k) != det:
                failures.append(f"{name} n={k}: recursive != determinant")
            if k <= HODGE_K and exterior.gs_hodge(M, k) != det:
                failures.append(f"{name} n={k}: hodge != determinant")
    elapsed = time.perf_counter() - start
    if elapsed >= 30:
        failures.append(f"took {elapsed:.1f} s")
    announce(1, "gs_recursive = gs_determinant = gs_hodge", failures, cases, f", {elapsed:.2f} s")


def test_criterion_02_scaling_relations(announce):
    failures, cases = [], 0
    for name, (F, M) in TABLES.items():
        for n in range(MAX_DEGREE + 1):
            cases += 1
            gs = Polynomial(F.basis, gschmidt.gs_recursive(M, n))
            if gs != classical.closed_form(F, n) * classical.scaling_factor(F, n):
                failures.append(f"{name} n={n}")
    # the factors themselves, written out independently of the library
    for n in range(MAX_DEGREE + 1):
        cases += 1
        lag = MomentFunctional.laguerre(Fraction(1, 2))
        jac = MomentFunctional.jacobi(1, 2)
        if (
            classical.scaling_factor(MomentFunctional.hermite(), n) != Fraction(factorial(n), 2**n)
            or classical.scaling_factor(lag, n) != (-1) ** n * factorial(n)
            or classical.scaling_factor(jac, n)
            != Fraction((-1) ** n * factorial(n) * factorial(n + 3), factorial(2 * n + 3))
        ):
            failures.append(f"scaling factor n={n}")
    announce(2, "GS output is a fixed multiple of the closed forms", failures, cases)


def test_criterion_03_orthogonality(announce):
    failures, cases = [], 0
    for name, (F, _) in TABLES.items():
        polys = [classical.gs_polynomial(F, n) for n in range(MAX_DEGREE + 1)]
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                cases += 1
                value = classical.family_inner(F, polys[i].coeffs, polys[j].coeffs)
                if value != 0:
                    failures.append(f"{name} <u_{i}, u_{j}> = {value}")
    announce(3, "<u_i, u_j> = 0 for i < j <= 8", failures, cases)


def _nonzero_rational(rng, lo, hi, den):
    while True:
        x = verify.random_rational(rng, lo, hi, den)
        if x:
            return x


def test_criterion_04_determinant_identities(announce):
    start = time.perf_counter()
    rng = random.Random(f"{SEED}:acceptance-det")
    sizes = [rng.randint(1, DET_SIZE) for _ in range(INSTANCES)]
    failures, cases = [], 0

    def check(label, ok, arg):
        nonlocal cases
        cases += 1
        if not ok:
            failures.append(f"{label} at {arg}")

    for n in sizes:
        z = verify.random_distinct(rng, n)
        check("vandermonde", detkit.vandermonde_delta(z) == detkit.bareiss_det(detkit.vandermonde_matrix(z)), z)
    for n in sizes:
        m = rng.randint(0, n)
        check("binomial ratio", detkit.eset_ratio(n, m) == detkit.binomial_ratio_oracle(n, m), (n, m))
    for n in sizes:
        z = verify.random_distinct(rng, n)
        core = detkit.pochhammer_matrix_det(z)
        check("pochhammer core", core == detkit.bareiss_det(detkit.pochhammer_matrix(z)), z)
    for n in sizes:
        z = verify.random_distinct(rng, n, positive=True)
        check("gamma", detkit.det_gamma(z).canonical() == detkit.det_gamma_oracle(z), z)
    for n in sizes:
        z = verify.random_distinct(rng, n, positive=True)
        w = verify.random_rational(rng, 1, 20, 4)
        check("beta", detkit.det_beta(z, w).canonical() == detkit.det_beta_oracle(z, w), (z, w))
    done = 0
    while done < INSTANCES:
        z = verify.random_distinct(rng, sizes[done])
        w = _nonzero_rational(rng, -12, 12, 5)
        if any(zj + w + r == 0 for zj in z for r in range(len(z))):
            continue
        done += 1
        closed = detkit.pochhammer_ratio_det(z, w)
        check("ratio vs bareiss", closed == detkit.bareiss_det(detkit.pochhammer_ratio_matrix(z, w)), (z, w))
        check("ratio vs recursive", closed == detkit.ratio_det_recursive_oracle(z, w), (z, w))
    elapsed = time.perf_counter() - start
    if elapsed >= 20:
        failures.append(f"took {elapsed:.1f} s")
    announce(4, "determinant closed forms match Bareiss", failures, cases, f", {elapsed:.2f} s")


def test_criterion_05_binomial_ratio(announce):
    failures = [
        (n, m)
        for n in range(1, 11)
        for m in range(n + 1)
        if detkit.eset_ratio(n, m) != Fraction(factorial(n), factorial(m) * factorial(n - m))
    ]
    announce(5, "eset_ratio(n, m) = C(n, m) for n <= 10", failures, sum(n + 1 for n in range(1, 11)))


def test_criterion_06_hermite_parity(announce):
    hermite = MomentFunctional.hermite()
    failures, cases = [], 0
    for n in range(MAX_DEGREE + 1):
        cases += 1
        if classical.hermite_parity_gs(n) != classical.gs_polynomial(hermite, n):
            failures.append(f"h_{n}")
        if not classical.hermite_zero_cofactors(n):
            failures.append(f"opposite-parity cofactor nonzero at degree {n}")
    for half in range(MAX_DEGREE // 2 + 1):
        ratios = classical.hermite_rearranged_ratios(2 * half)
        for m in range(half + 1):
            cases += 1
            want = Fraction(
                factorial(2 * half), 2 ** (2 * (half - m)) * factorial(half - m) * factorial(2 * m)
            )
            if ratios[m] != want:
                failures.append(f"d ratio degree {2 * half}, m={m}: {ratios[m]} != {want}")
    announce(6, "Hermite parity construction and cofactor ratios", failures, cases)


def test_criterion_07_hodge_star(announce):
    rng = random.Random(f"{SEED}:acceptance-hodge")
    failures, cases = [], 0
    for i in range(INSTANCES):
        m = 1 + i % HODGE_K
        space = exterior.InnerProductSpace(verify.random_pd_gram(rng, m))
        samples = [
            (verify.random_form(rng, space, p), verify.random_form(rng, space, p)) for p in range(m + 1)
        ]
        cases += 1
        if not exterior.star_properties_check(space, samples):
            failures.append(f"star properties, gram {space.gram}")
        if not all(exterior.defining_relation_check(a) for a, _ in samples):
            failures.append(f"defining relation, gram {space.gram}")
        for a, b in samples:
            lam = QuadExtScalar(verify.random_rational(rng), verify.random_rational(rng), space.det)
            if exterior.hodge_star(a * lam + b) != exterior.hodge_star(a) * lam + exterior.hodge_star(b):
                failures.append(f"linearity, gram {space.gram}")
                break
    for name, (F, M) in TABLES.items():
        for k in range(HODGE_K + 1):
            cases += 1
            u = exterior.hodge_prime(M, k)
            if any(exterior.pform_inner(u, u.space.basis_vector(i)) != 0 for i in range(k)):
                failures.append(f"<u', v_i> != 0 {name} k={k}")
            top = exterior.pform_inner(u, u.space.basis_vector(k))
            if exterior.pform_inner(u, u) != gschmidt.gram_minor(M, k, k):
                failures.append(f"<u', u'> {name} k={k}")
            if top * top != M.leading_minor(k + 1):
                failures.append(f"<u', v_k>^2 {name} k={k}")
    announce(7, "Hodge star properties, u' orthogonality and norm identities", failures, cases)


def test_criterion_08_permutation_invariance(announce):
    rng = random.Random(f"{SEED}:acceptance-perm")
    failures, cases = [], 0
    for name, (F, M) in TABLES.items():
        for k in range(2, MAX_DEGREE + 1):
            for perm in verify.random_permutations(rng, k, 5):
                cases += 1
                if not gschmidt.permutation_invariance_check(M, k, perm):
                    failures.append(f"{name} k={k} perm={perm}")
    announce(8, "gs_determinant unchanged under reordering", failures, cases)


# Golden data, each value first produced by gs_recursive and then frozen.
GOLDEN_LAGUERRE_2 = (Fraction(2), Fraction(-4), Fraction(1))
GOLDEN_HERMITE_2 = (Fraction(-1, 2), Fraction(0), Fraction(1))
GOLDEN_JACOBI_1 = (Fraction(0), Fraction(1))


def test_criterion_09_spot_values(announce):
    failures = []
    lag = MomentFunctional.laguerre(0)
    herm = MomentFunctional.hermite()
    jac = MomentFunctional.jacobi(0, 0)
    legendre = classical.preset("legendre")

    def via_recursive(F, n):
        return Polynomial(F.basis, gschmidt.gs_recursive(F.table(n + 1), n))

    if via_recursive(lag, 2).coeffs != GOLDEN_LAGUERRE_2:
        failures.append("l_2^0 (recursive)")
    if classical.gs_polynomial(lag, 2).coeffs != GOLDEN_LAGUERRE_2:
        failures.append("l_2^0")
    if via_recursive(herm, 2).coeffs != GOLDEN_HERMITE_2:
        failures.append("h_2 (recursive)")
    if classical.gs_polynomial(herm, 2).coeffs != GOLDEN_HERMITE_2:
        failures.append("h_2")
    recursive_j1 = classical.to_monomial(via_recursive(jac, 1) * (1 / classical.scaling_factor(jac, 1)))
    if recursive_j1.coeffs != GOLDEN_JACOBI_1:
        failures.append("J_1^(0,0) (recursive)")
    if classical.to_monomial(classical.closed_jacobi(1, 0, 0)).coeffs != GOLDEN_JACOBI_1:
        failures.append("J_1^(0,0)")
    for n in range(MAX_DEGREE + 1):
        p = classical.closed_form(legendre, n)
        if p(1) != 1 or classical.to_monomial(p)(1) != 1:
            failures.append(f"P_{n}(1)")
        if via_recursive(legendre, n) != p * classical.scaling_factor(legendre, n):
            failures.append(f"P_{n} vs recursive")
    announce(9, "spot values", failures, 6 + 2 * (MAX_DEGREE + 1))


def _verify_subprocess(out, hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    argv = [sys.executable, "-m", "orthogs", "verify", "--suite", "all", "--seed", "42", "--out", str(out)]
    return subprocess.run(argv, env=env, capture_output=True, text=True).returncode


def test_criterion_10_cli_determinism(announce, tmp_path):
    first, second = tmp_path / "first.txt", tmp_path / "second.txt"
    failures = []
    codes = (_verify_subprocess(first, 0), _verify_subprocess(second, 1))
    if codes != (0, 0):
        failures.append(f"exit codes {codes}")
    elif first.read_bytes() != second.read_bytes():
        failures.append("reports differ")
    elif "0 failed" not in first.read_text():
        failures.append("report lists failures")
    announce(10, "verify --suite all --seed 42 is deterministic", failures, 2)
