"""
Identity sweeps: every algebraic fact the package relies on, run exhaustively
over a bounded parameter window and reported with counterexamples.

Each suite is a function taking the shared Bounds plus a worker count and
returning a VerifyReport.  Reports are deterministic for fixed bounds:
counterexamples are sorted and the only nondeterministic field is the
timestamp added at serialization time.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from . import closed_formula as cf
from . import rou
from .laurent import ONE, ZERO, LaurentScalar, exact_div, q_pow, qbinom, z_pow
from .magic import (
    TELESCOPE_VARIANTS,
    chu_vandermonde_special,
    gen_interval_X,
    gen_interval_Xprime,
    magic,
    magic_genfun,
    magic_genfun_for3,
    magic_recursion_sides,
    magic_symmetry_check,
    reformed_telescope_even_partial_sums,
    reformed_telescope_partial_sums,
    telescope_sides,
    xprime_difference,
)
from .polyring import TriPoly, demazure, normalize_index, s_action, sigma, tau, x_var
from .report import Counterexample, Recorder, VerifyReport
from .words import xi_oracle, xi_recursive


@dataclass
class Bounds:
    """Sweep bounds; None means the suite's default."""

    max_len: int | None = None
    max_nu: int | None = None
    max_m: int | None = None

    def len_(self, default: int) -> int:
        return self.max_len if self.max_len is not None else default

    def nu(self, default: int) -> int:
        return self.max_nu if self.max_nu is not None else default

    def m(self, default: int) -> int:
        return self.max_m if self.max_m is not None else default


def _monomials(max_deg: int) -> list[TriPoly]:
    out = []
    for d in range(max_deg + 1):
        for e1 in range(d + 1):
            for e2 in range(d - e1 + 1):
                out.append(TriPoly.monomial((e1, e2, d - e1 - e2)))
    return out


def _abi_range(max_len: int):
    for ell in range(1, max_len + 1):
        for a in range(ell):
            yield a, ell - 1 - a


# -- suite: operator relations -------------------------------------------------


def suite_relations(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    """Quadratic, braid, twisted Leibniz, antiinvariance and the sigma/tau
    intertwiners, exhaustively over monomials of degree at most 6."""
    rec = Recorder()
    max_deg = 6
    monos = _monomials(max_deg)
    z1 = z_pow(1)
    for f in monos:
        for i in (1, 2, 3):
            j = normalize_index(i + 1)
            rec.eq(("dd-zero", i, _mono_key(f)), demazure(i, demazure(i, f)), TriPoly.zero())
            rec.eq(
                ("braid", i, _mono_key(f)),
                demazure(i, demazure(j, demazure(i, f))) * z1,
                demazure(j, demazure(i, demazure(j, f))),
            )
            rec.eq(("anti", i, _mono_key(f)), demazure(i, f), -demazure(i, s_action(i, f)))
            rec.eq(("sigma", i, _mono_key(f)), sigma(demazure(i, f)), demazure(j, sigma(f)))
            rec.eq(
                ("tau", i, _mono_key(f)),
                tau(demazure(i, f)),
                demazure(normalize_index(-i), tau(f)) * (-z1),
            )
    for f, g in itertools.product(monos, monos):
        if sum(_mono_key(f)) + sum(_mono_key(g)) > max_deg:
            continue
        for i in (1, 2, 3):
            rec.eq(
                ("leibniz", i, _mono_key(f), _mono_key(g)),
                demazure(i, f * g),
                demazure(i, f) * g + s_action(i, f) * demazure(i, g),
            )
    return rec.report("relations", {"max_deg": max_deg})


def _mono_key(f: TriPoly) -> tuple:
    return next(iter(f.terms()))


# -- suite: the four symmetries -------------------------------------------------


def suite_symmetries(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    max_len = bounds.len_(12)
    rec = Recorder()
    for a, b in _abi_range(max_len):
        ell = a + b + 1
        for k in range(ell + 1):
            rec.eq(
                ("k-reflect-1", a, b, k),
                cf.xi_formula(a, b, 1, k),
                -z_pow(2 * k - ell) * cf.xi_formula(a, b, 1, ell - k),
            )
            rec.eq(
                ("k-reflect-23", a, b, k),
                cf.xi_formula(a, b, 2, k),
                -z_pow(ell - k) * cf.xi_formula(a, b, 3, ell - k),
            )
        for i in (1, 2, 3):
            rec.eq(
                ("rotate", a, b, i),
                cf.xi_formula(a, b, i, ell),
                cf.xi_formula(a, b, normalize_index(i + 1), 0),
            )
        if ell % 2 == 0:
            rec.eq(("midpoint-zero", a, b), cf.xi_formula(a, b, 1, ell // 2), ZERO)
    for c in range(max_len):
        ell = c + 1
        sgn = ONE if ell % 2 == 0 else -ONE
        for i in (1, 2, 3):
            for k in range(ell + 1):
                rec.eq(
                    ("bar-flip", c, i, k),
                    cf.xi_formula(c, 0, i, k).bar(),
                    sgn * z_pow(ell) * cf.xi_formula(0, c, normalize_index(-i - 1), ell - k),
                )
    return rec.report("symmetries", {"max_len": max_len})


# -- suite: recursion formulas --------------------------------------------------


def suite_recursions(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    """The seven length-reducing recursion formulas, evaluated on closed-formula
    values over the sweep window."""
    max_len = bounds.len_(12)
    rec = Recorder()
    xi = cf.xi_formula
    for a, b in _abi_range(max_len):
        ell = a + b + 1
        rec.eq(("i2-top-zero", a, b), xi(a, b, 2, ell), ZERO)
        if a > 0 and b > 0:
            for k in range(1, ell - 1):
                rec.eq(
                    ("i2-step", a, b, k),
                    xi(a, b, 2, k),
                    xi(a, b - 1, 3, k) - z_pow(2 * ell - 3 * k - 2) * xi(a, b - 1, 1, k),
                )
            for k in range((ell + 1) // 2, ell + 1):
                total = ZERO
                for c in range(ell - k, k):
                    total = total + z_pow(k - 1 - c) * xi(a, b - 1, 2, c)
                rec.eq(("i1-sum", a, b, k), xi(a, b, 1, k), total)
            rec.eq(("i2-special", a, b), xi(a, b, 2, ell - 1), xi(a, b - 1, 3, ell - 1))
        if a > 0 and b == 0:
            for k in range(1, ell - 1):
                rec.eq(
                    ("i2-step-b0", a, k),
                    xi(a, 0, 2, k),
                    xi(a - 1, 0, 1, k) - z_pow(ell - 1) * xi(a - 1, 0, 3, k),
                )
            for k in range((ell + 1) // 2, ell + 1):
                total = ZERO
                for c in range(ell - k, k):
                    total = total + z_pow(k - 1 - c) * xi(a - 1, 0, 3, c)
                rec.eq(("i1-sum-b0", a, k), xi(a, 0, 1, k), total)
            rec.eq(("i2-special-b0", a), xi(a, 0, 2, ell - 1), xi(a - 1, 0, 1, ell - 1))
    return rec.report("recursions", {"max_len": max_len})


# -- suite: formula vs oracle vs recursion ---------------------------------------


def _triple_equal_unit(args: tuple[int, int]) -> tuple[int, list[tuple]]:
    a, b = args
    ell = a + b + 1
    checks = 0
    bad: list[tuple] = []
    for i in (1, 2, 3):
        for k in range(ell + 1):
            oracle = xi_oracle(a, b, i, k)
            formula = cf.xi_formula(a, b, i, k)
            recursion = xi_recursive(a, b, i, k)
            checks += 2
            if formula != oracle:
                bad.append((("formula-vs-oracle", a, b, i, k), str(formula), str(oracle)))
            if recursion != oracle:
                bad.append((("recursion-vs-oracle", a, b, i, k), str(recursion), str(oracle)))
            if ell <= 8:
                checks += 1
                plain = xi_oracle(a, b, i, k, truncate=False)
                if plain != oracle:
                    bad.append((("truncation", a, b, i, k), str(plain), str(oracle)))
    return checks, bad


def suite_formula_vs_oracle(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    """Exact agreement of the closed formula, the recursion and the brute-force
    oracle on every quadruple up to the length bound, plus truncated-vs-plain
    oracle agreement for lengths up to 8."""
    max_len = bounds.len_(12)
    rec = Recorder()
    units = list(_abi_range(max_len))
    for checks, bad in _run_units(_triple_equal_unit, units, jobs):
        rec.checks += checks
        rec.counterexamples.extend(Counterexample(*t) for t in bad)
    return rec.report("formula-vs-oracle", {"max_len": max_len, "jobs": jobs})


def _run_units(fn, units, jobs: int):
    if jobs <= 1:
        for u in units:
            yield fn(u)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(fn, units, chunksize=max(1, len(units) // (4 * jobs)))


# -- suite: golden values ---------------------------------------------------------


def _from_q_terms(terms: list[tuple[int, int]]) -> LaurentScalar:
    out = ZERO
    for coeff, exp in terms:
        out = out + coeff * q_pow(exp)
    return out


MAGIC_GOLDEN_843 = _from_q_terms(
    [(1, -48), (1, -36), (2, -34), (3, -32), (2, -30), (1, -28),
     (1, -20), (2, -18), (3, -16), (2, -14), (1, -12), (1, 0)]
)
MAGIC_GOLDEN_833 = _from_q_terms(
    [(1, -57), (1, -55), (1, -53), (1, -51), (1, -41), (2, -39), (3, -37),
     (3, -35), (2, -33), (1, -31), (1, -21), (1, -19), (1, -17), (1, -15)]
)


def suite_magic_golden(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    rec = Recorder()
    got843 = magic(8, 4, 3, 0)
    got833 = magic(8, 3, 3, 0)
    rec.eq(("magic", 8, 4, 3, 0), got843, MAGIC_GOLDEN_843)
    rec.eq(("magic", 8, 3, 3, 0), got833, MAGIC_GOLDEN_833)
    rec.eq(("magic-render", 8, 4, 3, 0), got843.render(), MAGIC_GOLDEN_843.render())
    rec.eq(("magic-render", 8, 3, 3, 0), got833.render(), MAGIC_GOLDEN_833.render())
    rec.eq(("magic-at-one", 8, 4, 3, 0), got843.at_one(), comb(6, 3))
    return rec.report("magic-golden", {})


def suite_calibration(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    """Derive the six length-one values straight from the operator definition
    and show that the two -z^{-1} entries are the only ones compatible with
    the k <-> l-k symmetries."""
    rec = Recorder()
    x = {j: x_var(j) for j in (1, 2, 3)}
    minus_zinv = -z_pow(-1)
    expected = {
        (1, 1): ONE, (1, 2): minus_zinv, (1, 3): ZERO,
        (2, 2): ONE, (2, 3): minus_zinv, (2, 1): ZERO,
        (3, 3): ONE, (3, 1): minus_zinv, (3, 2): ZERO,
    }
    for (i, j), want in expected.items():
        got = demazure(i, x[j])
        rec.ok(("definition", i, j), got.is_scalar(), f"non-scalar {got}")
        rec.eq(("definition", i, j), got.constant_coefficient(), want)
    # the symmetry Xi(0,0,1,0) = -z^{-1} Xi(0,0,1,1) forces the corrected value
    forced_10 = -z_pow(-1) * xi_oracle(0, 0, 1, 1)
    rec.eq(("forced", 0, 0, 1, 0), xi_oracle(0, 0, 1, 0), forced_10)
    rec.ok(("rules-out-minus-z", 1), -z_pow(1) != forced_10, "-z indistinguishable")
    # likewise Xi(0,0,2,0) = -z Xi(0,0,3,1) forces the i = 3 entry
    forced_31 = exact_div(xi_oracle(0, 0, 2, 0), -z_pow(1))
    rec.eq(("forced", 0, 0, 3, 1), xi_oracle(0, 0, 3, 1), forced_31)
    rec.ok(("rules-out-minus-z", 3), -z_pow(1) != forced_31, "-z indistinguishable")
    # the closed formula agrees with the corrected table
    for i in (1, 2, 3):
        for k in (0, 1):
            rec.eq(("formula-base", i, k), cf.xi_formula(0, 0, i, k), xi_oracle(0, 0, i, k))
    # expansion of the i = 1 operator on powers of x1
    for ell in range(1, 7):
        for k in range((ell + 1) // 2, ell + 1):
            want = TriPoly.zero()
            for c in range(ell - k, k):
                want = want + TriPoly.monomial((c, ell - 1 - c, 0), z_pow(k - 1 - c))
            rec.eq(("staircase-expansion", ell, k),
                   demazure(1, TriPoly.monomial((k, ell - k, 0))), want)
    return rec.report("calibration", {})


# -- suites: magic ----------------------------------------------------------------


def suite_magic_genfun(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    max_nu = bounds.nu(10)
    rec = Recorder()
    for nu in range(2, max_nu + 1):
        for eps in (-1, 0, 1):
            for k in range(1, 2 * nu + eps):
                in_low = 1 <= k <= nu - 1
                in_high = nu + 1 + eps <= k <= 2 * nu - 1 + eps
                if not (in_low or in_high):
                    continue
                intervals = (
                    gen_interval_X(nu, k, eps) if in_low else gen_interval_Xprime(nu, k, eps)
                )
                members = [iv.members() for iv in intervals]
                rec.ok(
                    ("disjoint", nu, k, eps),
                    not set(members[0]) & set(members[1]),
                    f"{members}",
                )
                if in_high:
                    outer, removed = xprime_difference(nu, k, eps)
                    rec.ok(
                        ("difference-view", nu, k, eps),
                        set(removed.members()) <= set(outer.members())
                        and set(outer.members()) - set(removed.members())
                        == set(members[0]) | set(members[1]),
                        "set difference mismatch",
                    )
                series = magic_genfun(nu, k, eps, nu)
                for beta in range(nu + 1):
                    rec.eq(("coeff", nu, k, eps, beta),
                           series.coefficient(beta), magic(nu, k, beta, eps))
            for k in range(2, 2 * nu + eps + 1):
                if not (1 <= k - 1 <= nu - 1 or nu + 1 + eps <= k - 1 <= 2 * nu - 1 + eps):
                    continue
                series = magic_genfun_for3(nu, k, eps, nu)
                for beta in range(nu + 1):
                    rec.eq(("coeff-for3", nu, k, eps, beta),
                           series.coefficient(beta),
                           q_pow(beta) * magic(nu, k - 1, beta, eps))
    return rec.report("magic-genfun", {"max_nu": max_nu})


def suite_magic_symmetry(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    max_nu = bounds.nu(10)
    rec = Recorder()
    for nu in range(1, max_nu + 1):
        for eps in (-1, 0, 1):
            L = 2 * nu + eps
            for k in range(1, L):
                if nu <= k <= nu + eps:
                    continue
                for beta in range(nu + 1):
                    rec.ok(
                        ("symmetry", nu, eps, k, beta),
                        magic_symmetry_check(nu, beta, eps, k),
                        f"magic({nu},{k},{beta},{eps}) vs q^(beta(2k-L)) magic({nu},{L - k},{beta},{eps})",
                    )
    return rec.report("magic-symmetry", {"max_nu": max_nu})


def suite_chu_vandermonde(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    """The special closed values of magic, plus the underlying double-binomial
    convolution identity itself."""
    max_nu = bounds.nu(8)
    rec = Recorder()
    for nu in range(1, max_nu + 1):
        for eps in (-1, 0, 1):
            for k in (2 * nu - 1 + eps, nu + 1 + eps):
                if k < 1:
                    continue
                for beta in range(nu + 1):
                    rec.eq(
                        ("special-value", nu, k, eps, beta),
                        magic(nu, k, beta, eps),
                        chu_vandermonde_special(nu, k, beta, eps),
                    )
    for M in range(0, 13):
        for N in range(0, 13 - M):
            for beta in range(M + N + 1):
                total = ZERO
                for j in range(beta + 1):
                    total = total + qbinom(M, beta - j) * qbinom(N, j) * q_pow(j * (M + N))
                rec.eq(("convolution", M, N, beta), total, q_pow(N * beta) * qbinom(M + N, beta))
    return rec.report("chu-vandermonde", {"max_nu": max_nu})


def suite_magic_recursion(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    max_nu = bounds.nu(8)
    rec = Recorder()
    for nu in range(2, max_nu + 1):
        for eps in (-1, 0):
            for k in range(1, 2 * nu + 2):
                for beta in range(nu + 2):
                    lhs, rhs = magic_recursion_sides(nu, k, beta, eps)
                    rec.eq(("recursion", nu, k, beta, eps), lhs, rhs)
    return rec.report("magic-recursion", {"max_nu": max_nu})


def suite_telescope(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    max_nu = bounds.nu(8)
    rec = Recorder()
    windows = {
        "sum": lambda nu: range(nu, 2 * nu),
        "even_even": lambda nu: range(nu + 1, 2 * nu + 1),
        "odd_odd": lambda nu: range(nu, 2 * nu - 1),
        "odd_even": lambda nu: range(nu, 2 * nu),
    }
    for variant in TELESCOPE_VARIANTS:
        for nu in range(2, max_nu + 1):
            for k in windows[variant](nu):
                for beta in range(nu + 1):
                    lhs, rhs = telescope_sides(variant, nu, k, beta)
                    rec.eq((variant, nu, k, beta), lhs, rhs)
    for B in range(0, max_nu):
        try:
            reformed_telescope_partial_sums(B)
            rec.ok(("reformed", B), True)
        except AssertionError as exc:
            rec.ok(("reformed", B), False, str(exc))
        try:
            reformed_telescope_even_partial_sums(B)
            rec.ok(("reformed-even", B), True)
        except AssertionError as exc:
            rec.ok(("reformed-even", B), False, str(exc))
    return rec.report("telescope", {"max_nu": max_nu})


# -- suites: roots of unity ---------------------------------------------------------


def suite_rou_lemmas(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    max_m = bounds.m(8)
    rec = Recorder()
    for m in range(2, max_m + 1):
        sub = rou.rou_lemma_suite(m)
        rec.checks += sub.checks
        rec.counterexamples.extend(sub.counterexamples)
    return rec.report("rou-lemmas", {"max_m": max_m})


def _rou_xi_unit(args: tuple[int, int]) -> tuple[int, list[tuple]]:
    m, a = args
    checks = 0
    bad: list[tuple] = []

    def chk(label, lhs, rhs):
        nonlocal checks
        checks += 1
        if lhs != rhs:
            bad.append((label, str(lhs), str(rhs)))

    values = [rou.xi_rou_specialized(m, a, i, "oracle") for i in (1, 2, 3)]
    chk(("i-independent", m, a, 2), values[1], values[0])
    chk(("i-independent", m, a, 3), values[2], values[0])
    ref = values[0]
    in_range = m - 1 <= a <= 2 * m
    for i in (1, 2, 3):
        chk(("oracle-vs-formula", m, a, i), rou.xi_rou_specialized(m, a, i, "formula"), ref)
        chk(("direct", m, a, i), rou.xi_rou_formula(m, a, i), ref)
        if in_range:
            chk(("short-form", m, a, i), rou.xi_rou_corollary(m, a, i), ref)
    chk(("zero-locus", m, a), ref.is_zero(), not in_range)
    if in_range:
        chk(("m2-divides", m, a), ref.divisible_by(m * m), True)
    return checks, bad


def suite_rou_xi(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    """End-to-end at the root of unity: direct formula, beta/d-only corollary,
    specialized closed formula and specialized oracle all agree; values vanish
    exactly for a outside [m-1, 2m], are i-independent and divisible by m^2."""
    max_m = bounds.m(6)
    rec = Recorder()
    units = [(m, a) for m in range(2, max_m + 1) for a in range(3 * m)]
    for checks, bad in _run_units(_rou_xi_unit, units, jobs):
        rec.checks += checks
        rec.counterexamples.extend(Counterexample(*t) for t in bad)
    return rec.report("rou-xi", {"max_m": max_m, "jobs": jobs})


def suite_q1_degeneration(bounds: Bounds, jobs: int = 1) -> VerifyReport:
    """p -> 1 sends magic to an ordinary binomial coefficient and kills every
    word scalar of length at least 4."""
    max_nu = bounds.nu(10)
    max_len = bounds.len_(10)
    rec = Recorder()
    for nu in range(2, max_nu + 1):
        for eps in (-1, 0, 1):
            for k in range(1, 2 * nu + 2):
                for beta in range(nu + 1):
                    rec.eq(("magic-at-one", nu, k, beta, eps),
                           magic(nu, k, beta, eps).at_one(), comb(nu - 2, beta))
    for a, b in _abi_range(max_len):
        ell = a + b + 1
        if ell < 4:
            continue
        for i in (1, 2, 3):
            for k in range(ell + 1):
                rec.eq(("xi-at-one", a, b, i, k), cf.xi_formula(a, b, i, k).at_one(), 0)
    return rec.report("q1-degeneration", {"max_nu": max_nu, "max_len": max_len})


SUITES = {
    "relations": suite_relations,
    "symmetries": suite_symmetries,
    "recursions": suite_recursions,
    "formula-vs-oracle": suite_formula_vs_oracle,
    "magic-golden": suite_magic_golden,
    "magic-genfun": suite_magic_genfun,
    "magic-symmetry": suite_magic_symmetry,
    "chu-vandermonde": suite_chu_vandermonde,
    "magic-recursion": suite_magic_recursion,
    "telescope": suite_telescope,
    "rou-lemmas": suite_rou_lemmas,
    "rou-xi": suite_rou_xi,
    "q1-degeneration": suite_q1_degeneration,
    "calibration": suite_calibration,
}


def run_suite(name: str, bounds: Bounds | None = None, jobs: int = 1) -> VerifyReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    return SUITES[name](bounds or Bounds(), jobs)
