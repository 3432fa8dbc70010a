"""
Exact evaluation at roots of unity.

Setting the length to 3m and k to 2m (the operator acting on the staircase
monomial x1^(2m) * x2^m) and sending p to a primitive 6m-th root of unity
(so z goes to a primitive 3m-th root and q to a primitive 2m-th root, with
p^(3m) = -1 = q^m) collapses the closed formula to a short expression: up to
a sign and a power of p it is m^2 times a single quantum binomial evaluated
at the root.

Arithmetic happens in Z[x]/Phi_(6m)(x), which is independent of which
primitive root is chosen, so every identity checked here is Galois-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .closed_formula import factors_standard, xi_formula
from .laurent import LaurentScalar, ONE, ZERO, p_pow, q_pow, qbinom, qnum, rho, rho_prime, z_pow
from .magic import magic
from .polyring import check_index
from .report import Recorder, VerifyReport
from .words import xi_oracle


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Dense integer polynomial division; requires exact leading divisions."""
    num = list(num)
    q = [0] * max(0, len(num) - len(den) + 1)
    while True:
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        c, r = divmod(num[-1], den[-1])
        if r:
            raise ArithmeticError("non-monic division step")
        d = len(num) - len(den)
        q[d] = c
        for t, dc in enumerate(den):
            num[t + d] -= c * dc
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the N-th cyclotomic polynomial,
    computed by dividing x^N - 1 by the cyclotomic polynomials of the proper
    divisors of N.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(12)
    (1, 0, -1, 0, 1)
    """
    if N < 1:
        raise ValueError("N must be positive")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(poly)


class CycElem:
    """An element of Z[x]/Phi_(6m)(x), with x the image of p.

    The residue is stored densely, constant term first, with fewer
    coefficients than the degree of Phi_(6m).
    """

    __slots__ = ("m", "residue")

    def __init__(self, m: int, residue: tuple[int, ...] = ()) -> None:
        if m < 2:
            raise ValueError("m must be at least 2")
        phi = cyclotomic_poly(6 * m)
        res = list(residue)
        if len(res) >= len(phi) - 1:
            _, res = _poly_divmod(res, list(phi))
        while res and res[-1] == 0:
            res.pop()
        self.m = m
        self.residue = tuple(res)

    @classmethod
    def from_int(cls, m: int, n: int) -> CycElem:
        return cls(m, (n,))

    @classmethod
    def zero(cls, m: int) -> CycElem:
        return cls(m)

    @classmethod
    def one(cls, m: int) -> CycElem:
        return cls(m, (1,))

    def is_zero(self) -> bool:
        return not self.residue

    def __bool__(self) -> bool:
        return bool(self.residue)

    def _check_compatible(self, other: CycElem) -> None:
        if self.m != other.m:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other: object) -> CycElem:
        if isinstance(other, int):
            other = CycElem.from_int(self.m, other)
        if not isinstance(other, CycElem):
            return NotImplemented
        self._check_compatible(other)
        n = max(len(self.residue), len(other.residue))
        res = [0] * n
        for t, c in enumerate(self.residue):
            res[t] += c
        for t, c in enumerate(other.residue):
            res[t] += c
        return CycElem(self.m, tuple(res))

    __radd__ = __add__

    def __neg__(self) -> CycElem:
        return CycElem(self.m, tuple(-c for c in self.residue))

    def __sub__(self, other: object) -> CycElem:
        if isinstance(other, int):
            other = CycElem.from_int(self.m, other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> CycElem:
        if isinstance(other, int):
            return CycElem(self.m, tuple(other * c for c in self.residue))
        if not isinstance(other, CycElem):
            return NotImplemented
        self._check_compatible(other)
        if self.is_zero() or other.is_zero():
            return CycElem.zero(self.m)
        res = [0] * (len(self.residue) + len(other.residue) - 1)
        for t1, c1 in enumerate(self.residue):
            for t2, c2 in enumerate(other.residue):
                res[t1 + t2] += c1 * c2
        return CycElem(self.m, tuple(res))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycElem.from_int(self.m, other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.m == other.m and self.residue == other.residue

    def __hash__(self) -> int:
        return hash((self.m, self.residue))

    def divisible_by(self, n: int) -> bool:
        """Whether the element is n times another element of the ring."""
        return all(c % n == 0 for c in self.residue)

    def render(self) -> str:
        if not self.residue:
            return "0"
        return LaurentScalar(dict(enumerate(self.residue))).render()

    def to_json(self) -> dict:
        return {"m": self.m, "residue": list(self.residue)}

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CycElem(m={self.m}, '{self.render()}')"


def specialize(f: LaurentScalar, m: int) -> CycElem:
    """Send p to a primitive 6m-th root of unity: reduce each exponent mod 6m,
    then reduce the resulting polynomial mod Phi_(6m)."""
    if m < 2:
        raise ValueError("m must be at least 2")
    N = 6 * m
    coeffs = [0] * N
    for e, c in f.coefficients().items():
        coeffs[e % N] += c
    return CycElem(m, tuple(coeffs))


@dataclass(frozen=True)
class RouParams:
    """Derived quantities for the staircase evaluation at level m.

    d is floor(m/2); bottom is d-1 except when m, a and b are all odd, where
    it is d.  alpha and beta are the standard-regime halves of a and b, and
    alpha + beta = m - 1 + bottom always holds.
    """

    m: int
    a: int
    b: int
    alpha: int
    beta: int
    d: int
    bottom: int

    @classmethod
    def from_ma(cls, m: int, a: int) -> RouParams:
        if m < 2:
            raise ValueError("m must be at least 2")
        if not 0 <= a <= 3 * m - 1:
            raise ValueError(f"a={a} out of range 0..{3 * m - 1}")
        b = 3 * m - a - 1
        alpha = (a - 1) // 2
        beta = (b - 1) // 2
        d = m // 2
        bottom = d if (m % 2 and a % 2 and b % 2) else d - 1
        return cls(m, a, b, alpha, beta, d, bottom)

    @property
    def in_nonzero_range(self) -> bool:
        return self.bottom <= self.alpha <= self.m - 1


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


def xi_rou_formula(m: int, a: int, i: int) -> CycElem:
    """The staircase scalar at a primitive root of unity, by the direct formula.

    Zero exactly when a <= m-2 or a >= 2m+1; otherwise a sign, m^2, powers of
    p, and one quantum binomial.  The value does not depend on i.
    """
    check_index(i)
    p = RouParams.from_ma(m, a)
    if a <= m - 2 or a >= 2 * m + 1:
        return CycElem.zero(m)
    blah_exp = {
        (0, 0): -2 * p.beta**2 - 6 * p.beta - 4,
        (0, 1): -2 * p.beta**2 - 2 * p.beta,
        (1, 0): -2 * p.beta**2 - 5 * p.beta - 3 + 3 * p.d,
        (1, 1): -2 * p.beta**2 - 3 * p.beta - 1,
    }[(m % 2, a % 2)]
    sign = ONE if (p.d + a + p.beta) % 2 == 0 else -ONE
    value = (
        sign
        * (m * m)
        * z_pow(2 * m)
        * q_pow(_binom2(p.d + 1) - _binom2(p.alpha + 1) - _binom2(p.beta + 1))
        * qbinom(m - 1 - p.bottom, p.beta - p.bottom)
        * p_pow(blah_exp)
    )
    return specialize(value, m)


def xi_rou_corollary(m: int, a: int, i: int) -> CycElem:
    """The same scalar written purely in terms of beta and d; only defined in
    the nonzero range."""
    check_index(i)
    p = RouParams.from_ma(m, a)
    if not p.in_nonzero_range:
        raise ValueError(f"a={a} has alpha={p.alpha} outside {p.bottom}..{m - 1}")
    beta, d = p.beta, p.d
    blah_exp = {
        (0, 0): beta**2 + 3 * beta * d - d - 1,
        (0, 1): beta**2 + 3 * beta * d + 4 * beta - 7 * d + 3,
        (1, 0): beta**2 - 9 * beta * d - 2 * beta - 7 * d - 2,
        (1, 1): beta**2 - 9 * beta * d - 3 * beta - 7 * d - 3,
    }[(m % 2, a % 2)]
    sign = ONE if (d + beta + 1) % 2 == 0 else -ONE
    value = sign * (m * m) * qbinom(m - 1 - p.bottom, beta - p.bottom) * p_pow(blah_exp)
    return specialize(value, m)


def _s(n: int) -> LaurentScalar:
    return ONE if n % 2 == 0 else -ONE


def rou_lemma_suite(m: int) -> VerifyReport:
    """Check every quantum-number, rho, magic and factor identity that holds
    after sending q to a primitive 2m-th root of unity (p to a 6m-th root).

    Returns a report with one counterexample entry per failed identity.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    rec = Recorder()
    d = m // 2

    def sp(f: LaurentScalar) -> CycElem:
        return specialize(f, m)

    def eq(label: tuple, lhs: LaurentScalar, rhs: LaurentScalar) -> None:
        rec.eq(label, sp(lhs), sp(rhs))

    # quantum numbers: [m] = 0, [m-1] = 1, mirror and both periods
    eq(("qnum-m", m), qnum(m), ZERO)
    eq(("qnum-m-1", m), qnum(m - 1), ONE)
    for k in range(-2 * m, 2 * m + 1):
        eq(("mirror", m, k), qnum(m - k), qnum(k))
        eq(("period", m, k), qnum(k + m), -qnum(k))
        eq(("period2", m, k), qnum(k + 2 * m), qnum(k))
    # alternating binomial column; the boundary j = m fails (its defining
    # product degenerates to [m]/[m] there), so the sweep stops at m-1
    for j in range(0, m):
        eq(("binom-2m-1", m, j), qbinom(2 * m - 1, j), ONE if j % 2 == 0 else -ONE)

    if m % 2 == 0:
        eq(("rho-trig-even", m), rho(m - 1), m * q_pow(d * (m - 1)))
        eq(("rho-squared", m), rho(m - 1) * rho(m - 1), LaurentScalar.from_int(-m * m))
        eq(("rho-split-even", m), rho(m - 1), rho(d) * rho(d - 1))
        eq(("rho-step-even", m), rho(d), 2 * q_pow(d) * rho(d - 1))
    else:
        eq(("rho-trig-odd", m), rho(m - 1), LaurentScalar.from_int((-1) ** d * m))
        eq(("rho-split-odd", m), rho(m - 1), rho(d) * rho(d))
    eq(("rho-prime-m-1", m), rho_prime(m - 1), LaurentScalar.from_int(m))

    # rho(alpha) rho(beta) against the single binomial, over the whole sweep
    for a in range(1, 3 * m - 1):
        p = RouParams.from_ma(m, a)
        lhs = rho(p.alpha) * rho(p.beta)
        rhs = rho(p.bottom) * rho(m - 1) * qbinom(m - 1 - p.bottom, p.alpha - p.bottom)
        eq(("rho-product", m, a), lhs, rhs)

    # magic at the root, per parity of m
    one_minus_q2 = ONE - q_pow(2)
    if m % 2 == 0:
        for beta in range(d - 1, m):
            eq(("magic-even-0", m, beta), magic(3 * d, 4 * d, beta, 0),
               _s(beta + d - 1) * q_pow(_binom2(d)) * rho(d - 1))
            eq(("magic-even-1", m, beta), magic(3 * d, 4 * d, beta, -1) * one_minus_q2,
               _s(beta + d) * q_pow(_binom2(d + 1)) * rho(d))
            eq(("magic-even-3", m, beta),
               q_pow(beta) * magic(3 * d, 4 * d - 1, beta, -1) * one_minus_q2,
               _s(beta + d) * q_pow(_binom2(d + 1)) * rho(d))
    else:
        for beta in range(d, m):
            eq(("magic-odd-odd", m, beta), magic(3 * d + 2, 4 * d + 2, beta, -1),
               _s(beta + d) * q_pow(_binom2(d + 1)) * rho(d))
        for beta in range(d - 1, m):
            eq(("magic-even-even-1", m, beta), magic(3 * d + 1, 4 * d + 2, beta, 1),
               _s(beta + d - 1) * q_pow(_binom2(d)) * rho(d - 1))
            eq(("magic-even-even-2", m, beta),
               magic(3 * d + 1, 4 * d + 2, beta, 0) * one_minus_q2,
               _s(beta + d) * q_pow(_binom2(d + 1)) * rho(d))
            eq(("magic-even-even-3", m, beta),
               q_pow(beta) * magic(3 * d + 1, 4 * d + 1, beta, 0) * one_minus_q2,
               _s(beta + d) * q_pow(_binom2(d + 1)) * rho(d))

    # the assembled gamma block and the easy remaining factors, at k = 2m
    k = 2 * m
    ell = 3 * m
    for a in range(max(1, m - 1), min(2 * m, 3 * m - 2) + 1):
        p = RouParams.from_ma(m, a)
        cexp = _binom2(d) if (a % 2 == 0 and p.b % 2 == 0) else _binom2(d + 1)
        expected = (
            _s(d + p.b + 1)
            * (m * m)
            * qbinom(m - 1 - p.bottom, p.alpha - p.bottom)
            * q_pow(cexp - _binom2(p.alpha + 1) - _binom2(p.beta + 1))
        )
        for i in (1, 2, 3):
            fac = factors_standard(a, p.b, i, k)
            eq(("gamma-block", m, a, i), fac.mu * fac.gamma1 * fac.gamma2 * fac.gamma3, expected)
            eq(("kappa1", m, a, i), fac.kappa1, p_pow(4 * m))
            eq(("kappa2", m, a, i), fac.kappa2, ONE)
            eq(("lambda5", m, a, i), fac.lambda5, ONE)

    return rec.report("rou-lemmas", {"m": m})


def xi_rou_specialized(m: int, a: int, i: int, method: str = "formula") -> CycElem:
    """Specialize a full-length evaluation at (a, 3m-a-1, i, 2m) to the root.

    method 'formula' goes through the closed formula, 'oracle' through the
    brute-force operator composition.
    """
    b = 3 * m - a - 1
    if b < 0:
        raise ValueError(f"a={a} out of range 0..{3 * m - 1}")
    if method == "formula":
        return specialize(xi_formula(a, b, i, 2 * m), m)
    if method == "oracle":
        return specialize(xi_oracle(a, b, i, 2 * m), m)
    raise ValueError(f"unknown method {method!r}")
