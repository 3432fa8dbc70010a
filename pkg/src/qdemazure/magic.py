"""
The `magic` sum of double quantum binomials and its identities.

magic(nu, k, beta, eps) is the finite sum over j of

    qbinom(k-1, beta-j) * qbinom(nu-k-1, j) * q^(j*(-3*nu + 2*k - 2*eps)),

an alternate q-deformation of binomial(nu-2, beta).  The offset eps is always
one of -1, 0, 1.  No closed form is known, but the generating function over
beta factors as a product of (1 + q^lambda * x) with lambda running over a
union of two parity intervals, and that factorization drives everything else
here: the k <-> L-k symmetry, the Chu-Vandermonde special cases, a recursion
in nu, and four telescoping-sum identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentScalar, ONE, ZERO, q_pow, qbinom, qnum


def _check_eps(eps: int) -> int:
    if eps not in (-1, 0, 1):
        raise ValueError(f"eps must be -1, 0 or 1, got {eps}")
    return eps


def term(nu: int, k: int, beta: int, eps: int, j: int) -> LaurentScalar:
    """One summand of magic; vanishes for j < 0 or j > beta."""
    _check_eps(eps)
    if j < 0 or j > beta:
        return ZERO
    return qbinom(k - 1, beta - j) * qbinom(nu - k - 1, j) * q_pow(j * (-3 * nu + 2 * k - 2 * eps))


@lru_cache(maxsize=None)
def magic(nu: int, k: int, beta: int, eps: int) -> LaurentScalar:
    """Sum the terms over j; zero for beta < 0, one for beta = 0.

    >>> magic(5, 3, 0, 0) == 1
    True
    >>> magic(5, 3, -2, 0).is_zero()
    True
    """
    _check_eps(eps)
    total = ZERO
    for j in range(0, beta + 1):
        total = total + term(nu, k, beta, eps, j)
    return total


# -- generating functions ----------------------------------------------------


@dataclass(frozen=True)
class ParityInterval:
    """The integers from lo to hi inclusive that share the parity of lo.

    Empty when hi < lo.  The endpoints must agree mod 2.
    """

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if (self.hi - self.lo) % 2 != 0:
            raise ValueError(f"endpoints {self.lo}, {self.hi} differ in parity")

    def is_empty(self) -> bool:
        return self.hi < self.lo

    def members(self) -> tuple[int, ...]:
        return tuple(range(self.lo, self.hi + 1, 2))

    def __len__(self) -> int:
        return 0 if self.is_empty() else (self.hi - self.lo) // 2 + 1

    def __iter__(self):
        return iter(self.members())

    def __contains__(self, r: int) -> bool:
        return self.lo <= r <= self.hi and (r - self.lo) % 2 == 0


def gen_interval_X(nu: int, k: int, eps: int) -> list[ParityInterval]:
    """The two disjoint parity intervals whose product expansion generates
    magic(nu, k, ., eps) for small k (window 1 <= k <= nu-1)."""
    _check_eps(eps)
    if not 1 <= k <= nu - 1:
        raise ValueError(f"k={k} outside the window 1..{nu - 1}")
    return [
        ParityInterval(2 - k, k - 2),
        ParityInterval(3 * k - 4 * nu - 2 * eps + 2, k - 2 * nu - 2 * eps - 2),
    ]


def gen_interval_Xprime(nu: int, k: int, eps: int) -> list[ParityInterval]:
    """The large-k counterpart of gen_interval_X (window nu+1+eps <= k <= 2nu-1+eps)."""
    _check_eps(eps)
    if not nu + 1 + eps <= k <= 2 * nu - 1 + eps:
        raise ValueError(f"k={k} outside the window {nu + 1 + eps}..{2 * nu - 1 + eps}")
    return [
        ParityInterval(2 - k, k - 2 * nu - 2 * eps - 2),
        ParityInterval(3 * k - 4 * nu - 2 * eps + 2, k - 2),
    ]


def xprime_difference(nu: int, k: int, eps: int) -> tuple[ParityInterval, ParityInterval]:
    """The set-difference view of gen_interval_Xprime: an outer interval and the
    inner interval removed from it."""
    _check_eps(eps)
    if not nu + 1 + eps <= k <= 2 * nu - 1 + eps:
        raise ValueError(f"k={k} outside the window {nu + 1 + eps}..{2 * nu - 1 + eps}")
    return (
        ParityInterval(2 - k, k - 2),
        ParityInterval(k - 2 * nu - 2 * eps, 3 * k - 4 * nu - 2 * eps),
    )


class GenSeries:
    """A polynomial in a formal variable x, truncated above a fixed bound.

    Coefficients are LaurentScalars; coefficient beta of a product built from
    linear factors (c0 + c1*x) is exact for all beta up to the bound.
    """

    __slots__ = ("bound", "coeffs")

    def __init__(self, bound: int, coeffs: tuple[LaurentScalar, ...]) -> None:
        if bound < 0 or len(coeffs) != bound + 1:
            raise ValueError("need exactly bound+1 coefficients")
        self.bound = bound
        self.coeffs = coeffs

    @classmethod
    def constant(cls, bound: int, value: LaurentScalar | int = 1) -> GenSeries:
        v = value if isinstance(value, LaurentScalar) else LaurentScalar.from_int(value)
        return cls(bound, (v,) + (ZERO,) * bound)

    @classmethod
    def from_factors(cls, lambdas, bound: int) -> GenSeries:
        """The truncated product of (1 + q^lambda * x) over the given exponents."""
        out = cls.constant(bound)
        for lam in lambdas:
            out = out.times_linear(ONE, q_pow(lam))
        return out

    def coefficient(self, beta: int) -> LaurentScalar:
        if not 0 <= beta <= self.bound:
            raise ValueError(f"beta={beta} outside 0..{self.bound}")
        return self.coeffs[beta]

    def times_linear(self, c0: LaurentScalar, c1: LaurentScalar) -> GenSeries:
        """Multiply by (c0 + c1*x), truncating above the bound."""
        prev = self.coeffs
        out = [c0 * prev[0]]
        for b in range(1, self.bound + 1):
            out.append(c0 * prev[b] + c1 * prev[b - 1])
        return GenSeries(self.bound, tuple(out))

    def __add__(self, other: GenSeries) -> GenSeries:
        if not isinstance(other, GenSeries) or other.bound != self.bound:
            return NotImplemented
        return GenSeries(self.bound, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: object) -> GenSeries:
        if isinstance(other, (LaurentScalar, int)):
            s = other if isinstance(other, LaurentScalar) else LaurentScalar.from_int(other)
            return GenSeries(self.bound, tuple(c * s for c in self.coeffs))
        if isinstance(other, GenSeries):
            if other.bound != self.bound:
                raise ValueError("bound mismatch")
            out = []
            for b in range(self.bound + 1):
                acc = ZERO
                for t in range(b + 1):
                    acc = acc + self.coeffs[t] * other.coeffs[b - t]
                out.append(acc)
            return GenSeries(self.bound, tuple(out))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenSeries):
            return NotImplemented
        return self.bound == other.bound and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = ", ".join(c.render() for c in self.coeffs)
        return f"GenSeries(bound={self.bound}, [{body}])"


def magic_genfun(nu: int, k: int, eps: int, bound: int) -> GenSeries:
    """The series whose x^beta coefficient is magic(nu, k, beta, eps).

    Valid on the two k-windows of gen_interval_X / gen_interval_Xprime; the gap
    nu <= k <= nu+eps between them is rejected.
    """
    _check_eps(eps)
    if 1 <= k <= nu - 1:
        intervals = gen_interval_X(nu, k, eps)
    elif nu + 1 + eps <= k <= 2 * nu - 1 + eps:
        intervals = gen_interval_Xprime(nu, k, eps)
    else:
        raise ValueError(f"k={k} is outside both generating-function windows")
    lams = [lam for iv in intervals for lam in iv]
    return GenSeries.from_factors(lams, bound)


def magic_genfun_for3(nu: int, k: int, eps: int, bound: int) -> GenSeries:
    """The series whose x^beta coefficient is q^beta * magic(nu, k-1, beta, eps).

    Same shape as magic_genfun with k replaced by k-1 and every interval
    endpoint shifted up by one.
    """
    _check_eps(eps)
    if 1 <= k - 1 <= nu - 1:
        intervals = [
            ParityInterval(4 - k, k - 2),
            ParityInterval(3 * k - 4 * nu - 2 * eps, k - 2 * nu - 2 * eps - 2),
        ]
    elif nu + 1 + eps <= k - 1 <= 2 * nu - 1 + eps:
        intervals = [
            ParityInterval(4 - k, k - 2 * nu - 2 * eps - 2),
            ParityInterval(3 * k - 4 * nu - 2 * eps, k - 2),
        ]
    else:
        raise ValueError(f"k={k} is outside both generating-function windows")
    lams = [lam for iv in intervals for lam in iv]
    return GenSeries.from_factors(lams, bound)


# -- identities ---------------------------------------------------------------


def magic_symmetry_check(nu: int, beta: int, eps: int, k: int) -> bool:
    """Check magic(nu, k, beta, eps) == q^(beta*(2k-L)) * magic(nu, L-k, beta, eps)
    with L = 2*nu + eps, on the window 1 <= k <= L-1 minus the gap nu..nu+eps."""
    _check_eps(eps)
    L = 2 * nu + eps
    if not 1 <= k <= L - 1:
        raise ValueError(f"k={k} outside 1..{L - 1}")
    if nu <= k <= nu + eps:
        raise ValueError(f"k={k} lies in the excluded gap {nu}..{nu + eps}")
    lhs = magic(nu, k, beta, eps)
    rhs = q_pow(beta * (2 * k - L)) * magic(nu, L - k, beta, eps)
    return lhs == rhs


def chu_vandermonde_special(nu: int, k: int, beta: int, eps: int) -> LaurentScalar:
    """The closed value q^(±(nu-k-1)*beta) * qbinom(nu-2, beta), defined exactly
    when 2*(k - eps) = 3*nu ± (nu - 2); the sign of the exponent matches the
    sign in that condition."""
    _check_eps(eps)
    if 2 * (k - eps) == 3 * nu + (nu - 2):
        sign = 1
    elif 2 * (k - eps) == 3 * nu - (nu - 2):
        sign = -1
    else:
        raise ValueError(f"2(k-eps)={2 * (k - eps)} is not 3nu±(nu-2) for nu={nu}")
    return q_pow(sign * (nu - k - 1) * beta) * qbinom(nu - 2, beta)


def magic_recursion_sides(nu: int, k: int, beta: int, eps: int) -> tuple[LaurentScalar, LaurentScalar]:
    """Both sides of the nu-lowering recursion, for eps in {-1, 0}:

    [beta]*magic(nu,k,beta,eps) ==
        [k-1]*magic(nu-1,k-1,beta-1,eps)
      + q^(2k-3nu-beta-2eps+1)*[nu-k-1]*magic(nu-1,k,beta-1,eps+1).
    """
    if eps not in (-1, 0):
        raise ValueError(f"eps must be -1 or 0, got {eps}")
    lhs = qnum(beta) * magic(nu, k, beta, eps)
    rhs = qnum(k - 1) * magic(nu - 1, k - 1, beta - 1, eps) + (
        q_pow(2 * k - 3 * nu - beta - 2 * eps + 1)
        * qnum(nu - k - 1)
        * magic(nu - 1, k, beta - 1, eps + 1)
    )
    return lhs, rhs


def magic_recursion_check(nu: int, k: int, beta: int, eps: int) -> bool:
    lhs, rhs = magic_recursion_sides(nu, k, beta, eps)
    return lhs == rhs


TELESCOPE_VARIANTS = ("sum", "even_even", "odd_odd", "odd_even")


def telescope_sides(variant: str, nu: int, k: int, beta: int) -> tuple[LaurentScalar, LaurentScalar]:
    """Both sides of one of the four telescoping-sum identities.

    Variants (by the parities of the lengths involved):
      sum        l = 2nu,   window nu   <= k < l
      even_even  l = 2nu+1, window nu+1 <= k < l
      odd_odd    l = 2nu-1, window nu   <= k < l
      odd_even   l = 2nu,   window nu   <= k < l
    """
    sgn_k = ONE if k % 2 == 0 else -ONE

    def rhs_sum(ell, weight, mag):
        total = ZERO
        for c in range(ell - k, k):
            s = ONE if c % 2 == 0 else -ONE
            total = total + s * weight(c) * mag(c)
        return total

    if variant == "sum":
        ell = 2 * nu
        if not nu <= k < ell:
            raise ValueError(f"k={k} outside {nu}..{ell - 1}")
        lhs = sgn_k * (q_pow(-2 * k) - q_pow(-2 * nu)) * magic(nu, k, beta, 0) * q_pow(k * (k - beta - ell + 1))
        rhs = q_pow(-2 * ell + 2) * rhs_sum(
            ell,
            lambda c: q_pow(c * (c - beta - ell + 3)),
            lambda c: magic(nu, c, beta, -1),
        )
        return lhs, rhs
    if variant == "even_even":
        ell = 2 * nu + 1
        if not nu + 1 <= k < ell:
            raise ValueError(f"k={k} outside {nu + 1}..{ell - 1}")
        lhs = (
            sgn_k
            * (q_pow(2 * k) - q_pow(2 * nu))
            * (q_pow(2 * nu) - q_pow(2 * k - 2))
            * magic(nu, k, beta, 1)
            * q_pow(k * (k - beta - ell - 2))
        )
        rhs = rhs_sum(
            ell,
            lambda c: (q_pow(-2 * nu) - q_pow(-2 * c)) * q_pow(c * (c - beta - ell + 4)),
            lambda c: magic(nu, c, beta, 0),
        )
        return lhs, rhs
    if variant == "odd_odd":
        ell = 2 * nu - 1
        if not nu <= k < ell:
            raise ValueError(f"k={k} outside {nu}..{ell - 1}")
        lhs = sgn_k * q_pow(ell - 1) * (ONE - q_pow(2 * beta)) * magic(nu, k, beta, -1) * q_pow(k * (k - beta - ell))
        rhs = rhs_sum(
            ell,
            lambda c: (ONE - q_pow(2 * c + 6 - 4 * nu)) * q_pow(c * (c - beta - ell + 3)),
            lambda c: magic(nu - 1, c, beta - 1, -1),
        )
        return lhs, rhs
    if variant == "odd_even":
        ell = 2 * nu
        if not nu <= k < ell:
            raise ValueError(f"k={k} outside {nu}..{ell - 1}")
        lhs = (
            sgn_k
            * q_pow(2 * ell - 3)
            * (ONE - q_pow(2 * beta))
            * (q_pow(k - nu) - q_pow(nu - k))
            * magic(nu, k, beta, 0)
            * q_pow(k * (k - beta - ell))
        )
        rhs = rhs_sum(
            ell,
            lambda c: (q_pow(c + 1 - nu) - q_pow(nu - c - 1))
            * (q_pow(ell - 2 - c) - q_pow(c + 2 - ell))
            * q_pow(c * (c - beta - ell + 4)),
            lambda c: magic(nu - 1, c, beta - 1, 0),
        )
        return lhs, rhs
    raise ValueError(f"unknown telescope variant {variant!r}")


def telescope_check(variant: str, nu: int, k: int, beta: int) -> bool:
    lhs, rhs = telescope_sides(variant, nu, k, beta)
    return lhs == rhs


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


def reformed_telescope_partial_sums(B: int, bound: int | None = None) -> list[GenSeries]:
    """Partial sums PS(0..B) of the single-weight telescoping identity.

    The a-th summand is

        (-1)^a [2a+1] q^(2*binom(a+1,2))
            * prod_{i=1..a} (1 + q^(-1-2i) x) * prod_{i=a..B-1} (1 + q^(1+2i) x)

    and each partial sum is verified on the way against its closed form

        PS(a) = (-1)^a q^(-2a) [a+1]
            * prod_{i=2..a+1} (q^(1+2i) + x) * prod_{i=a..B-1} (1 + q^(1+2i) x)

    as well as against the step ratio
    PS(a)/PS(a-1) = -q^(-2) ([a+1]/[a]) (q^(2a+3) + x)/(1 + q^(2a-1) x).
    """
    if B < 0:
        raise ValueError("B must be nonnegative")
    if bound is None:
        bound = B + 1
    sums: list[GenSeries] = []
    acc = GenSeries.constant(bound, 0)
    for a in range(B + 1):
        f = GenSeries.constant(bound, (-1) ** a * qnum(2 * a + 1) * q_pow(2 * _binom2(a + 1)))
        for i in range(1, a + 1):
            f = f.times_linear(ONE, q_pow(-1 - 2 * i))
        for i in range(a, B):
            f = f.times_linear(ONE, q_pow(1 + 2 * i))
        acc = acc + f
        closed = GenSeries.constant(bound, (-1) ** a * q_pow(-2 * a) * qnum(a + 1))
        for i in range(2, a + 2):
            closed = closed.times_linear(q_pow(1 + 2 * i), ONE)
        for i in range(a, B):
            closed = closed.times_linear(ONE, q_pow(1 + 2 * i))
        assert acc == closed, f"partial-sum closed form fails at a={a}, B={B}"
        if a >= 1:
            lhs = (acc * qnum(a)).times_linear(ONE, q_pow(2 * a - 1))
            rhs = (sums[-1] * (-q_pow(-2) * qnum(a + 1))).times_linear(q_pow(2 * a + 3), ONE)
            assert lhs == rhs, f"partial-sum ratio fails at a={a}, B={B}"
        sums.append(acc)
    return sums


def reformed_telescope_even_partial_sums(B: int, bound: int | None = None) -> list[GenSeries]:
    """Partial sums of the double-weight variant, with summand

        (-1)^a [a+1][2a+2] q^(2*binom(a+1,2)+a)
            * prod_{i=1..a} (1 + q^(-2-2i) x) * prod_{i=a..B-1} (1 + q^(2+2i) x)

    closed form PS(a) = (-1)^a q^(-2a) [a+1][a+2]
        * prod_{i=2..a+1} (q^(2i+2) + x) * prod_{i=a..B-1} (1 + q^(2+2i) x)

    and step ratio -q^(-2) ([a+2]/[a]) (q^(2a+4) + x)/(1 + q^(2a) x).
    """
    if B < 0:
        raise ValueError("B must be nonnegative")
    if bound is None:
        bound = B + 1
    sums: list[GenSeries] = []
    acc = GenSeries.constant(bound, 0)
    for a in range(B + 1):
        f = GenSeries.constant(
            bound, (-1) ** a * qnum(a + 1) * qnum(2 * a + 2) * q_pow(2 * _binom2(a + 1) + a)
        )
        for i in range(1, a + 1):
            f = f.times_linear(ONE, q_pow(-2 - 2 * i))
        for i in range(a, B):
            f = f.times_linear(ONE, q_pow(2 + 2 * i))
        acc = acc + f
        closed = GenSeries.constant(bound, (-1) ** a * q_pow(-2 * a) * qnum(a + 1) * qnum(a + 2))
        for i in range(2, a + 2):
            closed = closed.times_linear(q_pow(2 * i + 2), ONE)
        for i in range(a, B):
            closed = closed.times_linear(ONE, q_pow(2 + 2 * i))
        assert acc == closed, f"partial-sum closed form fails at a={a}, B={B}"
        if a >= 1:
            lhs = (acc * qnum(a)).times_linear(ONE, q_pow(2 * a))
            rhs = (sums[-1] * (-q_pow(-2) * qnum(a + 2))).times_linear(q_pow(2 * a + 4), ONE)
            assert lhs == rhs, f"partial-sum ratio fails at a={a}, B={B}"
        sums.append(acc)
    return sums
