"""
Exact arithmetic in the ring of integer Laurent polynomials in the half-variable p.

Three interchangeable variables are in play: p itself, z = p^2 and q = p^-3,
so that p^6 = z^3 = q^-2.  Scalars are always stored by their p-exponents,
because the p-exponent of every quantity in this package is an integer while
the corresponding q- or z-exponent need not be.  Coefficients are Python ints,
hence arbitrary precision.

This module also provides the quantum-number toolkit built on top of that
ring: balanced quantum numbers [k], quantum factorials, quantum binomial
coefficients, and the products rho / rho_prime of quantum-integer factors.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder.

    Every division performed by this package is exact for mathematical
    reasons, so this exception signals an implementation bug, never bad
    user input.
    """


class LaurentScalar:
    """
    An integer Laurent polynomial in p, stored sparsely as exponent -> coefficient.

    Values are immutable: every operation returns a fresh scalar, and instances
    hash by their canonical form (no zero coefficients are ever stored).

    >>> p_pow(4) + 1 - 2 * p_pow(-3)
    LaurentScalar('-2*p^-3 + 1 + p^4')
    >>> z_pow(1) == p_pow(2)
    True
    >>> q_pow(2) == z_pow(-3)
    True
    >>> p_pow(3) * p_pow(-3)
    LaurentScalar('1')
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> None:
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._coeffs = {e: c for e, c in acc.items() if c != 0}
        self._hash: int | None = None

    @classmethod
    def from_int(cls, n: int) -> LaurentScalar:
        return cls({0: n})

    def coefficients(self) -> dict[int, int]:
        """The exponent -> coefficient association, as a fresh dict."""
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_z_element(self) -> bool:
        """True iff the scalar lies in Z[z^{±1}], i.e. every p-exponent is even."""
        return all(e % 2 == 0 for e in self._coeffs)

    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero scalar has no exponents")
        return min(self._coeffs)

    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero scalar has no exponents")
        return max(self._coeffs)

    def bar(self) -> LaurentScalar:
        """The ring involution p -> p^-1 (equivalently, z -> z^-1).

        >>> (z_pow(1) + 1).bar()
        LaurentScalar('p^-2 + 1')
        >>> (p_pow(3) - p_pow(-1)).bar()
        LaurentScalar('p^-3 - p')
        """
        return LaurentScalar({-e: c for e, c in self._coeffs.items()})

    def at_one(self) -> int:
        """Specialize p -> 1 (the sum of the coefficients)."""
        return sum(self._coeffs.values())

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> LaurentScalar | None:
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, int):
            return LaurentScalar({0: other})
        return None

    def __add__(self, other: object) -> LaurentScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in o._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentScalar(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentScalar:
        return LaurentScalar({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: object) -> LaurentScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> LaurentScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> LaurentScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in o._coeffs.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentScalar:
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    @staticmethod
    def _format_terms(terms: list[tuple[int, int]], var: str) -> str:
        parts: list[str] = []
        for e, c in terms:
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(sign + body)
        return "".join(parts)

    def render(self) -> str:
        """Canonical string: terms in increasing p-exponent.

        >>> (p_pow(4) + 1 - 2 * p_pow(-3)).render()
        '-2*p^-3 + 1 + p^4'
        """
        if not self._coeffs:
            return "0"
        return self._format_terms(sorted(self._coeffs.items()), "p")

    def render_z(self) -> str:
        """Render in z = p^2; only defined when the scalar lies in Z[z^{±1}].

        >>> (z_pow(3) - z_pow(-1)).render_z()
        '-z^-1 + z^3'
        """
        if not self.is_z_element():
            raise ValueError("scalar has odd p-exponents, cannot render in z")
        if not self._coeffs:
            return "0"
        return self._format_terms(sorted((e // 2, c) for e, c in self._coeffs.items()), "z")

    def to_json(self) -> dict[str, str]:
        """JSON form: exponent string -> decimal coefficient string."""
        return {str(e): str(c) for e, c in sorted(self._coeffs.items())}

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentScalar('{self.render()}')"


ZERO = LaurentScalar()
ONE = LaurentScalar({0: 1})


def p_pow(n: int) -> LaurentScalar:
    return LaurentScalar({n: 1})


def z_pow(n: int) -> LaurentScalar:
    """z^n = p^(2n)."""
    return LaurentScalar({2 * n: 1})


def q_pow(n: int) -> LaurentScalar:
    """q^n = p^(-3n)."""
    return LaurentScalar({-3 * n: 1})


def bar(f: LaurentScalar) -> LaurentScalar:
    return f.bar()


def exact_div(f: LaurentScalar, g: LaurentScalar) -> LaurentScalar:
    """Divide f by g in Z[p^{±1}], raising ExactDivisionError on any remainder."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero scalar")
    if f.is_zero():
        return ZERO
    num = f.coefficients()
    den = g.coefficients()
    g_max = max(den)
    g_lead = den[g_max]
    # Exponents in an exact quotient are bounded below by this.
    q_floor = min(num) - min(den)
    quot: dict[int, int] = {}
    while num:
        f_max = max(num)
        q_exp = f_max - g_max
        c = num[f_max]
        if q_exp < q_floor or c % g_lead != 0:
            raise ExactDivisionError(f"({f}) is not divisible by ({g})")
        q_coeff = c // g_lead
        quot[q_exp] = q_coeff
        for e, d in den.items():
            k = e + q_exp
            r = num.get(k, 0) - q_coeff * d
            if r:
                num[k] = r
            else:
                num.pop(k, None)
    return LaurentScalar(quot)


@lru_cache(maxsize=None)
def qnum(k: int) -> LaurentScalar:
    """The balanced quantum number [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}.

    Odd under negation: [−k] = −[k], and [0] = 0, [1] = 1.

    >>> qnum(2) == q_pow(1) + q_pow(-1)
    True
    >>> qnum(-3) == -(q_pow(2) + 1 + q_pow(-2))
    True
    """
    if k < 0:
        return -qnum(-k)
    return LaurentScalar({-3 * (k - 1 - 2 * t): 1 for t in range(k)})


@lru_cache(maxsize=None)
def qfact(d: int) -> LaurentScalar:
    """The quantum factorial [d]! = [1][2]...[d]."""
    if d < 0:
        raise ValueError("quantum factorial needs d >= 0")
    return ONE if d == 0 else qfact(d - 1) * qnum(d)


@lru_cache(maxsize=None)
def qbinom(n: int, j: int) -> LaurentScalar:
    """The balanced quantum binomial coefficient, defined for any integer top.

    Computed as the product [n-j+1][n-j+2]...[n] / [j]!, one exact division at
    a time.  This yields 0 for j < 0 and for 0 <= n < j, and reproduces the
    negative-top sign rule qbinom(-d-1, j) == (-1)^j * qbinom(d+j, j).

    >>> qbinom(2, 1) == qnum(2)
    True
    >>> qbinom(-3, 2) == qbinom(4, 2)
    True
    >>> qbinom(6, 3).at_one()
    20
    """
    if j < 0:
        return ZERO
    out = ONE
    for t in range(1, j + 1):
        out = exact_div(out * qnum(n - j + t), qnum(t))
        if out.is_zero():
            return ZERO
    return out


@lru_cache(maxsize=None)
def rho(d: int) -> LaurentScalar:
    """The product (q^1 - q^-1)(q^2 - q^-2)...(q^d - q^-d); rho(0) = 1."""
    if d < 0:
        raise ValueError("rho needs d >= 0")
    return ONE if d == 0 else rho(d - 1) * (q_pow(d) - q_pow(-d))


@lru_cache(maxsize=None)
def rho_prime(d: int) -> LaurentScalar:
    """The product (1 - q^-2)(1 - q^-4)...(1 - q^-2d).

    Equals q^{-binom(d+1,2)} * rho(d).  The value d = -1 is accepted and gives
    the empty product 1, which is what the length-edge closed formulas need
    when b = 0.
    """
    if d < -1:
        raise ValueError("rho_prime needs d >= -1")
    return ONE if d <= 0 else rho_prime(d - 1) * (ONE - q_pow(-2 * d))
