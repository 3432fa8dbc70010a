"""
The polynomial ring Z[z^{±1}][x1, x2, x3] with its deformed reflection action.

The simple reflection s_i acts by s_i(x_i) = z*x_{i+1}, s_i(x_{i+1}) = z^{-1}*x_i
and fixes the remaining variable; indices are cyclic mod 3 (x4 is x1).  On top
of this action sit the degree -1 divided-difference operators

    demazure(i, f) = (f - s_i(f)) / (x_i - z*x_{i+1}),

an exact polynomial quotient, and the diagram symmetries sigma (rotation of
the indices) and tau (the flip 1 <-> 3 combined with z -> z^{-1}).
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .laurent import ONE, ZERO, ExactDivisionError, LaurentScalar, z_pow

Exponents = tuple[int, int, int]

OMEGA = (1, 2, 3)


def normalize_index(i: int) -> int:
    """Reduce any integer index into the window {1, 2, 3}."""
    return (i - 1) % 3 + 1


def check_index(i: int) -> int:
    if i not in OMEGA:
        raise ValueError(f"index {i} is not in {{1, 2, 3}}")
    return i


class TriPoly:
    """A polynomial in x1, x2, x3 with LaurentScalar coefficients.

    Stored sparsely as exponent triple -> coefficient; no zero coefficient is
    ever kept, and all exponents are nonnegative.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[Exponents, LaurentScalar] | Iterable[tuple[Exponents, LaurentScalar]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, LaurentScalar] = {}
        for exps, coeff in items:
            exps = tuple(exps)  # type: ignore[assignment]
            if len(exps) != 3 or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent triple {exps}")
            acc[exps] = acc.get(exps, ZERO) + coeff
        self._terms = {e: c for e, c in acc.items() if not c.is_zero()}

    @classmethod
    def monomial(cls, exps: Exponents, coeff: LaurentScalar | int = 1) -> TriPoly:
        c = coeff if isinstance(coeff, LaurentScalar) else LaurentScalar.from_int(coeff)
        return cls({tuple(exps): c})

    @classmethod
    def zero(cls) -> TriPoly:
        return cls()

    @classmethod
    def one(cls) -> TriPoly:
        return cls({(0, 0, 0): ONE})

    def terms(self) -> dict[Exponents, LaurentScalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_scalar(self) -> bool:
        """True iff the only (possibly absent) term is the constant one."""
        return all(e == (0, 0, 0) for e in self._terms)

    def constant_coefficient(self) -> LaurentScalar:
        return self._terms.get((0, 0, 0), ZERO)

    def coefficient(self, exps: Exponents) -> LaurentScalar:
        return self._terms.get(tuple(exps), ZERO)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: TriPoly) -> TriPoly:
        if not isinstance(other, TriPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, ZERO) + c
        return TriPoly(out)

    def __neg__(self) -> TriPoly:
        return TriPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: TriPoly) -> TriPoly:
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> TriPoly:
        if isinstance(other, (LaurentScalar, int)):
            s = other if isinstance(other, LaurentScalar) else LaurentScalar.from_int(other)
            return TriPoly({e: c * s for e, c in self._terms.items()})
        if isinstance(other, TriPoly):
            out: dict[Exponents, LaurentScalar] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    out[e] = out.get(e, ZERO) + c1 * c2
            return TriPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- rendering ----------------------------------------------------------

    @staticmethod
    def _monomial_str(exps: Exponents) -> str:
        factors = []
        for pos, e in enumerate(exps, start=1):
            if e == 1:
                factors.append(f"x{pos}")
            elif e > 1:
                factors.append(f"x{pos}^{e}")
        return "*".join(factors)

    def render(self) -> str:
        """String form like 'x1^2*x2 * (1 + z^3)', terms sorted by degree then exponents."""
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, key=lambda e: (sum(e), e)):
            coeff = self._terms[exps]
            cs = coeff.render_z() if coeff.is_z_element() else coeff.render()
            mono = self._monomial_str(exps)
            if not mono:
                parts.append(f"({cs})" if ("+" in cs or " - " in cs) else cs)
            elif coeff == ONE:
                parts.append(mono)
            else:
                parts.append(f"{mono} * ({cs})")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(exps), "coeff": self._terms[exps].to_json()}
            for exps in sorted(self._terms, key=lambda e: (sum(e), e))
        ]

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TriPoly('{self.render()}')"


def x_var(i: int) -> TriPoly:
    """The generator x_i, for i in {1, 2, 3}."""
    check_index(i)
    exps = [0, 0, 0]
    exps[i - 1] = 1
    return TriPoly.monomial(tuple(exps))


X1, X2, X3 = x_var(1), x_var(2), x_var(3)


def s_action(i: int, f: TriPoly) -> TriPoly:
    """The reflection s_i acting as a ring automorphism (an involution).

    s_i swaps x_i and x_{i+1} up to powers of z and fixes the third variable:
    a monomial x_i^a * x_{i+1}^b picks up the factor z^{a-b}.
    """
    check_index(i)
    pos_i = i - 1
    pos_n = normalize_index(i + 1) - 1
    out: dict[Exponents, LaurentScalar] = {}
    for exps, coeff in f.terms().items():
        ei, en = exps[pos_i], exps[pos_n]
        new = list(exps)
        new[pos_i], new[pos_n] = en, ei
        key = tuple(new)
        term = coeff * z_pow(ei - en)
        out[key] = out.get(key, ZERO) + term
    return TriPoly(out)


def sigma(f: TriPoly) -> TriPoly:
    """The rotation x_i -> x_{i+1}; fixes all scalars (z included)."""
    return TriPoly({(e[2], e[0], e[1]): c for e, c in f.terms().items()})


def tau(f: TriPoly) -> TriPoly:
    """The flip x1 <-> x3 (x2 fixed) combined with bar on every coefficient."""
    return TriPoly({(e[2], e[1], e[0]): c.bar() for e, c in f.terms().items()})


def demazure(i: int, f: TriPoly) -> TriPoly:
    """The divided-difference operator (f - s_i(f)) / (x_i - z*x_{i+1}).

    The divisor is monic as a polynomial in x_i, so the quotient is computed
    by long division in x_i; the remainder always vanishes because f - s_i(f)
    is antisymmetric under s_i.
    """
    check_index(i)
    pos_i = i - 1
    pos_n = normalize_index(i + 1) - 1
    num = (f - s_action(i, f)).terms()
    quot: dict[Exponents, LaurentScalar] = {}

    def lead_key(exps: Exponents) -> tuple[int, int, int]:
        return (exps[pos_i], exps[pos_n], exps[3 - pos_i - pos_n])

    z1 = z_pow(1)
    while num:
        exps = max(num, key=lead_key)
        if exps[pos_i] == 0:
            raise ExactDivisionError(
                f"demazure({i}, ...): division left remainder at term {exps}"
            )
        coeff = num.pop(exps)
        q_exps = list(exps)
        q_exps[pos_i] -= 1
        key = tuple(q_exps)
        quot[key] = quot.get(key, ZERO) + coeff
        # Subtract coeff * x^key * (x_i - z x_{i+1}); the x_i part cancels the
        # term just popped, leaving the shifted z-part.
        shift = list(q_exps)
        shift[pos_n] += 1
        skey = tuple(shift)
        rest = num.get(skey, ZERO) + coeff * z1
        if rest.is_zero():
            num.pop(skey, None)
        else:
            num[skey] = rest
    return TriPoly(quot)


def drop_x123_multiples(f: TriPoly) -> TriPoly:
    """Drop every term divisible by x1*x2*x3.

    Such terms are annihilated by any composition of divided-difference
    operators that ends in a scalar, so they may be discarded between steps.
    """
    return TriPoly({e: c for e, c in f.terms().items() if min(e) == 0})
