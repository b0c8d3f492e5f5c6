"""Exact arithmetic in the localized Weyl algebra Q[t, t^-1]<d>.

Operators are kept in normal order, ``sum c_(a,b) t^a d^b`` with every power
of t to the left, using ``d^b t^c = sum_k C(b,k) (c)_k t^(c-k) d^(b-k)`` where
``(c)_k`` is the falling factorial.  That rule holds for every integer c, so
negative powers of t need no special handling.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import Mapping, Union

from .errors import OperatorSyntaxError, ZeroOperator
from .semigroup import NumericalSemigroup, RelativeIdeal

Scalar = Union[int, Fraction]


def falling(c: int, k: int) -> int:
    """c (c-1) ... (c-k+1)."""
    out = 1
    for i in range(k):
        out *= c - i
    return out


def _clean(terms: Mapping) -> dict:
    return {key: Fraction(c) for key, c in terms.items() if c != 0}


class LaurentPoly:
    """Finite sum ``sum c_s t^s`` over integer exponents."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        self._coeffs = _clean(coeffs or {})

    @classmethod
    def monomial(cls, s: int, c: Scalar = 1) -> LaurentPoly:
        return cls({s: c})

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self._coeffs)
        for s, c in other._coeffs.items():
            out[s] = out.get(s, 0) + c
        return LaurentPoly(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._coeffs.items()))})"


class WeylOperator:
    """A normal-ordered element ``sum c_(a,b) t^a d^b`` (a in Z, b >= 0)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        terms = _clean(terms or {})
        if any(b < 0 for _, b in terms):
            raise ValueError("powers of d must be nonnegative")
        self._terms = terms

    # constructors
    @classmethod
    def t(cls, a: int = 1) -> WeylOperator:
        return cls({(a, 0): 1})

    @classmethod
    def d(cls, b: int = 1) -> WeylOperator:
        return cls({(0, b): 1})

    @classmethod
    def scalar(cls, c: Scalar) -> WeylOperator:
        return cls({(0, 0): c})

    @classmethod
    def euler(cls) -> WeylOperator:
        """theta = t d."""
        return cls({(1, 1): 1})

    @property
    def terms(self) -> Mapping[tuple[int, int], Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # ring structure
    def __add__(self, other: WeylOperator | Scalar) -> WeylOperator:
        other = _coerce(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return WeylOperator(out)

    __radd__ = __add__

    def __neg__(self) -> WeylOperator:
        return WeylOperator({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: WeylOperator | Scalar) -> WeylOperator:
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> WeylOperator:
        return _coerce(other) - self

    def __mul__(self, other: WeylOperator | Scalar) -> WeylOperator:
        other = _coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c1 in self._terms.items():
            for (c, d), c2 in other._terms.items():
                # t^a d^b t^c d^d; fall = (c)_k, zero from k = c+1 on when c >= 0
                base, fall = c1 * c2, 1
                for k in range(b + 1):
                    if k:
                        fall *= c - k + 1
                        if not fall:
                            break
                    key = (a + c - k, b - k + d)
                    out[key] = out.get(key, 0) + base * (comb(b, k) * fall)
        return WeylOperator(out)

    def __rmul__(self, other: Scalar) -> WeylOperator:
        return _coerce(other) * self

    def __pow__(self, k: int) -> WeylOperator:
        out = WeylOperator.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeylOperator.scalar(other)
        return isinstance(other, WeylOperator) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"WeylOperator({format_operator(self)!r})"

    def __str__(self) -> str:
        return format_operator(self)

    # action and gradings
    def apply(self, f: LaurentPoly) -> LaurentPoly:
        out: dict[int, Fraction] = {}
        for (a, b), c in self._terms.items():
            for s, cs in f.coeffs.items():
                coeff = falling(s, b)
                if coeff:
                    key = s - b + a
                    out[key] = out.get(key, 0) + c * cs * coeff
        return LaurentPoly(out)

    def eigenvalue(self, s: int) -> Fraction:
        """For a homogeneous operator P of degree d: P(t^s) = lambda t^(s+d)."""
        degrees = {a - b for a, b in self._terms}
        if len(degrees) > 1:
            raise ValueError("eigenvalue is only defined for homogeneous operators")
        return sum((c * falling(s, b) for (a, b), c in self._terms.items()), Fraction(0))

    def graded_components(self) -> dict[int, WeylOperator]:
        """Split by degree, where deg t = 1 and deg d = -1."""
        parts: dict[int, dict] = {}
        for (a, b), c in self._terms.items():
            parts.setdefault(a - b, {})[(a, b)] = c
        return {deg: WeylOperator(t) for deg, t in sorted(parts.items())}

    def order(self) -> int:
        if not self._terms:
            raise ZeroOperator("the zero operator has no order")
        return max(b for _, b in self._terms)

    def principal_symbol(self) -> dict[tuple[int, int], Fraction]:
        """Top-order terms, with d read as the commuting variable y."""
        top = self.order()
        return {(a, b): c for (a, b), c in self._terms.items() if b == top}


def _coerce(x: WeylOperator | Scalar) -> WeylOperator:
    if isinstance(x, WeylOperator):
        return x
    if isinstance(x, (int, Fraction)):
        return WeylOperator.scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as an operator")


def commutator(p: WeylOperator, q: WeylOperator) -> WeylOperator:
    return p * q - q * p


def operator_for_degree(S: NumericalSemigroup, h: int) -> WeylOperator:
    """``t^h prod (theta - s)`` over the s in S with s + h not in S.

    The product has val(h) factors, so the result is homogeneous of degree h,
    of order val(h), with principal symbol ``t^val(-h) y^val(h)`` and leading
    coefficient 1, and it maps C[S] into itself: it kills t^s exactly when
    t^(s+h) would leave C[S].

    The product is expanded as an integer polynomial in theta and rewritten
    with ``theta^k = sum_j S(k, j) t^j d^j`` (Stirling numbers of the second
    kind), which is much cheaper than multiplying operators one factor at a time.
    """
    roots = [s for s in S.elements(S.conductor - h) if (s + h) not in S]
    poly = [1]  # coefficients of prod (x - s), lowest degree first
    for s in roots:
        poly = [(poly[i - 1] if i else 0) - s * (poly[i] if i < len(poly) else 0) for i in range(len(poly) + 1)]
    coeffs = [0] * len(poly)
    for k, ck in enumerate(poly):
        if ck:
            for j, sk in enumerate(_stirling2_row(k)):
                coeffs[j] += ck * sk
    return WeylOperator({(h + j, j): c for j, c in enumerate(coeffs)})


def _stirling2_row(k: int) -> list[int]:
    row = [1]
    for m in range(1, k + 1):
        row = [(j * row[j] if j < len(row) else 0) + (row[j - 1] if j else 0) for j in range(m + 1)]
    return row


def preserves(p: WeylOperator, ideal: RelativeIdeal) -> bool:
    """Whether p maps the span of {t^z : z in ideal} into itself."""
    for deg, part in p.graded_components().items():
        stop = ideal.tail - deg
        for z in range(ideal.min, max(stop, ideal.min)):
            if z in ideal and (z + deg) not in ideal and part.eigenvalue(z) != 0:
                return False
    return True


def preserves_semigroup_ring(p: WeylOperator, S: NumericalSemigroup) -> bool:
    return preserves(p, S.as_ideal())


def d_algebra_generators(S: NumericalSemigroup):
    """Operators generating D(C[S]), keyed by the Sigma generator they lift.

    The generator (1,1) lifts to theta = t d; every other generator (a, b) of
    Sigma lifts to :func:`operator_for_degree` at ``h = a - b``.
    """
    from .sigma import ONE_ONE, build_sigma

    out = {}
    for p in build_sigma(S).minimal_generators:
        out[p] = WeylOperator.euler() if p == ONE_ONE else operator_for_degree(S, p.a - p.b)
    return out


# -- printing and parsing ---------------------------------------------------

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
_FROM_SUPERSCRIPT = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")


def _power(symbol: str, k: int, unicode: bool) -> str:
    if k == 1:
        return symbol
    return symbol + (str(k).translate(_SUPERSCRIPT) if unicode else f"^{k}")


def format_operator(p: WeylOperator, unicode: bool = False) -> str:
    """Render as e.g. ``d^2 - 4 t^-1 d`` (ASCII) or ``∂² - 4t⁻¹∂``."""
    if p.is_zero():
        return "0"
    d_sym = "∂" if unicode else "d"
    joiner = "" if unicode else " "
    pieces = []
    for (a, b), c in sorted(p.terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0])):
        factors = []
        if a:
            factors.append(_power("t", a, unicode))
        if b:
            factors.append(_power(d_sym, b, unicode))
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = joiner.join(factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>[td∂θ])(?:\^\(?(?P<exp>-?\d+)\)?)?|(?P<op>[-+*]))"
)


def parse_operator(text: str) -> WeylOperator:
    """Parse the notation produced by :func:`format_operator`.

    Factors inside a term multiply left to right, so ``d t`` is read as
    ``t d + 1``.  ``∂`` and ``θ`` (= t d) and unicode superscripts are accepted.
    """
    src = re.sub("[⁰¹²³⁴⁵⁶⁷⁸⁹⁻]+", lambda m: "^" + m.group().translate(_FROM_SUPERSCRIPT), text)
    total, term, sign, pos = WeylOperator(), None, 1, 0
    while src[pos:].strip():
        m = _TOKEN.match(src, pos)
        if not m:
            raise OperatorSyntaxError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        op = m.group("op")
        if op in ("+", "-"):
            step = -1 if op == "-" else 1
            if term is None:
                sign *= step
            else:
                total, term, sign = total + sign * term, None, step
            continue
        if op == "*":
            continue
        if m.group("num"):
            factor = WeylOperator.scalar(Fraction(m.group("num")))
        else:
            sym, k = m.group("sym"), int(m.group("exp") or 1)
            if sym == "t":
                factor = WeylOperator.t(k)
            elif sym == "θ":
                factor = WeylOperator.euler() ** _nonneg(k, text)
            else:
                factor = WeylOperator.d(_nonneg(k, text))
        term = factor if term is None else term * factor
    if term is None:
        raise OperatorSyntaxError(f"incomplete expression {text!r}")
    return total + sign * term


def _nonneg(k: int, text: str) -> int:
    if k < 0:
        raise OperatorSyntaxError(f"negative power of d in {text!r}")
    return k
