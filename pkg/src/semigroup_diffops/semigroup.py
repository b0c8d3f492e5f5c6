"""Numerical semigroups, valencies and relative ideals.

A numerical semigroup is stored through its (finite) gap set; everything else
(Frobenius number, small elements, minimal generators, valencies) is derived
from it and cached.  Relative ideals are stored as a finite set of members
below a tail start plus the implicit ray ``[tail, oo)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    EmptyGenerators,
    FullSemigroup,
    InvalidSequence,
    InvariantViolation,
    NonCoprime,
    SemigroupError,
)


class NumericalSemigroup:
    """A submonoid of N with finite complement.

    Build one with :meth:`from_generators` or :meth:`from_gaps`.  Instances are
    immutable; equality and hashing go through the gap set.
    """

    def __init__(self, gaps: Iterable[int], *, _checked: bool = False):
        gaps = tuple(sorted(set(gaps)))
        if not _checked:
            _validate_gaps(gaps)
        self._gaps = gaps
        self._gapset = frozenset(gaps)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> NumericalSemigroup:
        gens = sorted(set(int(d) for d in gens))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] <= 0:
            raise SemigroupError(f"generators must be positive, got {gens[0]}")
        if reduce(math.gcd, gens) != 1:
            raise NonCoprime(f"gcd{tuple(gens)} = {reduce(math.gcd, gens)} != 1")
        # (min-1)(max-1)-1 bounds the Frobenius number, so this window is enough
        bound = gens[0] * gens[-1]
        member = [False] * (bound + 1)
        member[0] = True
        for z in range(1, bound + 1):
            member[z] = any(z >= d and member[z - d] for d in gens)
        gaps = [z for z in range(1, bound + 1) if not member[z]]
        return cls(gaps, _checked=True)

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> NumericalSemigroup:
        return cls(gaps)

    @classmethod
    def naturals(cls) -> NumericalSemigroup:
        return cls((), _checked=True)

    # -- basic invariants -------------------------------------------------

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def frobenius(self) -> int:
        return self._gaps[-1] if self._gaps else -1

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def delta(self) -> int:
        return len(self._gaps)

    genus = delta

    @property
    def is_naturals(self) -> bool:
        return not self._gaps

    @cached_property
    def small_elements(self) -> tuple[int, ...]:
        """``s_0 = 0 < s_1 < ... < s_n = g + 1``."""
        return tuple(z for z in range(self.conductor + 1) if z not in self._gapset)

    @property
    def n(self) -> int:
        return len(self.small_elements) - 1

    @property
    def multiplicity(self) -> int:
        return self.small_elements[1] if self.n else 1

    def apery(self, m: int) -> tuple[int, ...]:
        """Apery set of S with respect to a positive member m, indexed by residue."""
        if m <= 0 or m not in self:
            raise SemigroupError(f"{m} is not a positive element of {self}")
        out = []
        for r in range(m):
            x = r
            while x not in self:
                x += m
            out.append(x)
        return tuple(out)

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        e = self.multiplicity
        ap = [w for w in self.apery(e) if w]
        apset = set(ap)
        gens = [e]
        for w in ap:
            if not any(w - u in apset for u in ap if u < w):
                gens.append(w)
        return tuple(sorted(gens))

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def __contains__(self, z: object) -> bool:
        return isinstance(z, int) and z >= 0 and z not in self._gapset

    def elements(self, stop: int) -> Iterator[int]:
        """Members of S below ``stop``, increasing."""
        return (z for z in range(max(stop, 0)) if z not in self._gapset)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumericalSemigroup) and self._gaps == other._gaps

    def __hash__(self) -> int:
        return hash(("NumericalSemigroup", self._gaps))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self})"

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.minimal_generators)) + ">"

    # -- valency ----------------------------------------------------------

    @cached_property
    def _valency_table(self) -> tuple[int, ...]:
        # val(z) for 0 <= z <= g: gaps h >= z with h - z in S
        return tuple(
            sum(1 for h in self._gaps if h >= z and (h - z) not in self._gapset)
            for z in range(self.conductor)
        )

    def valency(self, z: int) -> int:
        """``|{s in S : z + s not in S}|``."""
        if z > self.frobenius:
            return 0
        if z < 0:
            # val(-w) = val(w) + w
            return self.valency(-z) - z
        return self._valency_table[z]

    # -- ideals -----------------------------------------------------------

    def as_ideal(self) -> RelativeIdeal:
        return RelativeIdeal.from_predicate(self, self.__contains__, 0, self.conductor)

    def maximal_ideal(self) -> RelativeIdeal:
        """M = S \\ {0}."""
        return self.ideal_at(1) if self.n else RelativeIdeal(self, frozenset(), 1)

    def ideal_at(self, i: int) -> RelativeIdeal:
        """``I_i = S(s_i) = {s in S : s >= s_i}`` for ``0 <= i <= n``."""
        if not 0 <= i <= self.n:
            raise SemigroupError(f"index {i} outside [0, {self.n}]")
        si = self.small_elements[i]
        return RelativeIdeal.from_predicate(self, self.__contains__, si, self.conductor)

    def v_set(self, i: int) -> RelativeIdeal:
        """``V_i = {a in Z : val(a) <= i}``."""
        if i < 0:
            raise SemigroupError("valency bound must be nonnegative")
        # val(a) >= -a for a < 0, so nothing below -i qualifies
        return RelativeIdeal.from_predicate(
            self, lambda a: self.valency(a) <= i, -i, self.conductor
        )

    def principal_ideal(self, s: int) -> RelativeIdeal:
        return self.as_ideal().shift(s)

    # -- structure ----------------------------------------------------------

    def pseudo_frobenius(self) -> frozenset[int]:
        """T(S): gaps x with x + M contained in M."""
        if self.is_naturals:
            raise FullSemigroup("N has no pseudo-Frobenius numbers")
        positive = self.small_elements[1:]
        return frozenset(
            h for h in self._gaps if all((h + s) in self for s in positive)
        )

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def is_max_embedding_dimension(self) -> bool:
        by_count = self.embedding_dimension == self.multiplicity
        by_shift = self.maximal_ideal().shift(-self.multiplicity).is_semigroup()
        if by_count != by_shift:
            raise InvariantViolation(f"MED criteria disagree for {self}")
        return by_count

    def is_arf(self) -> bool:
        # for s_i > g the shifted ideal is N, so i <= n suffices
        return all(
            self.ideal_at(i).shift(-si).is_semigroup()
            for i, si in enumerate(self.small_elements)
        )

    def is_symmetric(self) -> bool:
        g = self.frobenius
        return all((z in self) != ((g - z) in self) for z in range(g + 1))

    def blowup(self) -> NumericalSemigroup:
        """Blowup of the maximal ideal."""
        if self.is_naturals:
            return self
        return blowup(self.maximal_ideal())

    def blowup_chain(self) -> list[tuple[NumericalSemigroup, int]]:
        """``[(S_0, e_0), (S_1, e_1), ..., (N, 1)]``."""
        chain = [(self, self.multiplicity)]
        current = self
        while not current.is_naturals:
            current = current.blowup()
            chain.append((current, current.multiplicity))
        return chain

    def multiplicity_sequence(self) -> list[int]:
        return [e for _, e in self.blowup_chain()]


def _validate_gaps(gaps: Sequence[int]) -> None:
    if gaps and gaps[0] <= 0:
        raise SemigroupError(f"gaps must be positive integers, got {gaps[0]}")
    gapset = set(gaps)
    g = gaps[-1] if gaps else -1
    members = [z for z in range(1, g + 1) if z not in gapset]
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b > g:
                break
            if a + b in gapset:
                raise SemigroupError(f"{a} + {b} = {a + b} is listed as a gap")


@dataclass(frozen=True)
class RelativeIdeal:
    """A relative ideal of a numerical semigroup.

    Members are ``low`` together with every integer ``>= tail``; the form is
    canonical (``tail - 1`` is never in ``low``), so dataclass equality is set
    equality.  The owner is not part of equality.
    """

    owner: NumericalSemigroup = field(compare=False, repr=False)
    low: frozenset[int]
    tail: int

    def __post_init__(self):
        if any(z >= self.tail for z in self.low) or (self.tail - 1) in self.low:
            raise SemigroupError("relative ideal is not in canonical form")

    @classmethod
    def from_elements(
        cls, owner: NumericalSemigroup, elements: Iterable[int], tail: int, *, check: bool = True
    ) -> RelativeIdeal:
        low = {z for z in elements if z < tail}
        while tail - 1 in low:
            tail -= 1
            low.discard(tail)
        ideal = cls(owner, frozenset(low), tail)
        if check:
            ideal._check_closed()
        return ideal

    @classmethod
    def from_predicate(
        cls, owner: NumericalSemigroup, pred: Callable[[int], bool], start: int, stop: int
    ) -> RelativeIdeal:
        """Members are the z in [start, stop) satisfying pred, plus [stop, oo)."""
        stop = max(start, stop)
        return cls.from_elements(owner, (z for z in range(start, stop) if pred(z)), stop)

    def _check_closed(self) -> None:
        for z in self.low:
            for s in self.owner.small_elements[1:]:
                if z + s >= self.tail:
                    break
                if z + s not in self.low:
                    raise SemigroupError(f"{z} + {s} escapes the ideal")

    @property
    def min(self) -> int:
        return min(self.low) if self.low else self.tail

    def __contains__(self, z: object) -> bool:
        return isinstance(z, int) and (z >= self.tail or z in self.low)

    def members(self, stop: int) -> list[int]:
        return [z for z in range(self.min, stop) if z in self]

    def shift(self, k: int) -> RelativeIdeal:
        return RelativeIdeal(self.owner, frozenset(z + k for z in self.low), self.tail + k)

    def __add__(self, other: int | RelativeIdeal) -> RelativeIdeal:
        if isinstance(other, int):
            return self.shift(other)
        mi, mj = self.min, other.min
        stop = min(mi + other.tail, self.tail + mj)
        low = [
            z for z in range(mi + mj, stop)
            if any(a in self and (z - a) in other for a in range(mi, z - mj + 1))
        ]
        return RelativeIdeal.from_elements(self.owner, low, stop, check=False)

    __radd__ = __add__

    def __sub__(self, other: RelativeIdeal) -> RelativeIdeal:
        return ideal_difference(self, other)

    def multiple(self, h: int) -> RelativeIdeal:
        """hI = I + ... + I (h summands)."""
        if h < 1:
            raise SemigroupError("multiple needs h >= 1")
        out = self
        for _ in range(h - 1):
            out = out + self
        return out

    def issubset(self, other: RelativeIdeal) -> bool:
        stop = max(self.tail, other.tail)
        return all(z in other for z in range(self.min, stop) if z in self)

    def nonnegative_part(self) -> RelativeIdeal:
        """Intersection with N."""
        if self.tail < 0:
            return RelativeIdeal(self.owner, frozenset(), 0)
        return RelativeIdeal(self.owner, frozenset(z for z in self.low if z >= 0), self.tail)

    def is_semigroup(self) -> bool:
        if self.min != 0:
            return False
        low = sorted(self.low)
        return all(a + b in self for i, a in enumerate(low) for b in low[i:])

    def to_semigroup(self) -> NumericalSemigroup:
        if not self.is_semigroup():
            raise SemigroupError("relative ideal is not a semigroup")
        return NumericalSemigroup(
            (z for z in range(1, self.tail) if z not in self.low), _checked=True
        )

    def __str__(self) -> str:
        head = ", ".join(str(z) for z in sorted(self.low))
        return "{" + (head + ", " if head else "") + f"{self.tail}->}}"


def ideal_difference(ideal: RelativeIdeal, other: RelativeIdeal) -> RelativeIdeal:
    """``I - J = {z : z + J contained in I}``."""
    if ideal.owner != other.owner:
        raise SemigroupError("ideals belong to different semigroups")
    mi, mj = ideal.min, other.min
    # every z >= tail(I) - min(J) works; below min(I) - min(J) nothing does
    start, stop = mi - mj, ideal.tail - mj
    low_j = sorted(other.low)

    def works(z: int) -> bool:
        return z + other.tail >= ideal.tail and all(z + j in ideal for j in low_j)

    return RelativeIdeal.from_predicate(ideal.owner, works, start, stop)


def blowup(ideal: RelativeIdeal) -> NumericalSemigroup:
    """The semigroup hI - hI for h large.

    The loop stops at the first h with (h+1)I = hI + min(I); from there on
    every multiple is a translate, so the difference no longer changes.
    """
    m = ideal.min
    current = ideal
    while True:
        following = current + ideal
        if following == current.shift(m):
            return (current - current).to_semigroup()
        current = following


def arf_from_multiplicity_sequence(seq: Sequence[int]) -> NumericalSemigroup:
    """The Arf semigroup ``{0, e_0, e_0 + e_1, ...}`` for a multiplicity sequence.

    ``seq`` lists the leading terms; every later term is taken to be 1.
    """
    seq = [int(x) for x in seq]
    if any(x < 1 for x in seq):
        raise InvalidSequence("multiplicities must be positive")
    padded = seq + [1] * (max(seq, default=1) + 1)
    for i, ei in enumerate(seq):
        total, ok = 0, False
        for later in padded[i + 1:]:
            total += later
            if total == ei:
                ok = True
                break
            if total > ei:
                break
        if not ok:
            raise InvalidSequence(
                f"e_{i} = {ei} is not a sum of consecutive following terms"
            )
    sums = [0]
    for ei in seq:
        sums.append(sums[-1] + ei)
    members = set(sums)
    return NumericalSemigroup(z for z in range(sums[-1]) if z not in members)
