"""The plane monoid Sigma with C[Sigma] = gr(D(C[S])).

Membership is decided diagonal by diagonal: a point (a, b) of N^2 lies in
Sigma exactly when ``val(a - b) <= b``.  The diagonal ``a - b = z`` therefore
misses precisely its first ``val(z)`` lattice points (counted from the axis),
which makes the gap set, its bounding box and every count cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import FullSemigroup, NotArf, NotMaximalEmbeddingDimension
from .semigroup import NumericalSemigroup


class PlanePoint(NamedTuple):
    a: int
    b: int

    def __add__(self, other):  # type: ignore[override]
        return PlanePoint(self.a + other[0], self.b + other[1])

    def __sub__(self, other):
        return PlanePoint(self.a - other[0], self.b - other[1])

    def swap(self) -> PlanePoint:
        return PlanePoint(self.b, self.a)

    @property
    def diagonal(self) -> int:
        return self.a - self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


ONE_ONE = PlanePoint(1, 1)


class SigmaMonoid:
    """Sigma for a numerical semigroup S; use :func:`build_sigma`."""

    def __init__(self, base: NumericalSemigroup):
        self.base = base

    def __repr__(self) -> str:
        return f"SigmaMonoid({self.base})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SigmaMonoid) and self.base == other.base

    def __hash__(self) -> int:
        return hash(("SigmaMonoid", self.base))

    def __contains__(self, p: object) -> bool:
        a, b = p  # type: ignore[misc]
        return a >= 0 and b >= 0 and self.base.valency(a - b) <= b

    def contains_mirrored(self, p: tuple[int, int]) -> bool:
        """The same test read through the opposite diagonal, ``val(b - a) <= a``."""
        a, b = p
        return a >= 0 and b >= 0 and self.base.valency(b - a) <= a

    def in_union_with_t(self, p: tuple[int, int]) -> bool:
        """Membership in Sigma together with T(Sigma): ``val(a - b) <= b + 1``."""
        a, b = p
        return a >= 0 and b >= 0 and self.base.valency(a - b) <= b + 1

    @cached_property
    def minimal_generators(self) -> tuple[PlanePoint, ...]:
        S = self.base
        if S.is_naturals:
            return (PlanePoint(0, 1), PlanePoint(1, 0))
        gens = {PlanePoint(d, 0) for d in S.minimal_generators}
        gens |= {PlanePoint(0, d) for d in S.minimal_generators}
        gens.add(ONE_ONE)
        gens |= set(self._diagonal_generators)
        return tuple(sorted(gens))

    @cached_property
    def _diagonal_generators(self) -> tuple[PlanePoint, ...]:
        S = self.base
        hs = list(S.gaps) + [-h for h in S.gaps]
        return tuple(sorted(PlanePoint(S.valency(-h), S.valency(h)) for h in hs))

    @cached_property
    def t_sigma(self) -> frozenset[PlanePoint]:
        """T(Sigma) = {x not in Sigma : x + Sigma_+ in Sigma_+}."""
        if self.base.is_naturals:
            raise FullSemigroup("T(Sigma) is only considered for S != N")
        return frozenset(p - ONE_ONE for p in self._diagonal_generators)

    @cached_property
    def gaps(self) -> frozenset[PlanePoint]:
        """N^2 minus Sigma."""
        S = self.base
        out = set()
        for z in range(1, S.conductor):
            for b in range(S.valency(z)):
                out.add(PlanePoint(z + b, b))
                out.add(PlanePoint(b, z + b))
        return frozenset(out)

    @cached_property
    def box_bound(self) -> int:
        """1 + the largest coordinate of a gap; any point with a coordinate
        at least this large is a member."""
        S = self.base
        return 1 + max((z + S.valency(z) - 1 for z in range(1, S.conductor)), default=0)

    def apery_11(self) -> AperySet:
        """Ap_(1,1)(Sigma): the two S-supported axis rays plus a finite part."""
        if self.base.is_naturals:
            raise FullSemigroup("Ap_(1,1) is only considered for S != N")
        return AperySet(self.base, frozenset(self._diagonal_generators))

    def blowup(self) -> SigmaMonoid:
        """Sigma of S_1 = M - e; requires S of maximal embedding dimension."""
        if not self.base.is_max_embedding_dimension():
            raise NotMaximalEmbeddingDimension(f"{self.base} is not MED")
        M = self.base.maximal_ideal()
        return SigmaMonoid(M.shift(-self.base.multiplicity).to_semigroup())

    def grid(self, width: int, height: int) -> list[list[bool]]:
        """Row-major membership grid; ``grid[b][a]`` is ``(a, b) in Sigma``."""
        return [[(a, b) in self for a in range(width)] for b in range(height)]

    def statistics(self) -> SigmaStatistics:
        S = self.base
        return SigmaStatistics(
            mu=len(self.minimal_generators),
            gap_count=len(self.gaps),
            delta=S.delta,
            nu=S.embedding_dimension,
        )


@dataclass(frozen=True)
class AperySet:
    """Ap_(1,1)(Sigma) = {(s,0)} + {(0,s)} (s in S) + ``finite``."""

    base: NumericalSemigroup
    finite: frozenset[PlanePoint]

    def __contains__(self, p: object) -> bool:
        a, b = p  # type: ignore[misc]
        if b == 0:
            return a in self.base
        if a == 0:
            return b in self.base
        return PlanePoint(a, b) in self.finite


@dataclass(frozen=True)
class SigmaStatistics:
    mu: int
    gap_count: int
    delta: int
    nu: int


def build_sigma(S: NumericalSemigroup) -> SigmaMonoid:
    return SigmaMonoid(S)


def arf_t_sigma(S: NumericalSemigroup) -> frozenset[PlanePoint]:
    """T(Sigma) for an Arf semigroup, assembled from the blowup chain:
    ``(t + b, b)`` and ``(b, t + b)`` for t in T(S_b), b < n."""
    if S.is_naturals:
        raise FullSemigroup("T(Sigma) is only considered for S != N")
    if not S.is_arf():
        raise NotArf(f"{S} is not Arf")
    out = set()
    for b, (Sb, _) in enumerate(S.blowup_chain()[: S.n]):
        for t in Sb.pseudo_frobenius():
            out.add(PlanePoint(t + b, b))
            out.add(PlanePoint(b, t + b))
    return frozenset(out)


def arf_gap_count(multiplicities: list[int]) -> int:
    """``2 (e_0 + 2 e_1 + ... + n e_{n-1} - C(n+1, 2))`` for an Arf sequence."""
    es = _leading(multiplicities)
    n = len(es)
    return 2 * (sum((i + 1) * e for i, e in enumerate(es)) - n * (n + 1) // 2)


def arf_gap_count_from_elements(small_elements: tuple[int, ...]) -> int:
    """``2 (n s_n - (s_1 + ... + s_{n-1}) - C(n+1, 2))``."""
    n = len(small_elements) - 1
    return 2 * (n * small_elements[n] - sum(small_elements[1:n]) - n * (n + 1) // 2)


def arf_generator_count(multiplicities: list[int]) -> int:
    """``2 e_0 + 1 + 2 sum_{i<n} (e_i - 1)``."""
    es = _leading(multiplicities)
    return 2 * es[0] + 1 + 2 * sum(e - 1 for e in es)


def _leading(multiplicities: list[int]) -> list[int]:
    es = list(multiplicities)
    while es and es[-1] == 1:
        es.pop()
    if not es:
        raise FullSemigroup("the formulas assume S != N")
    return es
