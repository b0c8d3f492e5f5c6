"""Monomial ideals of Sigma and their irredundant irreducible decompositions.

A :class:`PlaneIdeal` given by generators ``(a_i, b_i)`` stands equally for the
monomial ideal of C[Sigma] generated by the ``t^a_i y^b_i``.  It is the
intersection of the complements of the divisor sets ``B(x)`` over the maximal
elements x of Sigma minus the ideal, cut down by the half planes ``x >= min a_i``
and ``y >= min b_i`` (the latter two only when the bound is positive).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

from .errors import ImproperIdeal, NotMember, SemigroupError, ZeroElement
from .sigma import PlanePoint, SigmaMonoid


def precedes(sigma: SigmaMonoid, p: PlanePoint, q: PlanePoint) -> bool:
    """``p <= q`` in the divisibility order: q - p lies in Sigma."""
    return (q[0] - p[0], q[1] - p[1]) in sigma


def divisors(sigma: SigmaMonoid, x: PlanePoint) -> frozenset[PlanePoint]:
    """B(x) = {s in Sigma : x - s in Sigma}."""
    x = PlanePoint(*x)
    if x not in sigma:
        raise NotMember(f"{x} is not in Sigma")
    return frozenset(
        PlanePoint(a, b)
        for a in range(x.a + 1)
        for b in range(x.b + 1)
        if (a, b) in sigma and (x.a - a, x.b - b) in sigma
    )


class PlaneIdeal:
    """The ideal ``union (g + Sigma)`` over a finite set of generators."""

    def __init__(self, sigma: SigmaMonoid, generators: Iterable[tuple[int, int]]):
        gens = frozenset(PlanePoint(*g) for g in generators)
        if not gens:
            raise SemigroupError("an ideal needs at least one generator")
        for g in gens:
            if g not in sigma:
                raise NotMember(f"generator {g} is not in Sigma")
        self.sigma = sigma
        self.generators = gens

    def __repr__(self) -> str:
        gens = ", ".join(map(str, sorted(self.generators)))
        return f"PlaneIdeal({self.sigma.base}; {gens})"

    @cached_property
    def a_min(self) -> int:
        return min(g.a for g in self.generators)

    @cached_property
    def b_min(self) -> int:
        return min(g.b for g in self.generators)

    @property
    def is_proper(self) -> bool:
        return (0, 0) not in self

    def __contains__(self, p: object) -> bool:
        a, b = p  # type: ignore[misc]
        if a < self.a_min or b < self.b_min:
            return False
        bound = self.scan_bound
        if a >= bound or b >= bound:
            # see scan_bound
            return True
        return (a, b) in self._members

    def contains_by_translates(self, p: tuple[int, int]) -> bool:
        """Membership straight from the definition, without the table."""
        a, b = p
        return any((a - g.a, b - g.b) in self.sigma for g in self.generators)

    @cached_property
    def _members(self) -> frozenset[tuple[int, int]]:
        # p is in I iff p is a generator or p - gamma is in I for a minimal
        # generator gamma of Sigma
        bound, gens = self.scan_bound, self.sigma.minimal_generators
        seeds = {tuple(g) for g in self.generators}
        out: set[tuple[int, int]] = set()
        for a in range(self.a_min, bound):
            for b in range(self.b_min, bound):
                if (a, b) in seeds or any((a - ga, b - gb) in out for ga, gb in gens):
                    out.add((a, b))
        return frozenset(out)

    @cached_property
    def scan_bound(self) -> int:
        """Coordinates of maximal non-members stay below this value.

        If ``(x, y)`` has ``x >= a_min`` and ``y >= b_min``, subtracting the
        generator that attains ``b_min`` leaves a point whose first coordinate
        is ``x - a_g``; once that reaches the box bound of Sigma the difference
        is in Sigma.  Symmetrically for y.  So every point of that quadrant
        with a coordinate at or beyond the bound is in I.
        """
        top = max(max(g.a, g.b) for g in self.generators)
        return top + self.sigma.box_bound

    def maximal_gaps(self) -> frozenset[PlanePoint]:
        """Maximal elements of Sigma minus I in the divisibility order.

        A point with ``x < a_min`` is never maximal: adding ``(0, s)`` keeps it
        outside I.  The same goes for ``y < b_min``, so only the quadrant above
        ``(a_min, b_min)`` is scanned.  A non-member x is maximal iff
        ``x + gamma`` is in I for every minimal generator gamma of Sigma.
        """
        if not self.is_proper:
            raise ImproperIdeal("the ideal is all of Sigma")
        bound = self.scan_bound
        self._assert_bound(bound)
        gens = self.sigma.minimal_generators
        out = set()
        for a in range(self.a_min, bound):
            for b in range(self.b_min, bound):
                p = PlanePoint(a, b)
                if p in self.sigma and p not in self and all((p + g) in self for g in gens):
                    out.add(p)
        return frozenset(out)

    def _assert_bound(self, bound: int) -> None:
        lo_a, lo_b = self.a_min, self.b_min
        edge = [(bound, b) for b in range(lo_b, bound + 1)] + [(a, bound) for a in range(lo_a, bound + 1)]
        if not all(self.contains_by_translates(p) for p in edge):
            raise AssertionError(f"scan bound {bound} does not cover {self}")

    def decompose(self) -> list[IrreducibleComponent]:
        """The unique irredundant decomposition into irreducible ideals."""
        if not self.is_proper:
            raise ImproperIdeal("the ideal is all of Sigma")
        comps = [IrreducibleComponent.complement_of_divisors(x) for x in sorted(self.maximal_gaps())]
        if self.a_min > 0:
            comps.append(IrreducibleComponent.half_plane_x(self.a_min))
        if self.b_min > 0:
            comps.append(IrreducibleComponent.half_plane_y(self.b_min))
        return comps

    def is_completely_irreducible(self) -> bool:
        """Whether I = Sigma minus B(x) for some x.

        Sigma minus I is closed under divisors; it has the form B(x) exactly
        when it is finite with a single maximal element.
        """
        if not self.is_proper:
            return False
        return self.a_min == 0 and self.b_min == 0 and len(self.maximal_gaps()) == 1


class ComponentKind(str, Enum):
    HALF_PLANE_X = "half_plane_x"
    HALF_PLANE_Y = "half_plane_y"
    COMPLEMENT_OF_DIVISORS = "complement_of_divisors"


@dataclass(frozen=True)
class IrreducibleComponent:
    """One of the three kinds of irreducible ideals of Sigma.

    ``half_plane_x(a)`` is ``Sigma ∩ {x >= a}``, ``half_plane_y(b)`` is
    ``Sigma ∩ {y >= b}`` and ``complement_of_divisors(x)`` is Sigma minus B(x).
    """

    kind: ComponentKind
    value: int | PlanePoint

    @classmethod
    def half_plane_x(cls, a: int) -> IrreducibleComponent:
        if a <= 0:
            raise SemigroupError("half planes need a positive bound")
        return cls(ComponentKind.HALF_PLANE_X, a)

    @classmethod
    def half_plane_y(cls, b: int) -> IrreducibleComponent:
        if b <= 0:
            raise SemigroupError("half planes need a positive bound")
        return cls(ComponentKind.HALF_PLANE_Y, b)

    @classmethod
    def complement_of_divisors(cls, x: tuple[int, int]) -> IrreducibleComponent:
        return cls(ComponentKind.COMPLEMENT_OF_DIVISORS, PlanePoint(*x))

    def contains(self, sigma: SigmaMonoid, p: tuple[int, int]) -> bool:
        if p not in sigma:
            return False
        if self.kind is ComponentKind.HALF_PLANE_X:
            return p[0] >= self.value
        if self.kind is ComponentKind.HALF_PLANE_Y:
            return p[1] >= self.value
        return not precedes(sigma, PlanePoint(*p), self.value)

    def to_ideal(self, sigma: SigmaMonoid) -> PlaneIdeal:
        """The same ideal through its minimal generators."""
        top = max(max(g) for g in sigma.minimal_generators)
        if self.kind is ComponentKind.COMPLEMENT_OF_DIVISORS:
            reach = max(self.value) + top
        else:
            reach = self.value + top
        window = reach + sigma.box_bound + 1
        members = {
            PlanePoint(a, b)
            for a in range(window)
            for b in range(window)
            if self.contains(sigma, (a, b))
        }
        gens = [
            p for p in members
            if not any((p.a - ga, p.b - gb) in members for ga, gb in sigma.minimal_generators)
        ]
        return PlaneIdeal(sigma, gens)

    def to_dict(self) -> dict:
        value = list(self.value) if isinstance(self.value, tuple) else self.value
        return {"kind": self.kind.value, "value": value}

    def __str__(self) -> str:
        if self.kind is ComponentKind.HALF_PLANE_X:
            return f"N(x >= {self.value})"
        if self.kind is ComponentKind.HALF_PLANE_Y:
            return f"N(y >= {self.value})"
        return f"Sigma \\ B{self.value}"


def intersection_contains(
    sigma: SigmaMonoid, components: Iterable[IrreducibleComponent], p: tuple[int, int]
) -> bool:
    return p in sigma and all(c.contains(sigma, p) for c in components)


def check_decomposition(ideal: PlaneIdeal, components: list[IrreducibleComponent], box: int) -> list[str]:
    """Problems found when comparing a decomposition with the ideal on ``[0, box)^2``.

    An empty list means the intersection equals the ideal on the box and no
    component can be dropped without changing the intersection there.
    """
    sigma = ideal.sigma
    problems = []
    # for each point of Sigma outside the ideal, the components that exclude it
    excluders = []
    for a in range(box):
        for b in range(box):
            p = (a, b)
            if p not in sigma:
                continue
            out = [i for i, c in enumerate(components) if not c.contains(sigma, p)]
            inside = p in ideal
            if inside == bool(out):
                problems.append(f"{p}: in ideal = {inside}, in intersection = {not out}")
            if not inside:
                excluders.append(out)
    # a component is needed iff some point is excluded by it alone
    needed = {out[0] for out in excluders if len(out) == 1}
    problems += [
        f"component {comp} is redundant on the box"
        for i, comp in enumerate(components)
        if i not in needed
    ]
    return problems


def max_apery(sigma: SigmaMonoid, s: tuple[int, int]) -> frozenset[PlanePoint]:
    """Maximal elements of Ap_s(Sigma) = Sigma minus (s + Sigma)."""
    s = PlanePoint(*s)
    if s == (0, 0):
        raise ZeroElement("Ap_(0,0) is empty")
    if s not in sigma:
        raise NotMember(f"{s} is not in Sigma")
    return PlaneIdeal(sigma, [s]).maximal_gaps()
