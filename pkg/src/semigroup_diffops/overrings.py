"""Monomial ideals of C[S], their quotients I:I and the semigroup overrings.

A monomial ideal of C[S] is a semigroup ideal E of S (the exponents of its
monomials).  ``I:I`` corresponds to ``E - E``, an oversemigroup T of S, and
``Der(I, I)`` is generated by the ``t^(n+1) d`` with n running over generators
of T as an S-module.  Two monomial ideals are equivalent when one is a
translate of the other, so each class has a unique representative E with
``min(E) = 0``; such an E always contains S.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .errors import NotOversemigroup, SemigroupError
from .semigroup import NumericalSemigroup, RelativeIdeal, ideal_difference
from .weyl import WeylOperator, preserves


def semigroup_ideal(S: NumericalSemigroup, generators: Iterable[int]) -> RelativeIdeal:
    """The ideal ``union (x + S)`` of S, as a relative ideal contained in S."""
    gens = sorted(set(generators))
    if not gens:
        raise SemigroupError("an ideal needs at least one generator")
    for x in gens:
        if x not in S:
            raise SemigroupError(f"{x} is not an element of {S}")
    stop = gens[0] + S.conductor
    return RelativeIdeal.from_predicate(
        S, lambda z: any((z - x) in S for x in gens), gens[0], stop
    )


def ideal_generators(E: RelativeIdeal) -> list[int]:
    """Minimal generators of E as an S-ideal: members not in E + M."""
    S = E.owner
    stop = E.tail + S.multiplicity
    return [
        z for z in E.members(stop)
        if not any((z - m) in E for m in range(1, z - E.min + 1) if m in S)
    ]


@dataclass(frozen=True)
class Oversemigroup:
    """A numerical semigroup T with parent S contained in T."""

    semigroup: NumericalSemigroup
    parent: NumericalSemigroup

    def __post_init__(self):
        if not set(self.semigroup.gaps) <= set(self.parent.gaps):
            raise NotOversemigroup(f"{self.semigroup} does not contain {self.parent}")

    def as_ideal(self) -> RelativeIdeal:
        """T as a relative ideal of its parent."""
        T = self.semigroup
        return RelativeIdeal.from_predicate(self.parent, T.__contains__, 0, T.conductor)

    def __str__(self) -> str:
        return str(self.semigroup)


def stabilizer(E: RelativeIdeal) -> Oversemigroup:
    """``E - E``; as rings, ``I:I``."""
    return Oversemigroup((E - E).to_semigroup(), E.owner)


def der_generators(E: RelativeIdeal) -> list[WeylOperator]:
    """Generators ``t^(n+1) d`` of Der(I, I), n over S-module generators of E - E."""
    T = E - E
    ops = [WeylOperator({(n + 1, 1): 1}) for n in ideal_generators(T)]
    for op in ops:
        if not preserves(op, E):
            raise AssertionError(f"{op} does not preserve {E}")
    return ops


def oversemigroups(S: NumericalSemigroup) -> list[Oversemigroup]:
    """Every semigroup T with S contained in T contained in N.

    Search by adding one gap at a time.  Any proper oversemigroup of U contains
    the largest gap h of U it meets, and U with h added is again a semigroup,
    so the search reaches every T.
    """
    found = {S.gaps: S}
    frontier = [S]
    while frontier:
        nxt = []
        for U in frontier:
            for h in _special_gaps(U):
                gaps = tuple(x for x in U.gaps if x != h)
                if gaps not in found:
                    found[gaps] = V = NumericalSemigroup(gaps, _checked=True)
                    nxt.append(V)
        frontier = nxt
    ordered = sorted(found.values(), key=lambda T: (-T.delta, T.gaps))
    return [Oversemigroup(T, S) for T in ordered]


def _special_gaps(U: NumericalSemigroup) -> list[int]:
    # gaps h such that U with h added is still a semigroup
    positive = U.small_elements[1:]
    return [
        h for h in U.gaps
        if all((h + m) in U for m in positive) and (2 * h) in U
    ]


def conductor_ideal(S: NumericalSemigroup, T: Oversemigroup) -> RelativeIdeal:
    """``C = {x : x + T in S}``, the largest ideal shared by S and T."""
    if T.parent != S:
        raise NotOversemigroup(f"{T} is not recorded as an oversemigroup of {S}")
    return ideal_difference(S.as_ideal(), T.as_ideal())


def realize_as_quotient(T: Oversemigroup) -> RelativeIdeal:
    """``r + T`` with r = min(conductor); its stabilizer is T."""
    r = conductor_ideal(T.parent, T).min
    return T.as_ideal().shift(r)


def is_stable(E: RelativeIdeal) -> bool:
    """Whether E is principal over E - E, i.e. ``E = min(E) + (E - E)``."""
    return E == (E - E).shift(E.min)


def normalized_ideals(S: NumericalSemigroup) -> list[RelativeIdeal]:
    """One representative with minimum 0 for each translation class of ideals.

    These are the sets S plus some gaps, closed under adding S; the search adds
    gaps one at a time as in :func:`oversemigroups`.
    """
    found = {S.gaps: S.as_ideal()}
    frontier = [S.as_ideal()]
    positive = S.small_elements[1:]
    while frontier:
        nxt = []
        for E in frontier:
            missing = [z for z in range(1, E.tail) if z not in E]
            for h in missing:
                if all((h + m) in E for m in positive):
                    key = tuple(z for z in missing if z != h)
                    if key not in found:
                        found[key] = F = RelativeIdeal.from_elements(
                            S, [z for z in range(E.tail) if z in E or z == h], E.tail, check=False
                        )
                        nxt.append(F)
        frontier = nxt
    return [found[k] for k in sorted(found, key=lambda k: (-len(k), k))]


def gap_pattern(E: RelativeIdeal) -> list[int]:
    """Integers in ``[min E, tail)`` missing from E, measured from min E."""
    m = E.min
    return [z - m for z in range(m, E.tail) if z not in E]


@dataclass(frozen=True)
class Fiber:
    overring: Oversemigroup
    classes: tuple[RelativeIdeal, ...]

    def stable_flags(self) -> list[bool]:
        return [is_stable(E) for E in self.classes]

    def to_dict(self) -> dict:
        return {
            "overring": list(self.overring.semigroup.minimal_generators),
            "classes": [gap_pattern(E) for E in self.classes],
            "stable": self.stable_flags(),
        }


def fibers(S: NumericalSemigroup) -> list[Fiber]:
    """Ideal classes grouped by their stabilizer, one fiber per oversemigroup."""
    groups: dict[NumericalSemigroup, list[RelativeIdeal]] = defaultdict(list)
    for E in normalized_ideals(S):
        groups[stabilizer(E).semigroup].append(E)
    out = []
    for T in oversemigroups(S):
        out.append(Fiber(T, tuple(groups.pop(T.semigroup, ()))))
    if groups:
        raise AssertionError("an ideal class has a stabilizer outside the oversemigroups")
    return out


def quotient_fiber(S: NumericalSemigroup, T: Oversemigroup) -> list[RelativeIdeal]:
    """Normalized ideals E of S with ``E - E = T``."""
    if T.parent != S:
        raise NotOversemigroup(f"{T} is not recorded as an oversemigroup of {S}")
    return [E for E in normalized_ideals(S) if stabilizer(E).semigroup == T.semigroup]


@dataclass(frozen=True)
class BijectionCheck:
    bijective: bool
    is_two_generated_odd: bool
    all_oversemigroups_symmetric: bool
    overring_count: int
    class_count: int

    @property
    def consistent(self) -> bool:
        return self.bijective == self.is_two_generated_odd == self.all_oversemigroups_symmetric


def bijection_check(S: NumericalSemigroup) -> BijectionCheck:
    """Compare the three equivalent conditions on the overring/ideal-class map.

    ``bijective`` means every oversemigroup is the stabilizer of exactly one
    ideal class; ``is_two_generated_odd`` means ``S = <2, 2k+1>`` for some
    k >= 0 (k = 0 gives N).
    """
    fs = fibers(S)
    return BijectionCheck(
        bijective=all(len(f.classes) == 1 for f in fs),
        is_two_generated_odd=S.multiplicity <= 2,
        all_oversemigroups_symmetric=all(f.overring.semigroup.is_symmetric() for f in fs),
        overring_count=len(fs),
        class_count=sum(len(f.classes) for f in fs),
    )
