from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import semigroups
from semigroup_diffops import (
    NumericalSemigroup,
    Oversemigroup,
    WeylOperator,
    bijection_check,
    conductor_ideal,
    der_generators,
    fibers,
    is_stable,
    normalized_ideals,
    oversemigroups,
    quotient_fiber,
    realize_as_quotient,
    stabilizer,
)
from semigroup_diffops.errors import NotOversemigroup, SemigroupError
from semigroup_diffops.overrings import gap_pattern, ideal_generators, semigroup_ideal

N = NumericalSemigroup.from_generators


def all_semigroups_up_to(g):
    top = N(range(g + 1, 2 * g + 2))
    return [T.semigroup for T in oversemigroups(top)]


def brute_oversemigroups(S):
    """Every subset of the gaps whose union with S is closed under addition."""
    found = set()
    for r in range(len(S.gaps) + 1):
        for extra in combinations(S.gaps, r):
            members = {z for z in range(S.conductor) if z in S} | set(extra)
            if all((x + y) in members or x + y >= S.conductor for x in members for y in members):
                found.add(tuple(z for z in S.gaps if z not in extra))
    return found


def brute_normalized_ideals(S):
    """Every subset E of [0, c) containing 0 and S there, closed under adding S."""
    gaps, found = S.gaps, set()
    for r in range(len(gaps) + 1):
        for extra in combinations(gaps, r):
            E = {z for z in range(S.conductor) if z in S} | set(extra)
            small = [s for s in S.small_elements if s]
            if all((x + s) in E or x + s >= S.conductor for x in E for s in small):
                found.add(tuple(z for z in gaps if z not in extra))
    return found


class TestOversemigroups:
    def test_examples(self):
        assert {T.semigroup for T in oversemigroups(N([3, 4, 5]))} == {N([3, 4, 5]), N([2, 3]), N([1])}
        assert [T.semigroup for T in oversemigroups(N([1]))] == [N([1])]
        assert {T.semigroup for T in oversemigroups(N([2, 5]))} == {N([2, 5]), N([2, 3]), N([1])}

    @settings(max_examples=25)
    @given(semigroups(max_gen=9))
    def test_against_subsets(self, S):
        if S.delta > 10:
            return
        assert {T.semigroup.gaps for T in oversemigroups(S)} == brute_oversemigroups(S)

    def test_validation(self):
        with pytest.raises(NotOversemigroup):
            Oversemigroup(N([3, 5]), N([2, 3]))

    def test_self_stabilizing(self):
        for T in oversemigroups(N([4, 6, 9, 11])):
            E = T.as_ideal()
            assert E - E == E


class TestConductor:
    def test_examples(self):
        S = N([3, 4, 5])
        over = {T.semigroup: T for T in oversemigroups(S)}
        for target in (N([2, 3]), N([1])):
            C = conductor_ideal(S, over[target])
            assert C.min == 3 and C.tail == 3
        assert conductor_ideal(S, over[S]) == S.as_ideal()
        S = N([2, 5])
        nat = [T for T in oversemigroups(S) if T.semigroup.is_naturals][0]
        C = conductor_ideal(S, nat)
        assert C.min == 4 and C.tail == 4

    def test_wrong_parent(self):
        T = oversemigroups(N([3, 4, 5]))[0]
        with pytest.raises(NotOversemigroup):
            conductor_ideal(N([2, 5]), T)

    @given(semigroups(max_gen=9))
    def test_is_largest_common_ideal(self, S):
        for T in oversemigroups(S):
            C = conductor_ideal(S, T)
            for x in range(-2, S.conductor + 2):
                brute = all((x + t) in S for t in range(T.semigroup.conductor + S.conductor + 1) if t in T.semigroup)
                assert (x in C) == brute


class TestStabilizers:
    def test_examples(self):
        S = N([3, 4, 5])
        assert stabilizer(S.principal_ideal(4)).semigroup == S
        assert stabilizer(semigroup_ideal(S, [4, 5, 6])).semigroup == N([1])
        assert stabilizer(semigroup_ideal(S, [3, 5])).semigroup == N([2, 3])
        assert realize_as_quotient(oversemigroups(S)[1]) == semigroup_ideal(S, [3, 5])
        assert not is_stable(semigroup_ideal(S, [3, 4]))
        assert stabilizer(semigroup_ideal(S, [3, 4])).semigroup == S

    def test_two_five(self):
        S = N([2, 5])
        nat = [T for T in oversemigroups(S) if T.semigroup.is_naturals][0]
        assert realize_as_quotient(nat) == semigroup_ideal(S, [4, 5])

    def test_semigroup_ideal_errors(self):
        with pytest.raises(SemigroupError):
            semigroup_ideal(N([3, 5]), [4])
        with pytest.raises(SemigroupError):
            semigroup_ideal(N([3, 5]), [])

    @given(semigroups(max_gen=9))
    def test_invariants(self, S):
        for E in normalized_ideals(S):
            T = stabilizer(E)
            C = conductor_ideal(S, T)
            for x in (3, 5):
                if x in S:
                    assert stabilizer(E.shift(x)).semigroup == T.semigroup
            # a translate J inside S lies in the conductor
            J = E.shift(S.conductor)
            assert J.issubset(S.as_ideal())
            assert J.issubset(C) and J.min >= C.min
            # j + T inside E
            assert (E - E).shift(E.min).issubset(E)
            if T.semigroup.is_symmetric():
                assert is_stable(E)

    @given(semigroups(max_gen=9))
    def test_realize(self, S):
        for T in oversemigroups(S):
            I = realize_as_quotient(T)
            assert stabilizer(I).semigroup == T.semigroup
            assert is_stable(I)
            assert I.issubset(S.as_ideal())

    def test_der_generators(self):
        S = N([3, 4, 5])
        ops = der_generators(semigroup_ideal(S, [3, 5]))
        # E - E = <2,3> = {0, 2, 3, ...}, generated over S by 0 and 2
        assert ops == [WeylOperator({(1, 1): 1}), WeylOperator({(3, 1): 1})]
        principal = der_generators(S.principal_ideal(3))
        assert principal == [WeylOperator({(1, 1): 1})]

    @given(semigroups(max_gen=9))
    def test_ideal_generators(self, S):
        for E in normalized_ideals(S)[:6]:
            gens = ideal_generators(E)
            rebuilt = {g + s for g in gens for s in range(E.tail + 1) if s in S}
            assert {z for z in range(E.min, E.tail + 1) if z in E} <= rebuilt


class TestFibers:
    def test_three_four_five(self):
        fs = fibers(N([3, 4, 5]))
        assert [len(f.classes) for f in fs] == [2, 1, 1]
        assert fs[0].stable_flags() == [True, False]
        assert fs[0].to_dict() == {"overring": [3, 4, 5], "classes": [[1, 2], [2]], "stable": [True, False]}

    def test_quotient_fiber(self):
        S = N([3, 4, 5])
        over = oversemigroups(S)
        assert len(quotient_fiber(S, over[0])) == 2
        assert [gap_pattern(E) for E in quotient_fiber(S, over[1])] == [[1]]

    @given(semigroups(max_gen=8))
    def test_normalized_ideals_by_subsets(self, S):
        if S.delta > 10:
            return
        assert {tuple(gap_pattern(E)) for E in normalized_ideals(S)} == brute_normalized_ideals(S)

    @given(semigroups(max_gen=9))
    def test_partition(self, S):
        fs = fibers(S)
        classes = [gap_pattern(E) for f in fs for E in f.classes]
        assert len(classes) == len(normalized_ideals(S))
        assert len({tuple(c) for c in classes}) == len(classes)


class TestBijection:
    @pytest.mark.parametrize("k", range(0, 7))
    def test_two_odd(self, k):
        c = bijection_check(N([2, 2 * k + 1]))
        assert c.bijective and c.is_two_generated_odd and c.all_oversemigroups_symmetric
        assert c.class_count == c.overring_count == k + 1

    def test_examples(self):
        c = bijection_check(N([2, 7]))
        assert (c.bijective, c.class_count) == (True, 4)
        c = bijection_check(N([3, 4, 5]))
        assert not (c.bijective or c.is_two_generated_odd or c.all_oversemigroups_symmetric)

    def test_exhaustive_small_frobenius(self):
        family = all_semigroups_up_to(12)
        assert len(family) == 171
        for S in family:
            assert bijection_check(S).consistent, S
