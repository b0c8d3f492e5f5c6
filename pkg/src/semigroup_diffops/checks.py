"""Brute-force cross-checks.

These recompute quantities along a different route from the library proper
(additive closure instead of valencies, exhaustive dominance instead of the
generator test, and so on).  Each ``verify_*`` returns a list of human-readable
problems; an empty list means everything agreed.
"""

from __future__ import annotations

from .ideals import PlaneIdeal, check_decomposition
from .semigroup import NumericalSemigroup
from .sigma import PlanePoint, SigmaMonoid
from .weyl import d_algebra_generators, preserves_semigroup_ring


def closure_in_box(generators, bound: int) -> set[tuple[int, int]]:
    """The additive closure of ``generators`` intersected with ``[0, bound]^2``."""
    seen = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        a, b = stack.pop()
        for ga, gb in generators:
            q = (a + ga, b + gb)
            if q[0] <= bound and q[1] <= bound and q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def semigroup_by_sieve(gens, bound: int) -> set[int]:
    member = {0}
    for z in range(1, bound + 1):
        if any(z - d in member for d in gens):
            member.add(z)
    return member


def brute_force_t_sigma(sigma: SigmaMonoid) -> set[PlanePoint]:
    """``{tau : tau not in Sigma, tau + Sigma_+ in Sigma_+}`` by exhaustive search.

    Membership comes from the additive closure of the minimal generators.
    ``tau + gamma`` in Sigma for every minimal generator gamma already gives
    ``tau + Sigma_+`` in Sigma.
    """
    gens = sigma.minimal_generators
    top = max(max(g) for g in gens)
    c = sigma.box_bound
    members = closure_in_box(gens, c + 2 * top + 2)
    out = set()
    for a in range(-top, c + top):
        for b in range(-top, c + top):
            if (a, b) in members:
                continue
            if all((a + ga, b + gb) in members and (a + ga, b + gb) != (0, 0) for ga, gb in gens):
                out.add(PlanePoint(a, b))
    return out


def brute_force_maximal_gaps(ideal: PlaneIdeal, box: int) -> set[PlanePoint]:
    """Maxima of ``(Sigma minus I)`` within ``[0, box)^2`` by pairwise comparison.

    Points below ``a_min`` or ``b_min`` are dropped: inside a finite box the
    strips they lie on always have a last element that only looks maximal.
    """
    sigma = ideal.sigma
    outside = [
        PlanePoint(a, b)
        for a in range(ideal.a_min, box)
        for b in range(ideal.b_min, box)
        if (a, b) in sigma and (a, b) not in ideal
    ]
    return {
        x for x in outside
        if not any(y != x and (y.a - x.a, y.b - x.b) in sigma for y in outside)
    }


def verify_sigma(sigma: SigmaMonoid) -> list[str]:
    problems = []
    S = sigma.base
    bound = sigma.box_bound + 2 * max(S.frobenius, 0)
    closure = closure_in_box(sigma.minimal_generators, bound)
    for a in range(bound + 1):
        for b in range(bound + 1):
            inside = (a, b) in sigma
            if inside != ((a, b) in closure):
                problems.append(f"({a},{b}): valency test {inside}, closure {not inside}")
            if inside != ((b, a) in sigma):
                problems.append(f"({a},{b}): Sigma is not symmetric here")
            if inside != sigma.contains_mirrored((a, b)):
                problems.append(f"({a},{b}): the two valency criteria disagree")
    if not S.is_naturals:
        brute = brute_force_t_sigma(sigma)
        if brute != set(sigma.t_sigma):
            problems.append(f"T(Sigma) mismatch: formula {sorted(sigma.t_sigma)}, search {sorted(brute)}")
        mu = len(sigma.minimal_generators)
        if mu != 2 * S.embedding_dimension + 1 + 2 * S.delta:
            problems.append(f"mu = {mu} != 2 nu + 1 + 2 delta")
    return problems


def verify_blowup(sigma: SigmaMonoid) -> list[str]:
    """Sigma_1 = Sigma + T(Sigma) and (a,b) in Sigma_1 iff (a+1,b+1) in Sigma."""
    S = sigma.base
    if S.is_naturals or not S.is_max_embedding_dimension():
        return []
    nxt = sigma.blowup()
    t = sigma.t_sigma
    box = sigma.box_bound + 2
    problems = []
    for a in range(box):
        for b in range(box):
            p = (a, b)
            if (p in nxt) != (p in sigma or p in t):
                problems.append(f"{p}: Sigma_1 differs from Sigma + T(Sigma)")
            if (p in nxt) != ((a + 1, b + 1) in sigma):
                problems.append(f"{p}: shift by (1,1) fails")
    return problems


def verify_operators(S: NumericalSemigroup) -> list[str]:
    problems = []
    for p, op in d_algebra_generators(S).items():
        symbol = op.principal_symbol()
        if symbol != {tuple(p): 1}:
            problems.append(f"{p}: principal symbol {symbol}")
        if set(op.graded_components()) != {p.a - p.b}:
            problems.append(f"{p}: operator is not homogeneous of degree {p.a - p.b}")
        if not preserves_semigroup_ring(op, S):
            problems.append(f"{p}: {op} does not preserve C[S]")
    return problems


def verify_decomposition(ideal: PlaneIdeal, box: int) -> list[str]:
    comps = ideal.decompose()
    problems = check_decomposition(ideal, comps, box)
    brute = brute_force_maximal_gaps(ideal, max(box, ideal.scan_bound))
    if brute != set(ideal.maximal_gaps()):
        problems.append(f"maximal gaps {sorted(ideal.maximal_gaps())} vs search {sorted(brute)}")
    return problems
