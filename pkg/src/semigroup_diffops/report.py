"""Machine-readable reports emitted by the command line tool.

Every field holds plain JSON values (ints, strings, bools, lists, dicts) so
that ``Report.from_json(r.to_json()) == r`` holds exactly.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Optional

from . import checks
from .errors import InvariantViolation
from .ideals import PlaneIdeal
from .overrings import bijection_check, conductor_ideal, fibers
from .semigroup import NumericalSemigroup
from .sigma import SigmaMonoid, build_sigma
from .weyl import d_algebra_generators, format_operator

SCHEMA = 1


def _points(pts) -> list[list[int]]:
    return [[int(p[0]), int(p[1])] for p in sorted(pts)]


@dataclass
class Report:
    schema: int
    generators: list
    semigroup: dict
    sigma: dict
    blowup_chain: Optional[list] = None
    operators: Optional[list] = None
    decomposition: Optional[list] = None
    overrings: Optional[dict] = None
    verification: Optional[list] = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown report fields {sorted(unknown)}")
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


def semigroup_section(S: NumericalSemigroup) -> dict:
    naturals = S.is_naturals
    return {
        "minimal_generators": list(S.minimal_generators),
        "multiplicity": S.multiplicity,
        "frobenius": S.frobenius,
        "n": S.n,
        "delta": S.delta,
        "gaps": list(S.gaps),
        "small_elements": list(S.small_elements),
        "pseudo_frobenius": None if naturals else sorted(S.pseudo_frobenius()),
        "type": None if naturals else S.type,
        "max_embedding_dimension": S.is_max_embedding_dimension(),
        "arf": S.is_arf(),
        "symmetric": S.is_symmetric(),
        "multiplicity_sequence": S.multiplicity_sequence(),
    }


def sigma_section(sigma: SigmaMonoid) -> dict:
    st = sigma.statistics()
    naturals = sigma.base.is_naturals
    if not naturals and st.mu != 2 * st.nu + 1 + 2 * st.delta:
        raise InvariantViolation(f"mu = {st.mu} but 2 nu + 1 + 2 delta = {2 * st.nu + 1 + 2 * st.delta}")
    return {
        "mu": st.mu,
        "nu": st.nu,
        "delta": st.delta,
        "gap_count": st.gap_count,
        "box_bound": sigma.box_bound,
        "minimal_generators": _points(sigma.minimal_generators),
        "gaps": _points(sigma.gaps),
        "t_sigma": None if naturals else _points(sigma.t_sigma),
    }


def chain_section(S: NumericalSemigroup) -> list:
    """Each blowup step, with the check that the new Sigma adds exactly T(Sigma)."""
    out = []
    for Si, e in S.blowup_chain():
        sigma = build_sigma(Si)
        entry: dict[str, Any] = {
            "semigroup": list(Si.minimal_generators),
            "multiplicity": e,
            "t_sigma": None if Si.is_naturals else _points(sigma.t_sigma),
        }
        if not Si.is_naturals and Si.is_max_embedding_dimension():
            nxt = sigma.blowup()
            added = nxt.gaps ^ sigma.gaps
            entry["next_adds_t_sigma"] = added == set(sigma.t_sigma)
        out.append(entry)
    return out


def operators_section(S: NumericalSemigroup, unicode: bool = False) -> list:
    return [
        {
            "generator": [p.a, p.b],
            "degree": p.a - p.b,
            "order": op.order(),
            "operator": format_operator(op, unicode),
        }
        for p, op in d_algebra_generators(S).items()
    ]


def decomposition_section(ideal: PlaneIdeal) -> list:
    return [c.to_dict() for c in ideal.decompose()]


def overrings_section(S: NumericalSemigroup) -> dict:
    fs = fibers(S)
    check = bijection_check(S)
    rows = []
    for f in fs:
        row = f.to_dict()
        row["conductor_min"] = conductor_ideal(S, f.overring).min
        row["symmetric"] = f.overring.semigroup.is_symmetric()
        rows.append(row)
    return {
        "fibers": rows,
        "overring_count": check.overring_count,
        "class_count": check.class_count,
        "bijective": check.bijective,
        "is_two_generated_odd": check.is_two_generated_odd,
        "all_oversemigroups_symmetric": check.all_oversemigroups_symmetric,
    }


def build_report(
    generators: list[int],
    *,
    blowup_chain: bool = False,
    operators: bool = False,
    overrings: bool = False,
    ideal_points: Optional[list] = None,
    verify: bool = False,
    box: Optional[int] = None,
    unicode: bool = False,
) -> Report:
    S = NumericalSemigroup.from_generators(generators)
    sigma = build_sigma(S)
    report = Report(
        schema=SCHEMA,
        generators=sorted(set(generators)),
        semigroup=semigroup_section(S),
        sigma=sigma_section(sigma),
    )
    if blowup_chain:
        report.blowup_chain = chain_section(S)
    if operators:
        report.operators = operators_section(S, unicode)
    ideal = None
    if ideal_points:
        ideal = PlaneIdeal(sigma, ideal_points)
        report.decomposition = decomposition_section(ideal)
    if overrings:
        report.overrings = overrings_section(S)
    if verify:
        problems = run_verification(S, sigma, ideal, box)
        if problems:
            raise InvariantViolation("; ".join(problems[:10]))
        report.verification = ["sigma", "blowup", "operators"] + (["decomposition"] if ideal else [])
    return report


def run_verification(S, sigma, ideal=None, box=None) -> list[str]:
    problems = checks.verify_sigma(sigma) + checks.verify_blowup(sigma) + checks.verify_operators(S)
    if ideal is not None:
        problems += checks.verify_decomposition(ideal, box or ideal.scan_bound + 2)
    return problems
