"""Numerical semigroups, the monoid Sigma with gr D(C[S]) = C[Sigma], and friends."""

from .errors import InvariantViolation, SemigroupError
from .ideals import ComponentKind, IrreducibleComponent, PlaneIdeal, divisors, max_apery
from .overrings import (
    Oversemigroup,
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
from .report import Report, build_report
from .semigroup import NumericalSemigroup, RelativeIdeal, arf_from_multiplicity_sequence, blowup
from .sigma import (
    PlanePoint,
    SigmaMonoid,
    arf_gap_count,
    arf_gap_count_from_elements,
    arf_generator_count,
    arf_t_sigma,
    build_sigma,
)
from .weyl import (
    WeylOperator,
    commutator,
    d_algebra_generators,
    format_operator,
    operator_for_degree,
    parse_operator,
    preserves,
    preserves_semigroup_ring,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
