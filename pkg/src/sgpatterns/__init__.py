"""Patterns on numerical semigroups."""

from .enumeration import (
    EquivalenceVerdict,
    SemigroupDag,
    census,
    enumerate_all,
    enumerate_sp,
    equivalence_check,
    to_dot,
)
from .pattern import (
    INFINITY,
    BooleanDecomposition,
    Pattern,
    arf_pattern,
    subtraction_pattern,
    trivializing_pattern,
)
from .pattern_semigroup import (
    AdmitsVerdict,
    ClosureTrace,
    Status,
    admits,
    closure,
    image,
    minimal_p_system,
    subtraction_degree,
    witness_family,
)
from .semigroup import NumericalSemigroup, from_generators, naturals, sg

__all__ = [
    "INFINITY",
    "AdmitsVerdict",
    "BooleanDecomposition",
    "ClosureTrace",
    "EquivalenceVerdict",
    "NumericalSemigroup",
    "Pattern",
    "SemigroupDag",
    "Status",
    "admits",
    "arf_pattern",
    "census",
    "closure",
    "enumerate_all",
    "enumerate_sp",
    "equivalence_check",
    "from_generators",
    "image",
    "minimal_p_system",
    "naturals",
    "sg",
    "subtraction_degree",
    "subtraction_pattern",
    "to_dot",
    "trivializing_pattern",
    "witness_family",
]
