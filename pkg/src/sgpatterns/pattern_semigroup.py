"""Pattern x semigroup interactions: admits, image, closure, p-systems.

All tuple-level work goes through :class:`_TupleValues`, a backward dynamic
program over non-increasing tuples drawn from a finite sorted list of
members. For each position ``i`` and each member index ``j`` it stores, as a
bitmask, every value ``sum_{r >= i} a_r s_r`` with ``s_i <= E[j]``. That gives
the full value set of ``p`` in one pass and lets the lexicographically first
failing tuple be read off greedily without backtracking.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    DoesNotAdmit,
    InvalidParameters,
    InvalidSemigroup,
    NotASemigroup,
    NotPremonic,
    NotStronglyAdmissible,
    VerificationFailed,
)
from .pattern import Pattern, subtraction_pattern
from .semigroup import NumericalSemigroup


class Status(enum.Enum):
    ADMITS = "ADMITS"
    REJECTS = "REJECTS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class AdmitsVerdict:
    status: Status
    witness: Optional[tuple[int, ...]] = None
    value: Optional[int] = None
    bound: Optional[int] = None

    @property
    def admits(self) -> bool:
        return self.status is Status.ADMITS

    @property
    def rejects(self) -> bool:
        return self.status is Status.REJECTS

    @property
    def exact(self) -> bool:
        return self.status is not Status.UNKNOWN

    def __str__(self) -> str:
        if self.status is Status.REJECTS:
            w = ",".join(map(str, self.witness))
            return f"REJECTS witness=({w}) value={self.value}"
        if self.status is Status.UNKNOWN:
            return f"UNKNOWN up to bound={self.bound}"
        return "ADMITS"

    def to_json(self) -> dict:
        out: dict = {"status": self.status.value}
        if self.witness is not None:
            out["witness"] = list(self.witness)
            out["value"] = self.value
        if self.bound is not None:
            out["bound"] = self.bound
        return out


@dataclass(frozen=True)
class ClosureTrace:
    """``steps[0]`` is the input, ``steps[i+1] = p(steps[i])``, ``steps[-1]`` is the fixpoint."""

    steps: tuple[NumericalSemigroup, ...]

    @property
    def k(self) -> int:
        return len(self.steps) - 1

    @property
    def last(self) -> NumericalSemigroup:
        return self.steps[-1]


class _TupleValues:
    def __init__(self, coeffs: Sequence[int], elems: Sequence[int]):
        self.coeffs = tuple(coeffs)
        self.elems = tuple(elems)
        top = self.elems[-1] if self.elems else 0
        # every partial (suffix or full) evaluation is >= -offset
        self.offset = sum(-a for a in self.coeffs if a < 0) * top
        n, t = len(self.coeffs), len(self.elems)
        zero = 1 << self.offset
        # table[i][j]: suffix values from position i (0-based) with s_i <= elems[j]
        self.table: list[list[int]] = [[0] * t for _ in range(n + 1)]
        self.table[n] = [zero] * t
        for i in range(n - 1, -1, -1):
            a = self.coeffs[i]
            nxt, row, acc = self.table[i + 1], self.table[i], 0
            for j, e in enumerate(self.elems):
                acc |= _shift(nxt[j], a * e)
                row[j] = acc

    def all_values(self) -> int:
        if not self.coeffs:
            return 1 << self.offset
        return self.table[0][-1]

    def values_in(self, lo: int, hi: int) -> list[int]:
        """Attainable values ``v`` with ``lo <= v < hi``."""
        mask = self.all_values()
        return [v for v in range(lo, hi) if v + self.offset >= 0 and (mask >> (v + self.offset)) & 1]

    def first_failure(self, bad: int) -> Optional[tuple[tuple[int, ...], int]]:
        """Lexicographically first tuple whose value is in the ``bad`` mask.

        ``bad`` uses the same offset encoding as the tables.
        """
        if not self.coeffs or not self.all_values() & bad:
            return None
        chosen: list[int] = []
        partial, hi = 0, len(self.elems) - 1
        for i, a in enumerate(self.coeffs):
            for j in range(hi + 1):
                p = partial + a * self.elems[j]
                if _shift(self.table[i + 1][j], p) & bad:
                    chosen.append(self.elems[j])
                    partial, hi = p, j
                    break
            else:  # pragma: no cover - the table guarantees a hit
                raise AssertionError("inconsistent tuple-value table")
        return tuple(chosen), partial


def _shift(mask: int, by: int) -> int:
    return mask << by if by >= 0 else mask >> -by


def _nonmember_mask(sg: NumericalSemigroup, offset: int) -> int:
    """Bits for every value in ``[-offset, c)`` outside the semigroup."""
    mask = (1 << offset) - 1  # negatives
    for v in range(sg.conductor):
        if not sg.contains(v):
            mask |= 1 << (v + offset)
    return mask


def default_bound(sg: NumericalSemigroup, p: Pattern) -> int:
    return sg.conductor + len(p) * sg.multiplicity


def admits(sg: NumericalSemigroup, p: Pattern, bound: Optional[int] = None) -> AdmitsVerdict:
    """Decide whether ``sg`` admits ``p``.

    Exact for non-admissible and strongly admissible patterns. Other
    admissible patterns are searched over tuples with entries up to
    ``bound`` (default ``c + n*m``) and may come back UNKNOWN.
    """
    if not p.is_admissible():
        # l,...,l,0,...,0 with a negative prefix sum up to the run of l's
        cut = next(i for i, t in enumerate(p.prefix_sums, start=1) if t < 0)
        m = sg.multiplicity
        witness = (m,) * cut + (0,) * (len(p) - cut)
        return AdmitsVerdict(Status.REJECTS, witness, p.evaluate(witness))
    if not p.coeffs or sg.is_naturals:
        return AdmitsVerdict(Status.ADMITS)
    if p.is_strongly_admissible():
        elems, limit = sg.small_elements, None
    else:
        limit = default_bound(sg, p) if bound is None else bound
        elems = sg.elements_up_to(limit)
    tv = _TupleValues(p.coeffs, elems)
    hit = tv.first_failure(_nonmember_mask(sg, tv.offset))
    if hit is not None:
        return AdmitsVerdict(Status.REJECTS, hit[0], hit[1])
    if limit is None:
        return AdmitsVerdict(Status.ADMITS)
    return AdmitsVerdict(Status.UNKNOWN, bound=limit)


def _require_closable(p: Pattern) -> None:
    if not p.is_premonic():
        raise NotPremonic(f"{p} is not premonic")
    if not p.is_strongly_admissible():
        raise NotStronglyAdmissible(f"{p} is not strongly admissible")


def image(sg: NumericalSemigroup, p: Pattern) -> NumericalSemigroup:
    """``p(L)``: all values of ``p`` on non-increasing tuples of members.

    Tuples with ``s1 >= c`` only produce values ``>= c``, so it is enough to
    evaluate on members below the conductor.
    """
    _require_closable(p)
    if sg.is_naturals:
        return sg
    tv = _TupleValues(p.coeffs, sg.small_elements)
    new = tv.values_in(0, sg.conductor)
    return NumericalSemigroup.from_members(set(new) | set(sg.small_elements), sg.conductor)


def closure(sg: NumericalSemigroup, p: Pattern) -> ClosureTrace:
    """Iterate the image operator up to its fixpoint, the p-closure of ``sg``."""
    _require_closable(p)
    steps = [sg]
    while True:
        nxt = image(steps[-1], p)
        if nxt == steps[-1]:
            return ClosureTrace(tuple(steps))
        steps.append(nxt)


def minimal_p_system(sg: NumericalSemigroup, p: Pattern) -> tuple[int, ...]:
    """Minimal generators ``a`` with ``L \\ {a}`` still admitting ``p``.

    The result is re-checked: its p-closure must give back ``sg`` and it must
    contain the multiplicity.
    """
    _require_closable(p)
    if not admits(sg, p).admits:
        raise DoesNotAdmit(f"{sg} does not admit {p}")
    gens = tuple(a for a in sg.minimal_generators if admits(sg.remove(a), p).admits)
    if sg.multiplicity not in gens:
        raise VerificationFailed(f"multiplicity missing from p-system {gens} of {sg}")
    if closure(NumericalSemigroup.from_generators(gens), p).last != sg:
        raise VerificationFailed(f"p-closure of <{gens}> is not {sg}")
    return gens


def subtraction_degree_bounds(sg: NumericalSemigroup) -> tuple[int, int]:
    """(Apery depth, ceil(c/m) + 1): the search window for the subtraction degree."""
    return sg.apery_depth(), -(-sg.conductor // sg.multiplicity) + 1


def subtraction_degree(sg: NumericalSemigroup) -> int:
    """Least ``k`` such that ``sg`` admits ``x1 + ... + xk - x_{k+1}``."""
    if sg.is_naturals:
        return 1
    lower, upper = subtraction_degree_bounds(sg)
    for k in range(max(2, lower), upper + 1):
        if admits(sg, subtraction_pattern(k)).admits:
            return k
    raise VerificationFailed(f"{sg} rejects the subtraction pattern of degree {upper}")


def witness_family(q: int, k: int) -> NumericalSemigroup:
    """``<q, q+1>`` plus ``(k-1)(q+1) + 1 .. (k-1)(q+1) + (q-k-1)`` plus everything from ``kq``.

    Admits a boolean pattern of admissibility degree ``k`` iff its
    d-invariant is at most ``q - k - 1``.
    """
    if k <= 2 or q <= k + 1:
        raise InvalidParameters(f"need k > 2 and q > k + 1, got q={q}, k={k}")
    base = NumericalSemigroup.from_generators((q, q + 1))
    start = (k - 1) * (q + 1)
    members = {x for x in base.small_elements if x < k * q}
    members |= {x for x in range(base.conductor, k * q)}
    members |= set(range(start + 1, start + q - k))
    try:
        return NumericalSemigroup.from_members(members, k * q)
    except InvalidSemigroup as exc:
        raise NotASemigroup(str(exc)) from exc
