"""Linear homogeneous patterns and their purely combinatorial invariants.

A pattern is stored as its coefficient vector ``(a1, ..., an)``; all entries
are nonzero and the empty vector is the zero pattern. Nothing in this module
looks at a semigroup.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence, Union

from .errors import (
    DegreeInfinite,
    DegreeZero,
    EmptyPattern,
    IndexOutOfRange,
    LengthMismatch,
    MissingVariable,
    NotBoolean,
    NotSorted,
    PatternSyntaxError,
    ZeroCoefficient,
)


class Infinity(enum.Enum):
    """Unbounded admissibility degree. Deliberately not an int."""

    INFINITY = "infinity"

    def __str__(self) -> str:
        return "infinity"


INFINITY = Infinity.INFINITY
Degree = Union[int, Infinity]

_TERM = re.compile(r"([+-]?)(\d*)x(\d+)")


@dataclass(frozen=True)
class Pattern:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if any(a == 0 for a in self.coeffs):
            raise ZeroCoefficient(f"zero coefficient in {list(self.coeffs)}")

    @classmethod
    def of(cls, *coeffs: int) -> Pattern:
        return cls(tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> Pattern:
        """Parse ``x1+x2-x3``, ``10x1-7x2`` or the list form ``1,1,-1``."""
        s = "".join(text.split())
        if s in ("", "0"):
            return cls(())
        if "x" not in s:
            try:
                return cls(tuple(int(tok) for tok in s.split(",")))
            except ValueError:
                raise PatternSyntaxError(f"cannot parse pattern {text!r}") from None
        pos = 0
        by_index: dict[int, int] = {}
        while pos < len(s):
            match = _TERM.match(s, pos)
            if match is None or (pos > 0 and not match.group(1)):
                raise PatternSyntaxError(f"unexpected input at position {pos} in {text!r}")
            sign, coeff, index = match.groups()
            if sign == "+" and pos == 0:
                raise PatternSyntaxError(f"leading '+' in {text!r}")
            value = int(coeff) if coeff else 1
            if value == 0:
                raise ZeroCoefficient(f"zero coefficient on x{index} in {text!r}")
            i = int(index)
            if i == 0:
                raise PatternSyntaxError("variable indices start at 1")
            if i in by_index:
                raise PatternSyntaxError(f"x{i} appears more than once in {text!r}")
            by_index[i] = -value if sign == "-" else value
            pos = match.end()
        n = max(by_index)
        missing = [i for i in range(1, n + 1) if i not in by_index]
        if missing:
            raise MissingVariable(f"variables {', '.join(f'x{i}' for i in missing)} are absent")
        return cls(tuple(by_index[i] for i in range(1, n + 1)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for i, a in enumerate(self.coeffs, start=1):
            sign = "-" if a < 0 else ("+" if i > 1 else "")
            mag = "" if abs(a) == 1 else str(abs(a))
            out.append(f"{sign}{mag}x{i}")
        return "".join(out)

    def to_json(self) -> dict:
        return {"pattern": str(self), "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> Pattern:
        return cls(tuple(data["coeffs"]))

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        return tuple(accumulate(self.coeffs))

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def evaluate(self, s: Sequence[int]) -> int:
        if len(s) != len(self.coeffs):
            raise LengthMismatch(f"{len(s)} values for a pattern of length {len(self.coeffs)}")
        if any(x < 0 for x in s) or any(a < b for a, b in zip(s, s[1:])):
            raise NotSorted(f"{tuple(s)} is not a non-increasing tuple of naturals")
        return sum(a * x for a, x in zip(self.coeffs, s))

    # -- classification ---------------------------------------------------

    def is_admissible(self) -> bool:
        return all(t >= 0 for t in self.prefix_sums)

    def derived(self) -> Pattern:
        """``p - x1`` if ``a1 > 1``, else ``p(0, x1, ..., x_{n-1})``."""
        if not self.coeffs:
            raise EmptyPattern("the zero pattern has no derived pattern")
        a1, *rest = self.coeffs
        if a1 > 1:
            return Pattern((a1 - 1, *rest))
        return Pattern(tuple(rest))

    def is_strongly_admissible(self) -> bool:
        if not self.coeffs:
            return True
        return self.is_admissible() and self.derived().is_admissible()

    def is_premonic(self) -> bool:
        return 1 in self.prefix_sums

    def is_boolean(self) -> bool:
        return all(a in (1, -1) for a in self.coeffs)

    def admissibility_degree(self) -> Degree:
        """Least ``k`` with the k-th derived pattern not admissible.

        Runs of decrements on a large leading coefficient are jumped over:
        ``p - t*x1`` stays admissible exactly while ``t <= min prefix sum``.
        """
        k = 0
        p = self
        while p.coeffs:
            low = min(p.prefix_sums)
            if low < 0:
                return k
            a1 = p.coeffs[0]
            if a1 > 1:
                if low < a1 - 1:
                    return k + low + 1
                k += a1 - 1
                p = Pattern((1, *p.coeffs[1:]))
            else:
                k += 1
                p = Pattern(p.coeffs[1:])
        return INFINITY

    def boolean_decomposition(self) -> BooleanDecomposition:
        if not self.is_boolean():
            raise NotBoolean(f"{self} has a coefficient other than +1/-1")
        k = self.admissibility_degree()
        if k is INFINITY:
            raise DegreeInfinite(f"{self} has infinite admissibility degree")
        if k == 0:
            raise DegreeZero(f"{self} is not admissible")
        a = (0,) + self.coeffs  # 1-based
        n = len(self.coeffs)
        run, l = 0, None
        for j in range(k + 1, n + 1):
            run += a[j]
            if run == -1:
                l = j
        assert l is not None
        run, d = 0, None
        for j in range(k, n + 1):
            run += a[j]
            d = run if d is None else max(d, run)
        return BooleanDecomposition(
            k=k,
            l=l,
            d=d,
            f=self.coeffs[: k - 1],
            g=self.coeffs[k - 1 : l],
            h=self.coeffs[l:],
        )

    # -- induced patterns -------------------------------------------------

    def normalize_tail(self) -> Pattern:
        """Drop the positive coefficients after the last negative one."""
        negatives = [i for i, a in enumerate(self.coeffs) if a < 0]
        if not negatives:
            return self
        return Pattern(self.coeffs[: negatives[-1] + 1])

    def prefix(self, length: int) -> Pattern:
        if not 0 <= length <= len(self.coeffs):
            raise IndexOutOfRange(f"prefix length {length} outside 0..{len(self.coeffs)}")
        return Pattern(self.coeffs[:length])

    def interleave(self, j: int) -> Pattern:
        """Insert a new variable with coefficient +1 at (1-based) slot ``j``."""
        if not 1 <= j <= len(self.coeffs) + 1:
            raise IndexOutOfRange(f"slot {j} outside 1..{len(self.coeffs) + 1}")
        return Pattern(self.coeffs[: j - 1] + (1,) + self.coeffs[j - 1 :])


@dataclass(frozen=True)
class BooleanDecomposition:
    """``p = f + g + h`` split of a boolean pattern of finite positive degree.

    Indices are 1-based: ``f`` covers x1..x_{k-1}, ``g`` covers x_k..x_l and
    ``h`` the rest. ``d`` is the largest partial sum of the coefficients from
    position ``k`` onward.
    """

    k: int
    l: int
    d: int
    f: tuple[int, ...]
    g: tuple[int, ...]
    h: tuple[int, ...]

    def reassemble(self) -> Pattern:
        return Pattern(self.f + self.g + self.h)


def subtraction_pattern(k: int) -> Pattern:
    """``x1 + ... + xk - x_{k+1}``."""
    if k < 1:
        raise IndexOutOfRange(f"subtraction degree must be >= 1, got {k}")
    return Pattern((1,) * k + (-1,))


def arf_pattern() -> Pattern:
    return subtraction_pattern(2)


def trivializing_pattern() -> Pattern:
    return subtraction_pattern(1)


def parse(text: str) -> Pattern:
    return Pattern.parse(text)
