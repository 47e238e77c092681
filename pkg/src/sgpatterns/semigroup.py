"""Numerical semigroups in canonical form (conductor + elements below it).

Everything pattern-independent lives here: membership, minimal generators,
Frobenius number, genus, Apery sets and Apery depth, and the two elementary
moves used to walk the semigroup tree (removing a minimal generator, adding
the Frobenius number).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable

from .errors import (
    AlreadyFull,
    GcdNotOne,
    InvalidSemigroup,
    NotAMember,
    NotMinimalGenerator,
)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup stored as its conductor and its members below it.

    ``small_elements`` is empty exactly for the semigroup of all naturals
    (conductor 0). Instances are immutable; derived data is cached lazily.
    """

    conductor: int
    small_elements: tuple[int, ...]

    def __post_init__(self) -> None:
        c, small = self.conductor, self.small_elements
        if c < 0:
            raise InvalidSemigroup(f"negative conductor {c}")
        if c == 0:
            if small:
                raise InvalidSemigroup("conductor 0 admits no small elements")
            return
        if not small or small[0] != 0:
            raise InvalidSemigroup("0 must be a member")
        if any(b <= a for a, b in zip(small, small[1:])) or small[-1] >= c:
            raise InvalidSemigroup("small elements must be strictly increasing and below c")
        if small[-1] == c - 1:
            raise InvalidSemigroup(f"{c} is not the conductor: {c - 1} is a member")
        members = set(small)
        for i, a in enumerate(small):
            for b in small[i:]:
                if a + b < c and a + b not in members:
                    raise InvalidSemigroup(f"not closed under addition: {a}+{b}")

    # -- construction -----------------------------------------------------

    @classmethod
    def naturals(cls) -> NumericalSemigroup:
        return cls(0, ())

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> NumericalSemigroup:
        """Smallest numerical semigroup containing ``gens``.

        Membership is sieved upward; the conductor is the start of the first
        run of ``min(gens)`` consecutive members.
        """
        gens = sorted(set(gens))
        if not gens:
            raise InvalidSemigroup("empty generator list")
        if gens[0] < 1:
            raise InvalidSemigroup("generators must be positive")
        if reduce(math.gcd, gens) != 1:
            raise GcdNotOne(f"gcd{tuple(gens)} = {reduce(math.gcd, gens)}")
        m = gens[0]
        if m == 1:
            return cls.naturals()
        member = [True]
        run = 1  # 0 is a member, so a run of length 1 starts at 0
        x = 0
        while run < m:
            x += 1
            ok = any(x >= g and member[x - g] for g in gens)
            member.append(ok)
            run = run + 1 if ok else 0
        c = x - m + 1
        return cls(c, tuple(i for i in range(c) if member[i]))

    @classmethod
    def from_members(cls, members: Iterable[int], bound: int) -> NumericalSemigroup:
        """Canonical semigroup whose members are ``members`` below ``bound`` and everything from ``bound`` on.

        The conductor is lowered past any members directly below ``bound``.
        Closure under addition is validated by the constructor.
        """
        below = sorted({x for x in members if 0 <= x < bound})
        c = bound
        while below and below[-1] == c - 1:
            below.pop()
            c -= 1
        return cls(c, tuple(below))

    @classmethod
    def parse(cls, text: str) -> NumericalSemigroup:
        """Parse a comma-separated generator list such as ``7,15``."""
        try:
            gens = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError:
            raise InvalidSemigroup(f"cannot parse generator list {text!r}") from None
        return cls.from_generators(gens)

    # -- derived data -----------------------------------------------------

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.small_elements)

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def genus(self) -> int:
        return self.conductor - len(self.small_elements)

    @property
    def multiplicity(self) -> int:
        if self.conductor == 0:
            return 1
        return self.small_elements[1] if len(self.small_elements) > 1 else self.conductor

    @property
    def is_naturals(self) -> bool:
        return self.conductor == 0

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        """Members that are not a sum of two nonzero members (all lie below c + m)."""
        m = self.multiplicity
        nonzero = [x for x in self.elements_up_to(max(self.conductor + m - 1, m)) if x]
        gens = []
        for x in nonzero:
            if not any(self.contains(x - y) for y in nonzero if 2 * y <= x and x - y > 0):
                gens.append(x)
        return tuple(gens)

    @property
    def key(self) -> str:
        """String key used in JSON/DOT output, e.g. ``c=4;0,2``."""
        return f"c={self.conductor};" + ",".join(map(str, self.small_elements))

    @property
    def sort_key(self) -> tuple:
        return (self.conductor, self.small_elements)

    # -- queries ----------------------------------------------------------

    def contains(self, x: int) -> bool:
        return x >= self.conductor or x in self._member_set

    __contains__ = contains

    def elements_up_to(self, bound: int) -> list[int]:
        """Members in ``[0, bound]`` in increasing order."""
        out = [x for x in self.small_elements if x <= bound]
        out.extend(range(self.conductor, bound + 1))
        return out

    def leq(self, a: int, b: int) -> bool:
        """``a <=_L b``: ``b - a`` is a member. Both arguments must be members."""
        for x in (a, b):
            if not self.contains(x):
                raise NotAMember(f"{x} is not in {self}")
        return self.contains(b - a)

    def apery(self, modulus: int) -> tuple[int, ...]:
        """Apery set as ``w[i]`` = least member congruent to ``i`` mod ``modulus``."""
        if modulus <= 0 or not self.contains(modulus):
            raise NotAMember(f"{modulus} is not a positive member of {self}")
        w: list[int | None] = [None] * modulus
        missing = modulus
        x = 0
        while missing:
            if self.contains(x) and w[x % modulus] is None:
                w[x % modulus] = x
                missing -= 1
            x += 1
        return tuple(w)  # type: ignore[arg-type]

    def apery_depth(self) -> int:
        """Longest chain (counted in vertices) of ``<=_L`` inside Ap(L, m)."""
        ws = sorted(self.apery(self.multiplicity))
        longest = [1] * len(ws)
        for j, w in enumerate(ws):
            for i in range(j):
                if self.contains(w - ws[i]) and longest[i] + 1 > longest[j]:
                    longest[j] = longest[i] + 1
        return max(longest)

    # -- moves in the semigroup tree -------------------------------------

    def remove(self, a: int) -> NumericalSemigroup:
        """``L \\ {a}`` for a minimal generator ``a``."""
        if a not in self.minimal_generators:
            raise NotMinimalGenerator(f"{a} is not a minimal generator of {self}")
        if a >= self.conductor:
            small = self.small_elements + tuple(range(self.conductor, a))
            return NumericalSemigroup(a + 1, small)
        return NumericalSemigroup(self.conductor, tuple(x for x in self.small_elements if x != a))

    def add_frobenius(self) -> NumericalSemigroup:
        """``L U {F(L)}``."""
        if self.is_naturals:
            raise AlreadyFull("the naturals have no Frobenius number")
        f = self.frobenius
        # L U {n} is a semigroup iff 2n, 3n and n + l lie in L for every l in L
        if not (self.contains(2 * f) and self.contains(3 * f)
                and all(self.contains(f + x) for x in self.small_elements if x)):
            raise InvalidSemigroup(f"adjoining {f} does not give a semigroup")
        return NumericalSemigroup.from_members(self.small_elements + (f,), self.conductor)

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        gens = ",".join(map(str, self.minimal_generators))
        return f"<gens={gens}; F={self.frobenius}; m={self.multiplicity}; g={self.genus}>"

    def to_json(self) -> dict:
        return {
            "gens": list(self.minimal_generators),
            "conductor": self.conductor,
            "small_elements": list(self.small_elements),
            "frobenius": self.frobenius,
            "multiplicity": self.multiplicity,
            "genus": self.genus,
        }

    @classmethod
    def from_json(cls, data: dict) -> NumericalSemigroup:
        return cls(data["conductor"], tuple(data["small_elements"]))


def naturals() -> NumericalSemigroup:
    return NumericalSemigroup.naturals()


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def sg(*gens: int) -> NumericalSemigroup:
    """Shorthand: ``sg(7, 15)``."""
    return NumericalSemigroup.from_generators(gens)
