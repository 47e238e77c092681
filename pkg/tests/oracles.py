"""Brute-force references, deliberately sharing no code with the package."""

from itertools import combinations, combinations_with_replacement
from math import gcd
from functools import reduce


def sieve(gens, limit):
    """Membership table over [0, limit] by coin-change reachability."""
    reach = [False] * (limit + 1)
    reach[0] = True
    for g in gens:
        for x in range(g, limit + 1):
            if reach[x - g]:
                reach[x] = True
    return reach


def frobenius_two(a, b):
    return a * b - a - b


def members_upto(gens, limit):
    table = sieve(gens, limit)
    return [x for x in range(limit + 1) if table[x]]


def frobenius_by_sieve(gens):
    # F <= (min gen - 1) * (max gen) for gcd-1 sets, a safe window
    limit = (min(gens)) * max(gens) + max(gens)
    table = sieve(gens, limit)
    gaps = [x for x in range(limit + 1) if not table[x]]
    return gaps[-1] if gaps else -1


def prune_generators(gens):
    """Minimal generating subset: keep a generator unless the smaller kept ones reach it."""
    kept = []
    for g in sorted(set(gens)):
        if not kept or not sieve(kept, g)[g]:
            kept.append(g)
    return kept


def apery_by_sieve(gens, modulus, limit):
    table = sieve(gens, limit)
    w = {}
    for x in range(limit + 1):
        if table[x] and x % modulus not in w:
            w[x % modulus] = x
    return [w[i] for i in range(modulus)]


def brute_admits(member, coeffs, window):
    """Check every non-increasing tuple with entries drawn from ``window``.

    Returns the failing tuples (non-increasing), sorted lexicographically.
    """
    fails = []
    for combo in combinations_with_replacement(sorted(window), len(coeffs)):
        s = tuple(reversed(combo))
        v = sum(a * x for a, x in zip(coeffs, s))
        if not member(v):
            fails.append(s)
    return sorted(fails)


def semigroups_by_gap_sets(genus):
    """All numerical semigroups with exactly ``genus`` gaps, as gap tuples.

    Gaps lie in [1, 2g - 1]; a gap set is valid iff its complement is closed
    under addition.
    """
    if genus == 0:
        return [()]
    universe = range(1, 2 * genus)
    out = []
    for gaps in combinations(universe, genus):
        gs = set(gaps)
        ok = True
        members = [x for x in range(0, 2 * genus) if x not in gs]
        for i, a in enumerate(members):
            for b in members[i:]:
                if a + b in gs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(gaps)
    return out


def gcd_all(xs):
    return reduce(gcd, xs)
