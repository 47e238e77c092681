import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_admits
from sgpatterns import INFINITY, Pattern, arf_pattern, subtraction_pattern, trivializing_pattern
from sgpatterns.errors import (
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
from strategies import patterns

P = Pattern.of


def naive_degree(p, cap=10_000):
    """Iterate derived() literally; oracle for the jumping implementation."""
    for k in range(cap):
        if not p.coeffs:
            return INFINITY
        if not p.is_admissible():
            return k
        p = p.derived()
    raise AssertionError("no verdict within cap")


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x1+x2-x3", (1, 1, -1)),
        ("10x1-7x2", (10, -7)),
        ("x2+x1", (1, 1)),
        (" x1 + 3x2 - x3 ", (1, 3, -1)),
        ("-x1+2x2", (-1, 2)),
        ("1,1,-1", (1, 1, -1)),
        ("0", ()),
    ],
)
def test_parse(text, coeffs):
    assert Pattern.parse(text).coeffs == coeffs


@pytest.mark.parametrize(
    "text, error",
    [
        ("x1+x4", MissingVariable),
        ("0x1+x2", ZeroCoefficient),
        ("1,0,-1", ZeroCoefficient),
        ("x1+x1", PatternSyntaxError),
        ("x1x2", PatternSyntaxError),
        ("+x1", PatternSyntaxError),
        ("x0", PatternSyntaxError),
        ("y1", PatternSyntaxError),
        ("x1+", PatternSyntaxError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        Pattern.parse(text)


@given(patterns(6))
def test_print_parse_round_trip(p):
    assert Pattern.parse(str(p)) == p
    assert Pattern.from_json(p.to_json()) == p


def test_evaluate():
    assert P(1, 1, -1).evaluate((8, 8, 6)) == 10
    assert P().evaluate(()) == 0
    q = 5
    herm = subtraction_pattern(q - 1)
    assert herm.evaluate((q + 1,) * (q - 1) + (q,)) == q * q - q - 1
    with pytest.raises(NotSorted):
        P(1, 1).evaluate((1, 2))
    with pytest.raises(LengthMismatch):
        P(1, 1).evaluate((1,))


@pytest.mark.parametrize(
    "coeffs, admissible, strong, premonic",
    [
        ((1, 1, -1), True, True, True),
        ((1, -2), False, False, True),
        ((1, -1), True, False, True),
        ((10, -9), True, True, True),
        ((2, -1), True, True, True),
        ((2, 2, -2), True, True, False),
        ((), True, True, False),
    ],
)
def test_classification(coeffs, admissible, strong, premonic):
    p = Pattern(coeffs)
    assert p.is_admissible() is admissible
    assert p.is_strongly_admissible() is strong
    assert p.is_premonic() is premonic


def test_derived():
    assert P(1, 1, -1).derived() == P(1, -1)
    assert P(10, -7).derived() == P(9, -7)
    assert P(2, -1).derived() == P(1, -1)
    with pytest.raises(EmptyPattern):
        P().derived()


@pytest.mark.parametrize(
    "coeffs, degree",
    [
        ((10, -7), 4),
        ((1, 1, 1, -1), 3),
        ((1, -2), 0),
        ((5, -5), 1),
        ((10, -9), 2),
        ((3, 2), INFINITY),
        ((), INFINITY),
        ((2, -1), 2),
    ],
)
def test_admissibility_degree(coeffs, degree):
    assert Pattern(coeffs).admissibility_degree() == degree


def test_ten_minus_seven_third_derivative():
    p = P(10, -7)
    p3 = p.derived().derived().derived()
    assert p3 == P(7, -7) and p3.is_admissible()
    assert not p3.derived().is_admissible()


@pytest.mark.parametrize("k", range(1, 9))
def test_subtraction_degree_k(k):
    assert subtraction_pattern(k).admissibility_degree() == k


@given(patterns(6))
def test_degree_matches_naive_iteration(p):
    assert p.admissibility_degree() == naive_degree(p)


@given(st.lists(st.integers(-3, 40).filter(bool), min_size=1, max_size=4))
def test_degree_with_large_leading_coefficients(coeffs):
    p = Pattern(tuple(coeffs))
    assert p.admissibility_degree() == naive_degree(p)


@given(patterns(6).filter(lambda p: len(p) > 0))
def test_derived_decreases_lexicographically(p):
    q = p.derived()
    before = (p.coeffs[0], len(p))
    after = (q.coeffs[0] if q.coeffs else 0, len(q))
    assert after[1] < before[1] or (after[1] == before[1] and after[0] < before[0])


@given(patterns(5))
def test_admissible_iff_naturals_pass_tuple_probe(p):
    fails = brute_admits(lambda v: v >= 0, p.coeffs, range(9))
    assert p.is_admissible() == (not fails)


@pytest.mark.parametrize(
    "coeffs, k, l, d",
    [
        ((1, 1, 1, -1), 3, 4, 1),
        ((1, 1, 1, 1, -1, -1), 3, 6, 2),
        ((1, 1, -1), 2, 3, 1),
        ((1, 1, 1, -1, 1, -1, 1), 3, 6, 1),
    ],
)
def test_boolean_decomposition(coeffs, k, l, d):
    dec = Pattern(coeffs).boolean_decomposition()
    assert (dec.k, dec.l, dec.d) == (k, l, d)


def test_boolean_decomposition_of_long_example():
    # d is the largest partial sum from position k on: 1,0,1,2,1,0
    dec = P(1, 1, 1, -1, 1, 1, -1, -1).boolean_decomposition()
    assert (dec.k, dec.l, dec.d) == (3, 8, 2)


def test_boolean_decomposition_errors():
    with pytest.raises(NotBoolean):
        P(2, -1).boolean_decomposition()
    with pytest.raises(DegreeZero):
        P(-1, 1).boolean_decomposition()
    with pytest.raises(DegreeInfinite):
        P(1, 1).boolean_decomposition()


def all_boolean(max_len):
    for n in range(1, max_len + 1):
        for signs in itertools.product((1, -1), repeat=n):
            yield Pattern(signs)


def test_boolean_decomposition_invariants():
    for p in all_boolean(9):
        k = p.admissibility_degree()
        if k is INFINITY or k == 0:
            continue
        dec = p.boolean_decomposition()
        assert dec.reassemble() == p
        assert all(a == 1 for a in dec.f) and len(dec.f) == k - 1
        assert sum(dec.g) == 0 and dec.g[0] == 1
        assert not dec.h or sum(dec.h) > 0
        assert Pattern(dec.g).is_admissible() and Pattern(dec.h).is_admissible()
        # l is the last index where the sum from k+1 reaches -1
        tail = p.coeffs[k:]
        running = list(itertools.accumulate(tail))
        assert dec.l == k + max(i + 1 for i, t in enumerate(running) if t == -1)
        assert dec.d == max(itertools.accumulate(p.coeffs[k - 1 :]))


def test_normalize_tail():
    assert P(1, 1, -1, 1, 2).normalize_tail() == P(1, 1, -1)
    assert P(1, 1, -1).normalize_tail() == P(1, 1, -1)
    assert P(3, 2).normalize_tail() == P(3, 2)


def test_induced_constructors():
    assert subtraction_pattern(2) == arf_pattern() == P(1, 1, -1)
    assert trivializing_pattern() == P(1, -1)
    assert P(1, 1, -1).interleave(3) == P(1, 1, 1, -1)
    assert P(1, 1, -1).interleave(1) == P(1, 1, 1, -1)
    assert P(1, 3, -1).interleave(4) == P(1, 3, -1, 1)
    assert P(1, 1, -1).prefix(2) == P(1, 1)
    assert P(1, 1, -1).prefix(0) == P()
    with pytest.raises(IndexOutOfRange):
        P(1, -1).prefix(3)
    with pytest.raises(IndexOutOfRange):
        P(1, -1).interleave(4)
    with pytest.raises(IndexOutOfRange):
        subtraction_pattern(0)


def test_printing():
    assert str(P(10, -7)) == "10x1-7x2"
    assert str(P(-1, 2)) == "-x1+2x2"
    assert str(P()) == "0"
