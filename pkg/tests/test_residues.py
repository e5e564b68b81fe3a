from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spherical_ramsey.errors import NotCoprime, NotOddPrime
from spherical_ramsey.residues import (
    ResidueSet,
    canonical_translate,
    complement,
    floor_div,
    is_prime,
    mod_inverse,
    parse_residues,
    quadratic_nonresidue,
    quadratic_residues,
    translate,
)

from oracles import ext_euclid_inverse, squares_mod


@st.composite
def residue_sets(draw, max_p=40):
    p = draw(st.integers(2, max_p))
    members = draw(st.sets(st.integers(0, p - 1)))
    return ResidueSet(p, members)


def test_complement_examples():
    assert complement(ResidueSet(29, range(7))) == ResidueSet(29, range(7, 29))
    assert complement(ResidueSet(5)) == ResidueSet(5, range(5))
    assert complement(ResidueSet(8, {0, 4})).members == (1, 2, 3, 5, 6, 7)


def test_translate_examples():
    assert translate(ResidueSet(5, {0, 1, 2}), 2).members == (2, 3, 4)
    assert translate(ResidueSet(8, {0, 4}), 4) == ResidueSet(8, {0, 4})
    assert canonical_translate(ResidueSet(7, {3, 4, 5})).members == (0, 1, 2)


def test_members_validated():
    with pytest.raises(ValueError):
        ResidueSet(5, [5])
    with pytest.raises(ValueError):
        ResidueSet(1)
    assert len(ResidueSet(6, [1, 1, 2])) == 2


@given(residue_sets())
def test_double_complement(X):
    assert complement(complement(X)) == X


@given(residue_sets(), st.integers(-100, 100))
def test_translate_preserves_size_and_period(X, t):
    assert len(translate(X, t)) == len(X)
    assert translate(X, X.modulus) == X
    assert set(translate(X, t).members) == {(x + t) % X.modulus for x in X.members}


@given(residue_sets(max_p=20))
def test_canonical_is_least_translate(X):
    brute = min(tuple(sorted((x + t) % X.modulus for x in X.members)) for t in range(X.modulus))
    assert canonical_translate(X).members == brute


def test_quadratic_residues_examples():
    # oracle: square every element and reduce
    assert squares_mod(7) == [0, 1, 2, 4]
    assert quadratic_residues(7).members == (0, 1, 2, 4)
    assert quadratic_residues(7, include_zero=False).members == (1, 2, 4)
    assert quadratic_residues(3).members == (0, 1)


@pytest.mark.parametrize("p", [2, 1, 0, 9, 15, 91])
def test_quadratic_residues_rejects(p):
    with pytest.raises(NotOddPrime):
        quadratic_residues(p)


@pytest.mark.parametrize("p", [q for q in range(3, 200) if is_prime(q)])
def test_quadratic_residue_count_and_euler(p):
    R = quadratic_residues(p)
    assert len(R) == (p + 1) // 2
    assert set(R.members) == set(squares_mod(p))
    for r in range(p):
        assert (r in R) == (r == 0 or pow(r, (p - 1) // 2, p) == 1)
    q = quadratic_nonresidue(p)
    assert q not in R


def test_floor_div_examples():
    assert floor_div(7, 3) == 2
    assert floor_div(-1, 3) == -1
    assert floor_div(-6, 3) == -2
    with pytest.raises(ValueError):
        floor_div(1, 0)


@given(st.integers(-10**30, 10**30), st.integers(1, 10**12))
def test_floor_div_bracket(n, m):
    q = floor_div(n, m)
    assert q * m <= n < q * m + m


def test_mod_inverse_examples():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(1, 47) == 1
    assert ext_euclid_inverse(10, 47) == 33
    assert mod_inverse(10, 47) == 33
    with pytest.raises(NotCoprime):
        mod_inverse(6, 9)


@given(st.integers(1, 10**40), st.integers(2, 10**25))
def test_mod_inverse_matches_euclid(a, n):
    from math import gcd

    if gcd(a, n) != 1:
        with pytest.raises(NotCoprime):
            mod_inverse(a, n)
        return
    x = mod_inverse(a, n)
    assert 1 <= x <= n - 1 or n == 2
    assert a * x % n == 1
    assert x == ext_euclid_inverse(a, n)


@given(
    st.fractions(max_denominator=10**6),
    st.fractions(max_denominator=10**6),
)
def test_rational_round_trip(x, y):
    assert (x + y) - y == x
    assert isinstance(x + y, Fraction)


def test_parse_residues():
    assert parse_residues("0..6", 29) == ResidueSet(29, range(7))
    assert parse_residues("0,5,10", 47).members == (0, 5, 10)
    assert parse_residues("0..3,16..18", 31).members == (0, 1, 2, 3, 16, 17, 18)
    assert parse_residues("", 5) == ResidueSet(5)
    with pytest.raises(ValueError):
        parse_residues("0..40", 29)


def test_indicator_and_set_ops():
    A = ResidueSet(10, {0, 1})
    B = ResidueSet(10, {5, 6})
    assert A.isdisjoint(B)
    assert A.union(B).members == (0, 1, 5, 6)
    assert A <= A.union(B)
    assert list(A.indicator().nonzero()[0]) == [0, 1]
    with pytest.raises(ValueError):
        A.union(ResidueSet(11))
