import random
from dataclasses import replace
from fractions import Fraction
from math import gcd

import pytest

from spherical_ramsey.alpha import (
    PALETTES,
    UNIFORM_BOUND,
    AlphaCertificate,
    certify_alpha,
    certify_rational,
    red_interval_condition,
    shifted_residue_cover,
    shifted_residue_cover_all_b,
    verify_certificate,
)
from spherical_ramsey.errors import IrrationalAlphaError, NotCoprime, NotOddPrime
from spherical_ramsey.residues import ResidueSet

from oracles import shifted_cover_all

SEVEN = 47 * 59 * 67 * 71 * 73 * 79 * 83


def test_palette_table():
    assert sorted(PALETTES) == [47, 59, 67, 71, 73, 79, 83]
    assert PALETTES[47].S.members == (0, 5, 10, 15, 20)
    assert PALETTES[83].S.members == tuple(range(0, 36, 5))
    for p, pal in PALETTES.items():
        assert shifted_residue_cover(p, pal.S)
    assert shifted_residue_cover(59, PALETTES[59].S, nonzero_only=True)


def test_shifted_cover_examples():
    assert shifted_residue_cover(47, ResidueSet(47, range(0, 21, 5)))
    assert not shifted_residue_cover(47, ResidueSet(47, [0]))
    with pytest.raises(NotOddPrime):
        shifted_residue_cover(45, ResidueSet(45, [0]))


@pytest.mark.parametrize("p", sorted(PALETTES))
@pytest.mark.parametrize("nonzero", [False, True])
def test_reduced_b_equivalence(p, nonzero):
    S = PALETTES[p].S
    reduced = shifted_residue_cover(p, S, nonzero_only=nonzero)
    assert reduced == shifted_residue_cover_all_b(p, S, nonzero_only=nonzero)
    assert reduced == shifted_cover_all(p, S.members, nonzero)


@pytest.mark.parametrize("p", [7, 11, 13, 17])
def test_reduced_b_equivalence_random_sets(p):
    rng = random.Random(p)
    for _ in range(200):
        S = ResidueSet(p, rng.sample(range(p), rng.randint(1, p - 1)))
        for nz in (False, True):
            assert shifted_residue_cover(p, S, nz) == shifted_cover_all(p, S.members, nz)


def test_red_interval_examples():
    assert red_interval_condition(Fraction(1), 47)
    assert red_interval_condition(Fraction(95, 94), 47)
    assert not red_interval_condition(Fraction(2), 47)
    assert red_interval_condition(Fraction(3, 2) + 47 * 5, 47)
    assert not red_interval_condition(Fraction(3, 2) + Fraction(1, 10**30), 47)
    assert red_interval_condition(Fraction(1), 59)


def test_case1_identity():
    c = certify_rational(1, 1)
    assert (c.case_tag, c.p, c.multiplier, c.M) == ("rational-case1", 47, 1, 2209)
    assert c.alpha_blue_sq == 1 and c.alpha_red_sq == 1
    assert verify_certificate(c).verified


def test_case2_94():
    c = certify_rational(94, 1)
    assert (c.case_tag, c.p, c.multiplier, c.M) == ("rational-case2", 47, 1, 2209)
    assert c.alpha_blue_sq == 95 and c.alpha_red_sq == Fraction(95, 94)


def test_case3():
    c = certify_rational(63, SEVEN)
    assert c.case_tag == "rational-case3" and c.p == 47 and c.M == 2209
    assert c.epsilon == 0 and c.alpha_blue_sq.denominator == 1
    r = -(-63 // 47)
    assert 47 * r <= Fraction(3, 2) * 63


def test_final_case():
    c = certify_rational(1, SEVEN)
    assert c.case_tag == "final-case" and c.p == 59 and c.M == 6845
    assert c.alpha_red_sq == SEVEN + 1 and c.alpha_red_sq % 59 == 1
    assert c.epsilon == Fraction(1, SEVEN) < Fraction(1, 4 * 59**5)
    chk = verify_certificate(c)
    assert chk.verified and "epsilon > 0" in chk.transcript[-1]
    for a in (1, 2, 61, 62):
        cc = certify_rational(a, SEVEN * 11)
        assert cc.case_tag == "final-case" and verify_certificate(cc).verified


def test_case_boundary_at_63():
    assert certify_rational(62, SEVEN).case_tag == "final-case"
    assert certify_rational(63, SEVEN).case_tag == "rational-case3"
    assert certify_rational(64, SEVEN).case_tag == "rational-case3"


def test_not_coprime():
    with pytest.raises(NotCoprime):
        certify_rational(4, 6)


def test_tampered_certificates():
    c = certify_rational(1, 1)
    bad = verify_certificate(replace(c, alpha_red_sq=Fraction(2)))
    assert not bad.verified and bad.failure == "red interval condition violated"
    f = certify_rational(1, SEVEN)
    bad = verify_certificate(replace(f, epsilon=Fraction(1, 4 * 59**5) + 1))
    assert not bad.verified and bad.failure == "epsilon bound violated"
    assert not verify_certificate(replace(c, M=2208)).verified
    assert not verify_certificate(replace(c, alpha_sq=Fraction(2))).verified
    assert not verify_certificate(replace(c, b_int=47, alpha_blue_sq=Fraction(47))).verified
    assert not verify_certificate(replace(f, p=47, M=2 * 47 * 47 - 2 * 47 + 1)).verified


def _check_cert(a, b):
    c = certify_rational(a, b)
    assert verify_certificate(c).verified
    assert c.alpha_blue_sq * b == c.alpha_red_sq * a
    assert c.M <= UNIFORM_BOUND
    if c.case_tag == "rational-case3":
        assert c.p * -(-a // c.p) <= Fraction(3, 2) * a
    return c


def test_totality_small_grid():
    for a in range(1, 301):
        for b in range(1, 301):
            if gcd(a, b) == 1:
                _check_cert(a, b)


@pytest.mark.slow
def test_totality_full_grid():
    for a in range(1, 1001):
        for b in range(1, 1001):
            if gcd(a, b) == 1:
                _check_cert(a, b)


def test_totality_random_big():
    rng = random.Random(99)
    tags = set()
    for _ in range(1000):
        b = rng.randint(1, 10**20)
        a = rng.randint(1, 10**20)
        if rng.random() < 0.3:
            b *= SEVEN
            a = rng.randint(1, 200)
        g = gcd(a, b)
        tags.add(_check_cert(a // g, b // g).case_tag)
    assert {"rational-case1", "rational-case3", "final-case"} <= tags


def test_record_round_trip():
    for a, b in [(1, 1), (94, 1), (1, SEVEN), (63, SEVEN)]:
        c = certify_rational(a, b)
        rec = c.to_record()
        assert list(rec) == list(AlphaCertificate.FIELDS)
        assert all(isinstance(v, (str, int)) or v is None for v in rec.values())
        assert AlphaCertificate.from_record(rec) == c


def test_certify_alpha_inputs():
    assert certify_alpha("1/1").M == 2209
    assert certify_alpha(94).case_tag == "rational-case2"
    assert certify_alpha(Fraction(1, SEVEN)).M == 6845
    with pytest.raises(IrrationalAlphaError):
        certify_alpha(2 ** 0.5)
    with pytest.raises(NotCoprime):
        certify_alpha("2/4")
