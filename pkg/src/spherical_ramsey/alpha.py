"""Certificates for ``E^n -/-> (l_3, alpha l_M)`` with rational ``alpha^2``.

The coloring is ``x`` red iff ``floor(|x|^2) mod p`` is in a fixed palette
``S`` (multiples of 5).  A certificate splits ``alpha^2`` as
``alpha_blue^2 / alpha_red^2`` with

* ``alpha_red^2`` in ``[1, 3/2]`` mod ``p`` (no red ``alpha_red l_3``), and
* ``alpha_blue^2 = b_int + epsilon`` with ``p`` not dividing ``b_int`` and
  ``0 <= epsilon <= 1/(4 p^5)`` (no blue ``alpha_blue l_M``),

where ``M = p^2`` when ``epsilon == 0`` and ``M = 2p^2 - 2p + 1`` (only for
``p = 59``) otherwise.  The two implications are taken as given; this module
checks their hypotheses in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Optional

from .errors import ConstructionInvalid, IrrationalAlphaError, NotCoprime, ParameterOutOfRange
from .residues import (
    ResidueSet,
    frac_floor,
    mod_inverse,
    quadratic_nonresidue,
    quadratic_residues,
)

__all__ = [
    "PALETTES",
    "PRIMES",
    "UNIFORM_BOUND",
    "RedPalette",
    "AlphaCertificate",
    "CertificateCheck",
    "shifted_residue_cover",
    "shifted_residue_cover_all_b",
    "red_interval_condition",
    "certify_rational",
    "certify_alpha",
    "verify_certificate",
    "parse_alpha_sq",
]

PRIMES = (47, 59, 67, 71, 73, 79, 83)
# largest multiple of 5 in each palette
_PALETTE_TOP = {47: 20, 59: 25, 67: 30, 71: 30, 73: 30, 79: 30, 83: 35}
# the only prime with a verified R_p* cover, hence the only one allowed epsilon > 0
NONZERO_PRIME = 59
UNIFORM_BOUND = max(PRIMES) ** 2  # 6889


@dataclass(frozen=True)
class RedPalette:
    p: int
    S: ResidueSet


PALETTES = {p: RedPalette(p, ResidueSet(p, range(0, top + 1, 5))) for p, top in _PALETTE_TOP.items()}


def shifted_residue_cover(p: int, S: ResidueSet, nonzero_only: bool = False) -> bool:
    """Every affine image ``b*R + c`` (``b != 0``) meets ``S``; ``R`` is the squares mod ``p``.

    Multiplying by a square permutes ``R``, so ``b = 1`` and one non-residue
    cover every ``b``.
    """
    if S.modulus != p:
        raise ParameterOutOfRange(f"S has modulus {S.modulus}, expected {p}")
    R = quadratic_residues(p, include_zero=not nonzero_only)
    q = quadratic_nonresidue(p)
    return _covers_for(p, S, R, (1, q))


def shifted_residue_cover_all_b(p: int, S: ResidueSet, nonzero_only: bool = False) -> bool:
    """Same as :func:`shifted_residue_cover` but tries every ``b`` in ``F_p^*``."""
    if S.modulus != p:
        raise ParameterOutOfRange(f"S has modulus {S.modulus}, expected {p}")
    R = quadratic_residues(p, include_zero=not nonzero_only)
    return _covers_for(p, S, R, range(1, p))


def _covers_for(p, S, R, bs) -> bool:
    for b in bs:
        image = ResidueSet(p, ((b * r) % p for r in R.members))
        for c in range(p):
            if image.translate(c).isdisjoint(S):
                return False
    return True


def red_interval_condition(x: Fraction, p: int) -> bool:
    """Is there an integer ``j`` with ``1 <= x - j*p <= 3/2``?"""
    x = Fraction(x)
    if x <= 0:
        raise ParameterOutOfRange(f"x must be positive, got {x}")
    j = frac_floor((x - 1) / p)  # largest j with x - j p >= 1
    return x - j * p <= Fraction(3, 2)


@lru_cache(maxsize=None)
def _palette_covers(p: int, nonzero_only: bool) -> bool:
    return shifted_residue_cover(p, PALETTES[p].S, nonzero_only=nonzero_only)


def _epsilon_bound(p: int) -> Fraction:
    return Fraction(1, 4 * p**5)


def _length_for(p: int, epsilon: Fraction) -> int:
    return p * p if epsilon == 0 else 2 * p * p - 2 * p + 1


@dataclass(frozen=True)
class AlphaCertificate:
    alpha_sq: Fraction
    p: int
    alpha_red_sq: Fraction
    alpha_blue_sq: Fraction
    b_int: int
    epsilon: Fraction
    M: int
    case_tag: str
    multiplier: Optional[int] = None

    FIELDS = (
        "case_tag", "alpha_sq", "p", "M", "alpha_red_sq", "alpha_blue_sq",
        "b_int", "epsilon", "multiplier",
    )

    def to_record(self) -> dict:
        """Flat record; rationals and big integers as decimal strings, stable key order."""
        rec = {}
        for name in self.FIELDS:
            val = getattr(self, name)
            if name in ("p", "M") or val is None or isinstance(val, str):
                rec[name] = val
            else:
                rec[name] = str(val)
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> AlphaCertificate:
        return cls(
            alpha_sq=Fraction(rec["alpha_sq"]),
            p=int(rec["p"]),
            alpha_red_sq=Fraction(rec["alpha_red_sq"]),
            alpha_blue_sq=Fraction(rec["alpha_blue_sq"]),
            b_int=int(rec["b_int"]),
            epsilon=Fraction(rec["epsilon"]),
            M=int(rec["M"]),
            case_tag=rec["case_tag"],
            multiplier=None if rec.get("multiplier") is None else int(rec["multiplier"]),
        )


@dataclass(frozen=True)
class CertificateCheck:
    verified: bool
    transcript: tuple[str, ...]
    failure: Optional[str] = None

    def __bool__(self) -> bool:
        return self.verified


def verify_certificate(cert: AlphaCertificate) -> CertificateCheck:
    """Re-check every hypothesis of the certificate; stops at the first violation."""
    lines: list[str] = []

    def fail(msg: str) -> CertificateCheck:
        lines.append(f"FAIL {msg}")
        return CertificateCheck(False, tuple(lines), msg)

    p = cert.p
    if p not in PALETTES:
        return fail(f"prime {p} has no palette")
    lines.append(f"palette p={p}, S={list(PALETTES[p].S.members)}")

    if cert.alpha_red_sq <= 0 or not red_interval_condition(cert.alpha_red_sq, p):
        return fail("red interval condition violated")
    lines.append(f"alpha_red^2 = {cert.alpha_red_sq} lies in [1, 3/2] mod {p}")

    if not 0 <= cert.epsilon <= _epsilon_bound(p):
        return fail("epsilon bound violated")
    lines.append(f"0 <= epsilon = {cert.epsilon} <= 1/(4*{p}^5)")

    if cert.alpha_blue_sq != cert.b_int + cert.epsilon:
        return fail("alpha_blue^2 != b_int + epsilon")
    if cert.b_int % p == 0:
        return fail(f"b_int divisible by {p}")
    lines.append(f"alpha_blue^2 = {cert.b_int} + {cert.epsilon}, {p} does not divide {cert.b_int}")

    if cert.epsilon > 0 and p != NONZERO_PRIME:
        return fail(f"epsilon > 0 requires p = {NONZERO_PRIME}")
    expected_M = _length_for(p, cert.epsilon)
    if cert.M != expected_M:
        return fail(f"M = {cert.M}, expected {expected_M}")

    if cert.alpha_sq <= 0 or cert.alpha_blue_sq != cert.alpha_red_sq * cert.alpha_sq:
        return fail("alpha_blue^2 / alpha_red^2 != alpha^2")
    lines.append(f"alpha_blue^2 / alpha_red^2 = {cert.alpha_sq}")

    if not _palette_covers(p, False):
        return fail("palette misses a shifted copy of R_p")
    if cert.epsilon > 0:
        if not _palette_covers(p, True):
            return fail("palette misses a shifted copy of R_p*")
        lines.append(f"palette meets every b*R_{p}* + c")
        lines.append(f"epsilon > 0 branch: no red l3, no blue alpha*l{cert.M} (M = 2p^2-2p+1)")
    else:
        lines.append(f"palette meets every b*R_{p} + c")
        lines.append(f"epsilon = 0 branch: no red l3, no blue alpha*l{cert.M} (M = p^2)")
    return CertificateCheck(True, tuple(lines))


def _finish(cert: AlphaCertificate) -> AlphaCertificate:
    chk = verify_certificate(cert)
    if not chk:
        raise ConstructionInvalid(f"{cert.case_tag} for {cert.alpha_sq}: {chk.failure}")
    return cert


def certify_rational(a: int, b: int) -> AlphaCertificate:
    """Certificate for ``alpha^2 = a/b`` (lowest terms, both positive)."""
    if a < 1 or b < 1:
        raise ParameterOutOfRange(f"a and b must be positive, got {a}/{b}")
    if gcd(a, b) != 1:
        raise NotCoprime(f"{a}/{b} is not in lowest terms")
    alpha_sq = Fraction(a, b)

    for p in PRIMES:
        if b % p == 0:
            continue
        if a % p:
            m = mod_inverse(b, p)
            return _finish(AlphaCertificate(
                alpha_sq, p, Fraction(b * m), Fraction(a * m), a * m, Fraction(0),
                p * p, "rational-case1", m,
            ))
        m = mod_inverse(b, a * p)
        blue = (a + 1) * m
        return _finish(AlphaCertificate(
            alpha_sq, p, Fraction((a + 1) * b * m, a), Fraction(blue), blue, Fraction(0),
            p * p, "rational-case2", m,
        ))

    # every listed prime divides b
    p = PRIMES[0]
    if 3 * a > 4 * p:
        r = -(-a // p)
        if not Fraction(1, p) <= Fraction(r, a) <= Fraction(3, 2 * p):
            raise ConstructionInvalid(f"r/a = {r}/{a} outside [1/p, 1.5/p]")
        m = mod_inverse(b, a)
        red = Fraction(b * p * m * r, a)
        n_int = frac_floor((red - 1) / p)
        if not p * n_int + 1 <= red <= p * n_int + Fraction(3, 2):
            raise ConstructionInvalid(f"no integer N places {red} in [pN+1, pN+1.5]")
        blue = a + p * m * r
        return _finish(AlphaCertificate(
            alpha_sq, p, b + red, Fraction(blue), blue, Fraction(0),
            p * p, "rational-case3", m,
        ))

    p = NONZERO_PRIME
    eps = Fraction(a, b)
    return _finish(AlphaCertificate(
        alpha_sq, p, Fraction(b + 1), a + eps, a, eps,
        _length_for(p, eps), "final-case", None,
    ))


def parse_alpha_sq(text: str) -> Fraction:
    """Parse ``"a/b"`` or an integer.  Must already be in lowest terms."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        a, b = int(num), int(den)
        if b <= 0 or a <= 0:
            raise ParameterOutOfRange(f"alpha^2 must be a positive fraction, got {text}")
        if gcd(a, b) != 1:
            raise NotCoprime(f"{text} is not in lowest terms")
        return Fraction(a, b)
    a = int(text)
    if a <= 0:
        raise ParameterOutOfRange(f"alpha^2 must be positive, got {text}")
    return Fraction(a)


def certify_alpha(value) -> AlphaCertificate:
    """Certificate for a positive rational ``alpha^2`` given as int, Fraction or ``"a/b"``.

    Floats and other non-exact numbers are refused: irrational squared ratios
    go through an equidistribution argument that no finite check reproduces.
    """
    if isinstance(value, str):
        value = parse_alpha_sq(value)
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise IrrationalAlphaError(
            f"cannot certify {value!r}: only exact rationals are supported; irrational "
            "alpha^2 relies on an equidistribution argument with no finite certificate"
        )
    value = Fraction(value)
    return certify_rational(value.numerator, value.denominator)
