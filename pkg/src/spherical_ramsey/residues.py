"""Exact arithmetic substrate: residue sets mod p, rationals, floor division and squares.

Rationals are :class:`fractions.Fraction` throughout (always reduced, positive
denominator, exact).  Nothing in this package touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Iterator

import numpy as np

from .errors import NotCoprime, NotOddPrime

RationalNumber = Fraction

__all__ = [
    "RationalNumber",
    "ResidueSet",
    "complement",
    "translate",
    "canonical_translate",
    "is_prime",
    "quadratic_residues",
    "floor_div",
    "mod_inverse",
    "parse_residues",
]


class ResidueSet:
    """Immutable subset of Z/pZ stored as an integer bit set.

    Bit ``x`` of ``mask`` is set iff ``x`` is a member.  Membership is a shift
    and a mask, which keeps the direct residue tests cheap.
    """

    __slots__ = ("_modulus", "_mask")

    def __init__(self, modulus: int, members: Iterable[int] = ()):
        modulus = int(modulus)
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        mask = 0
        for x in members:
            x = int(x)
            if not 0 <= x < modulus:
                raise ValueError(f"residue {x} outside [0, {modulus - 1}]")
            mask |= 1 << x
        self._modulus = modulus
        self._mask = mask

    @classmethod
    def from_mask(cls, modulus: int, mask: int) -> ResidueSet:
        if mask >> modulus:
            raise ValueError("mask has bits beyond the modulus")
        obj = cls(modulus)
        obj._mask = mask
        return obj

    @classmethod
    def full(cls, modulus: int) -> ResidueSet:
        return cls.from_mask(modulus, (1 << modulus) - 1)

    @classmethod
    def interval(cls, modulus: int, lo: int, hi: int) -> ResidueSet:
        """Residues ``lo, lo+1, ..., hi`` (inclusive, no wraparound)."""
        return cls(modulus, range(lo, hi + 1))

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def members(self) -> tuple[int, ...]:
        out = []
        mask = self._mask
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, (int, np.integer)):
            return False
        return bool((self._mask >> (int(x) % self._modulus)) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResidueSet):
            return NotImplemented
        return self._modulus == other._modulus and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self._modulus, self._mask))

    def __repr__(self) -> str:
        return f"ResidueSet({self._modulus}, {set(self.members) or '{}'})"

    def __le__(self, other: ResidueSet) -> bool:
        self._check_same(other)
        return self._mask & ~other._mask == 0

    def _check_same(self, other: ResidueSet) -> None:
        if self._modulus != other._modulus:
            raise ValueError(f"moduli differ: {self._modulus} vs {other._modulus}")

    def union(self, other: ResidueSet) -> ResidueSet:
        self._check_same(other)
        return ResidueSet.from_mask(self._modulus, self._mask | other._mask)

    def isdisjoint(self, other: ResidueSet) -> bool:
        self._check_same(other)
        return self._mask & other._mask == 0

    def add(self, x: int) -> ResidueSet:
        return ResidueSet.from_mask(self._modulus, self._mask | (1 << (x % self._modulus)))

    def complement(self) -> ResidueSet:
        return ResidueSet.from_mask(self._modulus, ((1 << self._modulus) - 1) ^ self._mask)

    def translate(self, t: int) -> ResidueSet:
        p = self._modulus
        t %= p
        if t == 0:
            return self
        full = (1 << p) - 1
        rotated = ((self._mask << t) | (self._mask >> (p - t))) & full
        return ResidueSet.from_mask(p, rotated)

    def canonical_translate(self) -> ResidueSet:
        """Lexicographically least translate (by sorted member tuple)."""
        best = self
        best_key = self.members
        for t in range(1, self._modulus):
            cand = self.translate(t)
            key = cand.members
            if key < best_key:
                best, best_key = cand, key
        return best

    def indicator(self) -> np.ndarray:
        """Boolean lookup table of length ``modulus``."""
        raw = self._mask.to_bytes((self._modulus + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return bits[: self._modulus].astype(np.bool_)


def complement(X: ResidueSet) -> ResidueSet:
    return X.complement()


def translate(X: ResidueSet, t: int) -> ResidueSet:
    return X.translate(t)


def canonical_translate(X: ResidueSet) -> ResidueSet:
    return X.canonical_translate()


def parse_residues(text: str, modulus: int) -> ResidueSet:
    """Parse ``"0,5,10"``, ``"0..6"`` or a mix like ``"0..3,16..18"``; empty string is the empty set."""
    members: list[int] = []
    text = text.strip()
    if text in ("", "{}"):
        return ResidueSet(modulus)
    for part in text.strip("{}").split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError(f"empty range {part!r}")
            members.extend(range(lo_i, hi_i + 1))
        else:
            members.append(int(part))
    return ResidueSet(modulus, members)


def is_prime(n: int) -> bool:
    """Trial division; meant for the small moduli used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def quadratic_residues(p: int, include_zero: bool = True) -> ResidueSet:
    """Squares in F_p, with or without 0."""
    _require_odd_prime(p)
    squares = {(x * x) % p for x in range(1, p)}
    if include_zero:
        squares.add(0)
    return ResidueSet(p, squares)


def quadratic_nonresidue(p: int) -> int:
    """Smallest quadratic non-residue mod an odd prime ``p``."""
    _require_odd_prime(p)
    for q in range(2, p):
        if pow(q, (p - 1) // 2, p) == p - 1:
            return q
    raise AssertionError("unreachable for odd primes")


def floor_div(n: int, m: int) -> int:
    """Floored quotient; ``floor_div(-1, 3) == -1``."""
    if m < 1:
        raise ValueError(f"divisor must be positive, got {m}")
    return n // m


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n``, in ``[1, n-1]`` (arbitrary precision)."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) = {gcd(a, n)}")
    return pow(a, -1, n)


def frac_floor(x: Fraction) -> int:
    return x.numerator // x.denominator
