"""Slow, independent reference computations used to freeze expected values.

Nothing here calls into the package's decision procedures; each function is a
direct transcription of the underlying definition.
"""

from fractions import Fraction
from itertools import product
from math import floor


def squares_mod(p, include_zero=True):
    xs = range(p) if include_zero else range(1, p)
    return sorted({x * x % p for x in xs})


def ext_euclid_inverse(a, n):
    old_r, r = a % n, n
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    assert old_r == 1, "not invertible"
    return old_s % n


def k_set(p, d, S, N, m, b0, c0, i):
    """K_i evaluated with exact fractions: floor(d k^2 + (b0/m) k + (c0 - i)/m)."""
    out = set()
    for k in range(N + 1):
        v = floor(Fraction(d * k * k) + Fraction(b0, m) * k + Fraction(c0 - i, m))
        if v % p in S:
            out.add(k)
    return out


def covers_reference(p, d, S, N):
    """Statement (2) by full enumeration; returns (holds, first failing cell)."""
    S = set(S)
    for m in range(1, 2 * N + 2):
        for b0 in range(m * p + 1):
            for c0 in range(m * p + 1):
                K0 = k_set(p, d, S, N, m, b0, c0, 0)
                K1 = k_set(p, d, S, N, m, b0, c0, 1)
                if not K0:
                    return False, (m, b0, c0, "K0-empty")
                if not K1:
                    return False, (m, b0, c0, "K1-empty")
                if min(K0) > max(K1):
                    return False, (m, b0, c0, "min(K0)>max(K1)")
                if min(K1) > max(K0):
                    return False, (m, b0, c0, "min(K1)>max(K0)")
    return True, None


def orbit_meets(p, d, S, N, b, c):
    return any(floor(d * (k * k + b * k + c)) % p in S for k in range(N + 1))


def has_red_l3_triple(p, d, S):
    for s1, s2, s3 in product(S, repeat=3):
        if (s1 - 2 * s2 + s3 - 2 * d) % p in (p - 1, 0, 1):
            return True
    return False


def has_red_parallelogram(p, d, S, gamma):
    for s1, s2, s3, s4 in product(S, repeat=4):
        if (s1 + s2 - s3 - s4 - d * gamma) % p in (p - 1, 0, 1):
            return True
    return False


def shifted_cover_all(p, S, nonzero_only):
    R = squares_mod(p, include_zero=not nonzero_only)
    S = set(S)
    return all(
        any((b * r + c) % p in S for r in R) for b in range(1, p) for c in range(p)
    )
