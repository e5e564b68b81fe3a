"""Compiled inner loop of the covers check.

All arithmetic is int64.  Callers must check the overflow envelope first
(:func:`spherical_ramsey.progression.check_envelope`).
"""

import numpy as np
from numba import njit

# Failure codes, in the order they are tested inside a cell.
OK = 0
K0_EMPTY = 1
K1_EMPTY = 2
K0_AFTER_K1 = 3  # min(K0) > max(K1)
K1_AFTER_K0 = 4  # min(K1) > max(K0)


@njit(cache=True, nogil=True)
def scan_block(p, d, n, m, member, b0_lo, b0_hi):
    """Scan b0 in [b0_lo, b0_hi] and c0 in [0, m*p] for one m.

    Returns ``(b0, c0, code)`` of the first failing cell in (b0, c0) order,
    or ``(-1, -1, OK)`` when every cell passes.
    """
    mp = m * p
    quad = np.empty(n + 1, dtype=np.int64)
    for b0 in range(b0_lo, b0_hi + 1):
        # k-dependent part d*m*k^2 + b0*k, shared by every c0
        for k in range(n + 1):
            quad[k] = d * m * k * k + b0 * k
        for c0 in range(mp + 1):
            lo0 = -1
            for k in range(n + 1):
                if member[((quad[k] + c0) // m) % p]:
                    lo0 = k
                    break
            if lo0 < 0:
                return b0, c0, K0_EMPTY
            lo1 = -1
            for k in range(n + 1):
                if member[((quad[k] + c0 - 1) // m) % p]:
                    lo1 = k
                    break
            if lo1 < 0:
                return b0, c0, K1_EMPTY
            if lo1 < lo0:
                # need some k >= lo0 in K1
                found = False
                for k in range(n, lo0 - 1, -1):
                    if member[((quad[k] + c0 - 1) // m) % p]:
                        found = True
                        break
                if not found:
                    return b0, c0, K0_AFTER_K1
            elif lo0 < lo1:
                found = False
                for k in range(n, lo1 - 1, -1):
                    if member[((quad[k] + c0) // m) % p]:
                        found = True
                        break
                if not found:
                    return b0, c0, K1_AFTER_K0
    return -1, -1, OK
