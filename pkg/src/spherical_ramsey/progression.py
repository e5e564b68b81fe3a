"""Floor-quadratic orbit cover check and witness reconstruction.

A spherical coloring colors ``x`` red when ``floor(d|x|^2) mod p`` lies in
``S``.  Along any unit progression the squared norms are ``k^2 + b k + c``, so
"every progression of length N+1 has a red point" reduces to: every real
orbit ``floor(d(k^2 + b k + c))``, ``k = 0..N``, meets ``S`` mod ``p``.
:func:`covers` decides that with a finite scan over rational grid points
``(m, b0, c0)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from . import _kernel
from .errors import OverflowEnvelopeExceeded, ParameterOutOfRange, WitnessConstructionFailed
from .residues import ResidueSet, frac_floor

__all__ = [
    "ColoringSpec",
    "Failure",
    "Counterexample",
    "CoverOutcome",
    "RealWitness",
    "k_sets",
    "covers",
    "min_cover_N",
    "real_witness",
    "validate_witness",
    "default_jobs",
]

JOBS_ENV = "SPHERICAL_RAMSEY_JOBS"
_INT64_MAX = 2**63 - 1
# target number of (b0, c0) cells per work unit when running in parallel
_BLOCK_CELLS = 1 << 18


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class ColoringSpec:
    """Coloring ``x`` red iff ``floor(d|x|^2) mod p`` is in ``S``."""

    p: int
    d: int
    S: ResidueSet

    def __post_init__(self):
        if self.p < 2:
            raise ParameterOutOfRange(f"p must be >= 2, got {self.p}")
        if self.d < 1:
            raise ParameterOutOfRange(f"d must be >= 1, got {self.d}")
        if self.S.modulus != self.p:
            raise ParameterOutOfRange(f"S has modulus {self.S.modulus}, expected {self.p}")

    @classmethod
    def of(cls, p: int, d: int, members) -> ColoringSpec:
        if p < 2:
            raise ParameterOutOfRange(f"p must be >= 2, got {p}")
        return cls(p, d, ResidueSet(p, members))

    def with_set(self, S: ResidueSet) -> ColoringSpec:
        return ColoringSpec(self.p, self.d, S)

    def to_dict(self) -> dict:
        return {"p": self.p, "d": self.d, "S": list(self.S.members)}


class Failure(str, Enum):
    K0_EMPTY = "K0-empty"
    K1_EMPTY = "K1-empty"
    K0_AFTER_K1 = "min(K0)>max(K1)"
    K1_AFTER_K0 = "min(K1)>max(K0)"


_CODE_TO_FAILURE = {
    _kernel.K0_EMPTY: Failure.K0_EMPTY,
    _kernel.K1_EMPTY: Failure.K1_EMPTY,
    _kernel.K0_AFTER_K1: Failure.K0_AFTER_K1,
    _kernel.K1_AFTER_K0: Failure.K1_AFTER_K0,
}


@dataclass(frozen=True)
class Counterexample:
    m: int
    b0: int
    c0: int
    failure: Failure

    def to_dict(self) -> dict:
        return {"m": self.m, "b0": self.b0, "c0": self.c0, "failure": self.failure.value}


@dataclass(frozen=True)
class CoverOutcome:
    holds: bool
    N: int
    counterexample: Optional[Counterexample] = None

    def __post_init__(self):
        if self.holds != (self.counterexample is None):
            raise ValueError("holds must be true exactly when there is no counterexample")

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        out = {"holds": self.holds, "N": self.N}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_dict()
        return out


@dataclass(frozen=True)
class RealWitness:
    """Exact ``(b, c)`` whose orbit ``floor(d(k^2+bk+c))``, ``k=0..N``, misses ``S``."""

    b: Fraction
    c: Fraction
    N: int
    floors: tuple[int, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {"b": str(self.b), "c": str(self.c), "N": self.N, "floors": list(self.floors)}


def _check_cell(spec: ColoringSpec, N: int, m: int, b0: int, c0: int) -> None:
    if N < 1:
        raise ParameterOutOfRange(f"N must be >= 1, got {N}")
    if not 1 <= m <= 2 * N + 1:
        raise ParameterOutOfRange(f"m={m} outside [1, {2 * N + 1}]")
    mp = m * spec.p
    if not 0 <= b0 <= mp:
        raise ParameterOutOfRange(f"b0={b0} outside [0, {mp}]")
    if not 0 <= c0 <= mp:
        raise ParameterOutOfRange(f"c0={c0} outside [0, {mp}]")


def k_sets(spec: ColoringSpec, N: int, m: int, b0: int, c0: int) -> tuple[frozenset, frozenset]:
    """``(K0, K1)`` for one grid cell, evaluated directly with Python integers."""
    _check_cell(spec, N, m, b0, c0)
    p, d, S = spec.p, spec.d, spec.S
    out = []
    for i in (0, 1):
        ks = frozenset(
            k for k in range(N + 1) if ((d * m * k * k + b0 * k + c0 - i) // m) % p in S
        )
        out.append(ks)
    return out[0], out[1]


def check_envelope(p: int, d: int, N: int) -> None:
    """Raise unless every numerator the kernel forms fits in int64."""
    m = 2 * N + 1
    worst = d * m * N * N + m * p * N + m * p + 1
    if worst > _INT64_MAX:
        raise OverflowEnvelopeExceeded(
            f"p={p}, d={d}, N={N}: numerators reach {worst}, beyond int64"
        )


def _blocks(p: int, N: int):
    for m in range(1, 2 * N + 2):
        mp = m * p
        step = max(1, _BLOCK_CELLS // (mp + 1))
        for lo in range(0, mp + 1, step):
            yield m, lo, min(mp, lo + step - 1)


def covers(spec: ColoringSpec, N: int, jobs: Optional[int] = None) -> CoverOutcome:
    """Does every orbit ``floor(d(k^2+bk+c))``, ``0 <= k <= N``, meet ``S`` mod ``p``?

    Scans ``m`` ascending, then ``b0``, then ``c0`` and reports the first
    failing cell in that order.  ``jobs > 1`` splits the grid over threads;
    the reported counterexample is the same for any worker count.
    """
    if N < 1:
        raise ParameterOutOfRange(f"N must be >= 1, got {N}")
    p, d = spec.p, spec.d
    check_envelope(p, d, N)
    member = spec.S.indicator()
    if jobs is None:
        jobs = default_jobs()

    def run(block):
        m, lo, hi = block
        return m, _kernel.scan_block(p, d, N, m, member, lo, hi)

    if jobs <= 1:
        results = map(run, _blocks(p, N))
        for m, (b0, c0, code) in results:
            if code != _kernel.OK:
                return _fail(N, m, b0, c0, code)
        return CoverOutcome(True, N)

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run, blk) for blk in _blocks(p, N)]
        try:
            for fut in futures:
                m, (b0, c0, code) = fut.result()
                if code != _kernel.OK:
                    return _fail(N, m, b0, c0, code)
        finally:
            for fut in futures:
                fut.cancel()
    return CoverOutcome(True, N)


def _fail(N, m, b0, c0, code) -> CoverOutcome:
    cex = Counterexample(int(m), int(b0), int(c0), _CODE_TO_FAILURE[int(code)])
    return CoverOutcome(False, N, cex)


def min_cover_N(
    spec: ColoringSpec, N_max: int, start: int = 1, jobs: Optional[int] = None
) -> Optional[int]:
    """Smallest ``N`` in ``[start, N_max]`` at which :func:`covers` holds, else ``None``.

    Linear upward scan.  ``start`` lets callers skip values already known to fail.
    """
    if N_max < 1:
        raise ParameterOutOfRange(f"N_max must be >= 1, got {N_max}")
    for N in range(max(1, start), N_max + 1):
        if covers(spec, N, jobs=jobs).holds:
            return N
    return None


def orbit_floors(spec: ColoringSpec, N: int, b: Fraction, c: Fraction) -> list[int]:
    d = spec.d
    return [frac_floor(d * (k * k + b * k + c)) for k in range(N + 1)]


def validate_witness(spec: ColoringSpec, w: RealWitness) -> bool:
    """Every floor value of the witness orbit avoids ``S`` mod ``p``."""
    return all(v % spec.p not in spec.S for v in orbit_floors(spec, w.N, w.b, w.c))


def real_witness(spec: ColoringSpec, N: int, cex: Counterexample) -> RealWitness:
    """Turn a failing grid cell into exact reals ``(b, c)`` with a fully blue orbit."""
    _check_cell(spec, N, cex.m, cex.b0, cex.c0)
    m, b0, c0, d = cex.m, cex.b0, cex.c0, spec.d
    md = m * d
    base_b = Fraction(b0, md)
    base_c = Fraction(c0, md)
    tiny = Fraction(1, md * (N + 1))
    K0, K1 = k_sets(spec, N, m, b0, c0)

    if cex.failure is Failure.K0_EMPTY:
        b, c = base_b, base_c
    elif cex.failure is Failure.K1_EMPTY:
        # any shift in (0, 1/m) below the grid point reproduces the c0 - 1 floors
        b, c = base_b, base_c - tiny
    elif cex.failure is Failure.K0_AFTER_K1:
        if not K1:
            raise WitnessConstructionFailed("K1 empty for an ordering failure")
        b = base_b - tiny
        c = base_c + max(K1) * tiny
    else:
        if not K0:
            raise WitnessConstructionFailed("K0 empty for an ordering failure")
        b = base_b + tiny
        c = base_c - (max(K0) + 1) * tiny

    floors = orbit_floors(spec, N, b, c)
    w = RealWitness(b, c, N, tuple(floors))
    if not validate_witness(spec, w):
        raise WitnessConstructionFailed(
            f"witness b={b}, c={c} meets S for {spec.to_dict()} at N={N} ({cex})"
        )
    return w
