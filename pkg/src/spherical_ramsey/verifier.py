"""Assemble cover checks and direct residue tests into non-arrow verdicts.

Red-side claims are certified with :func:`covers` on the complement set.  The
direct triple test :func:`red_l3_free_direct` is a fast equivalent used for
pruning; the test suite checks it against the complement route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DisjointnessViolated, ParameterOutOfRange
from .progression import ColoringSpec, CoverOutcome, covers
from .residues import ResidueSet

__all__ = [
    "PairClaim",
    "ParallelogramFamily",
    "Check",
    "Verdict",
    "verify_pair",
    "verify_multi",
    "red_l3_free_direct",
    "parallelogram_free",
    "verify_parallelogram_claim",
]


@dataclass(frozen=True)
class PairClaim:
    """No red ``l_r`` and no blue ``l_s`` under ``spec``.

    Normalised so that ``r <= s``: if given the other way round the colors
    are swapped, which replaces ``S`` by its complement.
    """

    spec: ColoringSpec
    r: int
    s: int

    def __post_init__(self):
        if self.r < 2 or self.s < 2:
            raise ParameterOutOfRange(f"progression lengths must be >= 2, got r={self.r}, s={self.s}")
        if self.r > self.s:
            swapped = self.spec.with_set(self.spec.S.complement())
            object.__setattr__(self, "spec", swapped)
            r, s = self.s, self.r
            object.__setattr__(self, "r", r)
            object.__setattr__(self, "s", s)


@dataclass(frozen=True)
class ParallelogramFamily:
    """Parallelograms whose diagonals satisfy ``(alpha^2 - beta^2) / 2 == gamma``."""

    gamma: int

    def __post_init__(self):
        if self.gamma < 1:
            raise ParameterOutOfRange(f"gamma must be >= 1, got {self.gamma}")


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    outcome: Optional[CoverOutcome] = None
    detail: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {"check": self.name, "holds": self.holds}
        if self.outcome is not None:
            out["outcome"] = self.outcome.to_dict()
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class Verdict:
    verified: bool
    checks: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.verified

    @property
    def counterexample(self) -> Optional[dict]:
        for chk in self.checks:
            if not chk.holds:
                if chk.outcome is not None and chk.outcome.counterexample is not None:
                    return {"check": chk.name, **chk.outcome.counterexample.to_dict()}
                return {"check": chk.name, **(chk.detail or {})}
        return None

    def transcript(self) -> list[dict]:
        return [chk.to_dict() for chk in self.checks]


def _cover_check(name: str, spec: ColoringSpec, N: int, jobs) -> Check:
    out = covers(spec, N, jobs=jobs)
    return Check(name, out.holds, outcome=out)


def verify_pair(claim: PairClaim, jobs: Optional[int] = None) -> Verdict:
    spec = claim.spec
    red = _cover_check(f"no red l{claim.r}", spec.with_set(spec.S.complement()), claim.r - 1, jobs)
    blue = _cover_check(f"no blue l{claim.s}", spec, claim.s - 1, jobs)
    return Verdict(red.holds and blue.holds, [red, blue])


def verify_multi(
    p: int,
    d: int,
    palettes: Sequence[ResidueSet],
    lengths: Sequence[int],
    jobs: Optional[int] = None,
) -> Verdict:
    """Colors ``1..t-1`` are the palettes, color ``t`` is everything else."""
    if len(lengths) != len(palettes) + 1:
        raise ParameterOutOfRange(
            f"need {len(palettes) + 1} lengths for {len(palettes)} palettes, got {len(lengths)}"
        )
    if any(r < 2 for r in lengths):
        raise ParameterOutOfRange(f"progression lengths must be >= 2, got {list(lengths)}")
    union = ResidueSet(p)
    for i, pal in enumerate(palettes):
        if pal.modulus != p:
            raise ParameterOutOfRange(f"palette {i} has modulus {pal.modulus}, expected {p}")
        if not union.isdisjoint(pal):
            raise DisjointnessViolated(f"palette {i} overlaps an earlier palette")
        union = union.union(pal)
    checks = []
    for i, (pal, r) in enumerate(zip(palettes, lengths)):
        checks.append(
            _cover_check(f"no color-{i + 1} l{r}", ColoringSpec(p, d, pal.complement()), r - 1, jobs)
        )
    checks.append(
        _cover_check(f"no color-{len(palettes) + 1} l{lengths[-1]}", ColoringSpec(p, d, union), lengths[-1] - 1, jobs)
    )
    return Verdict(all(c.holds for c in checks), checks)


def red_l3_free_direct(spec: ColoringSpec) -> bool:
    """No ``s1, s2, s3`` in ``S`` (repeats allowed) with ``s1 - 2 s2 + s3`` in ``2d + {-1, 0, 1}`` mod ``p``."""
    p, S = spec.p, spec.S
    members = S.members
    two_d = 2 * spec.d
    for s1 in members:
        for s2 in members:
            base = two_d - s1 + 2 * s2
            for e in (-1, 0, 1):
                if (base + e) % p in S:
                    return False
    return True


def find_parallelogram(spec: ColoringSpec, family: ParallelogramFamily) -> Optional[tuple]:
    """First ``(s1, s2, s3, s4)`` in ``S`` with ``s1 + s2 - s3 - s4`` in ``d*gamma + {-1,0,1}`` mod ``p``."""
    p, S = spec.p, spec.S
    members = S.members
    target = spec.d * family.gamma
    for s1 in members:
        for s2 in members:
            for s3 in members:
                base = s1 + s2 - s3 - target
                for e in (-1, 0, 1):
                    # s4 = s1 + s2 - s3 - target - e
                    s4 = (base - e) % p
                    if s4 in S:
                        return (s1, s2, s3, s4)
    return None


def parallelogram_free(spec: ColoringSpec, family: ParallelogramFamily) -> bool:
    return find_parallelogram(spec, family) is None


def verify_parallelogram_claim(
    spec: ColoringSpec, gamma: int, m: int, jobs: Optional[int] = None
) -> Verdict:
    """No red member of the parallelogram family and no blue ``l_m``."""
    family = ParallelogramFamily(gamma)
    if m < 2:
        raise ParameterOutOfRange(f"m must be >= 2, got {m}")
    quad = find_parallelogram(spec, family)
    red = Check(
        f"no red P{gamma}",
        quad is None,
        detail=None if quad is None else {"quadruple": list(quad)},
    )
    blue = _cover_check(f"no blue l{m}", spec, m - 1, jobs)
    return Verdict(red.holds and blue.holds, [red, blue])
