"""Exhaustive search over colorings ``(p, d, S)`` with monotone pruning.

Two monotonicity facts drive the pruning:

* red side: if ``S`` admits a red progression, so does every superset, so a
  depth-first subset walk can cut a branch at the first red failure;
* blue side: the minimal covering ``N`` can only drop when ``S`` grows, so a
  superset's value is a lower bound for ``S`` and a superset with no cover
  within the cap rules ``S`` out entirely.

Sets are reported up to translation by their lexicographically least
translate.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Optional, Sequence

from .errors import ParameterOutOfRange
from .progression import ColoringSpec, covers, default_jobs, min_cover_N
from .residues import ResidueSet
from .verifier import red_l3_free_direct

__all__ = [
    "SearchSpace",
    "SearchRecord",
    "MultiRecord",
    "search_pairs",
    "search_pairs_unpruned",
    "search_multi",
    "red_free",
]


def default_d_rule(p: int, d: int) -> bool:
    return 1 <= d and 2 * d <= p


@dataclass(frozen=True)
class SearchSpace:
    p_range: tuple[int, int]
    s_max_size: int
    red_length: int = 3
    n_cap: int = 40
    d_values: Optional[tuple[int, ...]] = None
    d_rule: Callable[[int, int], bool] = default_d_rule

    def __post_init__(self):
        lo, hi = self.p_range
        if lo < 2 or hi < lo:
            raise ParameterOutOfRange(f"bad p range {self.p_range}")
        if self.s_max_size < 1:
            raise ParameterOutOfRange("s_max_size must be >= 1")
        if self.red_length < 2 or self.n_cap < 1:
            raise ParameterOutOfRange("red_length must be >= 2 and n_cap >= 1")

    def ds(self, p: int) -> list[int]:
        if self.d_values is not None:
            return [d for d in self.d_values if d >= 1]
        return [d for d in range(1, p + 1) if self.d_rule(p, d)]


@dataclass(frozen=True)
class SearchRecord:
    spec: ColoringSpec
    r: int
    best_s: int

    def key(self):
        return (self.spec.p, self.spec.d, self.spec.S.members)

    def to_dict(self) -> dict:
        return {**self.spec.to_dict(), "r": self.r, "best_s": self.best_s}


@dataclass(frozen=True)
class MultiRecord:
    p: int
    d: int
    palettes: tuple[ResidueSet, ...]
    lengths: tuple[int, ...]
    best_last: int

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "palettes": [list(s.members) for s in self.palettes],
            "lengths": list(self.lengths[:-1]) + [self.best_last],
        }


def red_free(spec: ColoringSpec, r: int) -> bool:
    """No progression of length ``r`` colored entirely by ``S``."""
    if r == 3 and not red_l3_free_direct(spec):
        return False
    return covers(spec.with_set(spec.S.complement()), r - 1, jobs=1).holds


def _red_free_sets(p: int, d: int, r: int, max_size: int, within: Optional[ResidueSet] = None,
                   start: int = 0):
    """Depth-first walk over subsets with sorted growth; yields red-free sets.

    Only sets whose least element is ``start`` are produced; elements come from
    ``within`` when given.
    """
    pool = [x for x in range(start, p) if within is None or x in within]
    if not pool or pool[0] != start:
        return

    def walk(S: ResidueSet, last_idx: int):
        yield S
        if len(S) >= max_size:
            return
        for idx in range(last_idx + 1, len(pool)):
            T = S.add(pool[idx])
            if red_free(ColoringSpec(p, d, T), r):
                yield from walk(T, idx)

    first = ResidueSet(p, [start])
    if red_free(ColoringSpec(p, d, first), r):
        yield from walk(first, 0)


def _best_lengths(p: int, d: int, sets: set, max_size: int, n_cap: int) -> dict:
    """Minimal covering ``N`` (or None) for each canonical set, largest sets first."""
    best: dict = {}
    for S in sorted(sets, key=lambda s: (-len(s), s.members)):
        lower = 1
        dead = False
        if len(S) < max_size:
            for x in range(p):
                if x in S:
                    continue
                T = S.add(x).canonical_translate()
                if T not in best:
                    continue
                n_t = best[T]
                if n_t is None:
                    dead = True
                    break
                lower = max(lower, n_t)
        if dead:
            best[S] = None
            continue
        best[S] = min_cover_N(ColoringSpec(p, d, S), n_cap, start=lower, jobs=1)
    return best


def _shard_pairs(p: int, d: int, space: SearchSpace) -> list[SearchRecord]:
    r = space.red_length
    canon = {S for S in _red_free_sets(p, d, r, space.s_max_size) if S.canonical_translate() == S}
    best = _best_lengths(p, d, canon, space.s_max_size, space.n_cap)
    out = []
    for S in sorted(canon, key=lambda s: s.members):
        if best[S] is None:
            continue
        spec = ColoringSpec(p, d, S)
        # certified red side: complement cover, never the direct test alone
        if not covers(spec.with_set(S.complement()), r - 1, jobs=1).holds:
            continue
        out.append(SearchRecord(spec, r, best[S] + 1))
    return out


def _shards(space: SearchSpace):
    lo, hi = space.p_range
    for p in range(lo, hi + 1):
        for d in space.ds(p):
            yield p, d


def search_pairs(space: SearchSpace, jobs: Optional[int] = None) -> Iterator[SearchRecord]:
    """Stream every red-free canonical ``S`` with a blue bound ``best_s <= n_cap + 1``.

    Ordered by ``(p, d, S)`` whatever the worker count.
    """
    jobs = default_jobs() if jobs is None else jobs
    shards = list(_shards(space))
    if jobs <= 1:
        for p, d in shards:
            yield from _shard_pairs(p, d, space)
        return
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for records in pool.map(lambda pd: _shard_pairs(pd[0], pd[1], space), shards):
            yield from records


def search_pairs_unpruned(space: SearchSpace) -> list[SearchRecord]:
    """Reference enumeration with no pruning: every subset, every N from 1."""
    out = []
    r = space.red_length
    for p, d in _shards(space):
        seen = set()
        for size in range(1, space.s_max_size + 1):
            for members in combinations(range(p), size):
                S = ResidueSet(p, members).canonical_translate()
                if S in seen:
                    continue
                seen.add(S)
                spec = ColoringSpec(p, d, S)
                if not covers(spec.with_set(S.complement()), r - 1, jobs=1).holds:
                    continue
                n = min_cover_N(spec, space.n_cap, jobs=1)
                if n is not None:
                    out.append(SearchRecord(spec, r, n + 1))
        out.sort(key=SearchRecord.key)
    out.sort(key=SearchRecord.key)
    return out


def _pair_key(S: ResidueSet, T: ResidueSet) -> tuple:
    return min((S.translate(t).members, T.translate(t).members) for t in range(S.modulus))


def search_multi(
    space: SearchSpace, lengths: Sequence[int], jobs: Optional[int] = None
) -> Iterator[MultiRecord]:
    """Disjoint ``(S, T)`` for three colors, up to joint translation.

    ``lengths = (r1, r2, r3)``: no color-1 ``l_r1``, no color-2 ``l_r2``, and a
    third-color bound of at most ``r3``; each record carries the smallest such
    bound.  ``space.red_length`` and ``space.n_cap`` are ignored.
    """
    if len(lengths) != 3:
        raise ParameterOutOfRange("search_multi handles three colors: lengths=(r1, r2, r3)")
    r1, r2, r3 = lengths
    if min(lengths) < 2:
        raise ParameterOutOfRange(f"progression lengths must be >= 2, got {list(lengths)}")
    jobs = default_jobs() if jobs is None else jobs

    def shard(pd) -> list[MultiRecord]:
        p, d = pd
        found = {}
        for S in _red_free_sets(p, d, r1, space.s_max_size):
            if S.canonical_translate() != S:
                continue
            free = S.complement()
            for start in free.members:
                for T in _red_free_sets(p, d, r2, space.s_max_size, within=free, start=start):
                    key = _pair_key(S, T)
                    if key in found:
                        continue
                    U = S.union(T)
                    n = min_cover_N(ColoringSpec(p, d, U), r3 - 1, jobs=1)
                    found[key] = n
        out = []
        for key in sorted(found):
            n = found[key]
            if n is None:
                continue
            S, T = ResidueSet(p, key[0]), ResidueSet(p, key[1])
            out.append(MultiRecord(p, d, (S, T), (r1, r2, r3), n + 1))
        return out

    shards = list(_shards(space))
    if jobs <= 1:
        for pd in shards:
            yield from shard(pd)
        return
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for records in pool.map(shard, shards):
            yield from records
