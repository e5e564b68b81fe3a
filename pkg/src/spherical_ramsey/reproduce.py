"""Fixed table of published parameter sets and a runner that re-checks them."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .alpha import PALETTES, certify_rational, shifted_residue_cover, verify_certificate
from .progression import ColoringSpec
from .residues import ResidueSet
from .verifier import PairClaim, verify_multi, verify_pair, verify_parallelogram_claim

__all__ = ["Claim", "ClaimReport", "CLAIMS", "GROUPS", "run_claim", "run_claims"]

SEVEN_PRIME_PRODUCT = 47 * 59 * 67 * 71 * 73 * 79 * 83


@dataclass(frozen=True)
class Claim:
    name: str
    group: str
    params: dict


@dataclass
class ClaimReport:
    claim: str
    group: str
    params: dict
    verdict: bool
    counterexample: Optional[dict] = None
    transcript: list = field(default_factory=list)
    duration_ms: float = 0.0

    def to_record(self, transcript: bool = False, timings: bool = False) -> dict:
        rec = {"claim": self.claim, "params": self.params, "verdict": "PASS" if self.verdict else "FAIL"}
        if self.counterexample is not None:
            rec["counterexample"] = self.counterexample
        if transcript:
            rec["transcript"] = self.transcript
        if timings:
            rec["duration_ms"] = round(self.duration_ms, 3)
        return rec


def _range(lo, hi):
    return list(range(lo, hi + 1))


CLAIMS: tuple[Claim, ...] = (
    Claim("pair l3/l20", "pair", {"p": 29, "d": 7, "S": _range(0, 6), "r": 3, "s": 20}),
    Claim("pair l4/l14", "pair", {"p": 29, "d": 10, "S": _range(0, 8), "r": 4, "s": 14}),
    Claim("pair l5/l8", "pair", {"p": 5, "d": 2, "S": [0, 1], "r": 5, "s": 8}),
    Claim("pair l6/l6", "pair", {"p": 12, "d": 1, "S": _range(0, 5), "r": 6, "s": 6}),
    Claim("multi l3/l3/l8", "multi", {"p": 10, "d": 2, "palettes": [[0, 1], [5, 6]], "lengths": [3, 3, 8]}),
    Claim("multi l3/l4/l7", "multi", {"p": 10, "d": 2, "palettes": [[0, 1], [4, 5, 6]], "lengths": [3, 4, 7]}),
    Claim("multi l3/l5/l5", "multi", {"p": 8, "d": 1, "palettes": [[0, 4], [5, 6, 7]], "lengths": [3, 5, 5]}),
    Claim("multi l4/l4/l4", "multi", {"p": 3, "d": 2, "palettes": [[0], [1]], "lengths": [4, 4, 4]}),
    Claim("parallelogram P1/l18", "parallelogram", {"p": 31, "d": 8, "S": [0, 1, 2, 3, 16, 17, 18], "gamma": 1, "m": 18}),
    Claim("parallelogram P2/l20", "parallelogram", {"p": 29, "d": 7, "S": _range(0, 6), "gamma": 2, "m": 20}),
    Claim("parallelogram P3/l19", "parallelogram", {"p": 25, "d": 4, "S": _range(0, 5), "gamma": 3, "m": 19}),
    Claim("parallelogram P4/l21", "parallelogram", {"p": 17, "d": 2, "S": _range(0, 3), "gamma": 4, "m": 21}),
    *(
        Claim(f"palette p={p}", "palette", {"p": p, "S": list(pal.S.members), "nonzero_only": False})
        for p, pal in PALETTES.items()
    ),
    Claim("palette p=59 nonzero", "palette", {"p": 59, "S": list(PALETTES[59].S.members), "nonzero_only": True}),
    Claim("alpha^2=1", "alpha", {"a": 1, "b": 1, "M": 2209}),
    Claim("alpha^2=94", "alpha", {"a": 94, "b": 1, "M": 2209}),
    Claim("alpha^2=1/(47*59*67*71*73*79*83)", "alpha", {"a": 1, "b": SEVEN_PRIME_PRODUCT, "M": 6845}),
)

GROUPS = ("pair", "multi", "parallelogram", "palette", "alpha")


def _run(claim: Claim, jobs):
    q = claim.params
    if claim.group == "pair":
        spec = ColoringSpec.of(q["p"], q["d"], q["S"])
        v = verify_pair(PairClaim(spec, q["r"], q["s"]), jobs=jobs)
        return v.verified, v.counterexample, v.transcript()
    if claim.group == "multi":
        palettes = [ResidueSet(q["p"], pal) for pal in q["palettes"]]
        v = verify_multi(q["p"], q["d"], palettes, q["lengths"], jobs=jobs)
        return v.verified, v.counterexample, v.transcript()
    if claim.group == "parallelogram":
        spec = ColoringSpec.of(q["p"], q["d"], q["S"])
        v = verify_parallelogram_claim(spec, q["gamma"], q["m"], jobs=jobs)
        return v.verified, v.counterexample, v.transcript()
    if claim.group == "palette":
        S = ResidueSet(q["p"], q["S"])
        ok = shifted_residue_cover(q["p"], S, nonzero_only=q["nonzero_only"])
        cex = None if ok else {"check": "shifted residue cover"}
        return ok, cex, [{"check": "shifted residue cover", "holds": ok}]
    if claim.group == "alpha":
        cert = certify_rational(q["a"], q["b"])
        chk = verify_certificate(cert)
        ok = chk.verified and cert.M == q["M"]
        cex = None
        if not ok:
            cex = {"check": chk.failure or f"M = {cert.M}, expected {q['M']}"}
        return ok, cex, [cert.to_record(), *chk.transcript]
    raise ValueError(f"unknown claim group {claim.group!r}")


def run_claim(claim: Claim, jobs: Optional[int] = None) -> ClaimReport:
    t0 = time.perf_counter()
    ok, cex, transcript = _run(claim, jobs)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return ClaimReport(claim.name, claim.group, claim.params, ok, cex, transcript, elapsed)


def run_claims(only: Optional[str] = None, jobs: Optional[int] = None, claims=None) -> list[ClaimReport]:
    table = CLAIMS if claims is None else claims
    return [run_claim(c, jobs) for c in table if only is None or c.group == only]
