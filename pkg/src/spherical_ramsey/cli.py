"""Command-line entry point.

Exit codes: 0 when every checked claim holds, 1 when a checked claim is
false, 2 on malformed input.  ``--format json`` prints one JSON record per
line; the default is a plain table.  The default worker count comes from
``SPHERICAL_RAMSEY_JOBS``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import reproduce as _reproduce
from .alpha import certify_alpha, verify_certificate
from .errors import SphericalRamseyError
from .progression import ColoringSpec, default_jobs, min_cover_N
from .residues import ResidueSet, parse_residues
from .search import SearchSpace, search_multi, search_pairs
from .verifier import PairClaim, verify_multi, verify_pair, verify_parallelogram_claim

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _int_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        lo, hi = _int_range(part.strip())
        out.extend(range(lo, hi + 1))
    return out


def _emit(args, record: dict, table_line: str) -> None:
    if args.format == "json":
        print(json.dumps(record, separators=(",", ":")))
    else:
        print(table_line)


def _spec(args) -> ColoringSpec:
    if args.p < 2 or args.d < 1:
        raise UsageError(f"need p >= 2 and d >= 1, got p={args.p}, d={args.d}")
    return ColoringSpec(args.p, args.d, parse_residues(args.set, args.p))


def _report(args, claim: str, params: dict, verdict, started: float) -> int:
    rec = {"claim": claim, "params": params, "verdict": "PASS" if verdict.verified else "FAIL"}
    if verdict.counterexample is not None:
        rec["counterexample"] = verdict.counterexample
    if args.transcript:
        rec["transcript"] = verdict.transcript()
    if args.timings:
        rec["duration_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    line = f"{rec['verdict']:4}  {claim}  {json.dumps(params)}"
    if args.format != "json":
        if "counterexample" in rec:
            line += f"\n      counterexample: {json.dumps(rec['counterexample'])}"
        if args.transcript:
            line += "".join(f"\n      {json.dumps(t)}" for t in rec["transcript"])
    _emit(args, rec, line)
    return EXIT_OK if verdict.verified else EXIT_FALSE


def cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.kind == "pair":
        spec = _spec(args)
        claim = PairClaim(spec, args.red, args.blue)
        params = {**spec.to_dict(), "r": args.red, "s": args.blue}
        return _report(args, f"pair l{args.red}/l{args.blue}", params, verify_pair(claim, jobs=args.jobs), started)
    if args.kind == "multi":
        palettes = [parse_residues(s, args.p) for s in args.set]
        lengths = _int_list(args.lengths)
        params = {"p": args.p, "d": args.d, "palettes": [list(s.members) for s in palettes], "lengths": lengths}
        v = verify_multi(args.p, args.d, palettes, lengths, jobs=args.jobs)
        return _report(args, "multi " + "/".join(f"l{r}" for r in lengths), params, v, started)
    spec = _spec(args)
    params = {**spec.to_dict(), "gamma": args.gamma, "m": args.blue}
    v = verify_parallelogram_claim(spec, args.gamma, args.blue, jobs=args.jobs)
    return _report(args, f"parallelogram P{args.gamma}/l{args.blue}", params, v, started)


def cmd_reproduce(args) -> int:
    reports = _reproduce.run_claims(only=args.only, jobs=args.jobs)
    for rep in reports:
        rec = rep.to_record(transcript=args.transcript, timings=args.timings)
        line = f"{rec['verdict']:4}  {rep.claim:<36} {rep.duration_ms:10.1f} ms"
        _emit(args, rec, line)
    if args.format != "json":
        passed = sum(r.verdict for r in reports)
        print(f"{passed}/{len(reports)} claims verified")
    return EXIT_OK if all(r.verdict for r in reports) else EXIT_FALSE


def cmd_search(args) -> int:
    lo, hi = _int_range(args.p)
    d_values = tuple(_int_list(args.d)) if args.d else None
    if args.kind == "pair":
        space = SearchSpace((lo, hi), args.max_set, red_length=args.red, n_cap=args.cap, d_values=d_values)
        for rec in search_pairs(space, jobs=args.jobs):
            row = rec.to_dict()
            _emit(args, row, f"p={row['p']} d={row['d']} S={row['S']} r={row['r']} best_s={row['best_s']}")
        return EXIT_OK
    lengths = _int_list(args.lengths)
    if len(lengths) != 3:
        raise UsageError("--lengths takes three values r1,r2,r3")
    space = SearchSpace((lo, hi), args.max_set, d_values=d_values)
    for rec in search_multi(space, lengths, jobs=args.jobs):
        row = rec.to_dict()
        _emit(args, row, f"p={row['p']} d={row['d']} palettes={row['palettes']} lengths={row['lengths']}")
    return EXIT_OK


def cmd_certify_alpha(args) -> int:
    cert = certify_alpha(args.alpha_sq)
    chk = verify_certificate(cert)
    rec = {**cert.to_record(), "verdict": "PASS" if chk.verified else "FAIL"}
    if args.transcript:
        rec["transcript"] = list(chk.transcript)
    lines = [f"{k}: {v}" for k, v in rec.items() if k != "transcript"]
    if args.transcript:
        lines += [f"  {t}" for t in chk.transcript]
    _emit(args, rec, "\n".join(lines))
    return EXIT_OK if chk.verified else EXIT_FALSE


def cmd_min_n(args) -> int:
    spec = _spec(args)
    n = min_cover_N(spec, args.max, jobs=args.jobs)
    rec = {**spec.to_dict(), "max": args.max, "min_N": n}
    _emit(args, rec, "none" if n is None else str(n))
    return EXIT_OK if n is not None else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--jobs", type=int, default=None, help="worker threads (default: $SPHERICAL_RAMSEY_JOBS or 1)")
    common.add_argument("--transcript", action="store_true", help="include sub-check outcomes")
    common.add_argument("--timings", action="store_true", help="add duration_ms to records")

    coloring = argparse.ArgumentParser(add_help=False)
    coloring.add_argument("--p", type=int, required=True)
    coloring.add_argument("--d", type=int, required=True)

    parser = argparse.ArgumentParser(prog="spherical-ramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check one claim")
    vsub = verify.add_subparsers(dest="kind", required=True)
    vp = vsub.add_parser("pair", parents=[common, coloring])
    vp.add_argument("--set", required=True, help="red residues, e.g. 0,1,2 or 0..6")
    vp.add_argument("--red", type=int, required=True)
    vp.add_argument("--blue", type=int, required=True)
    vm = vsub.add_parser("multi", parents=[common, coloring])
    vm.add_argument("--set", action="append", required=True, help="one palette per flag, in color order")
    vm.add_argument("--lengths", required=True, help="r1,...,rt with t = number of palettes + 1")
    vq = vsub.add_parser("parallelogram", parents=[common, coloring])
    vq.add_argument("--set", required=True)
    vq.add_argument("--gamma", type=int, required=True)
    vq.add_argument("--blue", type=int, required=True)
    verify.set_defaults(func=cmd_verify)

    rep = sub.add_parser("reproduce", parents=[common], help="re-check every published claim")
    rep.add_argument("--only", choices=_reproduce.GROUPS)
    rep.set_defaults(func=cmd_reproduce)

    search = sub.add_parser("search", help="exhaustive parameter search")
    ssub = search.add_subparsers(dest="kind", required=True)
    sp = ssub.add_parser("pair", parents=[common])
    sp.add_argument("--p", required=True, help="modulus range lo..hi")
    sp.add_argument("--d", default=None, help="explicit d values (default 1 <= d <= p/2)")
    sp.add_argument("--red", type=int, default=3)
    sp.add_argument("--max-set", type=int, default=10)
    sp.add_argument("--cap", type=int, default=40)
    sm = ssub.add_parser("multi", parents=[common])
    sm.add_argument("--p", required=True)
    sm.add_argument("--d", default=None)
    sm.add_argument("--max-set", type=int, default=3)
    sm.add_argument("--lengths", required=True)
    search.set_defaults(func=cmd_search)

    ca = sub.add_parser("certify-alpha", parents=[common], help="certificate for rational alpha^2")
    ca.add_argument("--alpha-sq", required=True, help="a/b in lowest terms")
    ca.set_defaults(func=cmd_certify_alpha)

    mn = sub.add_parser("min-n", parents=[common, coloring], help="smallest covering N")
    mn.add_argument("--set", required=True)
    mn.add_argument("--max", type=int, required=True)
    mn.set_defaults(func=cmd_min_n)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "jobs", None) is None:
        args.jobs = default_jobs()
    elif args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, SphericalRamseyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
