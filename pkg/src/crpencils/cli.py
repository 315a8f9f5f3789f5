"""Command-line interface: build pencils, verify rank behavior, run the catalog.

Exit codes: 0 success, 1 expectation failure, 2 usage/shape error,
3 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .analysis import constant_rank_verdict
from .catalog import (
    CATALOG,
    CatalogRunConfig,
    FixtureParseError,
    build_from_params,
    dumps_pencil,
    loads_pencil,
    run_catalog,
)
from .linalg import DEFAULT_PRIME
from .pencils import Pencil

EXIT_OK = 0
EXIT_EXPECTATION = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _partition_arg(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}") from None
    return parts


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME,
                   help="odd prime for modular rank computations")
    p.add_argument("--trials", type=int, default=200,
                   help="number of random sample points")
    p.add_argument("--seed", type=int, default=0,
                   help="random seed, echoed in every report")
    p.add_argument("--budget", type=int, default=10 ** 6,
                   help="maximum projective point count for exhaustive mode")
    p.add_argument("--format", choices=("json", "text"), default="json")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crpencils",
        description="equivariant spaces of matrices with certified rank behavior",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a pencil and write it as JSON")
    b.add_argument("group", choices=("gl", "sp", "so", "spin", "koszul",
                                     "adjoint"))
    b.add_argument("--mu", type=_partition_arg, default=None)
    b.add_argument("--nu", type=_partition_arg, default=None)
    b.add_argument("--n", type=int, default=None,
                   help="gl: family index (n+1 variables); spin: half rank")
    b.add_argument("--N", type=int, default=None,
                   help="sp/so: dimension of the natural representation")
    b.add_argument("--k", type=int, default=None, help="koszul: exterior degree")
    b.add_argument("--v", type=int, default=None,
                   help="koszul: dimension of the variable space")
    b.add_argument("--a", type=int, default=None,
                   help="adjoint: dimension for the 3-form example")
    b.add_argument("--out", default=None, help="output file (default stdout)")

    v = sub.add_parser("verify", help="rank-verify a pencil JSON file")
    v.add_argument("file")
    v.add_argument("--mode", choices=("sampled", "exhaustive", "transitivity"),
                   default="sampled")
    v.add_argument("--expect-rank", type=int, default=None)
    v.add_argument("--expect-verdict", default=None)
    _add_common_flags(v)

    c = sub.add_parser("catalog", help="run the example catalog")
    c.add_argument("--filter", default="*", help="glob over entry ids")
    c.add_argument("--max-ambient", type=int, default=None,
                   help="skip entries whose largest tensor space exceeds this")
    c.add_argument("--workers", type=int, default=1)
    _add_common_flags(c)
    return parser


def _builder_params(args) -> dict:
    g = args.group

    def need(**kw):
        missing = [k for k, v in kw.items() if v is None]
        if missing:
            raise ValueError(
                f"build {g} requires --{', --'.join(missing)}"
            )

    if g == "gl":
        need(mu=args.mu, nu=args.nu, n=args.n)
        return {"kind": "gl", "mu": list(args.mu), "nu": list(args.nu),
                "v": args.n + 1}
    if g == "sp":
        need(mu=args.mu, nu=args.nu, N=args.N)
        return {"kind": "sp", "mu": list(args.mu), "nu": list(args.nu),
                "N": args.N}
    if g == "so":
        need(mu=args.mu, nu=args.nu, N=args.N)
        return {"kind": "so", "mu": list(args.mu), "nu": list(args.nu),
                "m": args.N}
    if g == "spin":
        need(n=args.n)
        return {"kind": "spin", "n": args.n}
    if g == "koszul":
        need(k=args.k, v=args.v)
        return {"kind": "koszul", "k": args.k, "v": args.v}
    need(a=args.a)
    return {"kind": "adjoint", "a": args.a}


def cmd_build(args) -> int:
    try:
        params = _builder_params(args)
        pencil = build_from_params(params)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = dumps_pencil(pencil, params)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _load_file(path: str) -> tuple[Pencil, Optional[dict]]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FixtureParseError(f"cannot read {path}: {exc}") from None
    return loads_pencil(text)


def cmd_verify(args) -> int:
    try:
        pencil, builder = _load_file(args.file)
    except FixtureParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.mode == "transitivity":
        if builder is None:
            print("error: transitivity mode needs builder metadata in the file",
                  file=sys.stderr)
            return EXIT_USAGE
        try:
            rebuilt = build_from_params(builder)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if (rebuilt.coeffs, rebuilt.denom) != (pencil.coeffs, pencil.denom):
            print("error: file entries do not match the recorded builder",
                  file=sys.stderr)
            return EXIT_USAGE
        pencil = rebuilt
    try:
        report = constant_rank_verdict(
            pencil, args.mode, prime=args.prime, trials=args.trials,
            seed=args.seed, budget=args.budget,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = report.to_jsonable()
    payload["method"].setdefault("prime", args.prime)
    payload["method"].setdefault("seed", args.seed)
    payload["method"].setdefault("trials", args.trials)
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"verdict: {report.verdict}")
        print(f"generic rank: {report.generic_rank}")
        for r, pt, cls in report.strata:
            print(f"  rank {r} at {cls} point")
        print(f"method: {payload['method']}")
    failed = (
        (args.expect_rank is not None
         and report.generic_rank != args.expect_rank)
        or (args.expect_verdict is not None
            and report.verdict != args.expect_verdict)
    )
    return EXIT_EXPECTATION if failed else EXIT_OK


def cmd_catalog(args) -> int:
    cfg = CatalogRunConfig(
        prime=args.prime, trials=args.trials, seed=args.seed,
        budget=args.budget, max_ambient=args.max_ambient,
        workers=args.workers,
    )
    results = run_catalog(args.filter, cfg)
    if not results:
        print(f"error: no catalog entry matches {args.filter!r}",
              file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(
            [
                {
                    "id": r.entry_id,
                    "status": r.status,
                    "seconds": round(r.seconds, 2),
                    "failures": r.failures,
                    "prime": cfg.prime,
                    "seed": cfg.seed,
                    "trials": cfg.trials,
                }
                for r in results
            ],
            indent=2, sort_keys=True,
        ))
    else:
        width = max(len(r.entry_id) for r in results)
        for r in results:
            print(f"{r.entry_id:<{width}}  {r.status:<7} {r.seconds:7.1f}s")
            for f in r.failures:
                print(f"    {f}")
        npass = sum(r.status == "pass" for r in results)
        print(f"{npass}/{len(results)} passed "
              f"(prime={cfg.prime} seed={cfg.seed} trials={cfg.trials})")
    return EXIT_OK if all(r.status != "fail" for r in results) else EXIT_EXPECTATION


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "build":
        return cmd_build(args)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_catalog(args)


if __name__ == "__main__":
    sys.exit(main())
