"""Command-line interface: ``unimap {map,apply,verify,bench}``.

Exit codes: 0 success, 1 input error, 2 numerical or property failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from collections.abc import Sequence

import numpy as np

from .bench import BENCH_FIELDS, run_bench
from .exponential import Branch, UnitaryApplicator, map_state
from .generator import CLASSIFY_EPS, Generator
from .hilbert import InputError
from .oracle import dense_expm, frobenius_distance
from .pairfile import dumps, encode_complex, encode_vector, read_pair_file, read_vector_file
from .verify import random_state, run_suite

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2
MAP_TOLERANCE = 1e-8
ORACLE_TOLERANCE = 1e-9
UNITARITY_PROBES = 4


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_dims(text: str) -> list[int]:
    try:
        dims = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"invalid dimension list {text!r}") from exc
    if not dims:
        raise InputError("empty dimension list")
    return dims


def unitarity_residual(u: UnitaryApplicator, vectors: Sequence[np.ndarray]) -> float:
    """Largest ``|<Ux,Uy> - <x,y>| / (|x||y|)`` over all pairs of probe vectors."""
    images = [u(v) for v in vectors]
    norms = [float(np.linalg.norm(v)) for v in vectors]
    worst = 0.0
    for i, (x, ux) in enumerate(zip(vectors, images)):
        for j in range(i, len(vectors)):
            err = abs(np.vdot(ux, images[j]) - np.vdot(x, vectors[j])) / (norms[i] * norms[j])
            worst = max(worst, float(err))
    return worst


def cmd_map(args: argparse.Namespace) -> int:
    a, b = read_pair_file(args.input)
    tol = args.tolerance if args.tolerance is not None else MAP_TOLERANCE
    gen = Generator(a, b, args.eps)
    res = map_state(a, b, Branch(args.branch), args.eps)
    rng = np.random.default_rng(args.seed)
    probes = [a, b] + [random_state(rng, gen.dimension) for _ in range(UNITARITY_PROBES)]
    report = {
        "dimension": gen.dimension,
        "case_tag": res.case_tag.value,
        "invariants": {
            "g": gen.inv.g,
            "sigma": gen.inv.sigma,
            "G_sq": gen.inv.G_sq,
            "Gamma": gen.inv.Gamma,
        },
        "theta_prime": res.theta_prime,
        "branch": res.branch.value,
        "exponent_normalizer": res.exponent_normalizer,
        "scale": encode_complex(res.scale),
        "residual_map": float(np.linalg.norm(res(a) - res.scale * b) / np.linalg.norm(a)),
        "unitarity_residual": unitarity_residual(res.applicator, probes),
    }
    if args.oracle or args.emit_matrix:
        m = res.applicator.matrix()
        if args.oracle:
            norm = res.exponent_normalizer
            exponent = np.zeros_like(m) if norm is None else res.theta_prime * gen.matrix() / norm
            report["oracle_frobenius_distance"] = frobenius_distance(m, dense_expm(exponent))
        if args.emit_matrix:
            report["matrix"] = [encode_vector(row) for row in m]
    ok = report["residual_map"] <= tol and report["unitarity_residual"] <= tol
    if "oracle_frobenius_distance" in report:
        oracle_tol = args.tolerance if args.tolerance is not None else ORACLE_TOLERANCE
        ok = ok and report["oracle_frobenius_distance"] <= oracle_tol
    report["tolerance"] = tol
    report["passed"] = bool(ok)
    _emit(dumps(report), args.output)
    return EXIT_OK if ok else EXIT_NUMERIC


def cmd_apply(args: argparse.Namespace) -> int:
    a, b = read_pair_file(args.input)
    c = read_vector_file(args.vector)
    if c.shape[0] != a.shape[0]:
        raise InputError(f"dimension mismatch: vector has {c.shape[0]} entries, pair has {a.shape[0]}")
    gen = Generator(a, b, args.eps)
    if args.theta is None:
        theta = map_state(a, b, Branch(args.branch), args.eps).theta_prime
    else:
        theta = args.theta
    _emit(dumps(encode_vector(UnitaryApplicator(gen, theta)(c))), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.input is None and args.random is None:
        raise InputError("give a state-pair file or --random DIMS TRIALS SEED")
    pairs, dims, trials, seed = [], [], 0, args.seed
    if args.input is not None:
        pairs.append(read_pair_file(args.input))
    if args.random is not None:
        dims = _parse_dims(args.random[0])
        try:
            trials, seed = int(args.random[1]), int(args.random[2])
        except ValueError as exc:
            raise InputError("--random expects DIMS TRIALS SEED, e.g. 2,4,8 100 42") from exc
        if min(dims) < 1 or trials < 1:
            raise InputError("dimensions and trials must be positive")
    results = run_suite(pairs, dims=dims, trials=trials, seed=seed, tolerance=args.tolerance, probes=args.probes)
    passed = all(r.passed for r in results)
    report = {
        "seed": seed,
        "dims": dims,
        "trials": trials,
        "passed": passed,
        "properties": [r.to_dict() for r in results],
    }
    _emit(dumps(report), args.output)
    for r in results:
        status = r.to_dict()["status"]
        print(f"{status:>7}  {r.name:<34} max={r.max_residual:.3e} tol={r.tolerance:.0e} n={r.count}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_NUMERIC


def cmd_bench(args: argparse.Namespace) -> int:
    dims = _parse_dims(args.dims)
    if min(dims) < 2:
        raise InputError("benchmark dimensions must be >= 2")
    if args.trials < 1:
        raise InputError("trials must be >= 1")
    records = run_bench(dims, args.trials, args.seed)
    report = {"trials": args.trials, "seed": args.seed, "records": [r.to_dict() for r in records]}
    _emit(dumps(report), args.output)
    if args.csv:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow(r.to_dict())
        with open(args.csv, "w") as fh:
            fh.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help="override the default residual thresholds")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random probes")
    common.add_argument("--eps", type=float, default=argparse.SUPPRESS,
                        help=f"case classification threshold (default {CLASSIFY_EPS:g})")

    parser = argparse.ArgumentParser(
        prog="unimap",
        description="Closed-form single-exponential unitaries between pure states.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", parents=[common], help="solve the mapping for a state-pair file")
    p.add_argument("input")
    p.add_argument("--branch", choices=[b.value for b in Branch], default="short")
    p.add_argument("--emit-matrix", action="store_true", help="include the dense unitary in the report")
    p.add_argument("--oracle", action="store_true", help="compare against the dense Padé exponential")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("apply", parents=[common], help="apply the mapping unitary to another vector")
    p.add_argument("input")
    p.add_argument("vector")
    p.add_argument("--theta", type=float, help="angle to use instead of the solved one")
    p.add_argument("--branch", choices=[b.value for b in Branch], default="short")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", parents=[common], help="run the property suite")
    p.add_argument("input", nargs="?")
    p.add_argument("--random", nargs=3, metavar=("DIMS", "TRIALS", "SEED"))
    p.add_argument("--probes", type=int, default=4, help="random probe vectors per pair and property")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time closed form against dense methods")
    p.add_argument("--dims", default="2,8,32,128,512")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--output", "-o")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # parents share action objects, so defaults are filled here rather than via set_defaults
    for name, default in (("tolerance", None), ("seed", 0), ("eps", CLASSIFY_EPS)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"unimap {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"unimap {args.command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
