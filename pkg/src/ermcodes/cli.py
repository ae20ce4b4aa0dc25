"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 decoding failure, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Any, Sequence

from . import formats
from .codegen import CodeParams, codim_conjecture_report, construct_code, parameter_report
from .errors import DecodingFailure, DomainError, ErmError, NotDecodable, TooLarge
from .essdecode import decode_report, simulate
from .essrank import (
    EssCode,
    bounds_report,
    code_min_distance_bruteforce,
    ess_rank,
    ess_rank_bruteforce,
    ess_variables,
    require_char,
)
from .gabidulin import verify_symmetric
from .orbits import orbit_count

EXIT_OK, EXIT_DOMAIN, EXIT_DECODE, EXIT_BUDGET = 0, 1, 2, 3


# -- helpers -------------------------------------------------------------------


def _read_text(arg: str) -> str:
    """Inline text, ``@path`` or ``-`` for stdin."""
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read()
    return arg


def _infer_shape(text: str) -> tuple[int, int]:
    """(n, d) from a text polynomial: largest variable index, degree of the first term."""
    idx = [int(m) for m in re.findall(r"[xd](\d+)", text)]
    if not idx:
        raise DomainError("cannot infer n and d from a polynomial without variables")
    first = re.split(r"(?<![\^\[,])[+-]", text.strip().lstrip("+-"))[0]
    d = sum(int(e or 1) for e in re.findall(r"[xd]\d+(?:\^(\d+))?", first))
    return max(idx), d


def _load_poly(arg: str, field, n: int | None, d: int | None):
    text = _read_text(arg).strip()
    if not text.startswith("{") and (n is None or d is None):
        n_guess, d_guess = _infer_shape(text)
        n = n if n is not None else n_guess
        d = d if d is not None else d_guess
    return formats.load_poly(text, field, n, d)


def _params(args) -> CodeParams:
    base = formats.parse_field(args.field)
    ext = formats.parse_ext(args.ext, base)
    require_char(base, args.d)
    alpha = formats.parse_alpha(args.alpha, ext)
    return CodeParams.with_alpha(ext, args.d, args.rho, alpha)


def _emit(args, payload: Any) -> None:
    text = payload if isinstance(payload, str) else formats.dumps(payload) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _poly_payload(f) -> dict:
    return {"text": formats.poly_to_text(f), **formats.poly_to_json(f)}


# -- subcommands -----------------------------------------------------------------


def cmd_construct(args) -> int:
    params = _params(args)
    C = construct_code(params)
    G = C.generator_matrix()
    if args.format == "csv":
        _emit(args, formats.matrix_to_csv(G))
    else:
        _emit(args, {"report": parameter_report(params, C), "generator_matrix": formats.matrix_to_json(G)})
    return EXIT_OK


def cmd_rank(args) -> int:
    field = formats.parse_field(args.field)
    f = _load_poly(args.poly, field, args.n, args.d)
    require_char(field, f.d)
    out = {
        "ess_rank": ess_rank(f),
        "ess_variables": [formats.poly_to_text(g) for g in ess_variables(f).forms()],
    }
    if args.bruteforce:
        out["ess_rank_bruteforce"] = ess_rank_bruteforce(f)
    _emit(args, out)
    return EXIT_OK


def cmd_encode(args) -> int:
    params = _params(args)
    C = construct_code(params)
    msg = [params.field.from_int(int(x)) for x in args.message.split(",") if x.strip()]
    _emit(args, _poly_payload(C.encode(msg)))
    return EXIT_OK


def cmd_decode(args) -> int:
    params = _params(args)
    received = _load_poly(args.received, params.field, params.n, params.d)
    try:
        rep = decode_report(received, params)
    except (DecodingFailure, NotDecodable) as exc:
        _emit(args, {"status": "failure", "reason": str(exc), "codeword": None, "error": None, "error_ess_rank": None})
        return EXIT_DECODE
    _emit(
        args,
        {
            "status": rep.status,
            "codeword": _poly_payload(rep.codeword),
            "error": _poly_payload(rep.error),
            "error_ess_rank": rep.error_ess_rank,
        },
    )
    return EXIT_OK


def _code_from_file(arg: str, field, n: int | None, d: int | None) -> EssCode:
    import json

    text = _read_text(arg).strip()
    if text.startswith("["):
        polys = [formats.poly_from_json(obj, field) for obj in json.loads(text)]
    else:
        lines = [line for line in text.splitlines() if line.strip()]
        if lines:
            shapes = [_infer_shape(line) for line in lines]
            n = n if n is not None else max(s[0] for s in shapes)
            d = d if d is not None else shapes[0][1]
        polys = [formats.poly_from_text(line, n, d, field) for line in lines]
    if not polys:
        raise DomainError("no polynomials given")
    return EssCode(polys[0].n, polys[0].d, field, polys)


def cmd_mindist(args) -> int:
    if args.code:
        C = _code_from_file(args.code, formats.parse_field(args.field), args.n, args.d)
    else:
        if args.ext is None or args.d is None or args.rho is None:
            raise DomainError("give either --code or --ext/--d/--rho")
        C = construct_code(_params(args))
    res = code_min_distance_bruteforce(C, start=args.start, stop=args.stop, jobs=args.jobs)
    _emit(
        args,
        {
            "min_distance": res.min_distance,
            "codewords_scanned": res.scanned,
            "count_at_min": res.count_at_min,
            "first_argmin": res.first_argmin,
            "histogram": {str(k): v for k, v in sorted(res.histogram.items())},
            "start": res.start,
            "stop": res.stop,
        },
    )
    return EXIT_OK


def cmd_bounds(args) -> int:
    _emit(args, bounds_report(args.n, args.d, args.r))
    return EXIT_OK


def cmd_orbits(args) -> int:
    _emit(args, orbit_count(args.n, args.d, args.k, args.method))
    return EXIT_OK


def cmd_verify_symmetric(args) -> int:
    base = formats.parse_field(args.field)
    ext = formats.parse_ext(args.ext, base)
    alpha = formats.parse_alpha(args.alpha, ext)
    rep = verify_symmetric(ext, args.ell, alpha)
    _emit(args, rep)
    return EXIT_OK if rep["equal"] else EXIT_DOMAIN


def cmd_simulate(args) -> int:
    params = _params(args)
    _emit(args, simulate(params, args.trials, args.seed, args.error_rank))
    return EXIT_OK


def cmd_conjecture(args) -> int:
    _emit(args, codim_conjecture_report(_params(args)))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def _add_code_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--field", required=True, help='base field: "p" or "p^m:c0,...,cm"')
    p.add_argument("--ext", required=required, help='extension: "n", "n:c0,...,cn" or "n:c0,...,cn:s"')
    p.add_argument("--d", type=int, required=required, help="degree")
    p.add_argument("--rho", type=int, required=required, help="designed distance")
    p.add_argument("--alpha", default=None, help='"power" (default), "normal" or "c,..;c,.." rows')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ermcodes", description="Essential-rank-metric codes over finite fields.")
    parser.add_argument("--out", default=None, help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generator matrix of C_rho^{n,d}(alpha)")
    _add_code_args(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rank", help="essential rank of a polynomial")
    p.add_argument("--field", required=True)
    p.add_argument("--poly", required=True, help="text or JSON polynomial, @file or - for stdin")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--bruteforce", action="store_true", help="also run the subspace-search oracle")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("encode", help="encode a message vector")
    _add_code_args(p)
    p.add_argument("--message", required=True, help="comma-separated base-field integers")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received polynomial")
    _add_code_args(p)
    p.add_argument("--received", required=True, help="text or JSON polynomial, @file or - for stdin")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("mindist", help="exhaustive minimum essential-rank distance")
    _add_code_args(p, required=False)
    p.add_argument("--code", default=None, help="polynomials (one per line, or a JSON list), @file or -")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--start", type=int, default=1, help="first message index (restartable scans)")
    p.add_argument("--stop", type=int, default=None, help="one past the last message index")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("bounds", help="dimension bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True, help="minimum distance / designed distance")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("orbits", help="shift orbits of multisets meeting R")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["brute", "closed", "both"], default="both")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify-symmetric", help="compare the d=2 code with the symmetric Gabidulin code")
    p.add_argument("--field", required=True)
    p.add_argument("--ext", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--alpha", default=None)
    p.set_defaults(func=cmd_verify_symmetric)

    p = sub.add_parser("simulate", help="seeded decoding trials")
    _add_code_args(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--error-rank", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("conjecture", help="actual vs predicted codimension")
    _add_code_args(p)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DecodingFailure, NotDecodable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DECODE
    except (DomainError, ErmError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
