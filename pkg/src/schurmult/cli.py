"""Command line interface.

Exit codes: 0 on success, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .algebra import Algebra, center, derived_ideal, power_chain
from .census import run_bound_fuzz
from .errors import AlgebraError
from .families import parse_family
from .multiplier import cover_table, multiplier_dim, t_value
from .serialize import algebra_to_json, load_algebra
from .theorems import check_kunneth, classify, verify_main_theorem

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def resolve_algebra(text: str, lam=None) -> Algebra:
    """A family name (``Jn:4``, ``H2:2/1``, ``J1+A:2``) or a JSON file path."""
    path = Path(text)
    if text.endswith(".json") or path.is_file():
        try:
            return load_algebra(path)
        except OSError as exc:
            raise AlgebraError(f"cannot read {text}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise AlgebraError(f"{text} is not valid JSON: {exc}") from None
    return parse_family(text, lam)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_info(args) -> int:
    a = resolve_algebra(args.algebra, args.lam)
    chain = power_chain(a)
    payload = {
        "algebra": algebra_to_json(a),
        "dim": a.dim,
        "dim_derived": derived_ideal(a).dim,
        "dim_center": center(a).dim,
        "nilpotent": a.nilpotent,
        "power_chain": [s.dim for s in chain],
    }
    chain_text = " > ".join(str(s.dim) for s in chain)
    text = "\n".join(
        [
            str(a),
            f"dim = {a.dim}",
            f"dim A' = {payload['dim_derived']}",
            f"dim Z = {payload['dim_center']}",
            f"nilpotent = {a.nilpotent}",
            f"power chain dims: {chain_text}",
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_multiplier(args) -> int:
    a = resolve_algebra(args.algebra, args.lam)
    m = multiplier_dim(a)
    _emit(args, {"dim": a.dim, "dim_m": m}, f"dim M = {m}")
    return EXIT_OK


def cmd_t(args) -> int:
    a = resolve_algebra(args.algebra, args.lam)
    tv = t_value(a)
    _emit(args, {"n": tv.n, "dim_m": tv.dim_m, "t": tv.t}, str(tv))
    return EXIT_OK


def cmd_cover(args) -> int:
    a = resolve_algebra(args.algebra, args.lam)
    table = cover_table(a)
    _emit(args, table.to_json(flat=args.flat), table.format(flat=args.flat))
    return EXIT_OK


def cmd_classify(args) -> int:
    a = resolve_algebra(args.algebra, args.lam)
    label = classify(a)
    _emit(args, {"label": str(label), "t": t_value(a).t}, str(label))
    return EXIT_FAIL if label.variant == "Inconsistent" else EXIT_OK


def cmd_verify_theorem(args) -> int:
    report = verify_main_theorem()
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "main_theorem.md").write_text(report.to_markdown() + "\n")
        (out / "main_theorem.json").write_text(json.dumps(report.to_json(), indent=2) + "\n")
    _emit(args, report.to_json(), report.to_markdown() + f"\n\nall rows pass: {report.passed}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_fuzz(args) -> int:
    report = run_bound_fuzz(
        samples=args.samples,
        seed=args.seed,
        max_dim=args.max_dim,
        dump_dir=args.dump_dir,
        cover_check=args.cover,
    )
    _emit(args, report.to_json(), report.format())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_kunneth(args) -> int:
    a = resolve_algebra(args.a, args.lam)
    b = resolve_algebra(args.b, args.lam)
    report = check_kunneth(a, b)
    _emit(args, report.to_json(), str(report))
    return EXIT_OK if report.holds else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the subcommand from being reset after it
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument(
        "--lambda", dest="lam", metavar="P/Q", default=argparse.SUPPRESS, help="lambda for H2 / H2n / ExtT10_IV"
    )

    parser = argparse.ArgumentParser(
        prog="schurmult",
        description="Schur multipliers and t(A) of nilpotent associative algebras",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("algebra", help="family name (e.g. C3, Jn:4, H2:2, J1+A:2) or JSON file")
        p.set_defaults(func=func)
        return p

    algebra_command("info", cmd_info, "dimensions of A', Z(A) and the power chain")
    algebra_command("multiplier", cmd_multiplier, "dim M(A)")
    algebra_command("t", cmd_t, "t(A) = (dim A)^2 - dim M(A)")
    cover = algebra_command("cover", cmd_cover, "symbolic cover multiplication table")
    cover.add_argument("--flat", action="store_true", help="number symbols m1..m(n^2) row by row")
    algebra_command("classify", cmd_classify, "label from the t <= 10 classification")

    p = sub.add_parser("verify-theorem", help="check every class of the t <= 10 theorem", parents=[common])
    p.add_argument("--report-dir", help="also write main_theorem.md and main_theorem.json here")
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("fuzz", help="run all bounds on random nilpotent algebras", parents=[common])
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-dim", type=int, default=6)
    p.add_argument("--dump-dir", help="write every sample as a JSON algebra file")
    p.add_argument("--cover", action="store_true", help="also cross-check cover tables")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("kunneth", help="check the direct sum formula for A and B", parents=[common])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_kunneth)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.lam = getattr(args, "lam", None)
    try:
        return args.func(args)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
