"""Command-line front end: truth tables, Lagrange coefficients, system
builders, resistance statistics, exhaustive solving, CNF export, soundness
verification, and the survey report.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .gf256 import format_hex_table, lagrange_interpolate
from .mqgen import SYSTEM_KEYS, MqSystem, build_system
from .raa import SystemStats, gamma, gamma_cp, stats
from .sbox import aia_spec, rd_spec, spec_from_text, truth_table
from .solve import VerificationError, brute_force, chain_solutions, to_cnf, write_dimacs

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3

# Table-1 dependent-variable counts for the named systems
DEFAULT_N = {"rd23": 8, "rd16": 8, "rd32": 8, "aia32": 8,
             "chain-rd": 2032, "chain-aia": 2032}


def _resolve_spec(args):
    if args.sbox == "rd":
        return rd_spec()
    if args.sbox == "aia":
        return aia_spec()
    with open(args.spec) as fh:
        return spec_from_text(fh.read(), name=args.spec)


def _system_table(key: str):
    return truth_table(aia_spec() if key.startswith("aia") or key.endswith("aia")
                       else rd_spec())


def _emit(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _stats_lines(name: str, st: SystemStats, fmt: str) -> str:
    lg = gamma(st)
    lgcp = gamma_cp(st)
    if fmt == "kv":
        lines = [f"system {name}",
                 f"equations {st.r}",
                 f"monomials {st.t}",
                 f"min_terms {st.min_terms}",
                 f"max_terms {st.max_terms}",
                 f"dependent_variables {st.n}",
                 f"log2_gamma {lg:.1f}",
                 f"log2_gamma_cp {lgcp:.1f}"]
    else:
        lines = [f"{name}: {st.r} equations, {st.t} monomials "
                 f"({st.min_terms}..{st.max_terms} per equation), n={st.n}",
                 f"log2 Gamma    = {lg:.1f}",
                 f"log2 Gamma_CP = {lgcp:.1f}"]
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    spec = _resolve_spec(args)
    _emit(format_hex_table(truth_table(spec)) + "\n", args.output)
    return EXIT_OK


def cmd_lagrange(args) -> int:
    spec = _resolve_spec(args)
    poly = lagrange_interpolate(truth_table(spec))
    _emit(format_hex_table(poly.coeffs) + "\n", args.output)
    return EXIT_OK


def cmd_build(args) -> int:
    mq = build_system(args.system, keep_probabilistic=args.keep_probabilistic)
    _emit(mq.to_json() + "\n" if args.json else mq.to_text(), args.output)
    return EXIT_OK


def cmd_stats(args) -> int:
    mq = build_system(args.system)
    st = stats(mq, args.n if args.n is not None else DEFAULT_N[args.system])
    _emit(_stats_lines(mq.name, st, args.format), None)
    return EXIT_OK


def cmd_gamma(args) -> int:
    st = SystemStats(r=args.r, t=args.t, n=args.n,
                     min_terms=1, max_terms=max(1, args.t))
    if args.format == "kv":
        text = (f"log2_gamma {gamma(st):.1f}\n"
                f"log2_gamma_cp {gamma_cp(st):.1f}\n")
    else:
        text = (f"log2 Gamma    = {gamma(st):.1f}\n"
                f"log2 Gamma_CP = {gamma_cp(st):.1f}\n")
    _emit(text, None)
    return EXIT_OK


def cmd_solve(args) -> int:
    mq = build_system(args.system)
    if args.system.startswith("chain"):
        sols = chain_solutions(mq, _system_table(args.system))
    else:
        sols = brute_force(mq)
    lines = [f"solutions {len(sols)}" if args.format == "kv"
             else f"{len(sols)} solutions"]
    if sols.projection is not None and len(sols.projection) == 256:
        xs = [x for x, _ in sols.projection]
        if xs == list(range(256)):
            if args.format != "kv":
                lines.append("recovered truth table:")
            lines.append(format_hex_table([z for _, z in sols.projection]))
    _emit("\n".join(lines) + "\n", None)
    return EXIT_OK


def cmd_export_cnf(args) -> int:
    mq = build_system(args.system)
    formula = to_cnf(mq, max_xor_arity=args.xor_arity)
    write_dimacs(formula, args.output)
    sys.stdout.write(f"wrote {formula.num_vars} vars, "
                     f"{len(formula.clauses)} clauses to {args.output}\n")
    return EXIT_OK


def _verify_bit_system(mq: MqSystem, table) -> None:
    names = mq.registry.names
    for x in range(256):
        z = table[x]
        word = x | (z << 8)
        assignment = {names[i]: (word >> i) & 1 for i in range(16)}
        for eq, label in zip(mq.equations, mq.labels):
            if eq.evaluate(assignment):
                raise VerificationError(
                    f"equation {label} violated at x={x:#04x}, z={z:#04x}")


def cmd_verify(args) -> int:
    mq = build_system(args.system)
    table = _system_table(args.system)
    if args.system.startswith("chain"):
        chain_solutions(mq, table)
    else:
        _verify_bit_system(mq, table)
    sys.stdout.write(f"{mq.name}: all 256 table pairs satisfy "
                     f"all {len(mq)} equations\n")
    return EXIT_OK


def cmd_report(args) -> int:
    from .report import write_report
    paths = write_report(args.output, include_chain=not args.skip_chain)
    for p in paths:
        sys.stdout.write(f"wrote {p}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sboxmq",
        description="Derive, measure, and verify S-box multivariate "
                    "quadratic equation systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sbox_source(p):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--sbox", choices=("rd", "aia"))
        grp.add_argument("--spec", metavar="FILE",
                         help="pipeline file, e.g. 'affine 5B 5D / inverse'")

    p = sub.add_parser("table", help="print the 16x16 truth table")
    add_sbox_source(p)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("lagrange",
                       help="print the 256 polynomial-expression coefficients")
    add_sbox_source(p)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_lagrange)

    p = sub.add_parser("build", help="write an MQ system in ANF text")
    p.add_argument("--system", choices=SYSTEM_KEYS, required=True)
    p.add_argument("--keep-probabilistic", action="store_true",
                   help="retain equations that fail at x = 0")
    p.add_argument("--json", action="store_true",
                   help="structured export instead of plain text")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", help="print the survey row of a system")
    p.add_argument("--system", choices=SYSTEM_KEYS, required=True)
    p.add_argument("--n", type=int, default=None,
                   help="dependent-variable count (defaults per survey)")
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gamma", help="criteria from raw r, t, n counts")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("solve", help="enumerate all solutions of a system")
    p.add_argument("--system", choices=SYSTEM_KEYS, required=True)
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("export-cnf", help="write the system as DIMACS CNF")
    p.add_argument("--system", choices=SYSTEM_KEYS, required=True)
    p.add_argument("--xor-arity", type=int, default=6,
                   help="largest XOR block before chaining (default 6)")
    p.add_argument("-o", "--output", metavar="FILE", required=True)
    p.set_defaults(func=cmd_export_cnf)

    p = sub.add_parser("verify",
                       help="check every truth-table pair against a system")
    p.add_argument("--system", choices=SYSTEM_KEYS, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report",
                       help="write the survey as CSV plus rendered figures")
    p.add_argument("-o", "--output", metavar="DIR", required=True)
    p.add_argument("--skip-chain", action="store_true",
                   help="omit the slow 2,039-equation systems")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except VerificationError as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
