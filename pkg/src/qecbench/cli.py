"""Command-line front end.

Exit status: 0 success, 2 usage error (unknown subcommand or bad flags),
3 invalid Pauli string, 4 missing file, 5 any other workbench error.
The default seed for randomized subcommands comes from ``QECBENCH_SEED``.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from . import dense
from .catalog import GENERATORS, catalog, catalog_names
from .errors import PauliParseError, QECError, UnknownCodeError
from .experiments import format_csv, pseudothreshold, sweep
from .gf2 import BinaryMatrix
from .noise import CHANNEL_ALPHABETS, build_table, decode
from .pauli import PauliOperator, pauli_from_string
from .stabilizer import (
    StabilizerCode,
    css_from_parity_checks,
    distance,
    is_degenerate,
    load_code,
    logical_operators,
    parse_generators,
    syndrome_of,
)

SEED_ENV = "QECBENCH_SEED"
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PAULI = 3
EXIT_FILE = 4
EXIT_ERROR = 5


def _default_seed() -> int:
    text = os.environ.get(SEED_ENV, "0")
    try:
        return int(text)
    except ValueError:
        raise QECError(f"{SEED_ENV} must be an integer, got {text!r}") from None


def resolve_code(name_or_path: str) -> StabilizerCode:
    """A catalog name, or a path to a generator file."""
    if name_or_path in GENERATORS:
        return catalog(name_or_path)
    path = Path(name_or_path)
    if path.exists():
        code = load_code(path)
        code = StabilizerCode(code.n, code.k, code.generators, tuple(logical_operators(code)),
                              code.name, None, code.redundant)
        return code
    if path.suffix or os.sep in name_or_path:
        raise FileNotFoundError(f"no such generator file: {name_or_path}")
    raise UnknownCodeError(f"unknown code {name_or_path!r}; valid names: {', '.join(catalog_names())}")


def _with_distance(code: StabilizerCode, cap: int) -> StabilizerCode:
    if code.d is not None or code.k == 0:
        return code
    return StabilizerCode(code.n, code.k, code.generators, code.logical_pairs, code.name,
                          distance(code, cap), code.redundant)


def _float_list(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not values or any(not 0.0 <= v <= 1.0 for v in values):
        raise argparse.ArgumentTypeError(f"probabilities must lie in [0, 1]: {text!r}")
    return values


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


# subcommands ------------------------------------------------------------------


def cmd_codes_list(args, out) -> None:
    for name in catalog_names():
        print(f"{name} {catalog(name).parameters}", file=out)


def cmd_code_info(args, out) -> None:
    code = _with_distance(resolve_code(args.code), args.cap)
    print(f"name: {code.name}", file=out)
    print(f"parameters: {code.parameters}", file=out)
    print("generators:", file=out)
    for i, g in enumerate(code.generators, start=1):
        print(f"  g{i} = {g}", file=out)
    for i, g in enumerate(code.redundant, start=1):
        print(f"  (dropped dependent generator {g})", file=out)
    print("logical operators:", file=out)
    for i, (lx, lz) in enumerate(code.logical_pairs, start=1):
        print(f"  X{i} = {lx}  Z{i} = {lz}", file=out)
    if code.k and code.d is not None:
        degen = is_degenerate(code)
        limit = (int(code.d) - 1) // 2
        verdict = "degenerate" if degen.degenerate else "non-degenerate"
        line = f"degeneracy (weight <= {limit}): {verdict}"
        if degen.witness:
            line += f" (witness {degen.witness[0]}, {degen.witness[1]})"
        print(line, file=out)


def cmd_syndrome(args, out) -> None:
    code = resolve_code(args.code)
    error = pauli_from_string(args.error)
    s = syndrome_of(code, error)
    correction, flagged = decode(build_table(code, args.channel), s)
    if flagged:
        print(f"{s.format_outcomes()} → no correction known (detected, uncorrectable)", file=out)
    else:
        print(f"{s.format_outcomes()} → correct with {correction}", file=out)
    print(f"outcomes: {s.format_outcomes()}  bits: {s}", file=out)


def cmd_table_dump(args, out) -> None:
    table = build_table(resolve_code(args.code), args.channel, args.max_weight)
    out.write(table.dump())


def cmd_css_build(args, out) -> None:
    hx = BinaryMatrix.load(args.hx)
    hz = BinaryMatrix.load(args.hz) if args.hz else hx
    code = css_from_parity_checks(hx, hz, name=args.name)
    if code.k:
        code = StabilizerCode(code.n, code.k, code.generators, tuple(logical_operators(code)),
                              code.name, distance(code, args.cap), code.redundant)
    print(f"parameters: {code.parameters}", file=out)
    for i, g in enumerate(code.generators, start=1):
        print(f"  g{i} = {g}", file=out)
    for lx, lz in code.logical_pairs:
        print(f"  logical X = {lx}  Z = {lz}", file=out)


def _weight_one_errors(n: int) -> list[PauliOperator]:
    return [PauliOperator.identity(n)] + [
        PauliOperator.single(n, q, letter) for q in range(n) for letter in "XYZ"
    ]


def cmd_kl_check(args, out) -> None:
    code = resolve_code(args.code)
    if args.errors == "weight1":
        errors = _weight_one_errors(code.n)
    else:
        errors = parse_generators(Path(args.errors).read_text())
    report = dense.kl_check(code, errors)
    print(f"errors: {len(errors)}", file=out)
    print(f"hermitian deviation: {report.hermitian_deviation:.3e}", file=out)
    print(f"projection residual: {report.projection_residual:.3e}", file=out)
    print(f"correctable: {'yes' if report.correctable else 'no'}", file=out)
    if len(errors) <= 8:
        with np.printoptions(precision=3, suppress=True):
            print(f"alpha:\n{report.alpha}", file=out)


def cmd_verify_continuous(args, out) -> None:
    code = resolve_code(args.code)
    qubit = args.qubit - 1
    if not 0 <= qubit < code.n:
        raise QECError(f"--qubit must be in 1..{code.n}")
    rng = np.random.default_rng(args.seed)
    worst = 1.0
    for trial in range(args.trials):
        amp = rng.normal(size=2) + 1j * rng.normal(size=2)
        amp /= np.linalg.norm(amp)
        ideal = dense.encode(code.name, amp[0], amp[1])
        coeffs = dense.random_unit_coefficients(rng)
        corrupted = dense.single_qubit_error(ideal, qubit, coeffs)
        fixed = dense.correct_continuous_error(code, corrupted, rng)
        fid = ideal.fidelity(fixed)
        worst = min(worst, fid)
        print(f"trial {trial}: fidelity {fid:.12f}", file=out)
    print(f"min fidelity: {worst:.12f}", file=out)


def cmd_mc(args, out) -> None:
    stats = sweep(resolve_code(args.code), args.channel, args.p, args.trials, args.seed)
    text = format_csv(stats)
    if args.out and args.out != "-":
        Path(args.out).write_text(text)
    else:
        out.write(text)


def cmd_threshold(args, out) -> None:
    print(f"{pseudothreshold(args.code):.7f}", file=out)


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qecbench", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    channels = list(CHANNEL_ALPHABETS)

    codes = sub.add_parser("codes", help="catalog operations")
    codes_sub = codes.add_subparsers(dest="action", required=True)
    codes_sub.add_parser("list", help="list catalog codes").set_defaults(func=cmd_codes_list)

    code = sub.add_parser("code", help="single-code operations")
    code_sub = code.add_subparsers(dest="action", required=True)
    info = code_sub.add_parser("info", help="generators, logicals, distance, degeneracy")
    info.add_argument("code", help="catalog name or generator file")
    info.add_argument("--cap", type=_positive_int, default=4, help="distance search weight cap")
    info.set_defaults(func=cmd_code_info)

    syn = sub.add_parser("syndrome", help="syndrome and correction for one error")
    syn.add_argument("--code", required=True)
    syn.add_argument("--error", required=True, help="Pauli string, e.g. IXI")
    syn.add_argument("--channel", choices=channels, default="depolarizing")
    syn.set_defaults(func=cmd_syndrome)

    table = sub.add_parser("table", help="lookup-table operations")
    table_sub = table.add_subparsers(dest="action", required=True)
    dump = table_sub.add_parser("dump", help="print syndrome<TAB>correction lines")
    dump.add_argument("--code", required=True)
    dump.add_argument("--channel", choices=channels, default="depolarizing")
    dump.add_argument("--max-weight", type=int, default=2)
    dump.set_defaults(func=cmd_table_dump)

    css = sub.add_parser("css", help="CSS construction")
    css_sub = css.add_subparsers(dest="action", required=True)
    build = css_sub.add_parser("build", help="build a CSS code from parity-check files")
    build.add_argument("--hx", required=True, help="X-check matrix file")
    build.add_argument("--hz", help="Z-check matrix file (defaults to --hx)")
    build.add_argument("--name")
    build.add_argument("--cap", type=_positive_int, default=4)
    build.set_defaults(func=cmd_css_build)

    kl = sub.add_parser("kl-check", help="Knill-Laflamme test on the dense oracle")
    kl.add_argument("--code", required=True)
    kl.add_argument("--errors", required=True,
                    help="file of Pauli strings, or 'weight1' for I plus all weight-1 Paulis")
    kl.set_defaults(func=cmd_kl_check)

    vc = sub.add_parser("verify-continuous", help="correct random single-qubit errors densely")
    vc.add_argument("--code", required=True)
    vc.add_argument("--qubit", type=_positive_int, required=True, help="1-based qubit index")
    vc.add_argument("--seed", type=int, default=None)
    vc.add_argument("--trials", type=_positive_int, default=1)
    vc.set_defaults(func=cmd_verify_continuous)

    mc = sub.add_parser("mc", help="Monte Carlo logical error rates (CSV)")
    mc.add_argument("--code", required=True)
    mc.add_argument("--channel", choices=channels, required=True)
    mc.add_argument("--p", type=_float_list, required=True, help="comma-separated list")
    mc.add_argument("--trials", type=_positive_int, default=10_000)
    mc.add_argument("--seed", type=int, default=None)
    mc.add_argument("--out", help="output CSV path (stdout if omitted)")
    mc.set_defaults(func=cmd_mc)

    th = sub.add_parser("threshold", help="pseudothreshold from the closed-form success rate")
    th.add_argument("--code", required=True)
    th.set_defaults(func=cmd_threshold)
    return parser


def run_command(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        args.func(args, out)
    except PauliParseError as exc:
        print(f"error: invalid Pauli string: {exc}", file=sys.stderr)
        return EXIT_PAULI
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except (QECError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
