"""Command-line front end: ``recqft {build,simulate,verify,fft,count}``.

Exit status is 0 on success, 1 when a verification check fails and 2 for
usage or input errors. Data goes to stdout (or ``-o``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .circuit import apply_circuit, basis_state
from .fft import OpCounter, butterfly_count, dft_direct, fft_recursive, order_of
from .formats import (
    FormatError,
    export_qasm,
    parse_circuit,
    parse_state,
    serialize_circuit,
    serialize_state,
)
from .qft import build_mqft, build_qft, gate_report
from .verify import check_circuit, run_checks

MAX_BUILD_N = 64
MAX_VERIFY_N = 12
INPUT_NORM_TOL = 1e-8


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    if not 0 <= args.n <= MAX_BUILD_N:
        raise UsageError(f"-n must be in 0..{MAX_BUILD_N}, got {args.n}")
    c = build_mqft(args.n) if args.variant == "mqft" else build_qft(args.n)
    text = serialize_circuit(c) if args.format == "native" else export_qasm(c)
    _write(args.output, text)
    return 0


def _input_state(spec: str, n: int) -> np.ndarray:
    kind, _, value = spec.partition(":")
    if kind == "basis":
        try:
            j = int(value)
        except ValueError:
            raise UsageError(f"bad basis index {value!r}") from None
        if not 0 <= j < 1 << n:
            raise UsageError(f"basis index {j} out of range 0..{(1 << n) - 1}")
        return basis_state(n, j)
    if kind == "file":
        state = parse_state(_read(value))
        if len(state) != 1 << n:
            raise UsageError(f"state has {len(state)} amplitudes, circuit needs {1 << n}")
        norm = float(np.linalg.norm(state))
        if abs(norm - 1.0) > INPUT_NORM_TOL:
            raise UsageError(f"input state norm {norm!r} is not 1 within {INPUT_NORM_TOL}")
        return state
    raise UsageError(f"--input must be basis:<j> or file:<path>, got {spec!r}")


def cmd_simulate(args) -> int:
    c = parse_circuit(_read(args.circuit))
    state = _input_state(args.input, c.n)
    _write(args.output, serialize_state(apply_circuit(state, c)))
    return 0


def cmd_verify(args) -> int:
    if args.trials < 0:
        raise UsageError(f"--trials must be non-negative, got {args.trials}")
    if args.against is not None:
        c = parse_circuit(_read(args.against))
        results = check_circuit(c, args.trials, args.seed, args.tolerance)
    else:
        if not 1 <= args.n_max <= MAX_VERIFY_N:
            raise UsageError(f"--n-max must be in 1..{MAX_VERIFY_N}, got {args.n_max}")
        results = run_checks(args.n_max, args.trials, args.seed, args.tolerance)

    ok = all(r.passed for r in results)
    if args.json:
        doc = {"passed": ok, "tolerance": args.tolerance, "seed": args.seed,
               "checks": [r.as_dict() for r in results]}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [r.line() for r in results]
        lines.append(f"{'ALL PASS' if ok else 'FAILED'}: {sum(r.passed for r in results)}"
                     f"/{len(results)} checks within tolerance {args.tolerance:g}")
        text = "\n".join(lines) + "\n"
    _write(args.output, text)
    return 0 if ok else 1


def cmd_fft(args) -> int:
    a = parse_state(_read(args.input))
    n = order_of(a)
    if args.mode == "direct":
        if args.report_ops:
            raise UsageError("--report-ops needs --mode recursive")
        out = dft_direct(a)
    else:
        counter = OpCounter()
        out = fft_recursive(a, counter)
        if args.report_ops:
            print(f"n {n}", file=sys.stderr)
            print(f"complex_mults {counter.complex_mults}", file=sys.stderr)
            print(f"complex_adds {counter.complex_adds}", file=sys.stderr)
            print(f"scalings {counter.scalings}", file=sys.stderr)
            print(f"predicted_mults n*2^(n-1) = {butterfly_count(n)}", file=sys.stderr)
    _write(args.output, serialize_state(out))
    return 0


def cmd_count(args) -> int:
    n = args.n
    if not 0 <= n <= MAX_BUILD_N:
        raise UsageError(f"-n must be in 0..{MAX_BUILD_N}, got {n}")
    r = gate_report(n)
    formula = {"mqft": n * (n + 1) // 2, "hadamard": n, "cr": n * (n - 1) // 2, "swap": n // 2}
    measured = {"mqft": r.mqft_count, "hadamard": r.hadamard_count, "cr": r.cr_count,
                "swap": r.swap_count}
    if args.json:
        doc = {"n": n, "gate_count_total": r.gate_count_total, "measured": measured,
               "formula": formula}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        rows = [f"n {n}", f"total {r.gate_count_total}", f"{'kind':<9s} {'built':>6s} {'formula':>8s}"]
        rows += [f"{k:<9s} {measured[k]:>6d} {formula[k]:>8d}" for k in formula]
        text = "\n".join(rows) + "\n"
    _write(args.output, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="recqft", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")
        p.set_defaults(func=func)
        return p

    p = add("build", cmd_build, "emit a QFT circuit")
    p.add_argument("-n", type=int, required=True, help="qubit count")
    p.add_argument("--variant", choices=("mqft", "qft"), default="qft")
    p.add_argument("--format", choices=("native", "qasm"), default="native")

    p = add("simulate", cmd_simulate, "run a native circuit file on an input state")
    p.add_argument("circuit", help="native circuit file, '-' for stdin")
    p.add_argument("--input", default="basis:0", help="basis:<j> or file:<state document>")

    p = add("verify", cmd_verify, "check the constructions against the direct DFT")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.add_argument("--against", metavar="CIRCUIT",
                   help="verify this native circuit file instead of the built-in builders")
    p.add_argument("--json", action="store_true")

    p = add("fft", cmd_fft, "transform a coefficient document")
    p.add_argument("input", help="coefficient document, '-' for stdin")
    p.add_argument("--mode", choices=("direct", "recursive"), default="recursive")
    p.add_argument("--report-ops", action="store_true",
                   help="print operation counts to stderr (recursive mode)")

    p = add("count", cmd_count, "report QFT gate counts")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"recqft {args.command}: error: {exc}", file=sys.stderr)
    except (FormatError, OSError, ValueError) as exc:
        print(f"recqft {args.command}: error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
