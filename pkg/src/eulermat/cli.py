"""Command-line front end.

Subcommands::

    eulermat exp --alpha A --phi P [--tol T]
    eulermat power --alpha A --n N
    eulermat verify [--alpha A]
    eulermat cascade CHAIN.json --fmin F0 --fmax F1 --points N

Exit status is 0 when every reported check passes, 1 when a check
exceeds its tolerance and 2 for usage or input errors. Results go to
stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from .duct import DuctSegment, Medium, frequency_sweep
from .errors import EulerMatError, MatrixOverflowError, ZeroAlphaError
from .mat2c import Mat2c, mat_scale, max_abs_diff, max_abs_entry
from .matexp import exp_phi, exp_series, run_identity_suite
from .tclass import phi_dense, psi_pow, psi_pow_repeated

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

CSV_HEADER = ["freq_hz", "m11_re", "m11_im", "m12_re", "m12_im",
              "m21_re", "m21_im", "m22_re", "m22_im", "det_dev"]

VERIFY_PHI_GRID = [(i - 16) * math.pi / 8 for i in range(33)]
VERIFY_M = [-2, -1, 1, 2, 3]
VERIFY_K = [-1, 0, 1, 2]
CASCADE_DET_TOL_PER_SEGMENT = 1e-9


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return format(x, ".17g")


def fmt_complex(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}j"


def fmt_matrix(M: Mat2c) -> str:
    return (f"[[{fmt_complex(M.e11)}, {fmt_complex(M.e12)}], "
            f"[{fmt_complex(M.e21)}, {fmt_complex(M.e22)}]]")


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise UsageError(f"--{name} must be finite")
    return value


def cmd_exp(alpha: float, phi: float, tol: float = 1e-10, out=None) -> int:
    out = out or sys.stdout
    _finite("alpha", alpha)
    _finite("phi", phi)
    if not tol > 0:
        raise UsageError("--tol must be positive")
    if alpha == 0:
        raise ZeroAlphaError("alpha must be nonzero")
    closed = exp_phi(alpha, phi)
    series = exp_series(mat_scale(complex(phi, 0.0), phi_dense(alpha)))
    diff = max_abs_diff(series, closed)
    ok = diff <= tol
    print(f"alpha {fmt(alpha)}", file=out)
    print(f"phi {fmt(phi)}", file=out)
    print(f"exp_series {fmt_matrix(series)}", file=out)
    print(f"exp_phi {fmt_matrix(closed)}", file=out)
    print(f"max_abs_diff {fmt(diff)} tol {fmt(tol)} {_verdict(ok)}", file=out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_power(alpha: float, n: int, out=None) -> int:
    out = out or sys.stdout
    _finite("alpha", alpha)
    if alpha == 0:
        raise ZeroAlphaError("alpha must be nonzero")
    if n < 0:
        raise UsageError("--n must be a natural number")
    fast = psi_pow(alpha, n)
    slow = psi_pow_repeated(alpha, n)
    scale = max(1.0, abs(alpha) ** n)
    tol = 1e-9 * scale
    if math.isfinite(max_abs_entry(slow)):
        dev = max_abs_diff(fast, slow)
    else:
        dev = math.inf
    ok = dev <= tol
    print(f"alpha {fmt(alpha)}", file=out)
    print(f"n {n}", file=out)
    print(f"psi_pow {fmt_matrix(fast)}", file=out)
    print(f"repeated {fmt_matrix(slow)}", file=out)
    print(f"deviation {fmt(dev)} tol {fmt(tol)} {_verdict(ok)}", file=out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_verify(alpha: float = 1.0, out=None) -> int:
    out = out or sys.stdout
    _finite("alpha", alpha)
    report = run_identity_suite(alpha, VERIFY_PHI_GRID, VERIFY_M, VERIFY_K)
    passed = report.passed()
    tols = report.tolerances()
    devs = {
        "note1": report.note1_dev,
        "note2": report.note2_dev,
        "note3": report.note3_dev,
        "note4": report.note4_dev,
        "pauli": report.pauli_dev,
    }
    unit_only = {"note3", "note4", "pauli"}
    ok = True
    print(f"alpha {fmt(alpha)}", file=out)
    for name, dev in devs.items():
        if alpha != 1 and name in unit_only:
            print(f"{name} SKIPPED (defined only at alpha = 1)", file=out)
            continue
        ok = ok and passed[name]
        print(f"{name} dev {fmt(dev)} tol {fmt(tols[name])} {_verdict(passed[name])}",
              file=out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _number(obj, key: str, where: str) -> float:
    if not isinstance(obj, dict) or key not in obj:
        raise UsageError(f"{where}: missing key {key!r}")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise UsageError(f"{where}: {key!r} must be a number")
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise UsageError(f"{where}: {key!r} must be positive and finite")
    return value


def load_chain(path: str | Path) -> tuple[Medium, list[DuctSegment]]:
    """Read a chain file ``{"c": ..., "segments": [{"S": ..., "L": ...}, ...]}``."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read chain file {str(path)!r}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"chain file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise UsageError("chain file must hold a JSON object")
    c = _number(doc, "c", "chain")
    segs = doc.get("segments")
    if not isinstance(segs, list) or not segs:
        raise UsageError("chain: 'segments' must be a non-empty array")
    segments = [DuctSegment(_number(s, "S", f"segments[{i}]"),
                            _number(s, "L", f"segments[{i}]"))
                for i, s in enumerate(segs)]
    return Medium(c), segments


def linear_frequencies(fmin: float, fmax: float, points: int) -> list[float]:
    if points == 1:
        return [fmin]
    step = (fmax - fmin) / (points - 1)
    freqs = [fmin + i * step for i in range(points - 1)]
    freqs.append(fmax)
    return freqs


def cmd_cascade(chain_path: str, fmin: float, fmax: float, points: int,
                out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    _finite("fmin", fmin)
    _finite("fmax", fmax)
    if fmin < 0 or fmin > fmax:
        raise UsageError("need 0 <= fmin <= fmax")
    if points < 1:
        raise UsageError("--points must be at least 1")
    med, segments = load_chain(chain_path)
    freqs = linear_frequencies(fmin, fmax, points)
    rows = frequency_sweep(segments, med, [2 * math.pi * f for f in freqs])
    tol = CASCADE_DET_TOL_PER_SEGMENT * len(segments)

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    worst = 0.0
    for f, row in zip(freqs, rows):
        M = row.matrix
        fields = [f]
        for z in M.entries():
            fields += [z.real, z.imag]
        fields.append(row.det_deviation)
        writer.writerow([fmt(x) for x in fields])
        worst = max(worst, row.det_deviation)
    if worst > tol:
        print(f"det deviation {fmt(worst)} exceeds {fmt(tol)}", file=err)
        return EXIT_CHECK_FAILED
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eulermat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exp", help="compare series and closed-form exp(phi*Phi)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("power", help="compare the fast Psi**n rule with repeated products")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("--alpha", type=float, default=1.0)

    p = sub.add_parser("cascade", help="sweep a duct chain, CSV on stdout")
    p.add_argument("chain", help="JSON chain file")
    p.add_argument("--fmin", type=float, required=True, help="Hz")
    p.add_argument("--fmax", type=float, required=True, help="Hz")
    p.add_argument("--points", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "exp":
            return cmd_exp(args.alpha, args.phi, args.tol)
        if args.command == "power":
            return cmd_power(args.alpha, args.n)
        if args.command == "verify":
            return cmd_verify(args.alpha)
        return cmd_cascade(args.chain, args.fmin, args.fmax, args.points)
    except (UsageError, ZeroAlphaError, MatrixOverflowError, ValueError) as exc:
        print(f"eulermat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EulerMatError as exc:
        print(f"eulermat: error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
