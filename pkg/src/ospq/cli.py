"""Command-line driver: reproducible verification runs and matrix exports.

Subcommands
-----------
verify        symbolic relation checks (classical matrices and the deformed
              oscillator realization), exact arithmetic throughout
rep           finite-dimensional matrices at q = exp(i pi / k): unitarity,
              relation residuals, block dimensions, optional CSV export
decompose     block structure of the Fock space under the gl(n) subalgebra
normal-order  rewrite a word of oscillator letters into ordered form

Every run emits a report whose JSON form is byte-stable except for the
timestamp field, so reruns can be diffed.  Exit status is 0 when every
requested check passes, 1 when at least one fails, and 2 for unusable
arguments (bad ranges, size guards, parse errors).
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .qcoeff import QCoeff, QFrac
from .report import CheckResult, summarize
from .scalars import Q2
from .walgebra import DEFAULT_RULES, Rules, WeylElement, normal_order
from .ospclassic import verify_classical
from .uqosp import (
    catalog,
    classical_limit_checks,
    round_trip_checks,
    verify_instance,
)
from . import fockrep

SIZE_GUARD = 100_000

QUANTUM_FAMILY_KEYS = {
    "CK": ("CK",),
    "SERRE": ("SERRE_E", "SERRE_F"),
    "PRE": ("PRE",),
    "T": ("T",),
    "G": ("G",),
}
FAMILY_ORDER = ("classical", "CK", "SERRE", "PRE", "T", "G")
CHECK_ORDER = ("unitarity", "relations", "dims")


# ---------------------------------------------------------------------------
# stable rendering of exact coefficients
# ---------------------------------------------------------------------------


def _render_fraction(x: Fraction) -> str:
    return str(x)


def _render_scalar(z: Q2) -> str:
    """Element of Q(sqrt 2) with an explicit radical marker."""
    r, w = z.r, z.w
    if w == 0:
        return _render_fraction(r)
    if w == 1:
        root = "√2"
    elif w == -1:
        root = "-√2"
    else:
        root = f"{_render_fraction(w)}√2"
    if r == 0:
        return root
    sign = "+" if not root.startswith("-") else ""
    return f"{_render_fraction(r)}{sign}{root}"


def _render_spower(e: int) -> str:
    """Even powers of s print as powers of q = s^2."""
    if e == 0:
        return ""
    if e % 2 == 0:
        h = e // 2
        if h == 1:
            return "q"
        if h == -1:
            return "q^-1"
        return f"q^{h}"
    if e == 1:
        return "s"
    return f"s^{e}"


def _render_qcoeff(x: QCoeff) -> tuple[str, bool]:
    """Laurent polynomial; the flag says whether the string is one product
    term (safe to use unparenthesized as a multiplier)."""
    items = x.terms()
    if not items:
        return "0", True
    pieces: list[str] = []
    for e, z in items:
        scalar = _render_scalar(z)
        power = _render_spower(e)
        if not power:
            pieces.append(scalar)
        elif scalar == "1":
            pieces.append(power)
        elif scalar == "-1":
            pieces.append(f"-{power}")
        elif any(ch in scalar for ch in "+/") or "-" in scalar[1:]:
            pieces.append(f"({scalar}){power}")
        else:
            pieces.append(f"{scalar}{power}")
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += f" - {piece[1:]}"
        else:
            text += f" + {piece}"
    return text, len(pieces) == 1


def _render_qfrac(c: QFrac) -> str:
    num, single = _render_qcoeff(c.num)
    parts: list[str] = []
    if c.dp:
        parts.append("(s+s^-1)" + (f"^{c.dp}" if c.dp > 1 else ""))
    if c.dm:
        parts.append("(s-s^-1)" + (f"^{c.dm}" if c.dm > 1 else ""))
    if not parts:
        return num if single else f"({num})"
    den = parts[0] if len(parts) == 1 else "(" + " ".join(parts) + ")"
    return f"({num}/{den})"


def render_element(x: WeylElement) -> str:
    """Ordered-form printer: coefficient then monomial, terms joined by
    +/- in a fixed (descending monomial) order."""
    terms = sorted(x.terms(), reverse=True)
    if not terms:
        return "0"
    pieces: list[str] = []
    for mono, coeff in terms:
        cs = _render_qfrac(coeff)
        ms = str(mono)
        if ms == "1":
            pieces.append(cs)
        elif cs == "1":
            pieces.append(ms)
        elif cs == "-1":
            pieces.append(f"-{ms}")
        else:
            pieces.append(f"{cs} {ms}")
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += f" - {piece[1:]}"
        else:
            text += f" + {piece}"
    return text


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------


def _residual_field(r: CheckResult):
    if r.residual is None:
        return "exact-zero"
    return r.residual


def build_report(command: str, parameters: dict, results: list[CheckResult]) -> dict:
    rows = [
        {
            "id": r.id,
            "status": "pass" if r.ok else "fail",
            "residual": _residual_field(r),
            "detail": r.detail,
        }
        for r in sorted(results, key=lambda r: r.id)
    ]
    return {
        "schema": "1",
        "tool": "ospq",
        "version": __version__,
        "command": command,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "parameters": parameters,
        "summary": summarize(results),
        "status": "pass" if all(r.ok for r in results) else "fail",
        "results": rows,
    }


def _emit(report: dict, fmt: str, out_path: str | None, stream) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    if fmt == "json":
        json.dump(report, stream, indent=2)
        stream.write("\n")
    else:
        print(
            f"ospq {report['command']}  "
            + " ".join(f"{k}={v}" for k, v in report["parameters"].items()),
            file=stream,
        )
        for row in report["results"]:
            residual = row["residual"]
            if isinstance(residual, float):
                residual = f"{residual:.3e}"
            line = f"{row['status']:4s}  {row['id']}  {residual}"
            if row["detail"]:
                line += f"  {row['detail']}"
            print(line, file=stream)
        s = report["summary"]
        print(
            f"{report['status'].upper()}: {s['passed']}/{s['total']} checks passed",
            file=stream,
        )
        if s["failing_ids"]:
            print("failing: " + " ".join(s["failing_ids"]), file=stream)


def _thread_count() -> int:
    raw = os.environ.get("OSPQ_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _parse_families(text: str) -> list[str]:
    if text == "all":
        return list(FAMILY_ORDER)
    chosen = [part.strip() for part in text.split(",") if part.strip()]
    for name in chosen:
        if name not in FAMILY_ORDER:
            raise ValueError(
                f"unknown family {name!r} (choose from {', '.join(FAMILY_ORDER)} or all)"
            )
    return [name for name in FAMILY_ORDER if name in chosen]


def cmd_verify(args) -> int:
    if not 1 <= args.n <= 5:
        return _fail("--n must be between 1 and 5")
    try:
        families = _parse_families(args.families)
    except ValueError as exc:
        return _fail(str(exc))
    rules: Rules = DEFAULT_RULES.corrupted() if args.corrupt_rules else DEFAULT_RULES
    results: list[CheckResult] = []
    if "classical" in families:
        if args.n > 4:
            return _fail("classical checks support n up to 4")
        results += verify_classical(args.n)
    quantum_keys: list[str] = []
    for name in families:
        quantum_keys += QUANTUM_FAMILY_KEYS.get(name, ())
    if quantum_keys:
        instances = catalog(args.n, families=quantum_keys, seed=args.seed)
        workers = _thread_count()
        if workers > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=workers) as pool:
                results += list(
                    pool.map(lambda inst: verify_instance(inst, args.n, rules), instances)
                )
        else:
            results += [verify_instance(inst, args.n, rules) for inst in instances]
    if set(families) == set(FAMILY_ORDER):
        results += round_trip_checks(args.n, rules)
        if args.n <= 4:
            results += classical_limit_checks(args.n, rules)
    parameters = {
        "n": args.n,
        "families": ",".join(families),
        "seed": args.seed,
        "corrupt_rules": bool(args.corrupt_rules),
    }
    report = build_report("verify", parameters, results)
    _emit(report, args.format, args.out, sys.stdout)
    return 0 if report["status"] == "pass" else 1


def _guard_rep(n: int, k: int) -> str | None:
    if n < 1:
        return "--n must be at least 1"
    if k < 2:
        return "--k must be at least 2"
    if k**n > SIZE_GUARD:
        return f"k^n = {k ** n} exceeds the size guard {SIZE_GUARD}"
    return None


def _parse_checks(text: str) -> list[str]:
    if text == "all":
        return list(CHECK_ORDER)
    chosen = [part.strip() for part in text.split(",") if part.strip()]
    for name in chosen:
        if name not in CHECK_ORDER:
            raise ValueError(
                f"unknown check {name!r} (choose from {', '.join(CHECK_ORDER)} or all)"
            )
    return [name for name in CHECK_ORDER if name in chosen]


def _export_labels(n: int) -> list[str]:
    labels: list[str] = []
    for i in range(1, n + 1):
        labels += [f"a{i}+", f"a{i}-", f"k{i}", f"L{i}"]
    return labels


def cmd_rep(args) -> int:
    guard = _guard_rep(args.n, args.k)
    if guard:
        return _fail(guard)
    try:
        checks = _parse_checks(args.checks)
    except ValueError as exc:
        return _fail(str(exc))
    workers = _thread_count()
    results: list[CheckResult] = []
    if "unitarity" in checks:
        results += fockrep.check_unitarity(args.n, args.k, tol=args.tol_entry)
        results += fockrep.check_weights(args.n, args.k)
    if "relations" in checks:
        results += fockrep.check_matrix_relations(
            args.n, args.k, max_workers=workers, tol=args.tol_rel
        )
    if "dims" in checks:
        results += fockrep.check_decomposition(args.n, args.k)
    exports: list[str] = []
    if args.out:
        stem = args.out[:-4] if args.out.endswith(".csv") else args.out
        for label in _export_labels(args.n):
            rep = fockrep.build_generator_matrix(label, args.n, args.k)
            path = f"{stem}.{label}.csv"
            with open(path, "w", encoding="utf-8") as fh:
                for line in fockrep.csv_rows(rep):
                    fh.write(line + "\n")
            exports.append(path)
    parameters = {
        "n": args.n,
        "k": args.k,
        "dim": args.k**args.n,
        "checks": ",".join(checks),
        "tol_rel": args.tol_rel,
        "tol_entry": args.tol_entry,
        "exports": exports,
    }
    report = build_report("rep", parameters, results)
    _emit(report, args.format, None, sys.stdout)
    return 0 if report["status"] == "pass" else 1


def cmd_decompose(args) -> int:
    guard = _guard_rep(args.n, args.k)
    if guard:
        return _fail(guard)
    dec = fockrep.decompose_gl(args.n, args.k)
    results = fockrep.check_decomposition(args.n, args.k)
    parameters = {"n": args.n, "k": args.k, "dim": args.k**args.n}
    report = build_report("decompose", parameters, results)
    report["decomposition"] = fockrep.decomposition_to_json(dec)
    if args.format == "json" or args.out:
        _emit(report, args.format, args.out, sys.stdout)
        if args.format != "json":
            _print_blocks(dec, report)
    else:
        _print_blocks(dec, report)
    return 0 if report["status"] == "pass" else 1


def _print_blocks(dec, report) -> None:
    print(f"ospq decompose  n={dec.n} k={dec.k} dim={dec.k ** dec.n}")
    print(f"{len(dec.blocks)} blocks")
    for b in dec.blocks:
        print(f"  m={b.m}  dim={b.dim}  indices={list(b.indices)}")
    s = report["summary"]
    print(f"{report['status'].upper()}: {s['passed']}/{s['total']} checks passed")
    if s["failing_ids"]:
        print("failing: " + " ".join(s["failing_ids"]))


def cmd_normal_order(args) -> int:
    try:
        element = normal_order(args.word, args.n, contract=args.contract)
    except ValueError as exc:
        return _fail(f"cannot parse word: {exc}")
    print(render_element(element))
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ospq",
        description="Exact verification of the deformed paraboson realization "
        "and its unitary Fock representation.",
    )
    parser.add_argument("--version", action="version", version=f"ospq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check defining and derived relations")
    p.add_argument("--n", type=int, required=True, help="number of modes (1..5)")
    p.add_argument(
        "--families",
        default="all",
        help="comma list from {classical,CK,SERRE,PRE,T,G} or 'all'",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="also write the JSON report to this path")
    p.add_argument("--seed", type=int, default=20250, help="sampling seed for n >= 4")
    p.add_argument(
        "--corrupt-rules",
        action="store_true",
        help="negative-control hook: perturb one rewriting constant",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rep", help="matrix representation checks at q = e^{i pi/k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="root order (q = e^{i pi/k})")
    p.add_argument(
        "--checks",
        default="all",
        help="comma list from {unitarity,relations,dims} or 'all'",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="CSV export prefix (one file per generator)")
    p.add_argument("--tol-rel", type=float, default=fockrep.RESIDUAL_TOL)
    p.add_argument("--tol-entry", type=float, default=fockrep.STRUCTURAL_TOL)
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("decompose", help="block decomposition of the Fock space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="also write the JSON report to this path")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("normal-order", help="order a word of oscillator letters")
    p.add_argument("word", help="e.g. \"a1- a1+\" or \"a2- k1^-1 a1+\"")
    p.add_argument("--n", type=int, default=None, help="mode count (default: inferred)")
    p.add_argument(
        "--contract",
        action="store_true",
        help="also eliminate same-mode a+ a- pairs (fully reduced basis)",
    )
    p.set_defaults(func=cmd_normal_order)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
