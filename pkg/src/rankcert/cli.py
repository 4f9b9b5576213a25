"""Command line front end.

Exit codes for ``certify`` / ``phase-retrieval`` / ``verify-paper``:
0 INJECTIVE, 1 FAIL, 2 INDETERMINATE, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib.resources import files
from pathlib import Path

from .certify import (
    FAIL,
    INDETERMINATE,
    INJECTIVE,
    CertifyConfig,
    EnsembleError,
    MeasurementEnsemble,
    audit_certificate,
    proportional,
    vinzant_certify,
)
from .groebner import Limits
from .poly import Polynomial, PolynomialParseError
from .projections import SubspaceError, certify_phase_retrieval, load_subspaces
from .realroots import count_real_roots, homogeneous_has_nonzero_real_root
from .search import SearchConfig, search_minimal
from .variety import VARIANTS, table_row

EXIT = {INJECTIVE: 0, FAIL: 1, INDETERMINATE: 2}
EXIT_USAGE = 3

REFERENCE_CASES = {
    "thm33": ("thm33_ensemble.json", "thm33_f0.txt", 20),
    "thm43": ("thm43_subspaces.json", "thm43_f0.txt", 10),
}


class UsageError(Exception):
    pass


def data_text(name: str) -> str:
    return files("rankcert.data").joinpath(name).read_text()


def _int_range(text: str) -> list[int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":", 1)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def _keep_vars(text: str) -> tuple[str, str]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"expected two variables A,B, got {text!r}")
    return parts[0], parts[1]


def _add_limits(p: argparse.ArgumentParser):
    p.add_argument("--timeout-seconds", type=float, default=None)
    p.add_argument("--max-pairs", type=int, default=10**6)
    p.add_argument("--max-degree", type=int, default=64)
    p.add_argument("--keep-vars", type=_keep_vars, default=None, help="kept pair, e.g. x43,x44")
    p.add_argument("--no-preprocess", action="store_true", help="skip linear substitution before elimination")
    p.add_argument("--audit", action="store_true", help="re-check an INJECTIVE certificate independently")
    p.add_argument("--out", type=Path, default=None)


def _config(args) -> CertifyConfig:
    return CertifyConfig(
        keep=args.keep_vars,
        limits=Limits(args.max_pairs, args.max_degree, args.timeout_seconds),
        preprocess=not args.no_preprocess,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rankcert", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="dimension/degree/bound table")
    p.add_argument("--n", type=_int_range, required=True, help="N or LO:HI")
    p.add_argument("--r", type=_int_range, required=True, help="R or LO:HI")
    p.add_argument("--variant", choices=VARIANTS + ("all",), default="all")
    p.add_argument("--field", choices=("real", "complex"), default="real")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("certify", help="certify an ensemble file")
    p.add_argument("ensemble", type=Path)
    _add_limits(p)

    p = sub.add_parser("phase-retrieval", help="certify a subspace file")
    p.add_argument("subspaces", type=Path)
    _add_limits(p)

    p = sub.add_parser("search", help="random search for injective ensembles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--range", type=_pair, default=(-4, 4), metavar="LO:HI")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timeout-seconds", type=float, default=None, help="per trial")
    p.add_argument("--max-pairs", type=int, default=10**6)
    p.add_argument("--max-degree", type=int, default=64)
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("sturm", help="count real roots of a polynomial file")
    p.add_argument("polynomial", type=Path)

    p = sub.add_parser("verify-paper", help="reproduce a bundled certificate")
    p.add_argument("case", choices=sorted(REFERENCE_CASES))
    _add_limits(p)
    return parser


def _write(path: Path | None, text: str):
    if path is None:
        return
    path.write_text(text)


def cmd_bounds(args) -> int:
    variants = VARIANTS if args.variant == "all" else (args.variant,)
    rows = []
    for n in args.n:
        for r in args.r:
            if r < 1 or 2 * r > n:
                continue
            for v in variants:
                rows.append(table_row(n, r, v, args.field))
    if not rows:
        raise UsageError("no (n, r) with 1 <= r <= n/2 in the requested ranges")
    if args.format == "json":
        text = "\n".join(json.dumps(row) for row in rows) + "\n"
    else:
        cols = ["n", "r", "variant", "field", "dim", "degree", "odd_degree", "bound", "tightness", "citation"]
        cells = [cols] + [[str(row[c]) for c in cols] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(cols))]
        text = "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells) + "\n"
    sys.stdout.write(text)
    _write(args.out, text)
    return 0


def _report(cert, out):
    print(f"verdict: {cert.verdict}" + (f" ({cert.reason})" if cert.reason else ""))
    if cert.f0 is not None:
        print(f"f0 degree {int(cert.f0.degree())} in {cert.keep[0]},{cert.keep[1]}; real roots of f0(.,1): {cert.root_count}")
    if cert.slices:
        print(f"slice checks: {sum(cert.slices.values())}/{len(cert.slices)} contain 1")
    _write(out, cert.dumps() + "\n")


def _maybe_audit(args, E, cert) -> bool:
    if not (args.audit and cert.verdict == INJECTIVE):
        return True
    rep = audit_certificate(E, cert, Limits(args.max_pairs, args.max_degree, args.timeout_seconds))
    print(f"audit: {'passed' if rep.passed else 'FAILED'} {rep}")
    return rep.passed


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_certify(args) -> int:
    E = MeasurementEnsemble.loads(_read(args.ensemble))
    cert = vinzant_certify(E, _config(args))
    _report(cert, args.out)
    if not _maybe_audit(args, E, cert):
        return EXIT[FAIL]
    return EXIT[cert.verdict]


def cmd_phase(args) -> int:
    subs = load_subspaces(_read(args.subspaces))
    if not subs:
        raise UsageError("subspace file lists no subspaces")
    cert = certify_phase_retrieval(subs, _config(args))
    _report(cert, args.out)
    return EXIT[cert.verdict]


def cmd_search(args) -> int:
    lo, hi = args.range
    try:
        cfg = SearchConfig(
            n=args.n, r=args.r, symmetric=args.symmetric, m=args.m, lo=lo, hi=hi,
            trials=args.trials, seed=args.seed, max_pairs=args.max_pairs,
            max_degree=args.max_degree, timeout=args.timeout_seconds, workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = search_minimal(cfg)
    print(json.dumps(rep.tallies, sort_keys=True))
    _write(args.out, rep.dumps() + "\n")
    return 0


def cmd_sturm(args) -> int:
    f = Polynomial.parse(_read(args.polynomial).strip())
    if f.is_zero():
        raise UsageError("the zero polynomial has infinitely many roots")
    if len(f.variables) <= 1:
        if not f.variables:
            print("real roots: 0")
        else:
            print(f"real roots: {count_real_roots(f)}")
        return 0
    if len(f.variables) == 2 and f.is_homogeneous():
        has = homogeneous_has_nonzero_real_root(f)
        print(f"nonzero real root: {'yes' if has else 'no'}")
        return 0
    raise UsageError(f"expected a univariate polynomial or a binary form, got variables {f.variables}")


def cmd_verify(args) -> int:
    inp, golden_name, degree = REFERENCE_CASES[args.case]
    if args.case == "thm43":
        cert = certify_phase_retrieval(load_subspaces(data_text(inp)), _config(args))
        E = None
    else:
        E = MeasurementEnsemble.loads(data_text(inp))
        cert = vinzant_certify(E, _config(args))
    _report(cert, args.out)
    if cert.verdict != INJECTIVE:
        return EXIT[cert.verdict]
    golden = Polynomial.parse(data_text(golden_name), cert.keep)
    ok_deg = int(cert.f0.degree()) == degree
    ok_prop = proportional(cert.f0, golden)
    status = "proportional to golden" if ok_prop else "NOT proportional to golden"
    print(f"f0 degree {int(cert.f0.degree())}, {status}")
    if args.audit:
        from .projections import projection_ensemble

        E = E or projection_ensemble(load_subspaces(data_text(inp)))
        if not _maybe_audit(args, E, cert):
            return EXIT[FAIL]
    return 0 if (ok_deg and ok_prop) else EXIT[FAIL]


COMMANDS = {
    "bounds": cmd_bounds,
    "certify": cmd_certify,
    "phase-retrieval": cmd_phase,
    "search": cmd_search,
    "sturm": cmd_sturm,
    "verify-paper": cmd_verify,
}


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "--range -2:2" as two options; rewrite it as "--range=-2:2"
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a == "--range" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--range={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, EnsembleError, SubspaceError, PolynomialParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
