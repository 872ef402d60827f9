"""Command-line orchestration: build ideals, run suites, emit reports.

Subcommands::

    tensorcert certify  --suite gen-set --n 3 [--sig +-+] [--budget K]
                        [--workers M] [--out report.json] [--format json|text]
    tensorcert gens     --n 2 --sig ++
    tensorcert gb       --ideal FILE [--order elim|desc|block|v1,v2,...] [--n N]
    tensorcert intersect --a FILE --b FILE [--n N]

Exit codes: 0 all pass, 1 failures, 2 budget exhaustion only, 3 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .groebner import (
    DEFAULT_STEP_BUDGET,
    IdealPresentation,
    StepBudget,
    buchberger,
    reduce_basis,
)
from .ideals import candidate_basis, intersect_pair
from .parse import ParseError, parse_polynomial, render_polynomial
from .report import EXIT_CONFIG, CertReport, emit_report
from .verify import (
    CaseResult,
    gen_set_case,
    knutson_case,
    oracle_equivalence_case,
    squeeze_case,
    tensoriality_case,
    unit_not_tensorial_case,
)
from .fleet import build_fleet
from .xyz import (
    Signature,
    elimination_order,
    letter_block_order,
    order_from_spec,
    split_name,
    xyz_ring,
)

SUITES = ("gen-set", "knutson", "squeeze", "tensoriality", "oracle-equiv", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 3
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="tensorcert", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    certify = sub.add_parser("certify", help="run a verification suite")
    certify.add_argument("--suite", choices=SUITES, required=True)
    certify.add_argument("--n", type=int, required=True, dest="n_max")
    certify.add_argument(
        "--sig",
        action="append",
        default=None,
        help="explicit signature like '+-+'; repeatable (default: sweep all)",
    )
    certify.add_argument("--budget", type=int, default=None, help="step budget per case")
    certify.add_argument("--workers", type=int, default=1)
    certify.add_argument("--out", default=None, help="write the report to this path")
    certify.add_argument("--format", choices=("json", "text"), default="text")

    gens = sub.add_parser("gens", help="print the candidate generating set")
    gens.add_argument("--n", type=int, required=True)
    gens.add_argument("--sig", required=True)

    gb = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    gb.add_argument("--ideal", required=True)
    gb.add_argument("--order", default=None, help="elim | desc | block | comma list")
    gb.add_argument("--n", type=int, default=None)
    gb.add_argument("--budget", type=int, default=None)

    inter = sub.add_parser("intersect", help="intersect two ideal files (t-trick)")
    inter.add_argument("--a", required=True)
    inter.add_argument("--b", required=True)
    inter.add_argument("--n", type=int, default=None)
    inter.add_argument("--budget", type=int, default=None)
    return parser


def default_budget(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("CERTIFY_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"CERTIFY_BUDGET must be an integer, got {env!r}")
    return DEFAULT_STEP_BUDGET


# -- certify ------------------------------------------------------------------


def _parse_signatures(raw: list[str] | None, n_max: int) -> list[Signature] | None:
    if raw is None:
        return None
    sigs = []
    for chunk in raw:
        for text in chunk.split(","):
            if not text:
                continue
            sig = Signature.parse(text)
            if sig.n > n_max:
                raise UsageError(f"signature {text} is longer than --n {n_max}")
            sigs.append(sig)
    if not sigs:
        raise UsageError("no usable signature in --sig")
    return sigs


def _sweep(n_max: int, explicit: list[Signature] | None) -> list[Signature]:
    if explicit is not None:
        return explicit
    out = []
    for n in range(1, n_max + 1):
        out.extend(Signature.sweep(n))
    return out


def _case_specs(suite: str, n_max: int, sigs: list[Signature] | None, budget: int):
    """Picklable (kind, payload) tuples; order defines stable case ids."""
    specs = []
    if suite in ("gen-set", "all"):
        for sig in _sweep(n_max, sigs):
            specs.append(("gen-set", str(sig), budget))
    if suite in ("knutson", "all"):
        for sig in _sweep(n_max, sigs):
            specs.append(("knutson", str(sig), budget))
    if suite in ("squeeze", "all"):
        for n in range(1, n_max + 1):
            specs.append(("squeeze", n, budget))
    if suite in ("oracle-equiv", "all"):
        for sig in _sweep(n_max, sigs):
            specs.append(("oracle-equiv", str(sig), budget))
    if suite in ("tensoriality", "all"):
        for entry in build_fleet():
            if entry.family.signature.n <= n_max:
                specs.append(("tensoriality", entry.name, budget))
        specs.append(("tensoriality-unit", None, budget))
    return specs


def _run_spec(spec) -> CaseResult:
    kind, payload, budget = spec
    if kind == "gen-set":
        return gen_set_case(Signature.parse(payload), budget)
    if kind == "knutson":
        return knutson_case(Signature.parse(payload), budget)
    if kind == "squeeze":
        return squeeze_case(payload, budget)
    if kind == "oracle-equiv":
        return oracle_equivalence_case(Signature.parse(payload), budget)
    if kind == "tensoriality":
        entry = next(e for e in build_fleet() if e.name == payload)
        return tensoriality_case(entry)
    if kind == "tensoriality-unit":
        return unit_not_tensorial_case()
    raise ValueError(f"unknown case kind {kind}")


def run_suite(
    suite: str,
    n_max: int,
    signatures: list[Signature] | None = None,
    step_budget: int = DEFAULT_STEP_BUDGET,
    workers: int = 1,
) -> CertReport:
    if n_max < 1:
        raise UsageError("--n must be at least 1")
    specs = _case_specs(suite, n_max, signatures, step_budget)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(_run_spec, specs))
    else:
        cases = [_run_spec(s) for s in specs]
    order_note = (
        "elimination lex t > x_N > y_N > z_N > ... > x_1 > y_1 > z_1; "
        "squeeze suite uses lex x_1 > ... > x_N > y_1 > ... > z_N; "
        "knutson pairs use the rotated index-descending lex orders"
    )
    report = CertReport(
        suite=suite,
        n_max=n_max,
        signatures="all" if signatures is None else ",".join(str(s) for s in signatures),
        order_description=order_note,
        step_budget=step_budget,
        workers=workers,
        cases=cases,
    )
    return report


def _cmd_certify(args) -> int:
    budget = default_budget(args.budget)
    sigs = _parse_signatures(args.sig, args.n_max)
    report = run_suite(args.suite, args.n_max, sigs, budget, max(1, args.workers))
    rendered = emit_report(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(emit_report(report, "json"))
            handle.write("\n")
    print(rendered)
    return report.exit_code()


# -- gens / gb / intersect -------------------------------------------------------


def _cmd_gens(args) -> int:
    sig = Signature.parse(args.sig)
    if sig.n != args.n:
        raise UsageError(f"--sig has length {sig.n}, expected --n {args.n}")
    ring = xyz_ring(sig.n)
    order = letter_block_order(sig.n)
    for poly in candidate_basis(sig, ring).members:
        print(render_polynomial(poly, order))
    return 0


def _read_ideal(path: str, n_hint: int | None):
    try:
        with open(path, encoding="utf-8") as handle:
            lines = [
                line.strip()
                for line in handle
                if line.strip() and not line.lstrip().startswith("#")
            ]
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    if not lines:
        raise UsageError(f"{path} contains no polynomials")
    n = n_hint or 0
    uses_t = False
    for line in lines:
        for token in _scan_vars(line):
            letter, idx = token
            if letter == "t":
                uses_t = True
            else:
                n = max(n, idx)
    if n < 1:
        raise UsageError(f"{path}: could not infer the index range; pass --n")
    ring = xyz_ring(n, with_t=uses_t)
    try:
        polys = [parse_polynomial(line, ring) for line in lines]
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}")
    return polys, n, uses_t


def _scan_vars(line: str):
    pos = 0
    while pos < len(line):
        ch = line[pos]
        if ch in "xyzt":
            end = pos + 1
            while end < len(line) and line[end].isdigit():
                end += 1
            name = line[pos:end]
            try:
                yield split_name(name)
            except ValueError:
                pass
            pos = end
        else:
            pos += 1


def _cmd_gb(args) -> int:
    polys, n, uses_t = _read_ideal(args.ideal, args.n)
    if args.order:
        order = order_from_spec(args.order, n)
        if uses_t and "t" not in order.ranking:
            raise UsageError("the ideal uses t but the order does not rank it")
    else:
        order = elimination_order(n) if uses_t else letter_block_order(n)
    budget = StepBudget(default_budget(args.budget))
    basis = reduce_basis(buchberger(IdealPresentation(tuple(polys), order), budget), budget)
    for g in basis.elements:
        print(render_polynomial(g, order))
    return 0


def _cmd_intersect(args) -> int:
    polys_a, n_a, t_a = _read_ideal(args.a, args.n)
    polys_b, n_b, t_b = _read_ideal(args.b, args.n)
    if t_a or t_b:
        raise UsageError("input ideals must not use the auxiliary variable t")
    n = max(n_a, n_b)
    ring = xyz_ring(n)
    order = elimination_order(n)
    pres_a = IdealPresentation(tuple(p.map_ring(ring) for p in polys_a), order.without("t"))
    pres_b = IdealPresentation(tuple(p.map_ring(ring) for p in polys_b), order.without("t"))
    budget = StepBudget(default_budget(args.budget))
    basis = intersect_pair(pres_a, pres_b, order, budget)
    for g in basis.elements:
        print(render_polynomial(g, basis.order))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "certify":
            return _cmd_certify(args)
        if args.command == "gens":
            return _cmd_gens(args)
        if args.command == "gb":
            return _cmd_gb(args)
        if args.command == "intersect":
            return _cmd_intersect(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
