"""``cayvol`` command line.

Exit codes: 0 success, 1 usage or parse error, 2 failed precondition,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from contextlib import contextmanager
from pathlib import Path

from . import autgrp, cayley, digraph
from .evoalg import AlgebraError, EvolutionAlgebra
from .field import ExtensionField, FieldError, PrimeField, parse_field
from .group import GroupError, build, default_max_order
from .monomial import preserves_products
from .report import Report
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class PreconditionError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.phases: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str):
        t0 = time.perf_counter()
        yield
        self.phases[name] = round(time.perf_counter() - t0, 6)

    def export(self):
        return dict(self.phases) if self.enabled else None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_gens(text: str, G) -> list[int]:
    if text == "auto":
        return G.coprime_generating_set()
    try:
        S = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise UsageError(f"--gens must be 'auto' or comma-separated element indices, got {text!r}") from None
    if not S or any(not 0 <= s < G.n for s in S):
        raise UsageError(f"--gens indices must lie in 0..{G.n - 1}")
    return S


def _flags(X: EvolutionAlgebra) -> tuple[dict, str | None]:
    simple, reason = X.simplicity()
    flags = {
        "regular": X.is_regular(),
        "degenerate": X.is_degenerate(),
        "simple": simple,
        "absolutely_simple_checked": False,
    }
    return flags, reason


def _aut_summary(aut: autgrp.AutGroup, G=None) -> dict:
    if G is not None and aut.order == G.n and autgrp.recognize(aut, G, max_order=default_max_order()):
        name = G.name
    else:
        name = autgrp.recognized_name(aut, max_order=default_max_order())
    return {**aut.to_json(), "recognized": name}


def _refused(X: EvolutionAlgebra) -> dict:
    out = {"refused": "not regular"}
    if X.matrix.is_zero():
        out["bound"] = f"Aut = GL({X.n}, {X.field.spec})"
    else:
        out["bound"] = f"Aut <= GL({X.n}, {X.field.spec})"
    return out


def cmd_realize(args) -> int:
    clock = _Clock(args.timings)
    try:
        G = build(args.group)
        F = parse_field(args.field)
    except (GroupError, FieldError) as exc:
        raise UsageError(str(exc)) from None
    S = _parse_gens(args.gens, G)
    try:
        with clock.phase("realize"):
            f = cayley.realize(G, F, S, force=args.force)
    except cayley.CayleyError as exc:
        raise PreconditionError(str(exc)) from None
    with clock.phase("construct"):
        X = cayley.cay_group(G, f)
        flags, reason = _flags(X)
    hyp = {
        "generates": G.generates(S),
        "coprime_pair": len(S) >= 2 and any(
            math.gcd(G.element_order(a), G.element_order(b)) == 1 for i, a in enumerate(S) for b in S[i + 1:]
        ),
        "injective": f.is_injective_on_support(),
        "field_size_ok": F.unit_count() >= 2 * G.n,
    }
    aut_info = None
    ok = flags["regular"] and flags["simple"]
    if flags["regular"]:
        with clock.phase("automorphisms"):
            aut = autgrp.automorphism_group(X)
            aut_info = _aut_summary(aut, G)
        ok = ok and aut.order == G.n and aut_info["recognized"] == G.name
    else:
        aut_info = _refused(X)
    ext_info = None
    if isinstance(F, PrimeField) and flags["regular"]:
        try:
            E = parse_field(args.extension) if args.extension else ExtensionField(F.p, 2)
        except FieldError as exc:
            raise UsageError(str(exc)) from None
        with clock.phase("extension"):
            XE = X.extend_scalars(E)
            XE_f = cayley.cay_group(G, f.extend(E))
            simple_e = XE.is_simple()
            aut_e = autgrp.automorphism_group(XE)
            iso_e = aut_e.order == G.n and autgrp.recognize(aut_e, G, max_order=default_max_order())
        ext_info = {
            "field": E.spec,
            "regular": XE.is_regular(),
            "simple": simple_e,
            "aut_order": aut_e.order,
            "recognized": iso_e,
            "matches_cay_of_extended_weights": XE_f == XE,
        }
        flags["absolutely_simple_checked"] = bool(XE.is_regular() and simple_e and iso_e and XE_f == XE)
        ok = ok and flags["absolutely_simple_checked"]
    report = Report(
        field=F.spec,
        matrix=X.matrix.to_strings(),
        flags=flags,
        determinant=str(X.det),
        group=G.name,
        support=[G.labels[s] for s in S],
        weights=f.to_json(G.name),
        simple_reason=reason,
        hypotheses=hyp,
        aut=aut_info,
        extension=ext_info,
        diagnostics={"cycle_length_gcd": digraph.cycle_length_gcd(X.attached_graph())},
        timings=clock.export(),
    )
    _emit(report.to_json(), args.out)
    if args.algebra_out:
        X.dump(args.algebra_out)
    if args.weights_out:
        Path(args.weights_out).write_text(json.dumps(f.to_json(G.name), indent=2) + "\n")
    hypotheses_hold = hyp["generates"] and hyp["coprime_pair"] and hyp["injective"]
    if hypotheses_hold and not ok:
        print("verification failed", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _load_algebra(path: str) -> EvolutionAlgebra:
    try:
        return EvolutionAlgebra.load(path)
    except (AlgebraError, FieldError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _base_report(X: EvolutionAlgebra) -> Report:
    flags, reason = _flags(X)
    return Report(
        field=X.field.spec,
        matrix=X.matrix.to_strings(),
        flags=flags,
        determinant=str(X.det),
        simple_reason=reason,
        diagnostics={"cycle_length_gcd": digraph.cycle_length_gcd(X.attached_graph())},
    )


def cmd_analyze(args) -> int:
    X = _load_algebra(args.algebra)
    _emit(_base_report(X).to_json(), args.out)
    if args.csv:
        Path(args.csv).write_text(X.matrix.to_csv())
    return EXIT_OK


def cmd_aut(args) -> int:
    X = _load_algebra(args.algebra)
    report = _base_report(X)
    if not X.is_regular():
        report.aut = _refused(X)
        _emit(report.to_json(), args.out)
        print("not regular", file=sys.stderr)
        return EXIT_PRECONDITION
    aut = autgrp.automorphism_group(X)
    report.aut = _aut_summary(aut)
    if not all(preserves_products(X, X, m) for m in aut.elements) or not aut.is_closed():
        _emit(report.to_json(), args.out)
        return EXIT_VERIFY
    _emit(report.to_json(), args.out)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    X = _load_algebra(args.algebra)
    D = X.attached_weighted_graph() if args.weighted else X.attached_graph()
    text = digraph.to_json(D) if args.format == "json" else digraph.to_dot(D)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(sorted(SUITES))}")
    failures = 0
    total = 0
    for name in names:
        for res in run_suite(name):
            total += 1
            failures += not res.passed
            print(res.line())
    print(f"{total - failures}/{total} cases passed")
    return EXIT_VERIFY if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cayvol", description="Cayley evolution algebras realising finite groups as automorphism groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("realize", help="build Cay(f) with Aut(Cay(f)) = G and verify it")
    r.add_argument("--group", required=True, help="group spec, e.g. symmetric:3")
    r.add_argument("--field", required=True, help="gf:p, gf:p^m, gf:p^m:c0,...,1 or rational")
    r.add_argument("--gens", default="auto", help="'auto' or comma-separated element indices")
    r.add_argument("--force", action="store_true", help="skip the |k*| >= 2|G| precondition")
    r.add_argument("--extension", help="extension field for the absolute-simplicity check (default p^2)")
    r.add_argument("--out", help="write the JSON report here instead of stdout")
    r.add_argument("--algebra-out", help="also write the algebra file")
    r.add_argument("--weights-out", help="also write the weight function file")
    r.add_argument("--timings", action="store_true", help="include per-phase wall-clock timings")
    r.set_defaults(func=cmd_realize)

    a = sub.add_parser("analyze", help="regularity, degeneracy and simplicity of an algebra file")
    a.add_argument("algebra")
    a.add_argument("--out")
    a.add_argument("--csv", help="write the structure matrix as CSV")
    a.set_defaults(func=cmd_analyze)

    u = sub.add_parser("aut", help="automorphism group of a regular algebra file")
    u.add_argument("algebra")
    u.add_argument("--out")
    u.set_defaults(func=cmd_aut)

    d = sub.add_parser("export-dot", help="attached graph as DOT (or JSON edge list)")
    d.add_argument("algebra")
    d.add_argument("--weighted", action="store_true")
    d.add_argument("--format", choices=("dot", "json"), default="dot")
    d.add_argument("--out")
    d.set_defaults(func=cmd_export_dot)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help=f"one of all, {', '.join(sorted(SUITES))}")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cayvol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"cayvol: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GroupError, autgrp.AutError) as exc:
        print(f"cayvol: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
