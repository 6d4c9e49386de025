"""Named verification suites driving ``cayvol verify``.

Each suite returns one :class:`CaseResult` per case, sorted by case id.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from . import autgrp, cayley, digraph
from .evoalg import EvolutionAlgebra, NOT_REGULAR, ZERO_SQUARE, vertex_edge_algebra
from .exactla import rank
from .field import ExtensionField, PrimeField, is_prime
from .group import FiniteGroup, build

CATALOG = (
    "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:7", "cyclic:8",
    "product:cyclic:2,cyclic:2", "product:cyclic:2,cyclic:4", "product:cyclic:2,cyclic:2,cyclic:2",
    "symmetric:3", "dihedral:4", "dihedral:5", "dihedral:6", "quaternion:8", "alternating:4",
)

CLASS_FUNCTION_GROUPS = ("symmetric:3", "dihedral:4")


@dataclass
class CaseResult:
    case: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" - {self.detail}" if self.detail else ""
        return f"{status} {self.case} ({self.seconds:.3f}s){extra}"


def smallest_prime_field(order: int) -> PrimeField:
    """GF(p) for the least prime p with p - 1 >= 2 * order."""
    p = 2 * order + 1
    while not is_prime(p):
        p += 1
    return PrimeField(p)


@dataclass
class Realization:
    G: FiniteGroup
    F: PrimeField
    S: list[int]
    f: cayley.WeightFunction
    X: EvolutionAlgebra


def realize_catalog_group(spec: str) -> Realization:
    G = build(spec)
    F = smallest_prime_field(G.n)
    S = G.coprime_generating_set()
    f = cayley.realize(G, F, S)
    return Realization(G, F, S, f, cayley.cay_group(G, f))


def _timed(case: str, fn: Callable[[], tuple[bool, str]]) -> CaseResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing case is a failing case
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CaseResult(case, ok, detail, time.perf_counter() - t0)


def _left_translations(G: FiniteGroup) -> set[tuple[int, ...]]:
    return {tuple(G.mul(h, g) for g in range(G.n)) for h in range(G.n)}


def suite_realization() -> list[CaseResult]:
    out = []
    for spec in CATALOG:
        def case(spec=spec):
            R = realize_catalog_group(spec)
            G, X, f = R.G, R.X, R.f
            problems = []
            if not X.is_regular():
                problems.append("not regular")
            if not X.is_simple():
                problems.append("not simple")
            aut = autgrp.automorphism_group(X)
            if aut.order != G.n:
                problems.append(f"|Aut| = {aut.order}")
            if not autgrp.recognize(aut, G):
                problems.append("not recognised")
            A = cayley.group_algebra(G, R.F)
            psis = [cayley.psi(A, f, g) for g in range(G.n)]
            for g in range(G.n):
                for h in range(G.n):
                    if psis[g] @ psis[h] != psis[G.mul(g, h)]:
                        problems.append("psi is not a homomorphism")
                        break
            if any(psis[g].fixed_points() for g in range(1, G.n)):
                problems.append("psi has fixed points")
            if not set(psis) <= set(aut.elements):
                problems.append("psi outside Aut")
            for lam in (2, 3):
                Y = cayley.cay_group(G, f.scaled(R.F(lam)))
                if Y.det != R.F(lam) ** G.n * X.det:
                    problems.append(f"homogeneity fails for lambda={lam}")
                aut_l = autgrp.automorphism_group(Y)
                if not autgrp.recognize(aut_l, G):
                    problems.append(f"Aut(Cay({lam}f)) not isomorphic to G")
            return not problems, "; ".join(problems) or f"S={R.S} over {R.F.spec}, |Aut|={aut.order}"
        out.append(_timed(f"realization/{spec}", case))
    return sorted(out, key=lambda r: r.case)


def suite_determinant_formula() -> list[CaseResult]:
    out = []
    for spec in CATALOG:
        def case(spec=spec):
            G = build(spec)
            F = smallest_prime_field(G.n)
            bad = []
            for s in range(G.n):
                sign, exp = cayley.monomial_det_formula(G, s)
                for c in (1, 2):
                    f = cayley.WeightFunction.from_support(F, G.n, {s: c})
                    if cayley.cay_group(G, f).det != sign * F(c) ** exp:
                        bad.append(f"{G.labels[s]}, c={c}")
            return not bad, ", ".join(bad)
        out.append(_timed(f"determinant-formula/{spec}", case))
    return sorted(out, key=lambda r: r.case)


def suite_graphs() -> list[CaseResult]:
    out = []
    for spec in CATALOG:
        def case(spec=spec):
            R = realize_catalog_group(spec)
            G, S, f, X = R.G, R.S, R.f, R.X
            problems = []
            if X.attached_graph() != digraph.cayley_graph(G, S):
                problems.append("attached graph differs from Cay(G,S)")
            if X.attached_weighted_graph() != digraph.coloured_cayley_graph(G, S, f):
                problems.append("weighted graph differs from coloured Cay(G,S)")
            auts = digraph.automorphisms(digraph.coloured_cayley_graph(G, S, f))
            if set(auts) != _left_translations(G):
                problems.append(f"coloured graph has {len(auts)} automorphisms")
            return not problems, "; ".join(problems)
        out.append(_timed(f"graphs/{spec}", case))
    return sorted(out, key=lambda r: r.case)


def suite_class_function() -> list[CaseResult]:
    out = []
    for spec in CLASS_FUNCTION_GROUPS:
        def case(spec=spec):
            G = build(spec)
            F = smallest_prime_field(G.n)
            f = cayley.class_function_weights(G, F)
            rep = autgrp.subgroup_report(G, f)
            problems = []
            quotient = G.quotient(G.center())
            if len(rep.k1) != G.n:
                problems.append(f"|K1| = {len(rep.k1)}")
            if len(rep.k2) != quotient.n:
                problems.append(f"|K2| = {len(rep.k2)}")
            if len(rep.intersection) != 1 or not rep.intersection[0].is_identity():
                problems.append("K1 and K2 intersect nontrivially")
            X = cayley.cay_group(G, f)
            detail = f"|K1|={len(rep.k1)} |K2|={len(rep.k2)}"
            if X.is_regular():
                aut = autgrp.automorphism_group(X)
                if autgrp.recognize(aut, G):
                    problems.append("Aut(Cay(f)) is isomorphic to a nonabelian G")
                if not (set(rep.k1) | set(rep.k2)) <= set(aut.elements):
                    problems.append("K1/K2 not inside Aut")
                detail += f" |Aut|={aut.order}"
            return not problems, "; ".join(problems) or detail
        out.append(_timed(f"class-function/{spec}", case))
    return sorted(out, key=lambda r: r.case)


def oracle_algebras() -> list[tuple[str, EvolutionAlgebra]]:
    """Every algebra of dimension <= 8 the pipeline builds, plus fixtures."""
    algs: list[tuple[str, EvolutionAlgebra]] = []
    for spec in CATALOG:
        G = build(spec)
        if G.n > 8:
            continue
        R = realize_catalog_group(spec)
        algs.append((f"realized/{spec}", R.X))
        F = R.F
        algs.append((f"zero/{spec}", cayley.cay_group(G, cayley.WeightFunction(F, [0] * G.n))))
        algs.append((f"ones/{spec}", cayley.cay_group(G, cayley.WeightFunction(F, [1] * G.n))))
        if G.n <= 4:
            for r in range(1, G.n + 1):
                for S in combinations(range(G.n), r):
                    f = cayley.realize(G, F, S)
                    algs.append((f"subset/{spec}/{','.join(map(str, S))}", cayley.cay_group(G, f)))
    for spec in CLASS_FUNCTION_GROUPS:
        G = build(spec)
        f = cayley.class_function_weights(G, smallest_prime_field(G.n))
        algs.append((f"class/{spec}", cayley.cay_group(G, f)))
    F = PrimeField(5)
    algs.append(("block/path3", vertex_edge_algebra(F, 3, [(0, 1), (1, 2)])))
    algs.append(("block/triangle", vertex_edge_algebra(F, 3, [(0, 1), (1, 2), (0, 2)])))
    return algs


def suite_oracles() -> list[CaseResult]:
    out = []
    for name, X in oracle_algebras():
        def case(name=name, X=X):
            simple, reason = X.simplicity()
            problems = []
            if simple and not X.is_regular():
                problems.append("simple but not regular")
            if X.is_regular():
                if simple == X.has_basis_ideal():
                    problems.append(f"criterion says simple={simple}, oracle disagrees")
            if name.startswith("block/") and simple:
                problems.append("block fixture reported simple")
            if name.startswith("zero/"):
                if not X.is_degenerate() or X.is_regular() or simple or reason != ZERO_SQUARE:
                    problems.append("zero weight is not degenerate/non-regular/non-simple")
            if name.startswith("ones/"):
                if X.is_regular() or rank(X.matrix) != 1 or reason != NOT_REGULAR:
                    problems.append("constant weight 1 should give a rank-1 matrix")
            return not problems, "; ".join(problems)
        out.append(_timed(f"oracles/{name}", case))
    return sorted(out, key=lambda r: r.case)


def suite_extension() -> list[CaseResult]:
    def case():
        R = realize_catalog_group("symmetric:3")
        E = ExtensionField(R.F.p, 2)
        XE = R.X.extend_scalars(E)
        fE = R.f.extend(E)
        problems = []
        if cayley.cay_group(R.G, fE) != XE:
            problems.append("Cay(f_E) differs from X tensor E")
        if not XE.is_regular():
            problems.append("extension not regular")
        if not XE.is_simple():
            problems.append("extension not simple")
        aut = autgrp.automorphism_group(XE)
        if aut.order != R.G.n or not autgrp.recognize(aut, R.G):
            problems.append(f"|Aut| over {E.spec} is {aut.order}")
        return not problems, "; ".join(problems) or f"{E.spec}: |Aut|={aut.order}"
    return [_timed("extension/symmetric:3", case)]


SUITES: dict[str, Callable[[], list[CaseResult]]] = {
    "realization": suite_realization,
    "determinant-formula": suite_determinant_formula,
    "class-function": suite_class_function,
    "graphs": suite_graphs,
    "oracles": suite_oracles,
    "extension": suite_extension,
}


def run_suite(name: str) -> list[CaseResult]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}") from None
    return fn()
