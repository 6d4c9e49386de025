"""Automorphism groups of regular evolution algebras.

Every automorphism of a regular evolution algebra is monomial,
phi(b_i) = c_i b_sigma(i), and phi is an automorphism exactly when

    omega_ki * c_k == c_i**2 * omega_sigma(k) sigma(i)      for all i, k.

The search below assigns sigma vertex by vertex along the attached graph
and propagates the scalars: an edge i -> k fixes c_k from c_i. Each
source-most component starts a fresh unknown t, carried symbolically as
``a * t**e`` until some equation pins it down as ``t**d == q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import digraph
from .cayley import AssociativeBasisAlgebra, WeightFunction, cay_group, group_algebra, is_class_function, psi, rho
from .evoalg import EvolutionAlgebra
from .field import RationalField
from .group import FiniteGroup, ISO_MAX_ORDER, identify, isomorphic
from .monomial import MonomialMap, preserves_products

MAX_DIM = 24


class AutError(ValueError):
    pass


class NotRegular(AutError):
    def __init__(self, what: str = "algebra"):
        super().__init__(f"{what} is not regular")
        self.reason = "not regular"


def _search_plan(X: EvolutionAlgebra) -> tuple[list[int], list[int | None]]:
    """Vertex order and BFS parents; roots are taken source component first."""
    D = X.attached_graph()
    comps = list(reversed(digraph.strongly_connected_components(D)))
    order: list[int] = []
    parent: list[int | None] = [None] * X.n
    seen = [False] * X.n
    for comp in comps:
        for root in comp:
            if seen[root]:
                continue
            seen[root] = True
            queue = [root]
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                order.append(u)
                for w in D.succ[u]:
                    if not seen[w]:
                        seen[w] = True
                        parent[w] = u
                        queue.append(w)
    return order, parent


def _signature(X: EvolutionAlgebra, v: int) -> tuple[int, int, bool]:
    rows = X.matrix.rows
    out_deg = sum(1 for k in range(X.n) if rows[k][v])
    in_deg = sum(1 for i in range(X.n) if rows[v][i])
    return out_deg, in_deg, bool(rows[v][v])


def monomial_maps(X: EvolutionAlgebra, Y: EvolutionAlgebra, *, first: bool = False, diagonal: bool = False,
                  max_dim: int = MAX_DIM) -> list[MonomialMap]:
    """All monomial maps phi with phi(u v) = phi(u) phi(v), from X onto Y.

    With ``diagonal`` only sigma = identity is tried. Both algebras must be
    regular; otherwise automorphisms need not be monomial and the search
    refuses.
    """
    if X.n != Y.n:
        raise AutError(f"dimension mismatch: {X.n} vs {Y.n}")
    if X.field != Y.field:
        raise AutError(f"field mismatch: {X.field.spec} vs {Y.field.spec}")
    if X.n > max_dim:
        raise AutError(f"monomial search limited to dimension {max_dim}, got {X.n}")
    if not X.is_regular():
        raise NotRegular("source algebra")
    if not Y.is_regular():
        raise NotRegular("target algebra")
    n = X.n
    F = X.field
    wx = X.matrix.rows
    wy = Y.matrix.rows
    if X.matrix.nonzero_count() != Y.matrix.nonzero_count():
        return []
    sig_x = [_signature(X, v) for v in range(n)]
    sig_y = [_signature(Y, v) for v in range(n)]
    if sorted(sig_x) != sorted(sig_y):
        return []
    y_succ = [[k for k in range(n) if wy[k][i]] for i in range(n)]
    order, parent = _search_plan(X)
    pos = {v: t for t, v in enumerate(order)}
    finite = not isinstance(F, RationalField)
    sigma = [-1] * n
    used = [False] * n
    results: list[MonomialMap] = []
    # scalar state: c[v] = (a, e) meaning a * t**e; e == 0 is concrete
    ONE = F.one

    def substitute(c, tval):
        return [None if x is None else ((x[0] * tval ** x[1], 0) if x[1] else x) for x in c]

    def equations(v, img, c):
        """Constraints between v and every earlier vertex (and v itself).

        Returns None on a structural clash, else (d, q) pairs meaning t**d == q.
        """
        eqs = []
        av, ev = c[v]
        for t in range(pos[v] + 1):
            u = order[t]
            pu = sigma[u] if u != v else img
            au, eu = c[u]
            # edge u -> v: omega_vu c_v = c_u^2 omega'_{sv su}
            x, y = wx[v][u], wy[img][pu]
            if bool(x) != bool(y):
                return None
            if x:
                eqs.append((ev - 2 * eu, au * au * y / (x * av)))
            if u == v:
                continue
            x, y = wx[u][v], wy[pu][img]
            if bool(x) != bool(y):
                return None
            if x:
                eqs.append((eu - 2 * ev, av * av * y / (x * au)))
        return eqs

    def settle(eqs, c):
        """Resolve the pending unknown against eqs; yields consistent scalar states."""
        pending = [(d, q) for d, q in eqs if d]
        for d, q in eqs:
            if not d and q != ONE:
                return
        if not pending:
            yield c
            return
        d0, q0 = pending[0]
        for tval in F.solve_power(d0, q0):
            if all(tval ** d == q for d, q in pending[1:]):
                yield substitute(c, tval)

    def free_unknown(c):
        if all(x is None or x[1] == 0 for x in c):
            yield c
            return
        if not finite:
            raise AutError("scalar unknown left unconstrained over the rationals")
        for tval in F.iter_units():
            yield substitute(c, tval)

    def extend(depth, c) -> bool:
        if depth == n:
            for cc in free_unknown(c):
                results.append(MonomialMap(tuple(sigma), tuple(x[0] for x in cc)))
                if first:
                    return True
            return False
        v = order[depth]
        p = parent[v]
        if p is None:
            states = list(free_unknown(c))
        else:
            states = [c]
        for st in states:
            if diagonal:
                cands = [v]
            elif p is None:
                cands = range(n)
            else:
                cands = y_succ[sigma[p]]
            for img in cands:
                if used[img] or sig_y[img] != sig_x[v]:
                    continue
                cc = list(st)
                if p is None:
                    cc[v] = (ONE, 1)
                else:
                    ap, ep = cc[p]
                    cc[v] = (ap * ap * wy[img][sigma[p]] / wx[v][p], 2 * ep)
                sigma[v] = img
                eqs = equations(v, img, cc)
                if eqs is not None:
                    used[img] = True
                    for nxt in settle(eqs, cc):
                        if extend(depth + 1, nxt):
                            return True
                    used[img] = False
                sigma[v] = -1
        return False

    extend(0, [None] * n)
    results.sort(key=MonomialMap.sort_key)
    return results


@dataclass
class AutGroup:
    """A finite group of monomial automorphisms, sorted, identity first."""

    elements: list[MonomialMap]
    field: object
    generators: list[MonomialMap] = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.elements:
            raise AutError("an automorphism group cannot be empty")
        n = self.elements[0].n
        ident = MonomialMap.identity(n, self.field)
        self.elements = sorted(set(self.elements), key=lambda m: (not m.is_identity(), m.sort_key()))
        if not self.elements[0].is_identity():
            raise AutError("automorphism set lacks the identity")
        if not self.generators:
            self.generators = _greedy_generators(self.elements)
        self._ident = ident

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, phi):
        return phi in set(self.elements)

    def is_closed(self) -> bool:
        elems = set(self.elements)
        return all(a @ b in elems for a in self.elements for b in self.elements) and all(
            a.inverse() in elems for a in self.elements
        )

    def sigma_image(self) -> set[tuple[int, ...]]:
        return {m.sigma for m in self.elements}

    def as_group(self) -> FiniteGroup:
        if not self.is_closed():
            raise AutError("map set is not closed under composition")
        index = {m: i for i, m in enumerate(self.elements)}
        table = [[index[a @ b] for b in self.elements] for a in self.elements]
        labels = [f"phi{i}" for i in range(len(self.elements))]
        return FiniteGroup(table, labels, "Aut")

    def to_json(self) -> dict:
        return {"order": self.order, "generators": [g.to_json() for g in self.generators]}


def _greedy_generators(elements: Sequence[MonomialMap]) -> list[MonomialMap]:
    gens: list[MonomialMap] = []
    span = {elements[0]}
    for m in elements:
        if m in span:
            continue
        gens.append(m)
        queue = list(span)
        while queue:
            x = queue.pop()
            for g in gens:
                y = x @ g
                if y not in span:
                    span.add(y)
                    queue.append(y)
    return gens


def automorphism_group(X: EvolutionAlgebra, max_dim: int = MAX_DIM) -> AutGroup:
    maps = monomial_maps(X, X, max_dim=max_dim)
    return AutGroup(maps, X.field)


def diag_group(X: EvolutionAlgebra) -> AutGroup:
    """Automorphisms fixing every basis line (sigma = identity)."""
    return AutGroup(monomial_maps(X, X, diagonal=True), X.field)


def exactness(X: EvolutionAlgebra, aut: AutGroup | None = None) -> tuple[int, int, int]:
    """(|Diag|, |image in graph automorphisms|, |Aut|); the product of the first two equals the third."""
    aut = aut or automorphism_group(X)
    return diag_group(X).order, len(aut.sigma_image()), aut.order


def recognize(A: AutGroup, G: FiniteGroup, max_order: int = ISO_MAX_ORDER) -> bool:
    if A.order != G.n:
        return False
    return isomorphic(A.as_group(), G, max_order=max_order)


def recognized_name(A: AutGroup, max_order: int = 24) -> str:
    if A.order > max_order:
        return "unrecognized"
    return identify(A.as_group(), max_order=max_order) or "unrecognized"


def algebra_isomorphic(X: EvolutionAlgebra, Y: EvolutionAlgebra) -> bool:
    return bool(monomial_maps(X, Y, first=True))


@dataclass
class SubgroupReport:
    k1: list[MonomialMap]
    k2: list[MonomialMap]
    intersection: list[MonomialMap]
    center_order: int

    def to_json(self) -> dict:
        return {
            "k1_order": len(self.k1),
            "k2_order": len(self.k2),
            "intersection_order": len(self.intersection),
            "center_order": self.center_order,
        }


def subgroup_report(G: FiniteGroup, f: WeightFunction, A: AssociativeBasisAlgebra | None = None) -> SubgroupReport:
    """Left translations K1 and conjugations K2 of Cay(f) for a class function f."""
    if not is_class_function(G, f):
        raise AutError("subgroup report needs a class function")
    A = A or group_algebra(G, f.field)
    X = cay_group(G, f)
    k1 = [psi(A, f, g, verify=False) for g in range(G.n)]
    k2 = sorted({rho(G, f, h, verify=False) for h in range(G.n)}, key=MonomialMap.sort_key)
    for phi in (*k1, *k2):
        if not preserves_products(X, X, phi):
            raise AutError("a translation or conjugation failed to preserve products")
    both = sorted(set(k1) & set(k2), key=MonomialMap.sort_key)
    return SubgroupReport(k1, k2, both, len(G.center()))
