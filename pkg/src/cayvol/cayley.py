"""Cayley evolution algebras.

Given an associative algebra A with basis B and a weight f: B -> k, the
Cayley evolution algebra has natural basis B and

    b_i * b_i = sum_j f(b_j) b_i b_j

with the product on the right taken in A. For a group algebra k[G] this is
``g * g = sum_k f(g^-1 k) k``.
"""

from __future__ import annotations

import logging
from typing import Mapping, Sequence

from .evoalg import EvolutionAlgebra
from .field import Field, FieldMismatchError, Scalar, embed
from .group import FiniteGroup
from .monomial import MonomialMap, preserves_products

log = logging.getLogger(__name__)

ASSOC_MAX_DIM = 24


class CayleyError(ValueError):
    pass


class FieldTooSmall(CayleyError):
    pass


class RealizationFailed(CayleyError):
    pass


class WeightFunction:
    """A map from basis indices to field elements; its support plays the role of S."""

    def __init__(self, field: Field, values: Sequence, labels: Sequence[str] | None = None):
        vals = []
        for v in values:
            if isinstance(v, Scalar):
                if v.field != field:
                    raise FieldMismatchError(f"weight {v} is not in {field.spec}")
                vals.append(v)
            else:
                vals.append(field(v))
        self.field = field
        self.values = tuple(vals)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(len(vals)))
        self.support = tuple(i for i, v in enumerate(self.values) if not v.is_zero())

    @classmethod
    def from_support(cls, field: Field, n: int, assignment: Mapping[int, object], labels=None) -> "WeightFunction":
        vals = [field.zero] * n
        for i, v in assignment.items():
            vals[i] = v if isinstance(v, Scalar) else field(v)
        return cls(field, vals, labels)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i: int) -> Scalar:
        return self.values[i]

    def __eq__(self, other):
        return isinstance(other, WeightFunction) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "WeightFunction(" + ", ".join(f"{self.labels[i]}={self.values[i]}" for i in self.support) + ")"

    def is_injective_on_support(self) -> bool:
        vals = [self.values[i] for i in self.support]
        return len(set(vals)) == len(vals)

    def scaled(self, lam) -> "WeightFunction":
        return WeightFunction(self.field, [lam * v for v in self.values], self.labels)

    def extend(self, E: Field) -> "WeightFunction":
        return WeightFunction(E, [embed(self.field, E, v) for v in self.values], self.labels)

    def to_json(self, group_spec: str) -> dict:
        return {
            "group": group_spec,
            "field": self.field.spec,
            "values": {self.labels[i]: str(self.values[i]) for i in self.support},
        }

    @classmethod
    def from_json(cls, data: dict, G: FiniteGroup, F: Field) -> "WeightFunction":
        index = {lab: i for i, lab in enumerate(G.labels)}
        assignment = {}
        for lab, text in data.get("values", {}).items():
            if lab not in index:
                raise CayleyError(f"unknown group element label {lab!r}")
            assignment[index[lab]] = F.parse(str(text))
        return cls.from_support(F, G.n, assignment, G.labels)


class AssociativeBasisAlgebra:
    """Finite-dimensional associative algebra given by basis products.

    ``products[i][j]`` is a sparse coefficient dict for b_i b_j.
    """

    def __init__(self, field: Field, basis: Sequence[str], products, units: Sequence[bool] | None = None,
                 group: FiniteGroup | None = None, check: bool = True):
        self.field = field
        self.basis = tuple(basis)
        self.n = len(self.basis)
        self.products = tuple(
            tuple({k: (c if isinstance(c, Scalar) else field(c)) for k, c in p.items() if c} for p in row)
            for row in products
        )
        if len(self.products) != self.n or any(len(r) != self.n for r in self.products):
            raise CayleyError("product table must be n x n")
        self.units = tuple(units) if units is not None else (False,) * self.n
        self.group = group
        if check:
            self._check_associative()

    def _times_basis(self, vec: dict, k: int, left: bool) -> dict:
        out: dict = {}
        for l, c in vec.items():
            prod = self.products[k][l] if left else self.products[l][k]
            for m, d in prod.items():
                out[m] = out.get(m, self.field.zero) + c * d
        return {m: c for m, c in out.items() if c}

    def _check_associative(self):
        if self.n > ASSOC_MAX_DIM:
            raise CayleyError(f"associativity check limited to dimension {ASSOC_MAX_DIM}")
        for i in range(self.n):
            for j in range(self.n):
                ij = self.products[i][j]
                for k in range(self.n):
                    lhs = self._times_basis(ij, k, left=False)
                    rhs = self._times_basis(self.products[j][k], i, left=True)
                    if lhs != rhs:
                        raise CayleyError(f"product is not associative at ({i}, {j}, {k})")

    def left_translation(self, x: int) -> tuple[int, ...]:
        """sigma with b_x b_i = b_sigma(i); raises unless x B == B."""
        sigma = []
        for i in range(self.n):
            p = self.products[x][i]
            if len(p) != 1 or next(iter(p.values())) != 1:
                raise CayleyError(f"{self.basis[x]} does not map the basis onto itself")
            sigma.append(next(iter(p)))
        if sorted(sigma) != list(range(self.n)):
            raise CayleyError(f"{self.basis[x]} does not map the basis onto itself")
        return tuple(sigma)


def group_algebra(G: FiniteGroup, F: Field) -> AssociativeBasisAlgebra:
    products = [[{G.mul(g, h): F.one} for h in range(G.n)] for g in range(G.n)]
    return AssociativeBasisAlgebra(F, G.labels, products, units=[True] * G.n, group=G, check=G.n <= ASSOC_MAX_DIM)


def cay(A: AssociativeBasisAlgebra, f: WeightFunction) -> EvolutionAlgebra:
    """The Cayley evolution algebra of f over A."""
    if f.field != A.field:
        raise FieldMismatchError("weight function and algebra use different fields")
    if len(f) != A.n:
        raise CayleyError(f"weight function has {len(f)} values for a {A.n}-dimensional algebra")
    F = A.field
    cols = []
    for i in range(A.n):
        col = [F.zero] * A.n
        for j in f.support:
            for k, c in A.products[i][j].items():
                col[k] = col[k] + f[j] * c
        cols.append(col)
    rows = [[cols[i][k] for i in range(A.n)] for k in range(A.n)]
    return EvolutionAlgebra(F, rows, A.basis)


def cay_group(G: FiniteGroup, f: WeightFunction) -> EvolutionAlgebra:
    """cay() specialised to k[G]: structure constant at (k, g) is f(g^-1 k)."""
    if len(f) != G.n:
        raise CayleyError(f"weight function has {len(f)} values for a group of order {G.n}")
    rows = [[f[G.mul(G.inv(g), k)] for g in range(G.n)] for k in range(G.n)]
    return EvolutionAlgebra(f.field, rows, G.labels)


def check_field_size(G: FiniteGroup, F: Field) -> None:
    units = F.unit_count()
    if units < 2 * G.n:
        raise FieldTooSmall(f"field too small: |k*| = {units} < {2 * G.n}")


def realize(G: FiniteGroup, F: Field, S: Sequence[int], force: bool = False) -> WeightFunction:
    """A weight f with supp(f) = S, f injective on S and Cay(f) regular.

    The support (ascending) gets the first |S|-1 canonical units; the last
    support element scans the remaining units until the determinant is
    nonzero. At most |G| candidates can fail.
    """
    S = sorted(set(S))
    if not S:
        raise CayleyError("support must be nonempty")
    if any(not 0 <= s < G.n for s in S):
        raise CayleyError("support element out of range")
    if not force:
        check_field_size(G, F)
    fixed = F.units(len(S) - 1) if len(S) > 1 else []
    base = dict(zip(S[:-1], fixed))
    tried = 0
    bound = G.n + 1
    units = F.iter_units()
    for _ in fixed:
        next(units)
    for cand in units:
        tried += 1
        f = WeightFunction.from_support(F, G.n, {**base, S[-1]: cand}, G.labels)
        if cay_group(G, f).is_regular():
            log.debug("realized %s over %s after %d candidates", G.name, F.spec, tried)
            return f
        if tried >= bound:
            break
    raise RealizationFailed(f"no regular weight found after {tried} candidates for the last support element")


def monomial_det_formula(G: FiniteGroup, s: int) -> tuple[int, int]:
    """(sign, exponent) with det M(Cay(c * delta_s)) = sign * c**exponent."""
    o = G.element_order(s)
    sign = -1 if ((o + 1) * (G.n // o)) % 2 else 1
    return sign, G.n


def psi(A: AssociativeBasisAlgebra, f: WeightFunction, x: int, verify: bool = True) -> MonomialMap:
    """Left multiplication by the basis unit b_x, as an automorphism of Cay(f)."""
    if not A.units[x]:
        raise CayleyError(f"{A.basis[x]} is not flagged as a unit")
    phi = MonomialMap.permutation(A.left_translation(x), A.field)
    if verify:
        X = cay(A, f)
        if not preserves_products(X, X, phi):
            raise CayleyError(f"left multiplication by {A.basis[x]} is not an automorphism")
    return phi


def make_class_function(G: FiniteGroup, F: Field, class_values: Sequence) -> WeightFunction:
    classes = G.conjugacy_classes()
    if len(class_values) != len(classes):
        raise CayleyError(f"expected {len(classes)} class values, got {len(class_values)}")
    vals = [F.zero] * G.n
    for cls, v in zip(classes, class_values):
        for g in cls:
            vals[g] = v if isinstance(v, Scalar) else F(v)
    return WeightFunction(F, vals, G.labels)


def is_class_function(G: FiniteGroup, f: WeightFunction) -> bool:
    return all(f[G.conjugate(g, k)] == f[k] for g in range(G.n) for k in range(G.n))


def class_function_weights(G: FiniteGroup, F: Field) -> WeightFunction:
    """Class function with pairwise distinct nonzero class values.

    The first c-1 classes get the first canonical units; the last class scans
    the remaining units for a regular Cay(f) and keeps the first candidate
    when none is regular.
    """
    c = len(G.conjugacy_classes())
    if F.unit_count() < c:
        raise FieldTooSmall(f"field too small: |k*| = {F.unit_count()} < {c} classes")
    fixed = F.units(c - 1) if c > 1 else []
    units = F.iter_units()
    for _ in fixed:
        next(units)
    first = None
    for k, cand in enumerate(units):
        f = make_class_function(G, F, [*fixed, cand])
        if first is None:
            first = f
        if cay_group(G, f).is_regular():
            return f
        if k >= 4 * G.n:
            break
    return first


def rho(G: FiniteGroup, f: WeightFunction, h: int, verify: bool = True) -> MonomialMap:
    """Conjugation g -> h g h^-1 as an automorphism of Cay(f); f must be a class function."""
    if not is_class_function(G, f):
        raise CayleyError("conjugation automorphisms need a class function")
    phi = MonomialMap.permutation([G.conjugate(h, g) for g in range(G.n)], f.field)
    if verify:
        X = cay_group(G, f)
        if not preserves_products(X, X, phi):
            raise CayleyError(f"conjugation by {G.labels[h]} is not an automorphism")
    return phi
