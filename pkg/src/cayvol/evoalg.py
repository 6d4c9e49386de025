"""Evolution algebras with a fixed natural basis.

The structure matrix is stored column-wise in the usual convention:
``matrix[k][i]`` is the coefficient of ``b_k`` in ``b_i * b_i``, and distinct
basis elements multiply to zero.
"""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path
from typing import Sequence

from . import digraph
from .exactla import Matrix, determinant
from .field import Field, FieldMismatchError, Scalar, embed, parse_field

NOT_REGULAR = "not regular"
ZERO_SQUARE = "X^2 = 0"
REDUCIBLE = "reducible"

ORACLE_MAX_DIM = 16


class AlgebraError(ValueError):
    pass


class EvolutionAlgebra:
    def __init__(self, field: Field, matrix, basis: Sequence[str] | None = None):
        M = matrix if isinstance(matrix, Matrix) else Matrix(field, matrix)
        if M.field != field:
            raise FieldMismatchError("structure matrix lies in another field")
        if M.nrows != M.ncols:
            raise AlgebraError("structure matrix must be square")
        self.field = field
        self.matrix = M
        self.n = M.nrows
        self.basis = tuple(basis) if basis is not None else tuple(f"b{i + 1}" for i in range(self.n))
        if len(self.basis) != self.n:
            raise AlgebraError(f"basis has {len(self.basis)} labels for dimension {self.n}")
        self._det = None

    def __eq__(self, other):
        return isinstance(other, EvolutionAlgebra) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"EvolutionAlgebra(dim={self.n}, field={self.field.spec})"

    @property
    def dim(self) -> int:
        return self.n

    def omega(self, k: int, i: int) -> Scalar:
        return self.matrix.rows[k][i]

    def square(self, i: int) -> tuple[Scalar, ...]:
        """b_i * b_i as a coefficient vector."""
        return self.matrix.column(i)

    def basis_vector(self, i: int) -> tuple[Scalar, ...]:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.n))

    def element(self, coeffs) -> tuple[Scalar, ...]:
        if len(coeffs) != self.n:
            raise AlgebraError(f"element needs {self.n} coordinates, got {len(coeffs)}")
        out = []
        for c in coeffs:
            if isinstance(c, Scalar):
                if c.field != self.field:
                    raise FieldMismatchError("coordinate lies in another field")
                out.append(c)
            else:
                out.append(self.field(c))
        return tuple(out)

    def multiply(self, u, v) -> tuple[Scalar, ...]:
        """u v = sum_i u_i v_i (b_i * b_i)."""
        u, v = self.element(u), self.element(v)
        acc = [self.field.zero] * self.n
        rows = self.matrix.rows
        for i in range(self.n):
            c = u[i] * v[i]
            if c.is_zero():
                continue
            for k in range(self.n):
                w = rows[k][i]
                if not w.is_zero():
                    acc[k] = acc[k] + c * w
        return tuple(acc)

    @property
    def det(self) -> Scalar:
        if self._det is None:
            self._det = determinant(self.matrix)
        return self._det

    def is_regular(self) -> bool:
        return not self.det.is_zero()

    def is_degenerate(self) -> bool:
        return any(all(x.is_zero() for x in self.square(i)) for i in range(self.n))

    def simplicity(self) -> tuple[bool, str | None]:
        """(simple, reason). Reason is one of ``X^2 = 0``, ``not regular``, ``reducible``."""
        if self.matrix.is_zero():
            return False, ZERO_SQUARE
        if not self.is_regular():
            return False, NOT_REGULAR
        if not digraph.is_strongly_connected(self.attached_graph()):
            return False, REDUCIBLE
        return True, None

    def is_simple(self) -> bool:
        return self.simplicity()[0]

    def basis_ideal_oracle(self, T) -> bool:
        """Whether span{b_i : i in T} is an ideal."""
        T = set(T)
        if not T or len(T) >= self.n or not T <= set(range(self.n)):
            raise AlgebraError("T must be a nonempty proper subset of the basis")
        rows = self.matrix.rows
        return all(rows[k][i].is_zero() for i in T for k in range(self.n) if k not in T)

    def has_basis_ideal(self) -> bool:
        """Exhaustive search over basis subsets; exponential in the dimension."""
        if self.n > ORACLE_MAX_DIM:
            raise AlgebraError(f"exhaustive ideal search limited to dimension {ORACLE_MAX_DIM}")
        return any(
            self.basis_ideal_oracle(T) for r in range(1, self.n) for T in combinations(range(self.n), r)
        )

    def attached_graph(self) -> digraph.Digraph:
        """Edge (i, k) whenever b_k occurs in b_i * b_i."""
        rows = self.matrix.rows
        edges = [(i, k) for k in range(self.n) for i in range(self.n) if not rows[k][i].is_zero()]
        return digraph.Digraph(self.n, edges, self.basis)

    def attached_weighted_graph(self) -> digraph.WeightedDigraph:
        rows = self.matrix.rows
        weight = {(i, k): rows[k][i] for k in range(self.n) for i in range(self.n) if not rows[k][i].is_zero()}
        return digraph.WeightedDigraph(self.n, weight, self.basis)

    def scaled(self, lam) -> "EvolutionAlgebra":
        return EvolutionAlgebra(self.field, self.matrix.scale(lam), self.basis)

    def extend_scalars(self, E: Field) -> "EvolutionAlgebra":
        """X tensor E for an extension E of a prime base field."""
        M = self.matrix.map(lambda x: embed(self.field, E, x), E)
        return EvolutionAlgebra(E, M, self.basis)

    def to_json(self) -> dict:
        return {"field": self.field.spec, "basis": list(self.basis), "matrix": self.matrix.to_strings()}

    @classmethod
    def from_json(cls, data: dict) -> "EvolutionAlgebra":
        try:
            F = parse_field(data["field"])
            rows = data["matrix"]
        except (KeyError, TypeError) as exc:
            raise AlgebraError("algebra file needs 'field' and 'matrix' entries") from exc
        if not isinstance(rows, list) or not rows:
            raise AlgebraError("matrix must be a nonempty list of rows")
        M = [[F.parse(str(x)) for x in r] for r in rows]
        return cls(F, M, data.get("basis"))

    @classmethod
    def load(cls, path) -> "EvolutionAlgebra":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise AlgebraError(f"cannot read algebra file {path}: {exc}") from exc
        return cls.from_json(data)

    def dump(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")


def zero_algebra(field: Field, n: int) -> EvolutionAlgebra:
    return EvolutionAlgebra(field, Matrix.zeros(field, n))


def vertex_edge_algebra(field: Field, n_vertices: int, edges: Sequence[tuple[int, int]]) -> EvolutionAlgebra:
    """Block-triangular algebra of a simple graph: b_v^2 = b_v and
    b_e^2 = b_u + b_w + b_e for an edge e = {u, w}.

    Its structure matrix is ``[[I_r, *], [0, I_s]]``; the vertex span is an
    ideal, so the algebra is regular but not simple when r, s > 0.
    """
    r, s = n_vertices, len(edges)
    n = r + s
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
    for e, (u, w) in enumerate(edges):
        if u == w or not (0 <= u < r and 0 <= w < r):
            raise AlgebraError(f"bad edge {(u, w)}")
        rows[u][r + e] = 1
        rows[w][r + e] = 1
    basis = [f"v{v}" for v in range(r)] + [f"e{u}{w}" for u, w in edges]
    return EvolutionAlgebra(field, rows, basis)
