"""Dense exact linear algebra over any :class:`~cayvol.field.Field`."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .field import Field, FieldMismatchError, RationalField, Scalar


class LinAlgError(ValueError):
    pass


class NoSolution(LinAlgError):
    pass


class Underdetermined(LinAlgError):
    pass


class Matrix:
    """Row-major matrix whose entries all lie in one field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise LinAlgError("matrix dimensions must be positive")
        ncols = len(rows[0])
        conv = []
        for r in rows:
            if len(r) != ncols:
                raise LinAlgError("ragged matrix rows")
            out = []
            for x in r:
                if isinstance(x, Scalar):
                    if x.field != field:
                        raise FieldMismatchError(f"entry {x} is not in {field.spec}")
                    out.append(x)
                else:
                    out.append(field(x))
            conv.append(tuple(out))
        self.field = field
        self.rows = tuple(conv)
        self.nrows = len(conv)
        self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, n: int, m: int | None = None) -> "Matrix":
        return cls(field, [[0] * (n if m is None else m) for _ in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"Matrix({self.field.spec}, {[[str(x) for x in r] for r in self.rows]})"

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)])

    def scale(self, lam) -> "Matrix":
        return Matrix(self.field, [[lam * x for x in r] for r in self.rows])

    def map(self, fn, field: Field) -> "Matrix":
        return Matrix(field, [[fn(x) for x in r] for r in self.rows])

    def nonzero_count(self) -> int:
        return sum(1 for r in self.rows for x in r if not x.is_zero())

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def to_csv(self) -> str:
        return "".join(",".join(str(x) for x in r) + "\n" for r in self.rows)


def _gauss_det(M: Matrix) -> Scalar:
    F = M.field
    a = [list(r) for r in M.rows]
    n = M.nrows
    det = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
        if piv is None:
            return F.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for r in range(c + 1, n):
            if a[r][c].is_zero():
                continue
            factor = a[r][c] * inv
            row_c = a[c]
            a[r] = [x - factor * y for x, y in zip(a[r], row_c)]
    return det


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(M: Matrix) -> Scalar:
    if M.nrows != M.ncols:
        raise LinAlgError(f"determinant of a non-square {M.nrows}x{M.ncols} matrix")
    F = M.field
    if isinstance(F, RationalField):
        int_rows = []
        scale = Fraction(1)
        for r in M.rows:
            den = math.lcm(*(x.value.denominator for x in r))
            int_rows.append([int(x.value * den) for x in r])
            scale /= den
        return F(bareiss_det(int_rows) * scale)
    return _gauss_det(M)


def _echelon(a: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form (in place) and pivot columns."""
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and not a[i][c].is_zero():
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(M: Matrix) -> int:
    _, pivots = _echelon([list(r) for r in M.rows], M.ncols)
    return len(pivots)


def solve(M: Matrix, b: Sequence) -> tuple[Scalar, ...]:
    """Unique solution of M x = b.

    Raises :class:`NoSolution` for inconsistent systems and
    :class:`Underdetermined` when the solution is not unique.
    """
    if len(b) != M.nrows:
        raise LinAlgError(f"right-hand side has length {len(b)}, expected {M.nrows}")
    F = M.field
    rhs = [x if isinstance(x, Scalar) else F(x) for x in b]
    for x in rhs:
        if x.field != F:
            raise FieldMismatchError("right-hand side lies in another field")
    aug = [list(r) + [v] for r, v in zip(M.rows, rhs)]
    red, pivots = _echelon(aug, M.ncols + 1)
    if M.ncols in pivots:
        raise NoSolution("inconsistent linear system")
    if len(pivots) < M.ncols:
        raise Underdetermined(f"solution space has dimension {M.ncols - len(pivots)}")
    return tuple(red[i][M.ncols] for i in range(M.ncols))
