"""Monomial linear maps b_i -> c_i b_sigma(i)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .field import Scalar


@dataclass(frozen=True)
class MonomialMap:
    sigma: tuple[int, ...]
    scalars: tuple[Scalar, ...]

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(n)):
            raise ValueError(f"{self.sigma} is not a permutation")
        if len(self.scalars) != n:
            raise ValueError("one scalar per basis element is required")
        if any(c.is_zero() for c in self.scalars):
            raise ValueError("monomial scalars must be nonzero")

    @classmethod
    def permutation(cls, sigma: Sequence[int], field) -> "MonomialMap":
        return cls(tuple(sigma), tuple(field.one for _ in sigma))

    @classmethod
    def identity(cls, n: int, field) -> "MonomialMap":
        return cls.permutation(range(n), field)

    @property
    def n(self) -> int:
        return len(self.sigma)

    def __call__(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        out = [None] * self.n
        for i, (s, c) in enumerate(zip(self.sigma, self.scalars)):
            out[s] = c * vec[i]
        return tuple(out)

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """self after other."""
        sigma = tuple(self.sigma[other.sigma[i]] for i in range(self.n))
        scalars = tuple(other.scalars[i] * self.scalars[other.sigma[i]] for i in range(self.n))
        return MonomialMap(sigma, scalars)

    def __matmul__(self, other: "MonomialMap") -> "MonomialMap":
        return self.compose(other)

    def inverse(self) -> "MonomialMap":
        sigma = [0] * self.n
        scalars = [None] * self.n
        for i, (s, c) in enumerate(zip(self.sigma, self.scalars)):
            sigma[s] = i
            scalars[s] = c.inverse()
        return MonomialMap(tuple(sigma), tuple(scalars))

    def is_identity(self) -> bool:
        return all(s == i for i, s in enumerate(self.sigma)) and all(c == 1 for c in self.scalars)

    def is_diagonal(self) -> bool:
        return all(s == i for i, s in enumerate(self.sigma))

    def fixed_points(self) -> list[int]:
        """Basis indices i with phi(b_i) = b_i."""
        return [i for i, (s, c) in enumerate(zip(self.sigma, self.scalars)) if s == i and c == 1]

    def sort_key(self):
        return self.sigma, tuple(c.field.sort_key(c.value) for c in self.scalars)

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma), "scalars": [str(c) for c in self.scalars]}


def preserves_products(X, Y, phi: MonomialMap) -> bool:
    """phi(u v) == phi(u) phi(v) for every pair of basis elements of X, products in Y."""
    if X.n != phi.n or Y.n != phi.n:
        return False
    for i in range(X.n):
        bi = X.basis_vector(i)
        for j in range(i, X.n):
            bj = X.basis_vector(j)
            if phi(X.multiply(bi, bj)) != Y.multiply(phi(bi), phi(bj)):
                return False
    return True
