"""Finite groups as Cayley tables.

Elements are the indices ``0..n-1`` with the identity at index 0; ``table[i][j]``
is the index of ``g_i * g_j``.
"""

from __future__ import annotations

import json
import math
import os
from collections import Counter, deque
from functools import cached_property
from itertools import combinations, permutations, product
from pathlib import Path
from typing import Sequence

DEFAULT_MAX_ORDER = 24
ISO_MAX_ORDER = 16
ASSOC_CHECK_LIMIT = 64


class GroupError(ValueError):
    pass


def default_max_order() -> int:
    env = os.environ.get("CAYVOL_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise GroupError(f"CAYVOL_MAX_ORDER must be an integer, got {env!r}") from None
    return DEFAULT_MAX_ORDER


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, name: str = ""):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.n = len(self.table)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.n))
        self.name = name
        self._validate()

    def _validate(self):
        n = self.n
        if n == 0:
            raise GroupError("a group needs at least one element")
        if len(self.labels) != n:
            raise GroupError(f"expected {n} labels, got {len(self.labels)}")
        full = set(range(n))
        for i, row in enumerate(self.table):
            if len(row) != n or set(row) != full:
                raise GroupError(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if {self.table[i][j] for i in range(n)} != full:
                raise GroupError(f"column {j} is not a permutation of 0..{n - 1}")
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise GroupError("index 0 is not the identity")
        if n <= ASSOC_CHECK_LIMIT:
            t = self.table
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    ab = ta[b]
                    tb = t[b]
                    tab = t[ab]
                    for c in range(n):
                        if tab[c] != ta[tb[c]]:
                            raise GroupError(f"associativity fails at ({a}, {b}, {c})")

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.n)})"

    @property
    def order(self) -> int:
        return self.n

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for a in range(self.n):
            inv[a] = self.table[a].index(0)
        return tuple(inv)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        x = 0
        for _ in range(k):
            x = self.table[x][a]
        return x

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = []
        for g in range(self.n):
            x, t = g, 1
            while x != 0:
                x = self.table[x][g]
                t += 1
            out.append(t)
        return tuple(out)

    def element_order(self, g: int) -> int:
        return self.orders[g]

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.n) for b in range(a + 1, self.n))

    def center(self) -> list[int]:
        t = self.table
        return [z for z in range(self.n) if all(t[z][g] == t[g][z] for g in range(self.n))]

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.table[self.table[h][g]][self.inv(h)]

    def conjugacy_classes(self) -> list[list[int]]:
        """Classes ordered by their smallest element; the identity class comes first."""
        seen = set()
        classes = []
        for g in range(self.n):
            if g in seen:
                continue
            cls = sorted({self.conjugate(h, g) for h in range(self.n)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def generated_subgroup(self, S) -> list[int]:
        gens = sorted(set(S))
        reached = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.table[x][s]
                if y not in reached:
                    reached.add(y)
                    queue.append(y)
        return sorted(reached)

    def generates(self, S) -> bool:
        S = list(S)
        if not S:
            raise GroupError("generating set must be nonempty")
        return len(self.generated_subgroup(S)) == self.n

    def is_subgroup(self, H) -> bool:
        H = set(H)
        if 0 not in H:
            return False
        return all(self.table[a][b] in H for a in H for b in H)

    def is_normal(self, N) -> bool:
        N = set(N)
        return self.is_subgroup(N) and all(self.conjugate(g, x) in N for g in range(self.n) for x in N)

    def coprime_generating_set(self) -> list[int]:
        """Smallest generating set holding two elements of coprime order.

        Sets avoiding the identity are preferred at equal size; ties are broken
        lexicographically on sorted index tuples.  The identity has order 1,
        so ``G`` itself always qualifies.
        """
        n = self.n
        if n == 1:
            return [0]
        o = self.orders
        rest = range(1, n)
        for k in range(2, n + 1):
            for S in combinations(rest, k):
                if any(math.gcd(o[a], o[b]) == 1 for a, b in combinations(S, 2)) and self.generates(S):
                    return list(S)
            for S in combinations(rest, k - 1):
                if self.generates(S):
                    return [0, *S]
        return list(range(n))

    def minimal_generating_set(self) -> list[int]:
        if self.n == 1:
            return []
        for k in range(1, self.n):
            for S in combinations(range(1, self.n), k):
                if self.generates(S):
                    return list(S)
        return list(range(1, self.n))

    def quotient(self, N) -> "FiniteGroup":
        N = sorted(set(N))
        if not self.is_subgroup(N):
            raise GroupError("N is not a subgroup")
        if not self.is_normal(N):
            raise GroupError("N is not a normal subgroup")
        coset_of = {}
        reps = []
        for g in range(self.n):
            if g in coset_of:
                continue
            idx = len(reps)
            reps.append(g)
            for x in N:
                coset_of[self.table[g][x]] = idx
        table = [[coset_of[self.table[a][b]] for b in reps] for a in reps]
        labels = [f"[{self.labels[r]}]" for r in reps]
        name = f"{self.name}/N" if self.name else ""
        return FiniteGroup(table, labels, name)

    def order_profile(self) -> Counter:
        return Counter(self.orders)

    def to_json(self) -> dict:
        return {"order": self.n, "table": [list(r) for r in self.table], "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "FiniteGroup":
        try:
            table = data["table"]
        except (KeyError, TypeError) as exc:
            raise GroupError("group file needs a 'table' entry") from exc
        if "order" in data and data["order"] != len(table):
            raise GroupError(f"declared order {data['order']} does not match table size {len(table)}")
        return cls(table, data.get("labels"), name)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1", "g"] + [f"g^{i}" for i in range(2, n)]
    return FiniteGroup(table, labels[:n], f"cyclic:{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; r^i s^j sits at index i + n*j."""
    if n < 1:
        raise GroupError("dihedral parameter must be positive")

    def mul(a, b):
        i, j = a % n, a // n
        k, l = b % n, b // n
        rot = (i + (k if j == 0 else -k)) % n
        return rot + n * ((j + l) % 2)

    size = 2 * n
    table = [[mul(a, b) for b in range(size)] for a in range(size)]
    labels = []
    for a in range(size):
        i, j = a % n, a // n
        r = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        s = "s" if j else ""
        labels.append((r + s) or "1")
    return FiniteGroup(table, labels, f"dihedral:{n}")


def _cycle_label(p: tuple[int, ...]) -> str:
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "1"


def _perm_group(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(len(q)))] for q in perms] for p in perms]
    return FiniteGroup(table, [_cycle_label(p) for p in perms], name)


def _is_even(p: tuple[int, ...]) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2 == 0


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("symmetric degree must be positive")
    return _perm_group(list(permutations(range(n))), f"symmetric:{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("alternating degree must be positive")
    return _perm_group([p for p in permutations(range(n)) if _is_even(p)], f"alternating:{n}")


def quaternion() -> FiniteGroup:
    units = ["1", "i", "j", "k"]
    # unit products as (sign, unit)
    rule = {
        ("1", u): (1, u) for u in units
    }
    rule.update({(u, "1"): (1, u) for u in units})
    rule.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elems = [(s, u) for u in units for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = rule[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        table.append(row)
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return FiniteGroup(table, labels, "quaternion:8")


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Product with the first factor most significant in the index order."""
    if not groups:
        raise GroupError("direct product needs at least one factor")
    elems = list(product(*(range(G.n) for G in groups)))
    index = {e: i for i, e in enumerate(elems)}
    table = [
        [index[tuple(G.table[a][b] for G, a, b in zip(groups, x, y))] for y in elems]
        for x in elems
    ]
    labels = ["(" + ",".join(G.labels[a] for G, a in zip(groups, x)) + ")" for x in elems]
    name = "product:" + ",".join(G.name for G in groups)
    return FiniteGroup(table, labels, name)


def _split_product_args(body: str) -> list[str]:
    """Split ``cyclic:2,dihedral:3`` into factor specs."""
    parts = [p.strip() for p in body.split(",") if p.strip()]
    if not parts:
        raise GroupError("product needs factors")
    return parts


def _preset_order(kind: str, arg: str) -> int:
    try:
        n = int(arg)
    except ValueError:
        raise GroupError(f"bad parameter {arg!r} for {kind}") from None
    if kind == "cyclic":
        return n
    if kind == "dihedral":
        return 2 * n
    if kind == "symmetric":
        return math.factorial(n)
    if kind == "alternating":
        return max(1, math.factorial(n) // 2)
    if kind == "quaternion":
        if n != 8:
            raise GroupError("only quaternion:8 is available")
        return 8
    raise GroupError(f"unknown group kind {kind!r}")


_BUILDERS = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "alternating": alternating,
    "quaternion": lambda n: quaternion(),
}


def build(spec: str, max_order: int | None = None) -> FiniteGroup:
    """Build a group from ``cyclic:n``, ``dihedral:n``, ``symmetric:n``,
    ``alternating:n``, ``quaternion:8``, ``product:<spec>,<spec>[,...]`` or
    ``table:<file>``."""
    cap = default_max_order() if max_order is None else max_order
    spec = spec.strip()
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise GroupError(f"cannot parse group spec {spec!r}")
    if kind == "table":
        try:
            data = json.loads(Path(arg).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise GroupError(f"cannot read group table {arg!r}: {exc}") from exc
        size = len(data.get("table", [])) if isinstance(data, dict) else 0
        if size > cap:
            raise GroupError(f"group order {size} exceeds cap {cap}")
        return FiniteGroup.from_json(data, name=spec)
    if kind == "product":
        factors = _split_product_args(arg)
        size = 1
        for f in factors:
            k, s, a = f.partition(":")
            if not s or k in ("product", "table"):
                raise GroupError(f"unsupported product factor {f!r}")
            size *= _preset_order(k, a)
        if size > cap:
            raise GroupError(f"group order {size} exceeds cap {cap}")
        G = direct_product(*(build(f, cap) for f in factors))
        G.name = spec
        return G
    size = _preset_order(kind, arg)
    if size > cap:
        raise GroupError(f"group order {size} exceeds cap {cap}")
    G = _BUILDERS[kind](int(arg))
    G.name = spec
    return G


def isomorphism(G1: FiniteGroup, G2: FiniteGroup, max_order: int = ISO_MAX_ORDER) -> list[int] | None:
    """An isomorphism G1 -> G2 as an image list, or None.

    Maps a minimal generating set of G1 onto order-compatible tuples of G2
    and extends along words; each candidate is checked elementwise.
    """
    if G1.n != G2.n:
        return None
    if G1.n > max_order:
        raise GroupError(f"isomorphism test limited to order {max_order}, got {G1.n}")
    if G1.order_profile() != G2.order_profile() or G1.is_abelian != G2.is_abelian:
        return None
    if len(G1.center()) != len(G2.center()) or len(G1.conjugacy_classes()) != len(G2.conjugacy_classes()):
        return None
    gens = G1.minimal_generating_set()
    if not gens:
        return [0]
    pools = [[h for h in range(G2.n) if G2.orders[h] == G1.orders[g]] for g in gens]
    for images in product(*pools):
        if len(set(images)) != len(images):
            continue
        phi = _extend(G1, G2, gens, images)
        if phi is not None:
            return phi
    return None


def _extend(G1, G2, gens, images):
    phi = [-1] * G1.n
    phi[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, images):
            y = G1.table[x][s]
            target = G2.table[phi[x]][t]
            if phi[y] == -1:
                phi[y] = target
                queue.append(y)
            elif phi[y] != target:
                return None
    if -1 in phi or len(set(phi)) != G1.n:
        return None
    for a in range(G1.n):
        for b in range(G1.n):
            if phi[G1.table[a][b]] != G2.table[phi[a]][phi[b]]:
                return None
    return phi


def isomorphic(G1: FiniteGroup, G2: FiniteGroup, max_order: int = ISO_MAX_ORDER) -> bool:
    return isomorphism(G1, G2, max_order) is not None


CATALOG = (
    "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "product:cyclic:2,cyclic:2",
    "cyclic:5", "cyclic:6", "symmetric:3", "cyclic:7", "cyclic:8",
    "product:cyclic:2,cyclic:4", "product:cyclic:2,cyclic:2,cyclic:2", "dihedral:4",
    "quaternion:8", "cyclic:9", "product:cyclic:3,cyclic:3", "cyclic:10", "dihedral:5",
    "cyclic:11", "cyclic:12", "product:cyclic:2,cyclic:6", "dihedral:6", "alternating:4",
    "cyclic:13", "cyclic:14", "dihedral:7", "cyclic:15", "cyclic:16",
    "product:cyclic:2,cyclic:8", "product:cyclic:4,cyclic:4", "dihedral:8",
    "product:cyclic:2,dihedral:4", "product:cyclic:2,quaternion:8",
    "product:cyclic:2,cyclic:2,cyclic:4", "product:cyclic:2,cyclic:2,cyclic:2,cyclic:2",
)


def identify(G: FiniteGroup, max_order: int = ISO_MAX_ORDER) -> str | None:
    """Name of the first catalogue group isomorphic to G, if any."""
    if G.n > max_order:
        return None
    for spec in CATALOG:
        H = build(spec, max_order=max(max_order, DEFAULT_MAX_ORDER))
        if H.n == G.n and isomorphic(G, H, max_order):
            return spec
    return None
