"""Directed graphs, edge-weighted digraphs and Cayley graphs.

Loops are allowed. A :class:`WeightedDigraph` carries a nonzero weight on
every edge; weights double as edge colours.
"""

from __future__ import annotations

import json
import math
from collections import Counter, deque
from functools import cached_property
from typing import Iterable, Mapping, Sequence

MAX_AUT_VERTICES = 24


class GraphError(ValueError):
    pass


class Digraph:
    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None):
        self.n = n
        self.edges = frozenset((int(i), int(j)) for i, j in edges)
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i}, {j}) out of range for {n} vertices")
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={len(self.edges)})"

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for i, j in self.edges:
            out[i].append(j)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        inc = [[] for _ in range(self.n)]
        for i, j in self.edges:
            inc[j].append(i)
        return tuple(tuple(sorted(x)) for x in inc)

    def colour(self, i: int, j: int):
        """Edge colour, or None when uncoloured or absent."""
        return None

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


class WeightedDigraph(Digraph):
    def __init__(self, n: int, weight: Mapping[tuple[int, int], object], labels: Sequence[str] | None = None,
                 faithful: bool | None = None):
        for e, w in weight.items():
            if not w:
                raise GraphError(f"edge {e} has zero weight")
        super().__init__(n, weight.keys(), labels)
        self.weight = {(int(i), int(j)): w for (i, j), w in weight.items()}
        self.faithful = faithful

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.weight == other.weight

    def __hash__(self):
        return hash((self.n, frozenset(self.weight.items())))

    def colour(self, i: int, j: int):
        return self.weight.get((i, j))


def cayley_graph(G, S: Iterable[int]) -> Digraph:
    """Edges (g, g*s) for every g in G and s in S."""
    S = sorted(set(S))
    if not S:
        raise GraphError("connection set must be nonempty")
    edges = [(g, G.mul(g, s)) for g in range(G.n) for s in S]
    return Digraph(G.n, edges, G.labels)


def coloured_cayley_graph(G, S: Iterable[int], f) -> WeightedDigraph:
    """Cayley graph with edge (g, g*s) weighted by f(s).

    ``f`` is indexable by element index. ``faithful`` records whether f is
    injective on S, i.e. whether distinct generators get distinct colours.
    """
    S = sorted(set(S))
    if not S:
        raise GraphError("connection set must be nonempty")
    for s in S:
        if not f[s]:
            raise GraphError(f"weight vanishes on connection element {G.labels[s]}")
    weight = {(g, G.mul(g, s)): f[s] for g in range(G.n) for s in S}
    faithful = len({f[s] for s in S}) == len(S)
    return WeightedDigraph(G.n, weight, G.labels, faithful=faithful)


def strongly_connected_components(D: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out in reverse topological order."""
    index = [-1] * D.n
    low = [0] * D.n
    on_stack = [False] * D.n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    succ = D.succ
    for root in range(D.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(succ[v]):
                work[-1] = (v, pos + 1)
                w = succ[v][pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def is_strongly_connected(D: Digraph) -> bool:
    return len(strongly_connected_components(D)) == 1


def cycle_length_gcd(D: Digraph) -> int | None:
    """gcd of all directed cycle lengths; None if the graph is acyclic.

    Within a strongly connected component the gcd equals the gcd of
    ``level(u) + 1 - level(v)`` over its edges for any BFS levelling.
    """
    total = 0
    for comp in strongly_connected_components(D):
        members = set(comp)
        root = comp[0]
        level = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in D.succ[u]:
                if v in members and v not in level:
                    level[v] = level[u] + 1
                    queue.append(v)
        for u in comp:
            for v in D.succ[u]:
                if v in members:
                    total = math.gcd(total, level[u] + 1 - level[v])
    return total or None


def _refine(D: Digraph, vertex_colours: Sequence | None) -> list[int]:
    """Colour refinement; returns a stable class id per vertex."""
    def key(x):
        return repr(x)

    init = [
        (key(vertex_colours[v]) if vertex_colours is not None else "", key(D.colour(v, v)) if (v, v) in D.edges else "-")
        for v in range(D.n)
    ]
    ids = {k: i for i, k in enumerate(sorted(set(init)))}
    cls = [ids[k] for k in init]
    while True:
        sig = []
        for v in range(D.n):
            out = sorted((key(D.colour(v, w)), cls[w]) for w in D.succ[v])
            inc = sorted((key(D.colour(w, v)), cls[w]) for w in D.pred[v])
            sig.append((cls[v], tuple(out), tuple(inc)))
        ids = {k: i for i, k in enumerate(sorted(set(sig)))}
        new = [ids[k] for k in sig]
        if len(ids) == len(set(cls)):
            return new
        cls = new


def _search_order(D: Digraph, cls: list[int]) -> list[int]:
    """Vertices ordered so each one, where possible, touches an earlier one."""
    sizes = Counter(cls)
    order: list[int] = []
    placed = [False] * D.n
    while len(order) < D.n:
        start = min((v for v in range(D.n) if not placed[v]), key=lambda v: (sizes[cls[v]], v))
        queue = deque([start])
        placed[start] = True
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(set(D.succ[u]) | set(D.pred[u])):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)
    return order


def automorphisms(D: Digraph, colour: Mapping | None = None, vertex_colours: Sequence | None = None,
                  max_vertices: int = MAX_AUT_VERTICES, limit: int | None = None) -> list[tuple[int, ...]]:
    """All vertex permutations preserving edges (and colours, when present).

    ``colour`` overrides the graph's own edge weights. Returned permutations
    are image tuples ``p`` with ``p[i]`` the image of vertex i, sorted.
    """
    if D.n > max_vertices:
        raise GraphError(f"automorphism search limited to {max_vertices} vertices, got {D.n}")
    if colour is not None:
        if set(colour) != set(D.edges):
            raise GraphError("colour map must cover exactly the edge set")
        D = WeightedDigraph(D.n, colour, D.labels)
    n = D.n
    cls = _refine(D, vertex_colours)
    order = _search_order(D, cls)
    edges = D.edges
    col = D.colour
    perm = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def consistent(v: int, img: int, depth: int) -> bool:
        for t in range(depth):
            u = order[t]
            pu = perm[u]
            a, b = (u, v) in edges, (pu, img) in edges
            if a != b or (a and col(u, v) != col(pu, img)):
                return False
            a, b = (v, u) in edges, (img, pu) in edges
            if a != b or (a and col(v, u) != col(img, pu)):
                return False
        return True

    def extend(depth: int) -> bool:
        if depth == n:
            found.append(tuple(perm))
            return limit is not None and len(found) >= limit
        v = order[depth]
        cands = None
        for w in D.pred[v]:
            if perm[w] != -1:
                cands = D.succ[perm[w]]
                break
        if cands is None:
            for w in D.succ[v]:
                if perm[w] != -1:
                    cands = D.pred[perm[w]]
                    break
        if cands is None:
            cands = range(n)
        for img in cands:
            if used[img] or cls[img] != cls[v] or not consistent(v, img, depth):
                continue
            perm[v] = img
            used[img] = True
            if extend(depth + 1):
                return True
            perm[v] = -1
            used[img] = False
        return False

    extend(0)
    return sorted(found)


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(D: Digraph, name: str = "G") -> str:
    """DOT text with vertices v0..v{n-1}; weights become edge labels."""
    lines = [f"digraph {name} {{"]
    for v in range(D.n):
        lines.append(f'  "v{v}" [label="{_dot_escape(D.labels[v])}"];')
    for i, j in D.sorted_edges():
        w = D.colour(i, j)
        attr = f' [label="{_dot_escape(str(w))}"]' if w is not None else ""
        lines.append(f'  "v{i}" -> "v{j}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(D: Digraph) -> str:
    edges = []
    for i, j in D.sorted_edges():
        w = D.colour(i, j)
        edges.append([i, j] if w is None else [i, j, str(w)])
    return json.dumps({"n": D.n, "edges": edges, "labels": list(D.labels)}, indent=2) + "\n"
