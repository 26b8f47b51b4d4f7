"""Aerial vector graphs, their relabelings and canonical forms.

A vector graph on vertices ``0..n-1`` has at most one outgoing arrow per
vertex, so it is stored as the tuple ``out`` with ``out[i]`` the target of
the arrow leaving ``i`` (``None`` if there is none).  Loops are allowed.

Graphs are graded by the number of outgoing arrows of each vertex; every
sign attached to a relabeling is the Koszul sign for that grading.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .signs import check_permutation, inverse, relabel_sign


@dataclass(frozen=True, slots=True)
class VectorGraph:
    out: tuple

    def __post_init__(self):
        n = len(self.out)
        for t in self.out:
            if t is not None and not 0 <= t < n:
                raise ValueError(f"arrow target {t} outside 0..{n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "VectorGraph":
        out: list = [None] * n
        for a, b in edges:
            if not 0 <= a < n:
                raise ValueError(f"arrow source {a} outside 0..{n - 1}")
            if out[a] is not None:
                raise ValueError(f"vertex {a} has two outgoing arrows")
            out[a] = b
        return cls(tuple(out))

    @classmethod
    def empty(cls, n: int) -> "VectorGraph":
        return cls((None,) * n)

    @property
    def n(self) -> int:
        return len(self.out)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, t) for i, t in enumerate(self.out) if t is not None]

    @property
    def arrow_count(self) -> int:
        return sum(1 for t in self.out if t is not None)

    def deb(self, i: int) -> int:
        return 0 if self.out[i] is None else 1

    def fin(self, i: int) -> list[int]:
        """Sources of the arrows arriving at ``i`` (``i`` itself for a loop)."""
        return [u for u, t in enumerate(self.out) if t == i]

    def parities(self) -> tuple[int, ...]:
        return tuple(0 if t is None else 1 for t in self.out)

    def __str__(self) -> str:
        return format_graph(self)


def permute(g: VectorGraph, sigma: Sequence[int]) -> VectorGraph:
    """Relabel vertex ``i`` as ``sigma[i]``; arrow ``i->j`` becomes ``sigma[i]->sigma[j]``."""
    if len(sigma) != g.n:
        raise ValueError(f"permutation of size {len(sigma)} applied to graph on {g.n} vertices")
    check_permutation(sigma)
    out: list = [None] * g.n
    for i, t in enumerate(g.out):
        if t is not None:
            out[sigma[i]] = sigma[t]
    return VectorGraph(tuple(out))


def relabel_sign_graph(g: VectorGraph, sigma: Sequence[int]) -> int:
    return relabel_sign(sigma, g.parities())


def wedge_union(g1: VectorGraph, g2: VectorGraph) -> VectorGraph:
    shift = g1.n
    return VectorGraph(g1.out + tuple(None if t is None else t + shift for t in g2.out))


# --- canonical forms ---------------------------------------------------------


class Canonical(NamedTuple):
    """Canonical representative of a graph's relabeling orbit.

    ``sign`` is the Koszul sign of a relabeling taking the input to
    ``graph``; it is 0 when the graph has an automorphism of sign -1, in
    which case every symmetric combination vanishes on the orbit.
    """

    graph: VectorGraph
    sign: int
    automorphisms: int

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


def _cycle_flags(out: tuple) -> list[bool]:
    n = len(out)
    state = [0] * n
    on_cycle = [False] * n
    for s in range(n):
        path = []
        v = s
        while v is not None and state[v] == 0:
            state[v] = 1
            path.append(v)
            v = out[v]
        if v is not None and state[v] == 1:
            for u in path[path.index(v):]:
                on_cycle[u] = True
        for u in path:
            state[u] = 2
    return on_cycle


class _Analysis:
    """Structural encoding of a functional graph, with automorphism data.

    Every automorphism of a vector graph is generated by swaps of isomorphic
    sibling subtrees, swaps of isomorphic components and rotations of cycles,
    so the sign character vanishes iff one of those generators is odd.
    """

    def __init__(self, out: tuple):
        self.out = out
        n = len(out)
        self.preds: list[list[int]] = [[] for _ in range(n)]
        for v, t in enumerate(out):
            if t is not None:
                self.preds[t].append(v)
        self.on_cycle = _cycle_flags(out)
        self.odd_generator = False
        self.aut = 1
        self.sub: dict[int, tuple] = {}
        self.size: dict[int, int] = {}
        self.children: dict[int, list[int]] = {}
        comps = []
        seen_cycle = [False] * n
        for v in range(n):
            if out[v] is None:
                enc, size = self._subtree(v)
                comps.append(((("T", enc), size), ("T", v, None)))
            elif self.on_cycle[v] and not seen_cycle[v]:
                cyc = [v]
                seen_cycle[v] = True
                u = out[v]
                while u != v:
                    seen_cycle[u] = True
                    cyc.append(u)
                    u = out[u]
                comps.append(self._cycle(cyc))
        comps.sort(key=lambda c: c[0])
        self.components = comps
        k = 0
        while k < len(comps):
            m = k
            while m < len(comps) and comps[m][0] == comps[k][0]:
                m += 1
            mult = m - k
            if mult > 1:
                (tag, _), size = comps[k][0]
                self.aut *= math.factorial(mult)
                odd = size % 2 == 1 if tag == "C" else size % 2 == 0
                if odd:
                    self.odd_generator = True
            k = m

    def _subtree(self, v: int) -> tuple[tuple, int]:
        kids = [c for c in self.preds[v] if not self.on_cycle[c]]
        coded = sorted(((self._subtree(c), c) for c in kids), key=lambda x: x[0][0])
        self.children[v] = [c for _, c in coded]
        size = 1
        k = 0
        while k < len(coded):
            m = k
            while m < len(coded) and coded[m][0][0] == coded[k][0][0]:
                m += 1
            mult = m - k
            sub_size = coded[k][0][1]
            size += mult * sub_size
            if mult > 1:
                self.aut *= math.factorial(mult)
                if sub_size % 2 == 1:
                    self.odd_generator = True
            k = m
        enc = tuple(x[0][0] for x in coded)
        self.sub[v] = enc
        self.size[v] = size
        return enc, size

    def _cycle(self, cyc: list[int]):
        k = len(cyc)
        seq = [self._subtree(c)[0] for c in cyc]
        size = sum(self.size[c] for c in cyc)
        rotations = [tuple(seq[t:] + seq[:t]) for t in range(k)]
        best = min(rotations)
        start = rotations.index(best)
        period = next(p for p in range(1, k + 1) if rotations[p % k] == rotations[0])
        m = k // period
        self.aut *= m
        if m % 2 == 0 and (size // m) % 2 == 1:
            self.odd_generator = True
        return (("C", best), size), ("C", cyc, start)

    def labeling(self) -> list[int]:
        label = [0] * len(self.out)
        counter = 0

        def visit(v: int) -> None:
            nonlocal counter
            for c in self.children[v]:
                visit(c)
            label[v] = counter
            counter += 1

        for _, (tag, root, start) in self.components:
            if tag == "T":
                visit(root)
            else:
                k = len(root)
                for t in range(k):
                    visit(root[(start + t) % k])
        return label


@lru_cache(maxsize=1 << 18)
def canonicalize(g: VectorGraph) -> Canonical:
    """Canonical representative, relabeling sign and automorphism count."""
    an = _Analysis(g.out)
    label = an.labeling()
    canon = permute(g, label)
    sign = 0 if an.odd_generator else relabel_sign(label, g.parities())
    return Canonical(canon, sign, an.aut)


def is_canonical(g: VectorGraph) -> bool:
    return canonicalize(g).graph == g


def structure_key(g: VectorGraph) -> tuple:
    """Complete isomorphism invariant (sorted component encodings)."""
    return tuple(c[0] for c in _Analysis(g.out).components)


def automorphism_count(g: VectorGraph) -> int:
    return canonicalize(g).automorphisms


def orbit(g: VectorGraph) -> dict[VectorGraph, int]:
    """All relabelings of ``g`` with the sign a symmetric combination carries.

    Returns ``{}`` when ``g`` has an odd automorphism.  Built breadth-first
    from adjacent transpositions so its cost is the orbit size times ``n``.
    """
    signs = {g: 1}
    queue = deque([g])
    n = g.n
    while queue:
        h = queue.popleft()
        s = signs[h]
        par = h.parities()
        for k in range(n - 1):
            tau = list(range(n))
            tau[k], tau[k + 1] = k + 1, k
            th = permute(h, tau)
            ts = -s if (par[k] & par[k + 1]) else s
            prev = signs.get(th)
            if prev is None:
                signs[th] = ts
                queue.append(th)
            elif prev != ts:
                return {}
    return signs


def brute_force_canonical(g: VectorGraph):
    """Lexicographically least sorted edge list over all relabelings.

    Exhaustive over ``n!`` permutations; kept as an independent check of
    :func:`canonicalize`.  Returns ``(graph, sign, automorphisms)`` with
    ``sign == 0`` when some automorphism is odd.
    """
    from itertools import permutations

    best = None
    best_sign = 0
    aut = 0
    odd = False
    par = g.parities()
    for sigma in permutations(range(g.n)):
        h = permute(g, sigma)
        s = relabel_sign(sigma, par)
        if h == g and s == -1:
            odd = True
        if h == g:
            aut += 1
        key = h.edges()
        if best is None or key < best.edges():
            best, best_sign = h, s
    return best, 0 if odd else best_sign, aut


# --- components --------------------------------------------------------------


class Component(NamedTuple):
    kind: str  # "wheel", "line" or "other"
    length: int


def components(g: VectorGraph) -> list[list[int]]:
    """Connected components (arrows read undirected), each sorted."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, t in enumerate(g.out):
        if t is not None:
            parent[find(i)] = find(t)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def classify_component(g: VectorGraph, component: Iterable[int]) -> Component:
    verts = sorted(set(component))
    if not verts:
        raise ValueError("empty component")
    inside = set(verts)
    for v in verts:
        t = g.out[v]
        if t is not None and t not in inside:
            raise ValueError("vertex set is not closed under arrows")
    for u, t in enumerate(g.out):
        if t in inside and u not in inside:
            raise ValueError("vertex set is not closed under arrows")
    if sorted(next(c for c in components(g) if c[0] == verts[0])) != verts:
        raise ValueError("vertex set is not a connected component")
    indeg = {v: 0 for v in verts}
    for v in verts:
        t = g.out[v]
        if t is not None:
            indeg[t] += 1
    arrows = sum(1 for v in verts if g.out[v] is not None)
    k = len(verts)
    if arrows == k and all(d == 1 for d in indeg.values()):
        return Component("wheel", k)
    if arrows == k - 1 and all(d <= 1 for d in indeg.values()):
        return Component("line", k - 1)
    return Component("other", k)


def classify(g: VectorGraph) -> list[Component]:
    return [classify_component(g, c) for c in components(g)]


# --- text format -------------------------------------------------------------


def format_graph(g: VectorGraph) -> str:
    """``graph n=3; edges = 1->2, 2->3, 3->1`` with 1-based labels."""
    edges = g.edges()
    if not edges:
        return f"graph n={g.n}"
    body = ", ".join(f"{a + 1}->{b + 1}" for a, b in edges)
    return f"graph n={g.n}; edges = {body}"


def parse_graph(text: str) -> VectorGraph:
    text = text.strip()
    if not text.startswith("graph"):
        raise ValueError(f"not a graph literal: {text!r}")
    head, _, rest = text[len("graph"):].partition(";")
    head = head.strip()
    if not head.startswith("n="):
        raise ValueError(f"missing vertex count in {text!r}")
    n = int(head[2:])
    edges = []
    rest = rest.strip()
    if rest:
        key, eq, body = rest.partition("=")
        if key.strip() != "edges" or not eq:
            raise ValueError(f"malformed edge list in {text!r}")
        for item in body.split(","):
            item = item.strip()
            if not item:
                continue
            a, arrow, b = item.partition("->")
            if not arrow:
                raise ValueError(f"malformed arrow {item!r}")
            edges.append((int(a) - 1, int(b) - 1))
    return VectorGraph.from_edges(n, edges)


def all_graphs(n: int) -> Iterator[VectorGraph]:
    """Every labeled vector graph on ``n`` vertices, ``(n+1)**n`` of them."""
    from itertools import product

    for out in product([None, *range(n)], repeat=n):
        yield VectorGraph(out)


def inverse_relabel(sigma: Sequence[int]) -> tuple[int, ...]:
    return inverse(sigma)
