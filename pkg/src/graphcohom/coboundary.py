"""Coboundary of vector graphs by proper blow-ups, vertex classes and the homotopy."""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .combination import GraphCombination, is_symmetric
from .graph import VectorGraph, canonicalize, classify
from .signs import front_insertion_sign


class NonSymmetricInput(ValueError):
    """Raised when the coboundary is applied to a non-symmetric combination."""


# --- proper blow-ups ---------------------------------------------------------


def _insert_vertex(g: VectorGraph, j: int) -> list:
    """Renumber ``g`` into ``{0..n} - {j}`` preserving order; slot ``j`` stays empty."""
    n = g.n
    if not 0 <= j <= n:
        raise ValueError(f"new label {j} outside 0..{n}")

    def shift(v):
        return v if v < j else v + 1

    out: list = [None] * (n + 1)
    for v, t in enumerate(g.out):
        out[shift(v)] = None if t is None else shift(t)
    return out


def _split_setup(g: VectorGraph, i: int, j: int):
    if i == j or not 0 <= i <= g.n:
        raise ValueError(f"split vertex {i} invalid for new label {j} on {g.n} vertices")
    out = _insert_vertex(g, j)
    fin = [u for u, t in enumerate(out) if t == i]
    return out, fin


def _subsets(items: Sequence[int]):
    for mask in range(1 << len(items)):
        yield [items[b] for b in range(len(items)) if mask >> b & 1]


def proper_splits_in(g: VectorGraph, i: int, j: int) -> list[VectorGraph]:
    """The graphs obtained by blowing ``i`` up into a new vertex ``j`` with arrow ``j->i``.

    ``i`` keeps its outgoing arrow; each subset ``A`` of the arrows arriving
    at ``i`` is retargeted to ``j`` (a loop at ``i`` then becomes ``i->j``).
    Only proper splits are kept: both endpoints of the new arrow must end
    up with total valence at least 2, except that an isolated ``i`` gives
    the single graph ``j->i``.
    """
    out, fin = _split_setup(g, i, j)
    deb = 0 if out[i] is None else 1
    if deb == 0 and not fin:
        out[j] = i
        return [VectorGraph(tuple(out))]
    result = []
    f = len(fin)
    for a in _subsets(fin):
        # valence(i) = deb + f - |A| + 1, valence(j) = 1 + |A|
        if not a or deb + f - len(a) < 1:
            continue
        new = list(out)
        for u in a:
            new[u] = j
        new[j] = i
        result.append(VectorGraph(tuple(new)))
    return result


def proper_splits_out(g: VectorGraph, i: int, j: int) -> list[VectorGraph]:
    """Blow ``i`` up into a new vertex ``j`` with arrow ``i->j``.

    The arrow leaving ``i`` now leaves ``j``.  For a loop at ``i`` the tail
    moves to ``j`` and the head follows the split of the incoming arrows,
    so it becomes ``j->j`` when assigned to ``j`` and ``j->i`` otherwise.
    """
    out, fin = _split_setup(g, i, j)
    old = out[i]
    deb = 0 if old is None else 1
    if deb == 0 and not fin:
        out[i] = j
        return [VectorGraph(tuple(out))]
    result = []
    f = len(fin)
    for a in _subsets(fin):
        # valence(i) = 1 + f - |A|, valence(j) = deb + |A| + 1
        if f - len(a) < 1 or deb + len(a) < 1:
            continue
        moved = set(a)
        new = list(out)
        for u in a:
            if u != i:
                new[u] = j
        if old == i:
            new[j] = j if i in moved else i
        else:
            new[j] = old
        new[i] = j
        result.append(VectorGraph(tuple(new)))
    return result


# --- the coboundary ----------------------------------------------------------


def _isolated(g: VectorGraph, i: int, j: int) -> bool:
    """Whether the vertex named ``i`` after inserting ``j`` was isolated in ``g``."""
    old = i if i < j else i - 1
    return g.out[old] is None and old not in g.out


def coboundary_graph(g: VectorGraph, isolated_sign: int = 1) -> GraphCombination:
    """Graph-wise coboundary: minus the signed sum of all proper ``j->i`` blow-ups.

    Blowing up an isolated vertex enters with the opposite sign: the
    Chevalley computation gives ``+`` there, and the cross-check against
    the symbolic operators confirms it.  ``isolated_sign=-1`` restores a
    uniform leading minus, for comparison.
    """
    result = GraphCombination(g.n + 1)
    for j in range(g.n + 1):
        for i in range(g.n + 1):
            if i == j:
                continue
            splits = proper_splits_in(g, i, j)
            if not splits:
                continue
            sign = front_insertion_sign(j, splits[0].parities())
            if _isolated(g, i, j):
                sign = -sign * isolated_sign
            for h in splits:
                result.add_term(h, -sign)
    return result


def coboundary_alt_graph(g: VectorGraph, isolated_sign: int = 1) -> GraphCombination:
    """Grouped form: pairs ``i < j`` with both ``j->i`` and ``i->j`` blow-ups of ``i``."""
    result = GraphCombination(g.n + 1)
    for j in range(g.n + 1):
        for i in range(j):
            flip = -isolated_sign if _isolated(g, i, j) else 1
            for h in proper_splits_in(g, i, j):
                result.add_term(h, -flip * front_insertion_sign(j, h.parities()))
            for h in proper_splits_out(g, i, j):
                par = h.parities()
                deb_j = par[j]
                factor = (1 - deb_j) * front_insertion_sign(i, par) - deb_j * front_insertion_sign(j, par)
                result.add_term(h, -flip * factor)
    return result


def _linear(c: GraphCombination, graph_map, allow_nonsymmetric: bool) -> GraphCombination:
    if not allow_nonsymmetric and not is_symmetric(c):
        raise NonSymmetricInput("coboundary needs a symmetric combination")
    result = GraphCombination(c.n + 1)
    for g, a in c:
        for h, b in graph_map(g):
            result.add_term(h, a * b)
    return result


def coboundary(c: GraphCombination, allow_nonsymmetric: bool = False, warn_only: bool = False) -> GraphCombination:
    """Coboundary of a symmetric combination, term by term."""
    if warn_only and not is_symmetric(c):
        warnings.warn("coboundary applied to a non-symmetric combination", stacklevel=2)
        allow_nonsymmetric = True
    return _linear(c, coboundary_graph, allow_nonsymmetric)


def coboundary_alt(c: GraphCombination, allow_nonsymmetric: bool = False) -> GraphCombination:
    return _linear(c, coboundary_alt_graph, allow_nonsymmetric)


@lru_cache(maxsize=None)
def _reduced_column(g: VectorGraph) -> tuple:
    return tuple(coboundary_graph(g).collect().terms.items())


def reduced_coboundary(c: GraphCombination) -> GraphCombination:
    """Coboundary on canonical coordinates.

    ``c`` is read as the image of a symmetric combination under
    :meth:`GraphCombination.collect`; the result is the collected image of
    its coboundary.  Relies on the coboundary commuting with relabelings up
    to the Koszul sign, which is checked in the test suite.
    """
    result = GraphCombination(c.n + 1)
    for g, a in c:
        canon = canonicalize(g)
        if not canon.sign:
            continue
        for h, b in _reduced_column(canon.graph):
            result.add_term(h, a * canon.sign * b)
    return result


# --- vertex classes and orders -----------------------------------------------


class VertexClass(NamedTuple):
    """Order symbol of a vertex: ``r``, ``r+``, ``1+``, ``1``, ``0`` or ``0-``."""

    rank: int  # 5: r, 4: r+, 3: 1+, 2: 1, 1: 0, 0: 0-
    r: int

    def __str__(self) -> str:
        return {5: str(self.r), 4: f"{self.r}+", 3: "1+", 2: "1", 1: "0", 0: "0-"}[self.rank]

    @classmethod
    def parse(cls, text: str) -> "VertexClass":
        text = text.strip()
        fixed = {"1+": cls(3, 1), "1": cls(2, 1), "0": cls(1, 0), "0-": cls(0, 0)}
        if text in fixed:
            return fixed[text]
        if text.endswith("+"):
            return cls(4, int(text[:-1]))
        return cls(5, int(text))


def class_of(fin: int, deb: int) -> VertexClass:
    if fin > 1:
        return VertexClass(4 if deb else 5, fin)
    if fin == 1:
        return VertexClass(3, 1) if deb else VertexClass(2, 1)
    return VertexClass(0, 0) if deb else VertexClass(1, 0)


ONE_PLUS = VertexClass(3, 1)


def vertex_class(g: VectorGraph, i: int) -> VertexClass:
    if not 0 <= i < g.n:
        raise IndexError(f"vertex {i} outside 0..{g.n - 1}")
    return class_of(len(g.fin(i)), g.deb(i))


def graph_order(g: VectorGraph) -> tuple[VertexClass, ...]:
    indeg = [0] * g.n
    for t in g.out:
        if t is not None:
            indeg[t] += 1
    return tuple(class_of(indeg[i], g.deb(i)) for i in range(g.n))


def compare_order(w1: Sequence[VertexClass], w2: Sequence[VertexClass]) -> int:
    """-1, 0 or 1 as ``w1`` is lexicographically below, equal to, or above ``w2``."""
    if len(w1) != len(w2):
        raise ValueError("order words of different lengths")
    a, b = tuple(w1), tuple(w2)
    return (a > b) - (a < b)


def format_order(word: Sequence[VertexClass]) -> str:
    return "[" + ",".join(str(s) for s in word) + "]"


def sorted_order(word: Sequence[VertexClass]) -> tuple[VertexClass, ...]:
    """The largest order word in a relabeling orbit: symbols in decreasing order."""
    return tuple(sorted(word, reverse=True))


def order_plus_one_plus(word: Sequence[VertexClass]) -> tuple[VertexClass, ...]:
    """``O + 1+`` for a sorted order word: one more ``1+`` in its block."""
    return sorted_order((*word, ONE_PLUS))


def combination_order(c: GraphCombination) -> tuple[VertexClass, ...]:
    if c.is_zero():
        raise ValueError("the zero combination has no order")
    return max(graph_order(g) for g in c.terms)


def symbol(c: GraphCombination) -> tuple[GraphCombination, tuple[VertexClass, ...]]:
    """Restriction of ``c`` to its graphs of maximal order, and that order."""
    top = combination_order(c)
    return restrict_to_order(c, top), top


def restrict_to_order(c: GraphCombination, word: Sequence[VertexClass]) -> GraphCombination:
    word = tuple(word)
    result = GraphCombination(c.n)
    for g, a in c:
        if graph_order(g) == word:
            result.add_term(g, a)
    return result


# --- homotopy ----------------------------------------------------------------


def homotopy(g: VectorGraph) -> VectorGraph | None:
    """Contract the arrow leaving the last ``1+`` vertex; ``None`` if there is none.

    A ``1+`` vertex whose arrow is a loop (an isolated loop) cannot be
    contracted and also gives ``None``.
    """
    order = graph_order(g)
    candidates = [i for i, s in enumerate(order) if s == ONE_PLUS]
    if not candidates:
        return None
    i0 = candidates[-1]
    a = g.out[i0]
    if a == i0:
        return None

    def shift(v):
        return v if v < i0 else v - 1

    out: list = [None] * (g.n - 1)
    for v, t in enumerate(g.out):
        if v == i0:
            continue
        if t == i0:
            t = a
        out[shift(v)] = None if t is None else shift(t)
    return VectorGraph(tuple(out))


def homotopy_combination(c: GraphCombination) -> GraphCombination:
    result = GraphCombination(max(c.n - 1, 0))
    for g, a in c:
        h = homotopy(g)
        if h is not None:
            result.add_term(h, a)
    return result

def homotopy_defect(c: GraphCombination) -> Fraction:
    """The scalar ``(-1)^(b+c') * (sum of r over r vertices + sum of r-1 over r+ vertices)``.

    Read off the order word of ``c``, with ``b`` the number of ``r+``
    symbols and ``c'`` the number of ``1+`` symbols.
    """
    word = combination_order(c)
    total = sum(s.r for s in word if s.rank == 5) + sum(s.r - 1 for s in word if s.rank == 4)
    odd_before = sum(1 for s in word if s.rank in (4, 3))
    return Fraction(-total if odd_before % 2 else total)


def homotopy_identity_sides(c: GraphCombination):
    """Both sides of the symbol/homotopy identity for a symmetric ``c``.

    Returns ``None`` when the hypotheses fail: no ``1+`` vertex in the
    order of ``c``, or the top order of the coboundary falls below
    ``O(c) + 1+``.  Otherwise returns ``(lhs, rhs)`` with
    ``lhs = h(symbol of dc)`` and
    ``rhs = (part of d h(symbol c) of order O(c)) - defect * symbol c``,
    all on compactly relabeled vertices.
    """
    sym, top = symbol(c)
    if ONE_PLUS not in top:
        return None
    dc = coboundary(c)
    target = order_plus_one_plus(top)
    if dc.is_zero() or combination_order(dc) != target:
        return None
    lhs = homotopy_combination(restrict_to_order(dc, target))
    h_sym = homotopy_combination(sym)
    d_h = coboundary(h_sym, allow_nonsymmetric=True)
    rhs = restrict_to_order(d_h, top) - sym.scale(homotopy_defect(c))
    return lhs, rhs


def remove_vertex_relabel(g: VectorGraph, k: int) -> VectorGraph:
    """Renumber an ``n``-vertex graph into ``{0..n} - {k}``, then compact back.

    Used by the symbol/homotopy identity, whose relabeling by
    ``(0, .., k^, .., n)`` followed by compaction is the identity on labels;
    exposed so the identity can be stated with its relabeling explicit.
    """
    out = _insert_vertex(g, k)
    del out[k]
    return VectorGraph(tuple(None if t is None else (t if t < k else t - 1) for t in out))


# --- line / wheel order ------------------------------------------------------


class LineWheelOrder(NamedTuple):
    lines: tuple[int, ...]
    wheels: tuple[int, ...]

    def key(self) -> tuple:
        # every line length outranks every wheel length
        return tuple((1, l) for l in self.lines) + tuple((0, r) for r in self.wheels)

    def __lt__(self, other):  # type: ignore[override]
        return self.key() < other.key()

    def __gt__(self, other):  # type: ignore[override]
        return self.key() > other.key()

    def __le__(self, other):  # type: ignore[override]
        return self.key() <= other.key()

    def __ge__(self, other):  # type: ignore[override]
        return self.key() >= other.key()


def line_wheel_order(g: VectorGraph) -> LineWheelOrder:
    comps = classify(g)
    if any(c.kind == "other" for c in comps):
        raise ValueError("graph has a component that is neither a line nor a wheel")
    lines = tuple(sorted((c.length for c in comps if c.kind == "line"), reverse=True))
    wheels = tuple(sorted((c.length for c in comps if c.kind == "wheel"), reverse=True))
    return LineWheelOrder(lines, wheels)


__all__ = [
    "LineWheelOrder",
    "NonSymmetricInput",
    "ONE_PLUS",
    "VertexClass",
    "class_of",
    "coboundary",
    "coboundary_alt",
    "coboundary_alt_graph",
    "coboundary_graph",
    "combination_order",
    "compare_order",
    "format_order",
    "graph_order",
    "homotopy",
    "homotopy_combination",
    "homotopy_defect",
    "homotopy_identity_sides",
    "line_wheel_order",
    "order_plus_one_plus",
    "proper_splits_in",
    "proper_splits_out",
    "reduced_coboundary",
    "remove_vertex_relabel",
    "restrict_to_order",
    "sorted_order",
    "symbol",
    "vertex_class",
]
