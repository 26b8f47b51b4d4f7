"""Multilinear operators of vector graphs and the symmetrized Chevalley coboundary."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..combination import GraphCombination
from ..graph import VectorGraph
from ..signs import sign_eps, sign_eps_graded
from .poly import MultiPoly, random_poly
from .polyvector import PolyVector, nabla, q_bracket, random_polyvector


def tau_sign(degrees: Sequence[int]) -> int:
    """``(-1)^(sum_i (n - i) deg_i)`` for 1-based positions ``i``."""
    n = len(degrees)
    total = sum((n - i) * deg for i, deg in enumerate(degrees, start=1))
    return -1 if total % 2 else 1


@dataclass(frozen=True)
class FootedGraph:
    """An aerial vector graph completed by legs ``vertex -> foot`` (feet numbered ``1..m``)."""

    base: VectorGraph
    legs: tuple  # legs[f - 1] is the aerial vertex sending the leg to foot f

    def __post_init__(self):
        if len(set(self.legs)) != len(self.legs):
            raise ValueError("a vertex sends at most one leg")
        for v in self.legs:
            if not 0 <= v < self.base.n:
                raise ValueError(f"leg source {v} is not a vertex")
            if self.base.out[v] is not None:
                raise ValueError(f"vertex {v} already has an outgoing arrow")

    @property
    def m(self) -> int:
        return len(self.legs)

    def out_degree(self, i: int) -> int:
        return int(self.base.out[i] is not None or i in self.legs)


def eval_B(gamma: FootedGraph, args: Sequence[PolyVector]) -> PolyVector:
    """The operator of a footed vector graph, edges ordered by source vertex.

    Each vertex ``i`` with an outgoing edge carries a summation index
    ``t_i``; the coefficient at ``i`` is ``a_i^{t_i}`` (or ``a_i`` if it
    has no edge), differentiated by ``d_{t_s}`` for every edge ``s -> i``.
    The output is the wedge of ``d_{t_s}`` over the legs in foot order.
    """
    g = gamma.base
    n = g.n
    if len(args) != n:
        raise ValueError(f"{n} arguments expected, got {len(args)}")
    if not args:
        return PolyVector.function(MultiPoly.constant(1, 1)) if n == 0 else PolyVector.zero(1)
    d = args[0].d
    if any(a.d != d for a in args):
        raise ValueError("arguments of different dimensions")
    for i, a in enumerate(args):
        if a.k != gamma.out_degree(i):
            return PolyVector.zero(d, gamma.m)
    sources = [i for i in range(n) if gamma.out_degree(i)]
    incoming = [[s for s in range(n) if g.out[s] == i] for i in range(n)]
    terms = []
    for values in itertools.product(range(1, d + 1), repeat=len(sources)):
        t = dict(zip(sources, values))
        prod = MultiPoly.constant(d)
        for i, a in enumerate(args):
            coeff = a.component((t[i],)) if i in t else a.component(())
            for s in incoming[i]:
                coeff = coeff.diff(t[s])
                if not coeff:
                    break
            prod = prod * coeff
            if not prod:
                break
        if prod:
            terms.append((tuple(t[v] for v in gamma.legs), prod))
    return PolyVector.from_terms(d, gamma.m, terms)


def _edge_order_sign(g: VectorGraph, legs: Sequence[int]) -> int:
    """Sign between the source-sorted edge order and "aerial edges, then legs by foot"."""
    aerial = [("a", v) for v in range(g.n) if g.out[v] is not None]
    leg_edges = [("l", v) for v in legs]
    reference = aerial + leg_edges
    compatible = sorted(reference, key=lambda e: e[1])
    position = {e: p for p, e in enumerate(reference)}
    return sign_eps([position[e] for e in compatible])


def eval_graph(g: VectorGraph, args: Sequence[PolyVector], weighted: bool = True) -> PolyVector:
    """Completion sum of one aerial vector graph.

    Legs come from the vertices without an aerial arrow whose argument is
    a vector field; every bijection onto the feet is summed with weight
    ``1/m!`` (``weighted=False`` keeps a single ordered assignment).
    """
    if len(args) != g.n:
        raise ValueError(f"{g.n} arguments expected, got {len(args)}")
    d = args[0].d if args else 1
    leggy = [i for i in range(g.n) if g.out[i] is None and args[i].k == 1]
    m = len(leggy)
    total = PolyVector.zero(d, m)
    assignments = itertools.permutations(leggy) if weighted else [tuple(leggy)]
    for legs in assignments:
        gamma = FootedGraph(g, tuple(legs))
        value = eval_B(gamma, args)
        if value:
            total = total + value.scale(_edge_order_sign(g, legs))
    if weighted:
        total = total.scale(Fraction(1, math.factorial(m)))
    return total


def eval_C(delta, args: Sequence[PolyVector], weighted: bool = True) -> PolyVector:
    """The operator of a graph or a linear combination of graphs."""
    if isinstance(delta, VectorGraph):
        return eval_graph(delta, args, weighted)
    d = args[0].d if args else 1
    total = None
    for g, a in delta.sorted_terms():
        value = eval_graph(g, args, weighted).scale(a)
        total = value if total is None else total + value
    return total if total is not None else PolyVector.zero(d)


def _graded(arrangement: Sequence[int], parities: Sequence[int]) -> int:
    return sign_eps_graded(list(arrangement), parities)


def _arrow_count(delta: GraphCombination) -> int:
    counts = {g.arrow_count for g in delta.terms}
    if len(counts) > 1:
        raise ValueError("combination mixes graphs with different arrow counts")
    return counts.pop() if counts else 0


def _sum(values, d: int) -> PolyVector:
    total = PolyVector.zero(d)
    for v in values:
        if v:
            total = total + v
    return total


def chevalley_d(delta: GraphCombination, args: Sequence[PolyVector], form: str = "nabla") -> PolyVector:
    """Symmetrized Chevalley coboundary of ``C_delta`` evaluated on ``n+1`` arguments.

    ``form="nabla"`` uses the connection form of the coboundary;
    ``form="q"`` uses the ``Q`` form with the factor ``1/2``.
    """
    from ..combination import is_symmetric

    if not is_symmetric(delta):
        raise ValueError("chevalley_d needs a symmetric combination")
    n1 = len(args)
    if n1 != delta.n + 1:
        raise ValueError(f"{delta.n + 1} arguments expected, got {n1}")
    d = args[0].d
    par = [a.k % 2 for a in args]
    size = _arrow_count(delta)
    c_sign = -1 if size % 2 else 1
    idx = list(range(n1))

    def c_without(*skip):
        return [args[p] for p in idx if p not in skip]

    terms = []
    for i in idx:
        rest = [p for p in idx if p != i]
        value = eval_C(delta, c_without(i))
        front = _graded([i, *rest], par)
        twist = -1 if (size * (args[i].k - 1)) % 2 else 1
        if form == "nabla":
            terms.append(nabla(args[i], value).scale(front * twist))
            terms.append(nabla(value, args[i]).scale(c_sign * _graded([*rest, i], par)))
        elif form == "q":
            terms.append(q_bracket(args[i], value).scale(front * twist))
        else:
            raise ValueError(f"unknown form {form!r}")
    for i in idx:
        for j in idx:
            if i == j:
                continue
            rest = [p for p in idx if p not in (i, j)]
            sign = _graded([i, j, *rest], par)
            if form == "nabla":
                inner = nabla(args[i], args[j])
                factor = -sign
            else:
                inner = q_bracket(args[i], args[j])
                factor = Fraction(-sign, 2)
            value = eval_C(delta, [inner, *c_without(i, j)])
            terms.append(value.scale(factor))
    return _sum(terms, d)


def zeta_operator(k: int, args: Sequence[PolyVector]) -> MultiPoly:
    """``sum_sigma eps(sigma) sum_i d_{i_{2k+1}} a_{s1}^{i_1} d_{i_1} a_{s2}^{i_2} .. d_{i_{2k}} a_{s(2k+1)}^{i_{2k+1}}``."""
    length = 2 * k + 1
    if len(args) != length or any(a.k != 1 for a in args):
        raise ValueError(f"zeta_operator({k}) takes {length} vector fields")
    d = args[0].d
    total = MultiPoly.zero(d)
    for sigma in itertools.permutations(range(length)):
        s = sign_eps(sigma)
        for ind in itertools.product(range(1, d + 1), repeat=length):
            prod = MultiPoly.constant(d)
            for p in range(length):
                prod = prod * args[sigma[p]].component((ind[p],)).diff(ind[p - 1])
                if not prod:
                    break
            if prod:
                total = total + prod.scale(s)
    return total


def random_arguments(rng: random.Random, degrees: Sequence[int], d: int, max_degree: int) -> list[PolyVector]:
    return [random_polyvector(rng, d, k, max_degree) for k in degrees]


def random_vector_field(rng: random.Random, d: int, max_degree: int) -> PolyVector:
    return PolyVector.vector_field([random_poly(rng, d, max_degree) for _ in range(d)])


def degree_patterns(count: int, total: int, top: int = 2) -> list[tuple[int, ...]]:
    """All tuples of ``count`` tensor degrees in ``0..top`` summing to ``total``."""
    return [p for p in itertools.product(range(top + 1), repeat=count) if sum(p) == total]


__all__ = [
    "FootedGraph",
    "chevalley_d",
    "degree_patterns",
    "eval_B",
    "eval_C",
    "eval_graph",
    "random_arguments",
    "random_vector_field",
    "tau_sign",
    "zeta_operator",
]
