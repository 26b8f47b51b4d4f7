"""Symmetric graph bases, boundary matrices and cohomology dimensions."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .coboundary import reduced_coboundary
from .combination import GraphCombination, expand_symmetric
from .generators import distinct_odd_partitions, predicted_basis_collected
from .graph import VectorGraph, canonicalize
from .linalg import SparseExactMatrix, rank_exact, rank_of_vectors, solve

DEFAULT_MAX_N = 7


class ResourceBoundExceeded(RuntimeError):
    pass


def max_n() -> int:
    value = os.environ.get("GRAPHCOHOM_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


def _check_bound(n: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > max_n():
        raise ResourceBoundExceeded(f"n={n} exceeds the enumeration bound {max_n()} (set GRAPHCOHOM_MAX_N)")


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p, *rest)


def _cycle_union(parts) -> VectorGraph:
    out = []
    start = 0
    for k in parts:
        out.extend(start + (t + 1) % k for t in range(k))
        start += k
    return VectorGraph(tuple(out))


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[VectorGraph, ...]:
    """Canonical representatives of every isomorphism class, sign-zero ones included.

    A graph with a vertex of in-degree 0 is a graph on ``n-1`` vertices
    plus a new source vertex; the others are unions of cycles.
    """
    if n == 0:
        return (VectorGraph(()),)
    reps = set()
    for g in _all_classes(n - 1):
        for t in (None, *range(n - 1)):
            reps.add(canonicalize(VectorGraph(g.out + (t,))).graph)
    for parts in _partitions(n):
        reps.add(canonicalize(_cycle_union(parts)).graph)
    return tuple(sorted(reps, key=lambda g: g.edges()))


@dataclass(frozen=True)
class SymmetricBasis:
    n: int
    graphs: tuple[VectorGraph, ...]
    index: dict = field(compare=False, repr=False, hash=False)

    def __len__(self) -> int:
        return len(self.graphs)


def enumerate_graphs(n: int) -> SymmetricBasis:
    """Orbit representatives without odd automorphisms, sorted by edge list."""
    _check_bound(n)
    return _enumerate(n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> SymmetricBasis:
    graphs = tuple(g for g in _all_classes(n) if canonicalize(g).sign)
    return SymmetricBasis(n, graphs, {g: k for k, g in enumerate(graphs)})


def orbit_size(g: VectorGraph) -> int:
    return math.factorial(g.n) // canonicalize(g).automorphisms


def boundary_column(g: VectorGraph) -> dict[VectorGraph, Fraction]:
    """Coefficients on canonical representatives of the coboundary of ``g``'s orbit sum.

    The orbit sum has coefficient 1 on ``g``; its coboundary is symmetric,
    and the coefficient on a representative ``r`` equals the collected
    coefficient divided by the orbit size of ``r`` and multiplied by the
    orbit size of ``g``.
    """
    collected = reduced_coboundary(GraphCombination.from_graph(g))
    scale = orbit_size(g)
    return {r: a * scale / orbit_size(r) for r, a in collected}


def boundary_matrix(n: int, rows: SymmetricBasis | None = None) -> SparseExactMatrix:
    """Matrix of the coboundary from symmetric combinations on ``n`` to ``n+1`` vertices."""
    cols = enumerate_graphs(n)
    if rows is None:
        rows = _image_rows(n)
    m = SparseExactMatrix(len(rows), len(cols))
    for k, g in enumerate(cols.graphs):
        for r, v in boundary_column(g).items():
            m[rows.index[r], k] = v
    return m


def _image_rows(n: int) -> SymmetricBasis:
    """Row basis for the image: the full basis when affordable, else the graphs that occur."""
    if n + 1 <= max_n():
        return enumerate_graphs(n + 1)
    seen = set()
    for g in enumerate_graphs(n).graphs:
        seen.update(boundary_column(g))
    graphs = tuple(sorted(seen, key=lambda g: g.edges()))
    return SymmetricBasis(n + 1, graphs, {g: k for k, g in enumerate(graphs)})


@lru_cache(maxsize=None)
def boundary_rank(n: int) -> int:
    if n < 0:
        return 0
    return rank_of_vectors(
        {k: v for k, v in _column_vector(g).items()} for g in enumerate_graphs(n).graphs
    )


def _column_vector(g: VectorGraph) -> dict:
    # rank is insensitive to the row ordering, so key rows by a stable integer id
    return {_row_id(r): v for r, v in boundary_column(g).items()}


_ROW_IDS: dict[VectorGraph, int] = {}


def _row_id(g: VectorGraph) -> int:
    k = _ROW_IDS.get(g)
    if k is None:
        k = _ROW_IDS[g] = len(_ROW_IDS)
    return k


@dataclass
class CohomologyReport:
    n: int
    basis_size: int
    basis_size_next: int | None
    rank_d_n: int
    rank_d_prev: int
    ker_dim: int
    h_dim: int
    expected: int
    include_one: bool
    representatives: list[GraphCombination]

    def to_json(self) -> dict:
        from .combination import format_combination

        return {
            "n": self.n,
            "basis_size": self.basis_size,
            "basis_size_next": self.basis_size_next,
            "rank_d_n": self.rank_d_n,
            "rank_d_prev": self.rank_d_prev,
            "ker_dim": self.ker_dim,
            "h_dim": self.h_dim,
            "expected": self.expected,
            "representatives": [format_combination(c).strip() for c in self.representatives],
        }


def cohomology_dim(n: int, include_one: bool = True) -> CohomologyReport:
    """Dimension of the degree-``n`` graph cohomology and the predicted count."""
    basis = enumerate_graphs(n)
    rank_n = boundary_rank(n)
    rank_prev = boundary_rank(n - 1) if n > 0 else 0
    ker = len(basis) - rank_n
    next_size = len(enumerate_graphs(n + 1)) if n + 1 <= max_n() else None
    return CohomologyReport(
        n=n,
        basis_size=len(basis),
        basis_size_next=next_size,
        rank_d_n=rank_n,
        rank_d_prev=rank_prev,
        ker_dim=ker,
        h_dim=ker - rank_prev,
        expected=len(distinct_odd_partitions(n, include_one)),
        include_one=include_one,
        representatives=predicted_basis_collected(n, include_one),
    )


def coordinates(c: GraphCombination) -> dict[int, Fraction]:
    """Coefficients of a symmetric combination on the basis for its vertex count."""
    basis = enumerate_graphs(c.n)
    collected = c.collect()
    coords = {}
    for g, a in collected:
        coords[basis.index[g]] = a / orbit_size(g)
    return coords


def is_cocycle(c: GraphCombination) -> bool:
    return reduced_coboundary(c.collect()).is_zero()


def solve_coboundary(target: GraphCombination) -> GraphCombination | None:
    """A symmetric ``beta`` on ``n-1`` vertices with coboundary ``target``, or ``None``."""
    n = target.n
    if n == 0:
        return None if target else GraphCombination(0)
    rows = enumerate_graphs(n)
    m = boundary_matrix(n - 1, rows)
    x = solve(m, coordinates(target))
    if x is None:
        return None
    cols = enumerate_graphs(n - 1)
    coeffs = GraphCombination(n - 1)
    for k, v in enumerate(x):
        coeffs.add_term(cols.graphs[k], v)
    return expand_symmetric(coeffs)


@dataclass
class IndependenceCertificate:
    n: int
    cocycles: bool
    rank_image: int
    rank_with_predicted: int
    predicted: int

    @property
    def independent(self) -> bool:
        return self.cocycles and self.rank_with_predicted == self.rank_image + self.predicted


def independence_certificate(n: int, include_one: bool = True) -> IndependenceCertificate:
    """Rank test that the predicted wheel products are independent cocycles modulo the image."""
    predicted = predicted_basis_collected(n, include_one)
    cocycles = all(reduced_coboundary(p).is_zero() for p in predicted)
    image = []
    if n > 0:
        for g in enumerate_graphs(n - 1).graphs:
            image.append({_row_id(r): a for r, a in reduced_coboundary(GraphCombination.from_graph(g))})
    pred_vectors = [{_row_id(r): a for r, a in p} for p in predicted]
    r_img = rank_of_vectors(image)
    r_all = rank_of_vectors(image + pred_vectors)
    return IndependenceCertificate(n, cocycles, r_img, r_all, len(predicted))


__all__ = [
    "CohomologyReport",
    "IndependenceCertificate",
    "ResourceBoundExceeded",
    "SymmetricBasis",
    "boundary_column",
    "boundary_matrix",
    "boundary_rank",
    "cohomology_dim",
    "coordinates",
    "enumerate_graphs",
    "independence_certificate",
    "is_cocycle",
    "rank_exact",
    "solve_coboundary",
]
