from collections import Counter

import pytest

from graphcohom import coboundary as cb
from graphcohom.cohomology import (
    ResourceBoundExceeded,
    boundary_column,
    boundary_matrix,
    boundary_rank,
    cohomology_dim,
    coordinates,
    enumerate_graphs,
    independence_certificate,
    is_cocycle,
    solve_coboundary,
)
from graphcohom.combination import sym_orbit
from graphcohom.generators import line, line_generator, wheel, wheel_generator
from graphcohom.graph import all_graphs, brute_force_canonical
from graphcohom.linalg import rank_dense_oracle


def brute_basis_size(n):
    reps = {}
    for g in all_graphs(n):
        canon, sign, _ = brute_force_canonical(g)
        reps[canon] = sign
    return sum(1 for s in reps.values() if s)


def test_basis_examples():
    assert len(enumerate_graphs(0)) == 1
    assert set(enumerate_graphs(1).graphs) == {line(0), wheel(1)}
    assert len(enumerate_graphs(2)) == 4


@pytest.mark.parametrize("n", range(0, 5))
def test_basis_size_matches_exhaustive_search(n):
    assert len(enumerate_graphs(n)) == brute_basis_size(n)


def test_basis_sizes_beyond_brute_force():
    assert [len(enumerate_graphs(n)) for n in range(7)] == [1, 2, 4, 10, 23, 55, 131]


def test_columns():
    col = boundary_column(line(0))
    assert list(col.values()) == [1] and next(iter(col)).arrow_count == 1
    assert boundary_column(wheel(3)) == {}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rank_matches_direct_labeled_computation(n):
    rows = enumerate_graphs(n + 1)
    dense = []
    for g in enumerate_graphs(n).graphs:
        image = cb.coboundary(sym_orbit(g))
        coords = coordinates(image) if image else {}
        dense.append([coords.get(k, 0) for k in range(len(rows))])
    assert boundary_rank(n) == rank_dense_oracle(dense)
    m = boundary_matrix(n, rows)
    assert [[m[r, c] for r in range(len(rows))] for c in range(len(dense))] == dense


@pytest.mark.parametrize("n,h", [(0, 1), (1, 1), (2, 0), (3, 1), (4, 1), (5, 1)])
def test_cohomology_dimensions(n, h):
    report = cohomology_dim(n)
    assert report.h_dim == h == report.expected


def test_exclude_one_convention():
    assert cohomology_dim(1, include_one=False).expected == 0
    assert cohomology_dim(1).h_dim == 1


def test_report_json_schema():
    data = cohomology_dim(3).to_json()
    assert list(data) == ["n", "basis_size", "basis_size_next", "rank_d_n", "rank_d_prev", "ker_dim", "h_dim", "expected", "representatives"]
    assert data["basis_size"] == 10 and data["basis_size_next"] == 23
    assert data["representatives"] == ["6 * graph n=3; edges = 1->2, 2->3, 3->1"]


def test_cocycles_and_preimages():
    assert is_cocycle(wheel_generator(5))
    assert solve_coboundary(wheel_generator(3)) is None
    assert solve_coboundary(wheel_generator(5)) is None
    target = cb.coboundary(line_generator(0))
    pre = solve_coboundary(target)
    assert cb.coboundary(pre) == target
    assert Counter(g.arrow_count for g in pre.terms) == Counter({0: 1})


@pytest.mark.parametrize("n", range(0, 6))
def test_independence_certificate(n):
    assert independence_certificate(n).independent


def test_resource_bound(monkeypatch):
    monkeypatch.setenv("GRAPHCOHOM_MAX_N", "3")
    with pytest.raises(ResourceBoundExceeded):
        enumerate_graphs(4)
    with pytest.raises(ResourceBoundExceeded):
        cohomology_dim(5)
