"""Exact sparse linear algebra over the rationals.

Columns are stored as ``{row: Fraction}`` dictionaries.  Rank uses
fraction-free row reduction: denominators are cleared once per vector and
every pivot step combines integer vectors, then divides out their content
to keep entries small.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class SparseExactMatrix:
    """Sparse matrix of exact rationals, addressed by integer row/column indices."""

    def __init__(self, nrows: int, ncols: int, columns: Sequence[Mapping[int, Fraction]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.columns: list[dict[int, Fraction]] = [dict() for _ in range(ncols)]
        if columns is not None:
            if len(columns) != ncols:
                raise ValueError("column count mismatch")
            for k, col in enumerate(columns):
                for r, v in col.items():
                    self[r, k] = v

    def __setitem__(self, key, value) -> None:
        r, c = key
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(f"entry {key} outside {self.nrows}x{self.ncols}")
        value = Fraction(value)
        if value:
            self.columns[c][r] = value
        else:
            self.columns[c].pop(r, None)

    def __getitem__(self, key) -> Fraction:
        r, c = key
        return self.columns[c].get(r, Fraction(0))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def triplets(self) -> list[tuple[int, int, Fraction]]:
        return sorted((r, c, v) for c, col in enumerate(self.columns) for r, v in col.items())

    def to_dense(self) -> list[list[Fraction]]:
        rows = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.triplets():
            rows[r][c] = v
        return rows

    def matmul(self, other: "SparseExactMatrix") -> "SparseExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        out = SparseExactMatrix(self.nrows, other.ncols)
        for k, col in enumerate(other.columns):
            acc: dict[int, Fraction] = {}
            for mid, v in col.items():
                for r, w in self.columns[mid].items():
                    acc[r] = acc.get(r, 0) + v * w
            for r, v in acc.items():
                if v:
                    out.columns[k][r] = Fraction(v)
        return out

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)

    def hstack(self, other: "SparseExactMatrix") -> "SparseExactMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        out = SparseExactMatrix(self.nrows, self.ncols + other.ncols)
        out.columns = [dict(c) for c in self.columns] + [dict(c) for c in other.columns]
        return out


def format_triplets(m: SparseExactMatrix) -> str:
    """Coordinate text export, one ``row col p/q`` line per nonzero entry."""
    return "".join(f"{r} {c} {v}\n" for r, c, v in m.triplets())


def _integer_vector(col: Mapping[int, Fraction]) -> dict[int, int]:
    den = 1
    for v in col.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    vec = {r: int(v * den) for r, v in col.items()}
    return _primitive(vec)


def _primitive(vec: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in vec.values():
        g = math.gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        vec = {r: v // g for r, v in vec.items()}
    return vec


class _Echelon:
    """Incremental fraction-free echelon form of a growing set of vectors."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    def reduce(self, vec: dict[int, int]) -> dict[int, int]:
        vec = dict(vec)
        while vec:
            p = min(vec)
            basis = self.pivots.get(p)
            if basis is None:
                return vec
            a, b = basis[p], vec[p]
            g = math.gcd(a, b)
            fa, fb = a // g, b // g
            merged = {}
            for r in vec.keys() | basis.keys():
                v = fa * vec.get(r, 0) - fb * basis.get(r, 0)
                if v:
                    merged[r] = v
            vec = _primitive(merged)
        return vec

    def insert(self, vec: dict[int, int]) -> bool:
        red = self.reduce(vec)
        if not red:
            return False
        self.pivots[min(red)] = red
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_exact(m: SparseExactMatrix) -> int:
    ech = _Echelon()
    for col in m.columns:
        if col:
            ech.insert(_integer_vector(col))
    return ech.rank


def rank_of_vectors(vectors: Iterable[Mapping[int, Fraction]]) -> int:
    ech = _Echelon()
    for v in vectors:
        if v:
            ech.insert(_integer_vector(v))
    return ech.rank


def solve(m: SparseExactMatrix, target: Mapping[int, Fraction]) -> list[Fraction] | None:
    """A rational ``x`` with ``m x = target``, or ``None`` if ``target`` is not in the image.

    Gauss-Jordan elimination over ``Fraction`` on the rows, tracking column
    pivots; free variables are set to zero.
    """
    rows: dict[int, dict[int, Fraction]] = {}
    for c, col in enumerate(m.columns):
        for r, v in col.items():
            rows.setdefault(r, {})[c] = Fraction(v)
    rhs = {r: Fraction(v) for r, v in target.items() if v}
    for r in rhs:
        if not 0 <= r < m.nrows:
            raise IndexError(f"target row {r} outside 0..{m.nrows - 1}")
    pivot_rows: list[tuple[int, dict[int, Fraction], Fraction]] = []
    for r in sorted(set(rows) | set(rhs)):
        row = dict(rows.get(r, {}))
        b = rhs.get(r, Fraction(0))
        for pc, prow, pb in pivot_rows:
            f = row.get(pc)
            if f:
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
                b -= f * pb
        if not row:
            if b:
                return None
            continue
        pc = min(row)
        pv = row[pc]
        row = {c: v / pv for c, v in row.items()}
        b = b / pv
        # back-substitute into earlier pivot rows
        updated = []
        for qc, qrow, qb in pivot_rows:
            f = qrow.get(pc)
            if f:
                for c, v in row.items():
                    nv = qrow.get(c, 0) - f * v
                    if nv:
                        qrow[c] = nv
                    else:
                        qrow.pop(c, None)
                qb -= f * b
            updated.append((qc, qrow, qb))
        pivot_rows = updated
        pivot_rows.append((pc, row, b))
    x = [Fraction(0)] * m.ncols
    for pc, _, pb in pivot_rows:
        x[pc] = pb
    return x


def rank_dense_oracle(rows: Sequence[Sequence[Fraction]]) -> int:
    """Plain Gaussian elimination over ``Fraction``; used as an independent check."""
    a = [list(map(Fraction, r)) for r in rows]
    if not a:
        return 0
    nr, nc = len(a), len(a[0])
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(nr):
            if r != rank and a[r][c]:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank
