"""Polyvector fields on R^d with polynomial coefficients.

A k-vector is written ``sum over all index tuples of a^{i_1..i_k} d_{i_1}^..^d_{i_k}``
with ``a`` completely antisymmetric; only increasing tuples are stored.
On the wedge basis the coefficient of ``d_I`` (``I`` increasing) is
``k! a^I``.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Iterable, Mapping

from ..signs import sign_eps
from .poly import MultiPoly, random_poly


def _sort_sign(t: tuple) -> tuple[tuple, int]:
    """Increasing rearrangement of ``t`` and its sign; sign 0 on a repeated index."""
    if len(set(t)) != len(t):
        return t, 0
    order = sorted(range(len(t)), key=lambda p: t[p])
    return tuple(t[p] for p in order), sign_eps(order)


class PolyVector:
    __slots__ = ("d", "k", "comps")

    def __init__(self, d: int, k: int, comps: Mapping[tuple, MultiPoly] | None = None):
        if k < 0:
            raise ValueError("tensor degree must be nonnegative")
        self.d = d
        self.k = k
        self.comps: dict[tuple, MultiPoly] = {}
        for idx, p in (comps or {}).items():
            idx = tuple(idx)
            if len(idx) != k or list(idx) != sorted(set(idx)) or not all(1 <= i <= d for i in idx):
                raise ValueError(f"component key {idx} must be an increasing {k}-tuple in 1..{d}")
            if p.d != d:
                raise ValueError("coefficient dimension mismatch")
            if p:
                self.comps[idx] = p

    # construction

    @classmethod
    def function(cls, f: MultiPoly) -> "PolyVector":
        return cls(f.d, 0, {(): f})

    @classmethod
    def vector_field(cls, coeffs: Iterable[MultiPoly]) -> "PolyVector":
        coeffs = list(coeffs)
        d = len(coeffs)
        return cls(d, 1, {(i + 1,): p for i, p in enumerate(coeffs)})

    @classmethod
    def basis(cls, d: int, idx: Iterable[int]) -> "PolyVector":
        """``d_{i_1} ^ .. ^ d_{i_k}`` (may be 0 or carry a sign)."""
        idx = tuple(idx)
        return cls.from_terms(d, len(idx), [(idx, MultiPoly.constant(d))])

    @classmethod
    def zero(cls, d: int, k: int = 0) -> "PolyVector":
        return cls(d, k)

    @classmethod
    def from_terms(cls, d: int, k: int, terms: Iterable[tuple[tuple, MultiPoly]]) -> "PolyVector":
        """Collect ``sum p_T d_{t_1}^..^d_{t_k}`` over arbitrary tuples ``T``."""
        basis: dict[tuple, MultiPoly] = {}
        for t, p in terms:
            key, s = _sort_sign(tuple(t))
            if not s or not p:
                continue
            acc = basis.get(key)
            q = p if s > 0 else -p
            basis[key] = q if acc is None else acc + q
        fk = math.factorial(k)
        return cls(d, k, {key: p.scale(Fraction(1, fk)) for key, p in basis.items()})

    # access

    def component(self, idx: Iterable[int]) -> MultiPoly:
        """Antisymmetric coordinate ``a^{i_1..i_k}`` for any tuple."""
        key, s = _sort_sign(tuple(idx))
        p = self.comps.get(key) if s else None
        if p is None:
            return MultiPoly.zero(self.d)
        return p if s > 0 else -p

    def basis_terms(self) -> list[tuple[tuple, MultiPoly]]:
        """Pairs ``(I, k! a^I)`` over increasing ``I``."""
        fk = math.factorial(self.k)
        return [(i, p.scale(fk)) for i, p in sorted(self.comps.items())]

    def all_terms(self):
        """``(T, a^T)`` over every tuple of distinct indices, for coordinate sums."""
        for key, p in self.comps.items():
            for perm in itertools.permutations(range(self.k)):
                t = tuple(key[q] for q in perm)
                yield t, (p if sign_eps(perm) > 0 else -p)

    @property
    def deg(self) -> int:
        return self.k - 1

    def scalar_part(self) -> MultiPoly:
        return self.comps.get((), MultiPoly.zero(self.d)) if self.k == 0 else MultiPoly.zero(self.d)

    def is_zero(self) -> bool:
        return not self.comps

    def __bool__(self) -> bool:
        return bool(self.comps)

    # arithmetic

    def _same_d(self, other: "PolyVector") -> None:
        if other.d != self.d:
            raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other: "PolyVector") -> "PolyVector":
        self._same_d(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.k != self.k:
            raise ValueError(f"cannot add a {self.k}-vector and a {other.k}-vector")
        comps = dict(self.comps)
        for idx, p in other.comps.items():
            comps[idx] = comps[idx] + p if idx in comps else p
        return PolyVector(self.d, self.k, comps)

    def __neg__(self) -> "PolyVector":
        return self.scale(-1)

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        return self + (-other)

    def scale(self, q) -> "PolyVector":
        return PolyVector(self.d, self.k, {i: p.scale(q) for i, p in self.comps.items()})

    def times(self, f: MultiPoly) -> "PolyVector":
        return PolyVector(self.d, self.k, {i: p * f for i, p in self.comps.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyVector):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.d == other.d
        return self.d == other.d and self.k == other.k and self.comps == other.comps

    def __hash__(self):
        return hash((self.d, self.k, frozenset(self.comps.items())))

    def __repr__(self) -> str:
        if self.is_zero():
            return "PolyVector(0)"
        body = " + ".join(f"({p})d{''.join(map(str, i))}" for i, p in self.basis_terms())
        return f"PolyVector[{self.k}]({body})"


def wedge(a: PolyVector, b: PolyVector) -> PolyVector:
    a._same_d(b)
    terms = []
    for i, p in a.basis_terms():
        for j, q in b.basis_terms():
            terms.append((i + j, p * q))
    return PolyVector.from_terms(a.d, a.k + b.k, terms)


def nabla(a: PolyVector, b: PolyVector) -> PolyVector:
    """The extended flat connection ``nabla_a b``, a ``(|a|+|b|-1)``-vector.

    Coordinate formula: ``sum_r (-1)^(r-1) a^I (d_{i_r} b^J) d_{I minus i_r} ^ d_J``
    summed over all index tuples ``I``, ``J``.
    """
    a._same_d(b)
    if a.k == 0:
        return PolyVector.zero(a.d, max(b.k - 1, 0))
    b_terms = list(b.all_terms())
    terms = []
    for i_tuple, p in a.all_terms():
        for r, i_r in enumerate(i_tuple):
            rest = i_tuple[:r] + i_tuple[r + 1 :]
            sign = -1 if r % 2 else 1
            for j_tuple, q in b_terms:
                dq = q.diff(i_r)
                if dq:
                    terms.append((rest + j_tuple, (p * dq).scale(sign)))
    return PolyVector.from_terms(a.d, a.k + b.k - 1, terms)


def q_bracket(a: PolyVector, b: PolyVector) -> PolyVector:
    """``Q(a, b) = nabla_a b + (-1)^(|a||b|) nabla_b a``."""
    sign = -1 if (a.k * b.k) % 2 else 1
    return nabla(a, b) + nabla(b, a).scale(sign)


def schouten(a: PolyVector, b: PolyVector) -> PolyVector:
    """Schouten bracket ``[a, b] = (-1)^deg(a) Q(a, b)`` with ``deg = k - 1``."""
    return q_bracket(a, b).scale(-1 if a.deg % 2 else 1)


def lie_bracket(xi: PolyVector, eta: PolyVector) -> PolyVector:
    """Classical bracket of vector fields, written out in coordinates."""
    if xi.k != 1 or eta.k != 1:
        raise ValueError("lie_bracket takes two vector fields")
    d = xi.d
    comps = []
    for j in range(1, d + 1):
        total = MultiPoly.zero(d)
        for i in range(1, d + 1):
            total = total + xi.component((i,)) * eta.component((j,)).diff(i)
            total = total - eta.component((i,)) * xi.component((j,)).diff(i)
        comps.append(total)
    return PolyVector.vector_field(comps)


def random_polyvector(rng: random.Random, d: int, k: int, max_degree: int, density: float = 0.6) -> PolyVector:
    comps = {}
    for idx in itertools.combinations(range(1, d + 1), k):
        comps[idx] = random_poly(rng, d, max_degree, density)
    return PolyVector(d, k, comps)


__all__ = [
    "PolyVector",
    "lie_bracket",
    "nabla",
    "q_bracket",
    "random_polyvector",
    "schouten",
    "wedge",
]
