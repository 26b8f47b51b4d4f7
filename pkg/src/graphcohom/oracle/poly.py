"""Multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping


class MultiPoly:
    """A polynomial in ``x_1..x_d`` stored as ``{exponent tuple: Fraction}``."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Mapping[tuple, object] | None = None):
        self.d = d
        self.terms: dict[tuple, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != d:
                    raise ValueError(f"exponent {e} has wrong length for d={d}")
                c = Fraction(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def constant(cls, d: int, c=1) -> "MultiPoly":
        return cls(d, {(0,) * d: c})

    @classmethod
    def variable(cls, d: int, i: int) -> "MultiPoly":
        """The coordinate ``x_i`` with ``i`` in ``1..d``."""
        e = [0] * d
        e[i - 1] = 1
        return cls(d, {tuple(e): 1})

    @classmethod
    def zero(cls, d: int) -> "MultiPoly":
        return cls(d)

    def _same(self, other: "MultiPoly") -> None:
        if other.d != self.d:
            raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        p = MultiPoly(self.d)
        p.terms = out
        return p

    def __neg__(self) -> "MultiPoly":
        p = MultiPoly(self.d)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, q) -> "MultiPoly":
        q = Fraction(q)
        p = MultiPoly(self.d)
        if q:
            p.terms = {e: c * q for e, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._same(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.d, out)

    __rmul__ = scale

    def diff(self, i: int) -> "MultiPoly":
        """Partial derivative in ``x_i``, ``i`` in ``1..d``."""
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = c * e[k]
        return MultiPoly(self.d, out)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term *= Fraction(x) ** k
            total += term
        return total

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}" for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def monomials(d: int, max_degree: int) -> list[tuple]:
    """All exponent vectors in ``d`` variables of total degree at most ``max_degree``."""
    if d == 0:
        return [()]
    out = []
    for k in range(max_degree + 1):
        for rest in monomials(d - 1, max_degree - k):
            out.append((k, *rest))
    return sorted(out)


def random_poly(rng: random.Random, d: int, max_degree: int, density: float = 0.6, bound: int = 3) -> MultiPoly:
    """Random polynomial with small rational coefficients ``p/q``, ``|p| <= bound``, ``1 <= q <= bound``."""
    terms = {}
    for e in monomials(d, max_degree):
        if rng.random() < density:
            terms[e] = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return MultiPoly(d, terms)
