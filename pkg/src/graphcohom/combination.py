"""Finite rational linear combinations of vector graphs."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .graph import VectorGraph, canonicalize, format_graph, orbit, parse_graph


class GraphCombination:
    """A formal sum ``sum a_g g`` over graphs sharing one vertex count.

    Terms are kept exactly as given (labeled graphs).  A symmetric
    combination is determined by its coefficients on canonical
    representatives; :meth:`collect` maps any combination onto canonical
    keys, multiplying each coefficient by the relabeling sign and dropping
    graphs with an odd automorphism.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[VectorGraph, object] | None = None):
        self.n = n
        self.terms: dict[VectorGraph, Fraction] = {}
        if terms:
            for g, c in terms.items():
                self.add_term(g, c)

    @classmethod
    def from_graph(cls, g: VectorGraph, coeff=1) -> "GraphCombination":
        return cls(g.n, {g: coeff})

    @classmethod
    def collected(cls, n: int, terms: Iterable[tuple[VectorGraph, object]]) -> "GraphCombination":
        """Build a combination on canonical keys from arbitrary labeled terms."""
        c = cls(n)
        for g, a in terms:
            c.add_canonical(g, a)
        return c

    def _check(self, g: VectorGraph) -> None:
        if g.n != self.n:
            raise ValueError(f"graph on {g.n} vertices added to a combination on {self.n}")

    def add_term(self, g: VectorGraph, coeff) -> None:
        self._check(g)
        coeff = Fraction(coeff)
        if not coeff:
            return
        total = self.terms.get(g, 0) + coeff
        if total:
            self.terms[g] = total
        else:
            del self.terms[g]

    def add_canonical(self, g: VectorGraph, coeff) -> None:
        self._check(g)
        canon = canonicalize(g)
        if canon.sign:
            self.add_term(canon.graph, canon.sign * Fraction(coeff))

    def collect(self) -> "GraphCombination":
        return GraphCombination.collected(self.n, self.terms.items())

    def is_collected(self) -> bool:
        return all(canonicalize(g)[:2] == (g, 1) for g in self.terms)

    # arithmetic

    def copy(self) -> "GraphCombination":
        c = GraphCombination(self.n)
        c.terms = dict(self.terms)
        return c

    def __add__(self, other: "GraphCombination") -> "GraphCombination":
        if not isinstance(other, GraphCombination):
            return NotImplemented
        if other.n != self.n and other.terms and self.terms:
            raise ValueError(f"cannot add combinations on {self.n} and {other.n} vertices")
        result = self.copy() if self.terms or not other.terms else GraphCombination(other.n)
        for g, a in other.terms.items():
            result.add_term(g, a)
        return result

    def __neg__(self) -> "GraphCombination":
        return self.scale(-1)

    def __sub__(self, other: "GraphCombination") -> "GraphCombination":
        return self + (-other)

    def scale(self, q) -> "GraphCombination":
        q = Fraction(q)
        c = GraphCombination(self.n)
        if q:
            c.terms = {g: a * q for g, a in self.terms.items()}
        return c

    def __rmul__(self, q) -> "GraphCombination":
        return self.scale(q)

    def __mul__(self, q) -> "GraphCombination":
        return self.scale(q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphCombination):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def support(self) -> list[VectorGraph]:
        return sorted(self.terms, key=lambda g: g.edges())

    def coefficient(self, g: VectorGraph) -> Fraction:
        return self.terms.get(g, Fraction(0))

    def sorted_terms(self) -> list[tuple[VectorGraph, Fraction]]:
        return [(g, self.terms[g]) for g in self.support()]

    def __repr__(self) -> str:
        if not self.terms:
            return f"GraphCombination(n={self.n}, 0)"
        body = " + ".join(f"{a}*[{format_graph(g)}]" for g, a in self.sorted_terms())
        return f"GraphCombination({body})"


def add(c1: GraphCombination, c2: GraphCombination) -> GraphCombination:
    return c1 + c2


def scale(q, c: GraphCombination) -> GraphCombination:
    return c.scale(q)


def is_zero(c: GraphCombination) -> bool:
    return c.is_zero()


def support(c: GraphCombination) -> list[VectorGraph]:
    return c.support()


# --- symmetrization ----------------------------------------------------------


def symmetrize(g: VectorGraph) -> GraphCombination:
    """Unnormalized symmetrization ``sum over S_n of eps(sigma) sigma(g)``.

    Each orbit element is reached ``|Aut g|`` times with the same sign, so
    the sum is ``|Aut g|`` times the orbit sum (or 0 for odd automorphisms).
    """
    canon = canonicalize(g)
    if not canon.sign:
        return GraphCombination(g.n)
    return sym_orbit(g).scale(canon.automorphisms)


def sym_orbit(g: VectorGraph) -> GraphCombination:
    """Orbit-normalized symmetrization: coefficient +-1 on each orbit element, +1 on ``g``."""
    c = GraphCombination(g.n)
    c.terms = {h: Fraction(s) for h, s in orbit(g).items()}
    return c


def symmetrize_combination(c: GraphCombination) -> GraphCombination:
    result = GraphCombination(c.n)
    for g, a in c:
        result = result + symmetrize(g).scale(a)
    return result


def is_symmetric(c: GraphCombination) -> bool:
    """True iff ``c`` is a rational combination of symmetrized graphs.

    Equivalently, for every graph ``g`` and relabeling ``sigma`` the
    coefficient of ``sigma(g)`` is ``eps(sigma)`` times that of ``g``.
    """
    classes: dict[VectorGraph, list[tuple[VectorGraph, Fraction]]] = {}
    for g, a in c:
        canon = canonicalize(g)
        if not canon.sign:
            return False
        classes.setdefault(canon.graph, []).append((g, a * canon.sign))
    for rep, members in classes.items():
        reduced = {a for _, a in members}
        if len(reduced) != 1:
            return False
        orbit_size = math.factorial(c.n) // canonicalize(rep).automorphisms
        if len(members) != orbit_size:
            return False
    return True


def expand_symmetric(collected: GraphCombination) -> GraphCombination:
    """The symmetric combination whose coefficient on each canonical key is given."""
    result = GraphCombination(collected.n)
    for g, a in collected:
        for h, s in orbit(g).items():
            result.add_term(h, a * s)
    return result


def symmetric_coordinates(c: GraphCombination) -> GraphCombination:
    """Coefficients of a symmetric combination on its canonical representatives."""
    out = GraphCombination(c.n)
    for g, a in c:
        if canonicalize(g).graph == g:
            out.add_term(g, a)
    return out


# --- text format -------------------------------------------------------------


def format_combination(c: GraphCombination) -> str:
    """One ``<rational> * <graph literal>`` line per term."""
    if not c.terms:
        return f"# zero combination on n={c.n} vertices\n"
    lines = [f"{a} * {format_graph(g)}" for g, a in c.sorted_terms()]
    return "\n".join(lines) + "\n"


def parse_combination(text: str) -> GraphCombination:
    n = None
    terms: list[tuple[VectorGraph, Fraction]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if "n=" in line and n is None:
                tail = line.split("n=", 1)[1].split()[0]
                if tail.isdigit():
                    n = int(tail)
            continue
        coeff, star, literal = line.partition("*")
        if not star:
            raise ValueError(f"malformed term {line!r}")
        g = parse_graph(literal)
        if n is None:
            n = g.n
        terms.append((g, Fraction(coeff.strip())))
    c = GraphCombination(n if n is not None else 0)
    for g, a in terms:
        c.add_term(g, a)
    return c
