"""Wheels, lines and their symmetrized products."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .combination import GraphCombination, symmetrize
from .graph import VectorGraph, wedge_union


def wheel(k: int) -> VectorGraph:
    """Directed cycle 0->1->...->k-1->0; ``wheel(1)`` is a loop."""
    if k < 1:
        raise ValueError(f"wheel length must be at least 1, got {k}")
    return VectorGraph(tuple((i + 1) % k for i in range(k)))


def line(length: int) -> VectorGraph:
    """Directed path with arrows i+1 -> i on ``length + 1`` vertices."""
    if length < 0:
        raise ValueError(f"line length must be nonnegative, got {length}")
    return VectorGraph((None,) + tuple(range(length)))


@dataclass(frozen=True)
class MonomialSpec:
    """A product of lines and wheels.

    ``even_lines`` maps an even line length to its multiplicity; odd lines
    and wheels are listed by length.  Repeated odd components are accepted
    and make the symmetrization vanish.
    """

    even_lines: dict = field(default_factory=dict)
    odd_lines: tuple = ()
    wheels: tuple = ()

    def __post_init__(self):
        for length, mult in self.even_lines.items():
            if length < 0 or length % 2 or mult < 0:
                raise ValueError(f"bad even line entry {length}: {mult}")
        if any(length < 0 or length % 2 == 0 for length in self.odd_lines):
            raise ValueError(f"odd line lengths must be odd: {self.odd_lines}")
        if any(k < 1 for k in self.wheels):
            raise ValueError(f"wheel lengths must be positive: {self.wheels}")

    @classmethod
    def from_json(cls, data: dict) -> "MonomialSpec":
        even = {int(k): int(v) for k, v in data.get("even_lines", {}).items()}
        return cls(even, tuple(data.get("odd_lines", ())), tuple(data.get("wheels", ())))

    def components(self) -> list[VectorGraph]:
        """Components in the standard arrangement: even lines, odd lines, wheels."""
        parts = []
        for length in sorted(self.even_lines):
            parts.extend([line(length)] * self.even_lines[length])
        parts.extend(line(length) for length in sorted(self.odd_lines))
        parts.extend(wheel(k) for k in sorted(self.wheels))
        return parts

    def graph(self) -> VectorGraph:
        g = VectorGraph(())
        for part in self.components():
            g = wedge_union(g, part)
        return g

    @property
    def n(self) -> int:
        return self.graph().n

    def __str__(self) -> str:
        bits = [f"L{length}^{m}" for length, m in sorted(self.even_lines.items()) if m]
        bits += [f"L{length}" for length in sorted(self.odd_lines)]
        bits += [f"R{k}" for k in sorted(self.wheels)]
        return " ^ ".join(bits) if bits else "1"


def sym_generator(spec: MonomialSpec) -> GraphCombination:
    return symmetrize(spec.graph())


def sym_generator_collected(spec: MonomialSpec) -> GraphCombination:
    """``sym_generator(spec)`` collected on canonical keys, without expanding the orbit."""
    g = spec.graph()
    return GraphCombination.collected(g.n, [(g, math.factorial(g.n))])


def wheel_generator(k: int) -> GraphCombination:
    return symmetrize(wheel(k))


def line_generator(length: int) -> GraphCombination:
    return symmetrize(line(length))


def distinct_odd_partitions(n: int, include_one: bool = True) -> list[tuple[int, ...]]:
    """Partitions of ``n`` into distinct odd parts, each listed in increasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    smallest = 1 if include_one else 3
    found = []

    def extend(rest: int, least: int, acc: tuple) -> None:
        if rest == 0:
            found.append(acc)
            return
        for part in range(least, rest + 1, 2):
            extend(rest - part, part + 2, acc + (part,))

    extend(n, smallest, ())
    return sorted(found)


def predicted_basis(n: int, include_one: bool = True) -> list[GraphCombination]:
    return [sym_generator(MonomialSpec(wheels=p)) for p in distinct_odd_partitions(n, include_one)]


def predicted_basis_collected(n: int, include_one: bool = True) -> list[GraphCombination]:
    return [sym_generator_collected(MonomialSpec(wheels=p)) for p in distinct_odd_partitions(n, include_one)]


def line_monomial_vanishes(spec: MonomialSpec) -> bool:
    """Every even line length ``2i`` present has a matching odd line of length ``2i+1``."""
    odd = set(spec.odd_lines)
    return all(length + 1 in odd for length, m in spec.even_lines.items() if m)


def line_monomial_coboundary(spec: MonomialSpec, constants) -> GraphCombination:
    """Predicted collected coboundary of a line monomial.

    Each even line of length ``2r`` is replaced in turn by ``L_{2r+1}``,
    weighted by its multiplicity and by ``constants[2r]``, the scalar with
    ``d L_{2r} = constants[2r] L_{2r+1}``.  Terms with a repeated odd line vanish, and the
    sign comes from reordering the new odd line into place.
    """
    if spec.wheels:
        raise ValueError("line monomials only")
    n = spec.n + 1
    result = GraphCombination(n)
    for length, mult in spec.even_lines.items():
        if not mult:
            continue
        even = dict(spec.even_lines)
        even[length] -= 1
        new_odd = length + 1
        # position of the new odd line among the odd lines
        term = MonomialSpec({k: v for k, v in even.items() if v}, spec.odd_lines + (new_odd,))
        if len(set(term.odd_lines)) != len(term.odd_lines):
            continue
        # The arrangement lists the new odd line first among odd lines; each
        # odd line it has to pass is odd-graded, so count them.
        passed = sum(1 for k in spec.odd_lines if k < new_odd)
        sign = -1 if passed % 2 else 1
        result = result + sym_generator_collected(term).scale(Fraction(constants[length]) * mult * sign)
    return result


__all__ = [
    "MonomialSpec",
    "distinct_odd_partitions",
    "line",
    "line_generator",
    "line_monomial_coboundary",
    "line_monomial_vanishes",
    "predicted_basis",
    "predicted_basis_collected",
    "sym_generator",
    "sym_generator_collected",
    "wheel",
    "wheel_generator",
]
