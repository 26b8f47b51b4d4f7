"""Randomized exact checks tying the graph coboundary to the symbolic operators."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from ..coboundary import coboundary
from ..combination import GraphCombination, symmetrize
from ..generators import line, wheel
from .cochain import chevalley_d, degree_patterns, eval_C, random_arguments, random_vector_field, zeta_operator
from .poly import MultiPoly, random_poly
from .polyvector import PolyVector, lie_bracket, nabla, q_bracket, random_polyvector, schouten, wedge


@dataclass
class OracleResult:
    agree_scalar: bool
    agree_full: bool
    trials: int
    seed: int
    witness: str | None = None

    def to_json(self) -> dict:
        return {"agree_scalar": self.agree_scalar, "agree_full": self.agree_full, "trials": self.trials, "seed": self.seed}


def _arrows(delta: GraphCombination) -> int:
    return next(iter(delta.terms)).arrow_count if delta.terms else 0


def scalar_agreement(
    delta: GraphCombination, trials: int = 20, seed: int = 42, d: int = 3, max_degree: int = 2, full_component: bool = True
) -> OracleResult:
    """Compare the Chevalley coboundary of ``C_delta`` with ``C`` of the graph coboundary.

    Arguments are functions and vector fields.  The scalar comparison uses
    degree patterns whose output is a function; the full comparison uses
    an unconstrained pattern per trial and compares whole polyvectors.
    """
    rng = random.Random(seed)
    image = coboundary(delta)
    n1 = delta.n + 1
    patterns = degree_patterns(n1, _arrows(delta) + 1, top=1)
    agree_scalar = agree_full = True
    witness = None
    for t in range(trials):
        if patterns:
            args = random_arguments(rng, patterns[t % len(patterns)], d, max_degree)
            lhs = chevalley_d(delta, args).scalar_part()
            rhs = eval_C(image, args).scalar_part()
            if lhs != rhs:
                agree_scalar = False
                witness = witness or f"trial {t}: {lhs} != {rhs}"
        if full_component:
            pattern = [rng.randint(0, 1) for _ in range(n1)]
            args = random_arguments(rng, pattern, d, max_degree)
            if chevalley_d(delta, args) != eval_C(image, args):
                agree_full = False
    return OracleResult(agree_scalar and bool(patterns), agree_full, trials, seed, witness)


def _chain(args, order) -> MultiPoly:
    """``sum d_{i_last} a_{o1}^{i_1} d_{i_1} a_{o2}^{i_2} ...`` around the cycle ``order``."""
    d = args[0].d
    total = MultiPoly.zero(d)
    size = len(order)
    for ind in itertools.product(range(1, d + 1), repeat=size):
        prod = MultiPoly.constant(d)
        for p, v in enumerate(order):
            prod = prod * args[v].component((ind[p],)).diff(ind[p - 1])
        total = total + prod
    return total


def wheel3_formula(seed: int = 42, d: int = 3, max_degree: int = 2, trials: int = 3) -> bool:
    """``C`` of the symmetrized 3-wheel against the two-term formula with coefficients 3 and -3."""
    rng = random.Random(seed)
    delta = symmetrize(wheel(3))
    for _ in range(trials):
        args = [random_vector_field(rng, d, max_degree) for _ in range(3)]
        expected = _chain(args, (0, 1, 2)).scale(3) - _chain(args, (0, 2, 1)).scale(3)
        if eval_C(delta, args).scalar_part() != expected:
            return False
    return True


def zeta_ratio(seed: int = 42, d: int = 3, max_degree: int = 1) -> Fraction | None:
    """Ratio of the wheel cocycle formula to ``C`` of the symmetrized 3-wheel, if constant."""
    rng = random.Random(seed)
    ratio = None
    for _ in range(3):
        args = [random_vector_field(rng, d, max_degree) for _ in range(3)]
        z = zeta_operator(1, args)
        c = eval_C(symmetrize(wheel(3)), args).scalar_part()
        if c.is_zero():
            if not z.is_zero():
                return None
            continue
        e = next(iter(c.terms))
        r = z.terms.get(e, Fraction(0)) / c.terms[e]
        if z != c.scale(r) or (ratio is not None and r != ratio):
            return None
        ratio = r
    return ratio


def foot_collapse(seed: int = 42, d: int = 3, max_degree: int = 2) -> bool:
    """Summing all foot assignments with weight ``1/m!`` equals one ordered assignment."""
    rng = random.Random(seed)
    for graph in (line(0), line(1), line(2), wheel(1), wheel(3)):
        for pattern in itertools.product((0, 1), repeat=graph.n):
            args = random_arguments(rng, pattern, d, max_degree)
            if eval_C(graph, args) != eval_C(graph, args, weighted=False):
                return False
    return True


def _sign(p: int) -> int:
    return -1 if p % 2 else 1


def q_coordinates(a: PolyVector, b: PolyVector) -> PolyVector:
    """``Q`` from its two-sum coordinate expression, independent of ``nabla``.

    The second sum carries ``(-1)^(k+s-1)`` (``s`` 1-based); this is the sign
    that gives ``Q(f, xi) = xi f``.
    """
    if a.k + b.k == 0:
        return PolyVector.zero(a.d)
    terms = []
    b_terms = list(b.all_terms())
    a_terms = list(a.all_terms())
    for i_t, p in a_terms:
        for j_t, q in b_terms:
            for r in range(a.k):
                dq = q.diff(i_t[r])
                if dq:
                    terms.append((i_t[:r] + i_t[r + 1 :] + j_t, (p * dq).scale(_sign(r))))
            for s in range(b.k):
                dp = p.diff(j_t[s])
                if dp:
                    terms.append((i_t + j_t[:s] + j_t[s + 1 :], (q * dp).scale(_sign(a.k + s))))
    return PolyVector.from_terms(a.d, a.k + b.k - 1, terms)


def _wedge_all(items, d: int) -> PolyVector:
    out = PolyVector.function(MultiPoly.constant(d))
    for x in items:
        out = wedge(out, x)
    return out


def schouten_on_wedges(xs, ys) -> PolyVector:
    """The expansion of ``[x_1^..^x_k, y_1^..^y_l]`` over pairwise Lie brackets."""
    d = xs[0].d
    k, l = len(xs), len(ys)
    total = PolyVector.zero(d, k + l - 1)
    for i in range(k):
        for j in range(l):
            parts = xs[:i] + xs[i + 1 :] + [lie_bracket(xs[i], ys[j])] + ys[:j] + ys[j + 1 :]
            total = total + _wedge_all(parts, d).scale(_sign(k - (i + 1) + (j + 1) - 1))
    return total


def algebra_identities(seed: int = 42, count: int = 50, d: int = 2, max_degree: int = 2) -> dict[str, bool]:
    """Each identity checked on ``count`` random instances; tensor degrees range over 0..2."""
    rng = random.Random(seed)

    def pv(k=None):
        return random_polyvector(rng, d, rng.randint(0, 2) if k is None else k, max_degree)

    results: dict[str, bool] = {}

    def record(name: str, ok: bool) -> None:
        results[name] = results.get(name, True) and ok

    for _ in range(count):
        a, b, c = pv(), pv(), pv()
        xi, eta, zeta = pv(1), pv(1), pv(1)
        f = pv(0)
        sab = _sign(a.k * b.k)
        record("q-graded-symmetry", q_bracket(a, b) == q_bracket(b, a).scale(sab))
        record("q-coordinate-formula", q_bracket(a, b) == q_coordinates(a, b))
        lhs = q_bracket(a, wedge(b, c))
        rhs = wedge(q_bracket(a, b), c) + wedge(b, q_bracket(a, c)).scale(_sign(b.k * (a.k - 1)))
        record("q-derivation", lhs == rhs)
        lhs = q_bracket(wedge(a, b), c)
        rhs = wedge(a, q_bracket(b, c)).scale(_sign(a.k)) + wedge(q_bracket(a, c), b).scale(_sign(b.k * c.k))
        record("q-left-leibniz", lhs == rhs)
        record("nabla-derivation", nabla(xi, wedge(a, b)) == wedge(nabla(xi, a), b) + wedge(a, nabla(xi, b)))
        lhs = nabla(wedge(a, b), c)
        rhs = wedge(a, nabla(b, c)).scale(_sign(a.k)) + wedge(nabla(a, c), b).scale(_sign(b.k * c.k))
        record("nabla-leibniz", lhs == rhs)
        record("nabla-function", nabla(f, a).is_zero())
        record("schouten-via-q", schouten(a, b) == q_bracket(a, b).scale(_sign(a.deg)))
        record("schouten-antisymmetry", schouten(b, a) == schouten(a, b).scale(-_sign(a.deg * b.deg)))
        record("nabla-lie-bracket", nabla(xi, eta) - nabla(eta, xi) == lie_bracket(xi, eta))
        record("schouten-vector-fields", schouten(xi, eta) == lie_bracket(xi, eta))
        fx = PolyVector.function(random_poly(rng, d, max_degree))
        record("schouten-vector-function", schouten(xi, fx) == nabla(xi, fx))
        lhs = schouten(xi, schouten(eta, zeta))
        rhs = schouten(schouten(xi, eta), zeta) + schouten(eta, schouten(xi, zeta))
        record("schouten-jacobi", lhs == rhs)
        xs = [pv(1) for _ in range(rng.randint(1, 2))]
        ys = [pv(1) for _ in range(rng.randint(1, 2))]
        record("schouten-wedge-expansion", schouten(_wedge_all(xs, d), _wedge_all(ys, d)) == schouten_on_wedges(xs, ys))
    return results


__all__ = [
    "OracleResult",
    "algebra_identities",
    "foot_collapse",
    "q_coordinates",
    "scalar_agreement",
    "schouten_on_wedges",
    "wheel3_formula",
    "zeta_ratio",
]
