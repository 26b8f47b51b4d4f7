"""Named verification suites with pass/fail checks and failure witnesses."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import coboundary as cb
from .cohomology import cohomology_dim, enumerate_graphs, independence_certificate, solve_coboundary
from .combination import GraphCombination, is_symmetric, sym_orbit, symmetrize
from .generators import (
    MonomialSpec,
    line_generator,
    line_monomial_coboundary,
    line_monomial_vanishes,
    sym_generator_collected,
    wheel,
    wheel_generator,
)
from .graph import all_graphs, brute_force_canonical, canonicalize, format_graph, permute
from .signs import front_insertion_sign, relabel_sign, sign_eps, sign_eps_graded

SUITES = ("signs", "coboundary", "generators", "cohomology", "oracle", "all")


@dataclass
class Check:
    check_id: str
    passed: bool
    witness: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check_id: str, passed: bool, **witness) -> None:
        self.checks.append(Check(check_id, bool(passed), witness))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [{"id": c.check_id, "status": "pass" if c.passed else "fail", "witness": c.witness} for c in self.checks],
        }

    def format_text(self) -> str:
        width = max((len(c.check_id) for c in self.checks), default=10)
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.check_id:<{width}}  {_short(c.witness)}" for c in self.checks]
        lines.append(f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'} ({sum(c.passed for c in self.checks)}/{len(self.checks)})")
        return "\n".join(lines) + "\n"


def _short(witness: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in witness.items())


def _first_failure(items, predicate: Callable) -> object | None:
    for item in items:
        if not predicate(item):
            return item
    return None


# --- suites ------------------------------------------------------------------


def suite_signs(report: VerificationReport, rng: random.Random) -> None:
    for n in range(1, 6):
        bad = None
        for perm in itertools.permutations(range(n)):
            par = [rng.randint(0, 1) for _ in range(n)]
            odd = [p for p in perm if par[p]]
            brute = sign_eps(sorted(range(len(odd)), key=lambda q: odd[q]))
            if sign_eps_graded(perm, par) != brute:
                bad = (perm, par)
                break
        report.add(f"graded-sign-brute-n{n}", bad is None, counterexample=bad)
    ok = True
    for _ in range(200):
        n = rng.randint(1, 6)
        par = [rng.randint(0, 1) for _ in range(n)]
        s = list(range(n))
        t = list(range(n))
        rng.shuffle(s)
        rng.shuffle(t)
        st = [s[t[k]] for k in range(n)]
        moved = [0] * n
        for k in range(n):
            moved[t[k]] = par[k]
        if relabel_sign(st, par) != relabel_sign(s, moved) * relabel_sign(t, par):
            ok = False
            break
    report.add("relabel-sign-homomorphism", ok)
    report.add("front-insertion-example", front_insertion_sign(2, (1, 1, 1)) == 1)
    line_ok = all(front_insertion_sign(i + 1, (0,) + (1,) * (i + 2)) == (-1) ** i for i in range(6))
    report.add("front-insertion-line", line_ok)
    for n in range(0, 5):
        bad = None
        for g in all_graphs(n):
            canon = canonicalize(g)
            graph, sign, auts = brute_force_canonical(g)
            if canon.automorphisms != auts or (sign == 0) != (canon.sign == 0):
                bad = g
                break
            if canon.sign and canonicalize(canon.graph)[:2] != (canon.graph, 1):
                bad = g
                break
        report.add(f"canonical-form-vs-brute-n{n}", bad is None, witness=format_graph(bad) if bad else None)


def suite_coboundary(report: VerificationReport, max_n: int = 4) -> None:
    for n in range(1, max_n + 1):
        basis = enumerate_graphs(n).graphs
        dd = _first_failure(basis, lambda g: cb.coboundary(cb.coboundary(sym_orbit(g))).is_zero())
        report.add(f"dd-zero-n{n}", dd is None, witness=format_graph(dd) if dd else None)
        sym = _first_failure(basis, lambda g: is_symmetric(cb.coboundary(sym_orbit(g))))
        report.add(f"symmetry-preserved-n{n}", sym is None, witness=format_graph(sym) if sym else None)
        alt = _first_failure(basis, lambda g: cb.coboundary(sym_orbit(g)) == cb.coboundary_alt(sym_orbit(g)))
        report.add(f"grouped-formula-n{n}", alt is None, witness=format_graph(alt) if alt else None)
        red = _first_failure(
            basis, lambda g: cb.coboundary(sym_orbit(g)).collect() == cb.reduced_coboundary(sym_orbit(g).collect())
        )
        report.add(f"reduced-vs-labeled-n{n}", red is None, witness=format_graph(red) if red else None)
    counts_ok = True
    for g in itertools.chain.from_iterable(all_graphs(n) for n in range(1, 5)):
        for i in range(g.n):
            fin = len(g.fin(i))
            deb = g.deb(i)
            if fin == 0 and deb == 0:
                expected = 1
            elif fin + deb == 1:
                expected = 0
            elif deb == 1:
                expected = 2**fin - 1
            else:
                expected = 2**fin - 2
            j = g.n  # new vertex last, so i keeps its label
            if len(cb.proper_splits_in(g, i, j)) != expected:
                counts_ok = False
    report.add("split-counts", counts_ok)
    order_ok = True
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n).graphs:
            c = sym_orbit(g)
            d = cb.coboundary(c)
            if d and cb.combination_order(d) > cb.order_plus_one_plus(cb.combination_order(c)):
                order_ok = False
    report.add("order-bound", order_ok)
    report.add("isolated-vertex", cb.coboundary(line_generator(0)) == line_generator(1))
    holds, fails = homotopy_identity_survey(max_n)
    report.add("homotopy-identity-instances", len(holds) >= 3, holding=len(holds), failing=len(fails))


def homotopy_identity_survey(max_n: int) -> tuple[list, list]:
    holds, fails = [], []
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n).graphs:
            sides = cb.homotopy_identity_sides(sym_orbit(g))
            if sides is None:
                continue
            (holds if sides[0] == sides[1] else fails).append(g)
    return holds, fails


def line_constants(max_length: int = 6) -> dict[int, Fraction]:
    """``c`` with ``d L_{2l} = c L_{2l+1}`` for even lengths up to ``max_length``."""
    out = {}
    for length in range(0, max_length + 1, 2):
        image = cb.reduced_coboundary(sym_generator_collected(MonomialSpec({length: 1})))
        target = sym_generator_collected(MonomialSpec(odd_lines=(length + 1,)))
        out[length] = proportionality(image, target)
    return out


def proportionality(a: GraphCombination, b: GraphCombination) -> Fraction | None:
    """``c`` with ``a = c b``, or ``None``."""
    if b.is_zero():
        return Fraction(0) if a.is_zero() else None
    g = next(iter(b.terms))
    c = a.coefficient(g) / b.terms[g]
    return c if a == b.scale(c) else None


LINE_MONOMIALS = (
    MonomialSpec({0: 1}, (1,)),
    MonomialSpec({2: 1}, (3,)),
    MonomialSpec({0: 2}, (1,)),
    MonomialSpec({}, (1, 3)),
    MonomialSpec({0: 1}, (1, 3)),
    MonomialSpec({0: 2}),
    MonomialSpec({0: 1, 2: 1}),
    MonomialSpec({0: 1}, (3,)),
    MonomialSpec({2: 1}, (1,)),
    MonomialSpec({0: 1, 2: 1}, (1,)),
    MonomialSpec({0: 1}, (5,)),
)


def suite_generators(report: VerificationReport) -> None:
    for k in (1, 2, 3):
        report.add(f"even-wheel-{2 * k}-vanishes", symmetrize(wheel(2 * k)).is_zero())
    for k in (1, 3, 5):
        image = cb.reduced_coboundary(sym_generator_collected(MonomialSpec(wheels=(k,))))
        report.add(f"wheel-{k}-cocycle", image.is_zero())
    for k in (3, 5):
        report.add(f"wheel-{k}-not-coboundary", solve_coboundary(wheel_generator(k)) is None)
    for length in (1, 3, 5):
        image = cb.reduced_coboundary(sym_generator_collected(MonomialSpec(odd_lines=(length,))))
        report.add(f"odd-line-{length}-cocycle", image.is_zero())
    constants = line_constants(4)
    for length, c in constants.items():
        report.add(f"even-line-{length}-constant", c is not None and c != 0, constant=str(c))
    report.add("duplicate-wheels-vanish", symmetrize(MonomialSpec(wheels=(3, 3)).graph()).is_zero())
    report.add("duplicate-odd-lines-vanish", symmetrize(MonomialSpec(odd_lines=(1, 1)).graph()).is_zero())
    for spec in LINE_MONOMIALS:
        image = cb.reduced_coboundary(sym_generator_collected(spec))
        predicted = line_monomial_coboundary(spec, constants)
        ok = image.is_zero() == line_monomial_vanishes(spec) and image == predicted
        report.add(f"line-monomial {spec}", ok, vanishes=image.is_zero())
    g = MonomialSpec({0: 1}, (1,), (3,)).graph()
    rev = [g.n - 1 - v for v in range(g.n)]
    lhs = symmetrize(permute(g, rev))
    rhs = symmetrize(g).scale(relabel_sign(rev, g.parities()))
    report.add("arrangement-sign", lhs == rhs)


def suite_cohomology(report: VerificationReport, max_n: int = 6, include_one: bool = True) -> None:
    for n in range(0, max_n + 1):
        r = cohomology_dim(n, include_one)
        report.add(f"h-dim-n{n}", r.h_dim == r.expected, h_dim=r.h_dim, expected=r.expected)
    for n in range(0, max_n + 1):
        cert = independence_certificate(n, include_one)
        report.add(f"independence-n{n}", cert.independent, predicted=cert.predicted)


def suite_oracle(report: VerificationReport, seed: int, trials: int = 20, d: int = 3, max_degree: int = 2) -> None:
    from .oracle.checks import algebra_identities, scalar_agreement, wheel3_formula, zeta_ratio

    for name, delta in (("L0", line_generator(0)), ("L1", line_generator(1)), ("R3", wheel_generator(3))):
        result = scalar_agreement(delta, trials, seed, d, max_degree)
        report.add(f"scalar-agreement-{name}", result.agree_scalar, trials=result.trials, agree_full=result.agree_full)
    report.add("wheel-3-formula", wheel3_formula(seed, d, max_degree))
    ratio = zeta_ratio(seed, d)
    report.add("zeta-vs-wheel-3", ratio is not None, ratio=str(ratio))
    for name, ok in algebra_identities(seed, 50, d=2, max_degree=2).items():
        report.add(name, ok)


def run_suite(suite: str, seed: int = 0) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = VerificationReport(suite, seed=seed)
    rng = random.Random(seed)
    if suite in ("signs", "all"):
        suite_signs(report, rng)
    if suite in ("coboundary", "all"):
        suite_coboundary(report)
    if suite in ("generators", "all"):
        suite_generators(report)
    if suite in ("cohomology", "all"):
        suite_cohomology(report)
    if suite in ("oracle", "all"):
        suite_oracle(report, seed)
    return report


__all__ = [
    "Check",
    "LINE_MONOMIALS",
    "SUITES",
    "VerificationReport",
    "homotopy_identity_survey",
    "line_constants",
    "proportionality",
    "run_suite",
]
