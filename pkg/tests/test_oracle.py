import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from graphcohom import coboundary as cb
from graphcohom.combination import symmetrize
from graphcohom.generators import line, line_generator, wheel, wheel_generator
from graphcohom.graph import VectorGraph, permute
from graphcohom.oracle.checks import (
    algebra_identities,
    foot_collapse,
    q_coordinates,
    scalar_agreement,
    schouten_on_wedges,
    wheel3_formula,
    zeta_ratio,
)
from graphcohom.oracle.cochain import (
    FootedGraph,
    chevalley_d,
    eval_B,
    eval_C,
    random_arguments,
    random_vector_field,
    tau_sign,
    zeta_operator,
)
from graphcohom.oracle.poly import MultiPoly, random_poly
from graphcohom.oracle.polyvector import PolyVector, nabla, q_bracket, random_polyvector, wedge
from graphcohom.signs import relabel_sign

X1 = MultiPoly.variable(3, 1)
X2 = MultiPoly.variable(3, 2)


def test_poly_arithmetic():
    p = X1 * X1 + X2.scale(3)
    assert p.diff(1) == X1.scale(2)
    assert p.diff(3).is_zero()
    assert p.evaluate((2, 1, 0)) == 7
    assert p.degree() == 2
    assert (p - p).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_poly_product_rule(seed):
    rng = random.Random(seed)
    p, q = random_poly(rng, 2, 2), random_poly(rng, 2, 2)
    assert (p * q).diff(1) == p.diff(1) * q + p * q.diff(1)


def test_wedge_examples():
    f = PolyVector.function(X1)
    g = PolyVector.function(X2)
    assert wedge(f, g) == PolyVector.function(X1 * X2)
    d1 = PolyVector.basis(3, (1,))
    assert wedge(d1, d1).is_zero()
    assert PolyVector.basis(3, (2, 1)) == PolyVector.basis(3, (1, 2)).scale(-1)


def test_nabla_of_function_vanishes():
    rng = random.Random(0)
    f = PolyVector.function(random_poly(rng, 3, 2))
    for k in range(3):
        assert nabla(f, random_polyvector(rng, 3, k, 2)).is_zero()


def test_q_on_vector_field_and_function():
    rng = random.Random(1)
    xi = random_vector_field(rng, 3, 2)
    f = PolyVector.function(random_poly(rng, 3, 2))
    xf = sum((xi.component((i,)) * f.scalar_part().diff(i) for i in (1, 2, 3)), MultiPoly.zero(3))
    assert q_bracket(xi, f).scalar_part() == xf
    assert q_bracket(f, xi).scalar_part() == xf
    assert q_coordinates(f, xi).scalar_part() == xf


def test_tau_sign():
    assert tau_sign((0, 2, 4)) == 1
    assert tau_sign((1, 1)) == -1
    assert tau_sign((1, 0, 1)) == 1


def test_eval_examples():
    rng = random.Random(4)
    f = PolyVector.function(random_poly(rng, 3, 2))
    assert eval_C(line(0), [f]) == f
    xi = random_vector_field(rng, 3, 2)
    assert eval_C(line(0), [xi]) == xi
    assert eval_C(line(0), [random_polyvector(rng, 3, 2, 2)]).is_zero()
    assert eval_B(FootedGraph(wheel(3), ()), [f, xi, xi]).is_zero()


def test_wheel3_single_graph():
    rng = random.Random(8)
    a = [random_vector_field(rng, 3, 2) for _ in range(3)]
    expected = MultiPoly.zero(3)
    for i1, i2, i3 in itertools.product((1, 2, 3), repeat=3):
        expected = expected + a[0].component((i1,)).diff(i3) * a[1].component((i2,)).diff(i1) * a[2].component((i3,)).diff(i2)
    assert eval_C(wheel(3), a).scalar_part() == expected


def test_wheel3_symmetrized_formula():
    assert wheel3_formula(seed=3)


def test_foot_relabelings_collapse():
    assert foot_collapse(seed=5)


def _moved(args, sigma):
    out = [None] * len(args)
    for i, s in enumerate(sigma):
        out[s] = args[i]
    return out


def test_relabeling_a_graph_with_its_arguments():
    # only the shuffle of legs among the aerial edges changes; without legs there is no sign
    rng = random.Random(6)
    for g in (line(2), VectorGraph((None, 0, 0)), wheel(3), VectorGraph((1, None, 1))):
        for _ in range(6):
            pattern = [rng.randint(0, 1) for _ in range(g.n)]
            args = random_arguments(rng, pattern, 2, 2)
            sigma = list(range(g.n))
            rng.shuffle(sigma)
            sign = relabel_sign(sigma, pattern) * relabel_sign(sigma, g.parities())
            assert eval_C(permute(g, sigma), _moved(args, sigma)) == eval_C(g, args).scale(sign)


def test_symmetric_cochains_are_graded_symmetric():
    rng = random.Random(16)
    for delta in (wheel_generator(3), line_generator(2), symmetrize(VectorGraph((None, 0, 0)))):
        for _ in range(4):
            pattern = [rng.randint(0, 1) for _ in range(delta.n)]
            args = random_arguments(rng, pattern, 2, 2)
            sigma = list(range(delta.n))
            rng.shuffle(sigma)
            lhs = eval_C(delta, _moved(args, sigma))
            assert lhs == eval_C(delta, args).scale(relabel_sign(sigma, pattern))


def test_chevalley_forms_agree():
    rng = random.Random(9)
    for delta in (line_generator(0), line_generator(1)):
        for _ in range(4):
            args = random_arguments(rng, [rng.randint(0, 1) for _ in range(delta.n + 1)], 2, 2)
            assert chevalley_d(delta, args) == chevalley_d(delta, args, form="q")


def test_chevalley_rejects_nonsymmetric():
    from graphcohom.combination import GraphCombination

    rng = random.Random(0)
    with pytest.raises(ValueError):
        chevalley_d(GraphCombination.from_graph(wheel(3)), random_arguments(rng, [1] * 4, 2, 1))


def test_functions_only_give_zero():
    rng = random.Random(2)
    args = random_arguments(rng, [0, 0, 0, 0], 3, 2)
    assert chevalley_d(wheel_generator(3), args).is_zero()


@pytest.mark.parametrize("name", ["L0", "L1", "R3"])
def test_graph_coboundary_matches_chevalley(name):
    delta = {"L0": line_generator(0), "L1": line_generator(1), "R3": wheel_generator(3)}[name]
    result = scalar_agreement(delta, trials=8, seed=13)
    assert result.agree_scalar and result.agree_full


def test_literal_isolated_sign_disagrees_with_chevalley():
    rng = random.Random(1)
    delta = line_generator(0)
    literal = cb._linear(delta, lambda g: cb.coboundary_graph(g, isolated_sign=-1), False)
    args = random_arguments(rng, [1, 1], 3, 2)
    assert chevalley_d(delta, args) != eval_C(literal, args)
    assert chevalley_d(delta, args) == eval_C(cb.coboundary(delta), args)


def test_zeta_examples():
    rng = random.Random(3)
    xi = random_vector_field(rng, 3, 2)
    assert zeta_operator(1, [xi, xi, xi]).is_zero()
    const = [PolyVector.vector_field([MultiPoly.constant(3, c) for c in (1, 2, 3)]) for _ in range(3)]
    assert zeta_operator(1, const).is_zero()
    assert zeta_ratio(seed=2) == 1
    with pytest.raises(ValueError):
        zeta_operator(1, [xi, xi])


def test_schouten_expansion_on_wedges():
    rng = random.Random(12)
    xs = [random_vector_field(rng, 3, 1) for _ in range(2)]
    ys = [random_vector_field(rng, 3, 1) for _ in range(2)]
    from graphcohom.oracle.polyvector import schouten

    assert schouten(wedge(*xs), wedge(*ys)) == schouten_on_wedges(xs, ys)


def test_algebra_identities_small_batch():
    results = algebra_identities(seed=1, count=10)
    assert all(results.values()), [k for k, v in results.items() if not v]


def test_random_inputs_are_reproducible():
    a = random_arguments(random.Random(7), [0, 1, 2], 3, 2)
    b = random_arguments(random.Random(7), [0, 1, 2], 3, 2)
    assert a == b
    assert Fraction(1) in {abs(c) for p in a for q in p.comps.values() for c in q.terms.values()} or a
