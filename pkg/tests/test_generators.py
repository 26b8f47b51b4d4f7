from fractions import Fraction

import pytest

from graphcohom import coboundary as cb
from graphcohom.combination import symmetrize
from graphcohom.generators import (
    MonomialSpec,
    distinct_odd_partitions,
    line,
    line_generator,
    line_monomial_coboundary,
    line_monomial_vanishes,
    predicted_basis,
    sym_generator,
    sym_generator_collected,
    wheel,
    wheel_generator,
)
from graphcohom.graph import VectorGraph


def test_constructors():
    assert wheel(3) == VectorGraph((1, 2, 0))
    assert line(0) == VectorGraph((None,))
    assert wheel(1) == VectorGraph((0,))
    assert line(2) == VectorGraph((None, 0, 1))


def test_vanishing_generators():
    assert sym_generator(MonomialSpec(wheels=(3, 3))).is_zero()
    assert sym_generator(MonomialSpec(odd_lines=(1, 1))).is_zero()
    assert sym_generator(MonomialSpec(wheels=(3,))) == symmetrize(wheel(3))
    assert not wheel_generator(3).is_zero()
    for k in (1, 2, 3):
        assert symmetrize(wheel(2 * k)).is_zero()


def test_collected_generator_matches_expanded():
    for spec in (MonomialSpec({0: 1}, (1,)), MonomialSpec(wheels=(1, 3)), MonomialSpec({2: 1})):
        assert sym_generator(spec).collect() == sym_generator_collected(spec)


def test_spec_json_and_validation():
    spec = MonomialSpec.from_json({"even_lines": {"0": 2}, "odd_lines": [3], "wheels": [5]})
    assert spec.n == 2 + 4 + 5
    assert str(MonomialSpec({0: 1}, (1,))) == "L0^1 ^ L1"
    with pytest.raises(ValueError):
        MonomialSpec({1: 1})
    with pytest.raises(ValueError):
        MonomialSpec(wheels=(0,))
    with pytest.raises(ValueError):
        MonomialSpec(odd_lines=(2,))


def test_partitions():
    assert distinct_odd_partitions(8) == [(1, 7), (3, 5)]
    assert distinct_odd_partitions(3) == distinct_odd_partitions(3, include_one=False) == [(3,)]
    assert distinct_odd_partitions(2) == []
    assert distinct_odd_partitions(4, include_one=False) == []
    assert predicted_basis(2) == []
    assert predicted_basis(3) == [wheel_generator(3)]
    assert len(predicted_basis(8)) == 2


@pytest.mark.parametrize("length", [0, 2, 4])
def test_even_line_constant_is_one(length):
    image = cb.reduced_coboundary(sym_generator_collected(MonomialSpec({length: 1})))
    assert image == sym_generator_collected(MonomialSpec(odd_lines=(length + 1,)))


def test_line_monomial_formula_on_labeled_combinations():
    constants = {0: Fraction(1), 2: Fraction(1)}
    for spec in (MonomialSpec({0: 1}, (1,)), MonomialSpec({0: 1, 2: 1}), MonomialSpec({2: 1}, (1,))):
        predicted = line_monomial_coboundary(spec, constants)
        assert cb.coboundary(sym_generator(spec)).collect() == predicted
        assert predicted.is_zero() == line_monomial_vanishes(spec)


def test_line_generator_is_symmetrized_line():
    assert line_generator(1) == symmetrize(line(1))
    assert len(line_generator(1)) == 2
