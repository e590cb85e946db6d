from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fuzzytop.lattice import (
    FuzzySet,
    Grid,
    affine_adjust,
    breakpoints,
    check_ground_size,
    complement,
    level_above,
    level_at_least,
    mask_of,
    points_of,
    pointwise_inf,
    pointwise_sup,
    refine,
    value,
)
from oracles import strict_level, weak_level
from strategies import fuzzy_sets, values


def test_value_rejects_floats_and_out_of_range():
    with pytest.raises(TypeError):
        value(0.5)
    with pytest.raises(ValueError):
        value(F(3, 2))
    with pytest.raises(ValueError):
        value(-1)
    assert value("3/4") == F(3, 4)


def test_fuzzy_set_validates_and_prints_exactly():
    f = FuzzySet([0, F(1, 2), 1])
    assert repr(f) == "FuzzySet(0, 1/2, 1)"
    assert f.denominator == 2
    assert f.codes(4) == (0, 2, 4)
    assert f.codes(3) is None
    with pytest.raises(TypeError):
        FuzzySet([0.25])
    with pytest.raises(TypeError):
        f + f


def test_ground_size_cap():
    assert check_ground_size(24) == 24
    with pytest.raises(ValueError):
        check_ground_size(25)


def test_level_above_examples():
    assert level_above(FuzzySet.indicator(3, 0b110), 0) == 0b110
    assert level_above(FuzzySet.constant(2, F(1, 2)), F(1, 2)) == 0
    assert level_above(FuzzySet([0, F(1, 4), F(3, 4)]), F(1, 4)) == 0b100


def test_level_at_least_examples():
    assert level_at_least(FuzzySet.constant(3, F(1, 2)), F(1, 2)) == 0b111
    assert level_at_least(FuzzySet([0, F(1, 4), F(3, 4)]), 1) == 0


@given(fuzzy_sets())
def test_weak_level_at_zero_is_everything(f):
    assert level_at_least(f, 0) == (1 << f.n) - 1


@given(fuzzy_sets(), values())
def test_levels_match_pointwise_oracle(f, c):
    assert set(points_of(level_above(f, c))) == strict_level(f, c)
    assert set(points_of(level_at_least(f, c))) == weak_level(f, c)


@given(fuzzy_sets(), values())
def test_level_sets_nest(f, c):
    strict, weak = level_above(f, c), level_at_least(f, c)
    assert strict & ~weak == 0


def test_sup_inf_examples():
    f = FuzzySet([F(1, 3), 1])
    assert pointwise_sup([f]) == f
    a, b = FuzzySet([0, 1]), FuzzySet([1, 0])
    assert pointwise_sup([a, b]) == FuzzySet([1, 1])
    assert pointwise_inf([a, b]) == FuzzySet([0, 0])
    assert pointwise_sup([FuzzySet([F(1, 4), F(1, 2)]), FuzzySet([F(1, 2), F(1, 4)])]) == FuzzySet.constant(2, F(1, 2))
    with pytest.raises(ValueError):
        pointwise_sup([])


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*[fuzzy_sets(n)] * 3)))
def test_lattice_laws(abc):
    a, b, c = abc
    sup, inf = (lambda *fs: pointwise_sup(fs)), (lambda *fs: pointwise_inf(fs))
    assert sup(a, b) == sup(b, a)
    assert sup(a, sup(b, c)) == sup(sup(a, b), c)
    assert sup(a, inf(a, b)) == a
    assert inf(a, sup(b, c)) == sup(inf(a, b), inf(a, c))


def test_affine_adjust_examples():
    f = FuzzySet([F(1, 4), F(3, 4)])
    assert affine_adjust(f, 1, 0) == f
    assert affine_adjust(f, 2, F(-1, 2)) == FuzzySet([0, 1])
    assert affine_adjust(FuzzySet.constant(3, 0), F(1, 2), 1) == FuzzySet.constant(3, 1)
    with pytest.raises(ValueError):
        affine_adjust(f, 0, 0)


def test_complement_examples():
    assert complement(FuzzySet.constant(2, 0)) == FuzzySet.constant(2, 1)
    assert complement(FuzzySet([F(1, 4), 1])) == FuzzySet([F(3, 4), 0])


@given(fuzzy_sets())
def test_complement_is_an_involution(f):
    assert complement(complement(f)) == f


@given(fuzzy_sets())
def test_breakpoints_realise_every_level_set(f):
    cuts = breakpoints(f)
    fine = {F(k, 48) for k in range(49)} | set(f)
    assert {level_above(f, c) for c in cuts} == {level_above(f, c) for c in fine}
    assert {level_at_least(f, c) for c in cuts} == {level_at_least(f, c) for c in fine}


def test_grid_and_refine():
    g = Grid(2, 2)
    assert g.levels == (0, F(1, 2), 1)
    assert g.size() == 9 == len(list(g.functions()))
    assert refine(2, 3, 4) == 12
    assert mask_of(points_of(0b1011)) == 0b1011
