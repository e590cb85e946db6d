import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from fuzzytop.compactness import (
    ALL_COMPACT,
    CompactnessOracle,
    CoverInstance,
    NotCompact,
    check_condition_L,
    compactness_equivalents,
    extract_subcover,
    is_fuzzy_closed,
    is_fuzzy_compact,
    is_fuzzy_open,
    ladder,
    one_point_equivalence,
    one_point_extension,
    product_min,
    tychonoff_level_identity,
)
from fuzzytop.census import enumerate_topologies, random_topology
from fuzzytop.lattice import FuzzySet, level_at_least
from fuzzytop.properties import random_cover, random_designated_oracle
from fuzzytop.topology import Topology, is_hausdorff, product_mask
from oracles import weak_level

DISCRETE3 = Topology.discrete(3)
CHAIN = Topology(3, frozenset({0, 0b100, 0b110, 0b111}))


def ind(n, *pts):
    return FuzzySet.indicator(n, sum(1 << p for p in pts))


def test_open_and_closed_examples():
    for tau in (DISCRETE3, CHAIN):
        for k in (0, F(1, 3), 1):
            f = FuzzySet.constant(3, k)
            assert is_fuzzy_open(f, tau) and is_fuzzy_closed(f, tau)
    u = ind(3, 2)
    assert is_fuzzy_open(u, CHAIN) and not is_fuzzy_closed(u, CHAIN)
    f = FuzzySet([0, F(1, 2), 1])
    assert is_fuzzy_open(f, CHAIN) and not is_fuzzy_closed(f, CHAIN)
    assert is_fuzzy_closed(FuzzySet([1, F(1, 2), 0]), CHAIN)


def test_compactness_oracle():
    f = FuzzySet([1, F(1, 2), 0])
    assert is_fuzzy_compact(f, CHAIN)
    oracle = CompactnessOracle.designated({0b001}, CHAIN)
    assert not is_fuzzy_compact(f, CHAIN, oracle)
    assert is_fuzzy_compact(FuzzySet.constant(3, 0), CHAIN, oracle)
    with pytest.raises(ValueError):
        CompactnessOracle.designated({0b111}, CHAIN)
    with pytest.raises(ValueError):
        CompactnessOracle.designated({0b001, 0b010}, Topology.discrete(3))


def test_ladder_steps_are_below_half_epsilon():
    for eps in (F(1, 4), F(1, 3), F(2, 3), F(1), F(1, 7)):
        for q in (1, 2, 3):
            cs = ladder(eps, q)
            assert cs[0] == 1 and cs[-1] == 0
            assert all(0 < a - b < eps / 2 for a, b in zip(cs, cs[1:]))
            assert all((c * q * (len(cs) - 1) // q).denominator == 1 for c in cs)


def test_subcover_examples():
    inst = CoverInstance(FuzzySet.constant(3, 1), [ind(3, 0), ind(3, 1), ind(3, 2)], F(1, 4), DISCRETE3)
    assert extract_subcover(inst).indices == (0, 1, 2)
    f = FuzzySet([F(1, 2), 1, 0])
    inst = CoverInstance(f, [FuzzySet.constant(3, 1), f], F(1, 4), DISCRETE3)
    assert len(extract_subcover(inst).indices) == 1
    inst = CoverInstance(FuzzySet.constant(3, F(1, 2)), [ind(3, 0, 1, 2)], F(1), DISCRETE3)
    assert extract_subcover(inst).indices == (0,)


def test_cover_instance_validation():
    with pytest.raises(ValueError):
        CoverInstance(FuzzySet.constant(3, 1), [ind(3, 0)], F(1, 4), DISCRETE3)
    with pytest.raises(ValueError):
        CoverInstance(ind(3, 0), [ind(3, 0)], 0, DISCRETE3)
    with pytest.raises(ValueError):
        CoverInstance(ind(3, 0), [ind(3, 0)], F(1, 4), CHAIN)


@given(st.integers(0, 2**32))
def test_subcover_postcondition(seed):
    rng = random.Random(seed)
    tau = random_topology(rng, rng.randint(1, 4))
    inst = random_cover(rng, tau, rng.randint(1, 4))
    cert = extract_subcover(inst)
    sub = [inst.family[i] for i in cert.indices]
    for x in range(tau.n):
        assert max(g[x] for g in sub) >= inst.target[x] - inst.epsilon


def test_subcover_raises_on_non_compact_level():
    oracle = CompactnessOracle.designated(set(), DISCRETE3)
    inst = CoverInstance(FuzzySet.constant(3, 1), [ind(3, 0, 1, 2)], F(1, 4), DISCRETE3)
    with pytest.raises(NotCompact):
        extract_subcover(inst, oracle)


def test_condition_L():
    verdict = check_condition_L(FuzzySet.constant(2, F(1, 2)), [FuzzySet.constant(2, 1)], F(1, 8), Topology.discrete(2))
    assert verdict.holds and verdict.premise and verdict.certificate.indices == (0,)
    verdict = check_condition_L(FuzzySet.constant(2, 1), [ind(2, 0)], F(1, 8), Topology.discrete(2))
    assert verdict.holds and not verdict.premise


def test_tychonoff_examples():
    f1, f2 = FuzzySet([F(1, 2), 1]), FuzzySet([1, F(1, 2)])
    assert tychonoff_level_identity(f1, f2, F(3, 4))
    assert level_at_least(product_min(f1, f2), F(3, 4)) == 1 << 2
    assert level_at_least(product_min(f1, f2), 1) == product_mask(0b10, 0b01, 2)
    with pytest.raises(ValueError):
        tychonoff_level_identity(f1, f2, 0)


def test_tychonoff_identity_against_set_oracle():
    q = 2
    vals = [F(k, q) for k in range(q + 1)]
    for n1, n2 in product((1, 2, 3), repeat=2):
        for f1 in product(vals, repeat=n1):
            for f2 in product(vals, repeat=n2):
                for c in vals[1:]:
                    got = tychonoff_level_identity(FuzzySet(f1), FuzzySet(f2), c)
                    lhs = {(a, b) for a in range(n1) for b in range(n2) if min(f1[a], f2[b]) >= c}
                    rhs = {(a, b) for a in weak_level(f1, c) for b in weak_level(f2, c)}
                    assert got and lhs == rhs


def test_one_point_examples():
    zero = FuzzySet.constant(2, 0)
    f_star, star = one_point_extension(zero, Topology.discrete(2))
    assert f_star == FuzzySet.constant(3, 0) and is_fuzzy_closed(f_star, star)
    assert star == Topology.discrete(3)
    tau = Topology(3, frozenset({0, 0b011, 0b100, 0b111}))
    f = ind(3, 0, 1)
    f_star, star = one_point_extension(f, tau)
    assert f_star == ind(4, 0, 1) and is_fuzzy_closed(f_star, star)


def test_one_point_equivalence_on_discrete_carriers():
    for n in (1, 2, 3):
        tau = Topology.discrete(n)
        oracle = CompactnessOracle.designated({0b1, 0b10, 0b11}, tau) if n > 1 else ALL_COMPACT
        for row in product((0, F(1, 2), 1), repeat=n):
            compact, closed = one_point_equivalence(FuzzySet(row), tau, oracle)
            assert compact == closed
            assert one_point_equivalence(FuzzySet(row), tau) == (True, True)


def test_finite_carriers_are_compact_in_every_sense():
    for n in (1, 2, 3):
        for tau in enumerate_topologies(n):
            assert compactness_equivalents(tau, 2) == (True, True, True, True)


def test_hausdorff_carriers_are_discrete_and_everything_is_compact_closed():
    for n in (1, 2, 3):
        for tau in enumerate_topologies(n):
            assert is_hausdorff(tau) == (len(tau.opens) == 1 << n)
    for row in product((0, F(1, 2), 1), repeat=3):
        assert is_fuzzy_compact(FuzzySet(row), DISCRETE3) and is_fuzzy_closed(FuzzySet(row), DISCRETE3)


@given(st.integers(0, 2**32))
def test_random_designated_oracles_are_valid(seed):
    rng = random.Random(seed)
    tau = random_topology(rng, rng.randint(1, 4))
    seeds = {rng.randint(0, tau.full) for _ in range(3)}
    oracle = random_designated_oracle(rng, tau, seeds)
    assert all(oracle.is_compact(s) for s in seeds)
