from itertools import combinations

import pytest
from hypothesis import given

from fuzzytop.census import enumerate_topologies
from fuzzytop.topology import (
    GroundMap,
    Topology,
    all_maps,
    coproduct_topology,
    generate_topology,
    is_completely_regular,
    is_connected,
    is_continuous,
    is_hausdorff,
    is_quotient_map,
    is_topology,
    lower_topology_grid,
    product_topology,
    relative_topology,
)
from oracles import as_sets, completely_regular, topology_closure
from oracles import is_topology as oracle_is_topology
from strategies import topologies

SIERPINSKI = Topology.sierpinski()


def masks(*sets):
    return {sum(1 << x for x in s) for s in sets}


def test_generate_topology_examples():
    assert generate_topology([], 3).opens == {0, 0b111}
    assert generate_topology([0b001, 0b011], 3).opens == masks((), (0,), (0, 1), (0, 1, 2))
    assert generate_topology([0b011, 0b110], 3).opens == masks((), (1,), (0, 1), (1, 2), (0, 1, 2))


@given(topologies(4))
def test_generate_topology_matches_closure_oracle(tau):
    sub = [u for u in tau.opens if u.bit_count() % 2]
    expected = topology_closure(as_sets(sub, tau.n), tau.n)
    assert as_sets(generate_topology(sub, tau.n).opens, tau.n) == expected


def test_is_topology_examples():
    assert is_topology({0, 0b11}, 2)
    assert is_topology(set(range(8)), 3)
    assert is_topology(masks((), (0,), (1,), (0, 1)), 2)
    assert not is_topology(masks((), (0,), (1,)), 2)
    with pytest.raises(ValueError):
        Topology(2, frozenset(masks((), (0,), (1,))))


def test_is_topology_agrees_with_oracle_on_all_families_n3():
    middle = list(range(1, 7))
    for k in range(len(middle) + 1):
        for fam in combinations(middle, k):
            fam = set(fam) | {0, 7}
            assert is_topology(fam, 3) == oracle_is_topology(as_sets(fam, 3), 3)


def test_relative_topology_examples():
    assert relative_topology(SIERPINSKI, 0b11) == SIERPINSKI
    assert relative_topology(SIERPINSKI, 0b01) == Topology.indiscrete(1)
    assert relative_topology(Topology.discrete(3), 0b101) == Topology.discrete(2)


def test_product_and_coproduct_examples():
    assert product_topology(Topology.discrete(2), Topology.discrete(2)) == Topology.discrete(4)
    assert product_topology(Topology.indiscrete(2), Topology.indiscrete(3)) == Topology.indiscrete(6)
    co = coproduct_topology(Topology.indiscrete(2), Topology.indiscrete(1))
    assert co.opens == {0, 0b011, 0b100, 0b111}
    sq = product_topology(SIERPINSKI, SIERPINSKI)
    # row-major points (x1, x2) -> 2*x1 + x2; {1} open in each factor
    assert sq.opens == masks((), (3,), (1, 3), (2, 3), (1, 2, 3), (0, 1, 2, 3))


def test_continuity_examples():
    ident = GroundMap.identity(2)
    assert is_continuous(ident, SIERPINSKI, SIERPINSKI)
    assert is_quotient_map(ident, SIERPINSKI, SIERPINSKI)
    assert is_continuous(GroundMap.constant(3, 2, 1), SIERPINSKI.discrete(3), Topology.indiscrete(2))
    disc = Topology.discrete(2)
    assert is_continuous(ident, disc, SIERPINSKI)
    assert not is_quotient_map(ident, disc, SIERPINSKI)
    assert not is_continuous(ident, SIERPINSKI, disc)


def test_quotient_by_definition_on_all_small_pairs():
    tops = [t for n in (1, 2) for t in enumerate_topologies(n)]
    for t1 in tops:
        for t2 in tops:
            for h in all_maps(t1.n, t2.n):
                expected = all((h.preimage(u) in t1.opens) == (u in t2.opens) for u in range(1 << t2.n))
                assert is_quotient_map(h, t1, t2) == expected


def test_separation_examples():
    assert is_completely_regular(Topology.discrete(3))
    assert is_completely_regular(Topology.indiscrete(3))
    assert not is_completely_regular(SIERPINSKI)
    assert is_hausdorff(Topology.discrete(2)) and not is_hausdorff(SIERPINSKI)
    assert is_connected(SIERPINSKI) and not is_connected(Topology.discrete(2))


def test_complete_regularity_matches_function_oracle():
    for n in (1, 2, 3):
        for tau in enumerate_topologies(n):
            assert is_completely_regular(tau) == completely_regular(as_sets(tau.opens, n), n)


def test_lower_topology_grid():
    assert lower_topology_grid(1) == SIERPINSKI
    assert lower_topology_grid(2).opens == masks((), (2,), (1, 2), (0, 1, 2))
    for q in range(1, 5):
        assert lower_topology_grid(q).is_open((1 << q + 1) - 1)
