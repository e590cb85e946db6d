"""Maps between fuzzy spaces and the subspace, product and coproduct
constructions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Optional, Sequence

from .fuzzy import (
    ExtensionalFuzzyTopology,
    FuzzyTopology,
    InducedFuzzyTopology,
    close_codes,
    code_is_lsc,
)
from .lattice import MAX_GROUND_SIZE, FuzzySet, Grid, points_of, refine
from .topology import (
    GroundMap,
    Topology,
    lower_topology_grid,
    product_projections,
)


def pullback(h: GroundMap, f: Sequence) -> FuzzySet:
    """``f o h``: a fuzzy set on the target pulled back to the source."""
    if len(f) != h.target:
        raise ValueError("fuzzy set does not live on the map's target")
    return FuzzySet._trusted(f[y] for y in h.image)


def _pull_code(h: GroundMap, c: tuple) -> tuple:
    return tuple(c[y] for y in h.image)


def _scale(c: tuple, s: int) -> tuple:
    return tuple(v * s for v in c)


def _codes_at(delta: FuzzyTopology, q: int) -> frozenset:
    if q % delta.q:
        raise ValueError("target grid must refine the fuzzy topology's grid")
    s = q // delta.q
    return frozenset(_scale(c, s) for c in delta.codes) if s > 1 else delta.codes


def contains_code(delta: FuzzyTopology, c: tuple, q: int) -> bool:
    """Membership of the fuzzy set ``c/q``."""
    if isinstance(delta, InducedFuzzyTopology):
        return code_is_lsc(c, delta.base.opens)
    if q == delta.q:
        return c in delta.codes
    num = [v * delta.q for v in c]
    if any(v % q for v in num):
        return False
    return tuple(v // q for v in num) in delta.codes


@dataclass
class FuzzyMapJudgment:
    continuous: bool
    quotient: Optional[bool] = None
    witness: Optional[FuzzySet] = None


def is_fuzzy_continuous(h: GroundMap, d1: FuzzyTopology, d2: FuzzyTopology) -> FuzzyMapJudgment:
    """Every member of ``d2`` pulls back into ``d1``; the witness is the first
    member (in canonical order) that does not."""
    _check(h, d1, d2)
    for c in sorted(d2.codes):
        if not contains_code(d1, _pull_code(h, c), d2.q):
            return FuzzyMapJudgment(False, False, FuzzySet.from_codes(c, d2.q))
    return FuzzyMapJudgment(True)


def is_fuzzy_quotient(h: GroundMap, d1: FuzzyTopology, d2: FuzzyTopology) -> FuzzyMapJudgment:
    """A grid fuzzy set on the target is a member of ``d2`` exactly when its
    pullback is a member of ``d1``.

    The quantifier runs over every function into the common grid of both
    fuzzy topologies.
    """
    _check(h, d1, d2)
    cont = is_fuzzy_continuous(h, d1, d2)
    q = refine(d1.q, d2.q)
    d2codes = _codes_at(d2, q) if isinstance(d2, ExtensionalFuzzyTopology) else None
    for c in Grid(q, h.target).functions():
        inside = c in d2codes if d2codes is not None else code_is_lsc(c, d2.base.opens)
        if inside != contains_code(d1, _pull_code(h, c), q):
            return FuzzyMapJudgment(cont.continuous, False, FuzzySet.from_codes(c, q))
    return FuzzyMapJudgment(cont.continuous, True)


def _check(h: GroundMap, d1, d2):
    if h.source != d1.n or h.target != d2.n:
        raise ValueError("map does not match the carriers")


def _extensional(delta: FuzzyTopology) -> ExtensionalFuzzyTopology:
    return delta.to_extensional() if isinstance(delta, InducedFuzzyTopology) else delta


def relative_fuzzy_topology(delta: FuzzyTopology, y: int) -> ExtensionalFuzzyTopology:
    """Restrictions of the members to ``y`` (re-indexed in ascending order)."""
    if y == 0:
        raise ValueError("subspace must be nonempty")
    delta = _extensional(delta)
    pts = points_of(y)
    if pts[-1] >= delta.n:
        raise ValueError("subspace outside the carrier")
    codes = {tuple(c[x] for x in pts) for c in delta.codes}
    return ExtensionalFuzzyTopology(Grid(delta.q, len(pts)), codes, check=False)


def product_fuzzy_topology(d1: FuzzyTopology, d2: FuzzyTopology) -> ExtensionalFuzzyTopology:
    """Fuzzy topology on the row-major product generated by the pullbacks of
    both factors along the projections."""
    d1, d2 = _extensional(d1), _extensional(d2)
    n = d1.n * d2.n
    if n > MAX_GROUND_SIZE:
        raise ValueError("product carrier exceeds the ground size cap")
    q = refine(d1.q, d2.q)
    p1, p2 = product_projections(d1.n, d2.n)
    gens = {_pull_code(p1, c) for c in _codes_at(d1, q)} | {_pull_code(p2, c) for c in _codes_at(d2, q)}
    return ExtensionalFuzzyTopology(Grid(q, n), close_codes(gens), check=False)


def coproduct_fuzzy_topology(d1: FuzzyTopology, d2: FuzzyTopology) -> ExtensionalFuzzyTopology:
    """Fuzzy sets on the disjoint union whose restriction to each summand is a
    member there; the first summand takes the low indices."""
    d1, d2 = _extensional(d1), _extensional(d2)
    n = d1.n + d2.n
    if n > MAX_GROUND_SIZE:
        raise ValueError("coproduct carrier exceeds the ground size cap")
    q = refine(d1.q, d2.q)
    codes = {a + b for a, b in product(_codes_at(d1, q), _codes_at(d2, q))}
    return ExtensionalFuzzyTopology(Grid(q, n), codes, check=False)


def product_of(deltas: Sequence[FuzzyTopology]) -> ExtensionalFuzzyTopology:
    return reduce(product_fuzzy_topology, deltas)


def coproduct_of(deltas: Sequence[FuzzyTopology]) -> ExtensionalFuzzyTopology:
    return reduce(coproduct_fuzzy_topology, deltas)


def lower_interval_fuzzy_space(q: int) -> tuple[Topology, InducedFuzzyTopology]:
    """The grid chain with its lower topology and the induced fuzzy topology;
    the members are exactly the non-decreasing grid functions on the chain."""
    tau = lower_topology_grid(q)
    return tau, InducedFuzzyTopology(tau, q)


def usual_interval_fuzzy_space(q: int) -> tuple[Topology, InducedFuzzyTopology]:
    """The grid points of [0, 1] with the subspace of the usual topology,
    which on finitely many points is discrete."""
    tau = Topology.discrete(q + 1)
    return tau, InducedFuzzyTopology(tau, q)


def as_chain_map(f: Sequence, q: int) -> GroundMap:
    """View a grid-valued fuzzy set as a map onto the chain ``0..q``."""
    f = f if isinstance(f, FuzzySet) else FuzzySet(f)
    c = f.codes(q)
    if c is None:
        raise ValueError(f"{f!r} is not on the grid 1/{q}")
    return GroundMap(q + 1, c)


def chain_map_values(h: GroundMap) -> FuzzySet:
    q = h.target - 1
    return FuzzySet.from_codes(h.image, q)
