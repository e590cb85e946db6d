"""Brute-force reference implementations, written without the library's
fast paths (no integer codes, no two-phase closure, no breakpoint tricks)."""
from fractions import Fraction
from itertools import combinations, product


def subsets(n):
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]


def as_sets(opens, n):
    return {frozenset(x for x in range(n) if u >> x & 1) for u in opens}


def strict_level(f, c):
    return frozenset(x for x, v in enumerate(f) if v > c)


def weak_level(f, c):
    return frozenset(x for x, v in enumerate(f) if v >= c)


def thresholds(q):
    """A grid twice as fine as 1/q: every strict level set of a function on
    the grid 1/q shows up at one of these."""
    return [Fraction(k, 2 * q) for k in range(2 * q + 1)]


def is_lsc(f, open_sets, q):
    return all(strict_level(f, c) in open_sets for c in thresholds(q))


def grid_functions(n, q):
    return [tuple(Fraction(v, q) for v in row) for row in product(range(q + 1), repeat=n)]


def lsc_functions(open_sets, n, q):
    return {f for f in grid_functions(n, q) if is_lsc(f, open_sets, q)}


def topology_closure(family, n):
    """Smallest topology containing ``family``: add pairwise unions and
    intersections until nothing changes."""
    out = set(family) | {frozenset(), frozenset(range(n))}
    while True:
        extra = {a | b for a in out for b in out} | {a & b for a in out for b in out}
        if extra <= out:
            return out
        out |= extra


def levels_topology(members, n, q):
    return topology_closure({strict_level(f, c) for f in members for c in thresholds(q)}, n)


def fuzzy_closure(members):
    out = set(members)
    while True:
        extra = {tuple(map(max, a, b)) for a in out for b in out}
        extra |= {tuple(map(min, a, b)) for a in out for b in out}
        if extra <= out:
            return out
        out |= extra


def is_fuzzy_topology(members, n):
    members = set(members)
    zero, one = (Fraction(0),) * n, (Fraction(1),) * n
    return zero in members and one in members and fuzzy_closure(members) == members


def is_topology(sets, n):
    return frozenset() in sets and frozenset(range(n)) in sets and topology_closure(sets, n) == set(sets)


def completely_regular(open_sets, n):
    """Separate every point from every closed set missing it by a continuous
    function into {0, 1/2, 1} (continuity into a finite Hausdorff image means
    every fibre is open)."""
    full = frozenset(range(n))
    closed = [full - u for u in open_sets]
    half = Fraction(1, 2)
    continuous = []
    for f in product((0, half, 1), repeat=n):
        if all(frozenset(x for x in range(n) if f[x] == v) in open_sets for v in set(f)):
            continuous.append(f)
    for c in closed:
        for x in full - c:
            if not any(f[x] == 0 and all(f[y] == 1 for y in c) for f in continuous):
                return False
    return True
