"""Named, executable property suites.

Each suite takes a :class:`Context` (the instances to range over) and returns
a :class:`PropertyResult`.  Without explicit instances a context falls back
to every topology on at most three points and a seeded batch of random fuzzy
topologies.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable

from . import gallery
from .census import (
    enumerate_topologies,
    random_fuzzy_topology,
    random_topology,
)
from .compactness import (
    ALL_COMPACT,
    CompactnessOracle,
    CoverInstance,
    compactness_equivalents,
    check_condition_L,
    dominates,
    extract_subcover,
    is_fuzzy_closed,
    is_fuzzy_compact,
    is_fuzzy_open,
    levels_below_one_compact,
    one_point_equivalence,
    tychonoff_level_identity,
)
from .constructions import (
    as_chain_map,
    coproduct_fuzzy_topology,
    is_fuzzy_continuous,
    is_fuzzy_quotient,
    lower_interval_fuzzy_space,
    product_fuzzy_topology,
    pullback,
    relative_fuzzy_topology,
)
from .fuzzy import (
    SupClosedSubgrid,
    chi,
    chi_star,
    classify,
    code_is_lsc,
    generate_fuzzy_topology,
    iota,
    is_laminated,
    omega,
)
from .lattice import FuzzySet, Grid, level_above, level_at_least, points_of
from .topology import (
    Topology,
    all_maps,
    coproduct_topology,
    generate_topology,
    is_completely_regular,
    is_connected,
    is_continuous,
    is_hausdorff,
    is_quotient_map,
    product_projections,
    product_topology,
    relative_topology,
)


@dataclass
class Context:
    topologies: list
    fuzzies: list
    seed: int = 0
    pairs: int = 200

    @classmethod
    def builtin(cls, seed: int = 0, count: int = 200, max_n: int = 3, max_q: int = 4) -> "Context":
        tops = [t for n in range(1, max_n + 1) for t in enumerate_topologies(n)]
        rng = random.Random(seed)
        fuzz = [random_fuzzy_topology(rng, rng.randint(1, max_n), rng.randint(1, max_q)) for _ in range(count)]
        return cls(tops, fuzz, seed, count)

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, detail: str):
        self.checked += 1
        if not cond and len(self.failures) < 20:
            self.failures.append(detail)
        elif not cond:
            self.failures.append("...")

    def to_dict(self) -> dict:
        return {"property": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures[:20]}


def _small(ctx: Context, max_n: int = 2) -> list:
    return [t for t in ctx.topologies if t.n <= max_n]


def _small_fuzzies(ctx: Context, max_n: int = 2, max_q: int = 2) -> list:
    return [d for d in ctx.fuzzies if d.n <= max_n and d.q <= max_q]


# --- functors and classification ---------------------------------------------

def functor_round_trip(ctx: Context) -> PropertyResult:
    r = PropertyResult("functor-round-trip")
    for tau in ctx.topologies:
        for q in (1, 2, 4):
            r.expect(iota(omega(tau, q)) == tau, f"{tau!r} q={q}")
    return r


def inclusion(ctx: Context) -> PropertyResult:
    r = PropertyResult("inclusion")
    for d in ctx.fuzzies:
        big = omega(iota(d), d.q)
        r.expect(d.codes <= big.codes, f"{d!r} not inside its induced hull")
        rep = classify(d)
        r.expect((big == d) == (rep.is_laminated and rep.is_weakly_induced), f"{d!r} equality mismatch")
    return r


def equivalence(ctx: Context) -> PropertyResult:
    r = PropertyResult("equivalence")
    for d in ctx.fuzzies:
        rep = classify(d)
        r.expect(rep.consistent, f"{d!r} weak-inducedness conditions disagree")
        if rep.consistent:
            r.expect((rep.is_laminated and rep.is_weakly_induced) == rep.is_induced_on_grid,
                     f"{d!r} equivalence fails")
        r.expect(not rep.is_induced_on_grid or rep.is_grid_affine_invariant, f"{d!r} induced but not affine")
        r.expect(rep.is_chang, f"{d!r} is not a fuzzy topology")
    return r


def _continuous_grid_functions(tau: Topology, q: int) -> list:
    out = []
    for c in Grid(q, tau.n).functions():
        fibres = {}
        for x, v in enumerate(c):
            fibres[v] = fibres.get(v, 0) | 1 << x
        if all(u in tau.opens for u in fibres.values()):
            out.append(FuzzySet.from_codes(c, q))
    return out


def generation(ctx: Context) -> PropertyResult:
    r = PropertyResult("generation")
    for tau in ctx.topologies:
        for q in (1, 2):
            full = SupClosedSubgrid.full(q)
            r.expect(gallery.generated_from_sublattice(tau, full) == omega(tau, q), f"{tau!r} q={q} constants+indicators")
            if is_completely_regular(tau):
                gen = generate_fuzzy_topology(_continuous_grid_functions(tau, q), tau.n, q)
                r.expect(gen == omega(tau, q), f"{tau!r} q={q} continuous generators")
    return r


def sublattice(ctx: Context) -> PropertyResult:
    r = PropertyResult("sublattice")
    for tau in ctx.topologies:
        q = 2 if tau.n == 3 else 4
        for k in range(q):
            for mid in combinations(range(1, q), k):
                levels = SupClosedSubgrid(q, (0,) + mid + (q,))
                r.expect(gallery.omega_sub_L(tau, levels) == gallery.generated_from_sublattice(tau, levels),
                         f"{tau!r} L={levels.levels}")
    for d in ctx.fuzzies:
        rep = classify(d)
        if not rep.is_weakly_induced:
            continue
        levels = SupClosedSubgrid(d.q, tuple(int(c * d.q) for c in d.constants()))
        restricted = {c for c in d.codes if all(v in levels.codes for v in c)}
        r.expect(restricted == gallery.omega_sub_L(iota(d), levels).codes, f"{d!r} restricted to its constants")
    return r


# --- constructions -----------------------------------------------------------

def pullback_levels(ctx: Context) -> PropertyResult:
    r = PropertyResult("pullback-levels")
    for n1, n2 in product(range(1, 4), repeat=2):
        for h in all_maps(n1, n2):
            for q in (1, 2):
                for c in Grid(q, n2).functions():
                    f = FuzzySet.from_codes(c, q)
                    g = pullback(h, f)
                    for j in range(q + 1):
                        t = Fraction(j, q)
                        r.expect(level_above(g, t) == h.preimage(level_above(f, t)), f"{h} {f} c={t}")
    return r


def continuity(ctx: Context) -> PropertyResult:
    r = PropertyResult("continuity")
    tops = _small(ctx)
    for t1, t2 in product(tops, repeat=2):
        w1, w2 = omega(t1, 2), omega(t2, 2)
        for h in all_maps(t1.n, t2.n):
            r.expect(is_continuous(h, t1, t2) == is_fuzzy_continuous(h, w1, w2).continuous, f"{h} continuity")
            r.expect(is_quotient_map(h, t1, t2) == bool(is_fuzzy_quotient(h, w1, w2).quotient), f"{h} quotient")
    fz = _small_fuzzies(ctx)
    rng = ctx.rng("continuity")
    for _ in range(min(ctx.pairs, 200)):
        if not fz:
            break
        d1, d2 = rng.choice(fz), rng.choice(fz)
        i1, i2 = iota(d1), iota(d2)
        # on grids, pullbacks of d2's values only land in d1's grid when it refines d2's
        induced1 = omega(i1, d1.q) == d1 and d1.q % d2.q == 0
        for h in all_maps(d1.n, d2.n):
            fc = is_fuzzy_continuous(h, d1, d2).continuous
            if fc:
                r.expect(is_continuous(h, i1, i2), f"{h} fuzzy continuous but not continuous")
            if induced1 and is_continuous(h, i1, i2):
                r.expect(fc, f"{h} continuous from induced source but not fuzzy continuous")
    return r


def interval_test(ctx: Context) -> PropertyResult:
    r = PropertyResult("interval-test")
    for d in ctx.fuzzies:
        if (d.q + 1) ** d.n > 27:
            continue
        _, d_r = lower_interval_fuzzy_space(d.q)
        induced = classify(d).is_induced_on_grid
        members_ok = True
        for c in Grid(d.q, d.n).functions():
            f = FuzzySet.from_codes(c, d.q)
            fc = is_fuzzy_continuous(as_chain_map(f, d.q), d, d_r).continuous
            if fc:
                r.expect(f in d, f"{d!r}: {f} fuzzy continuous into the lower interval but not a member")
            if f in d and not fc:
                members_ok = False
        r.expect(members_ok == induced, f"{d!r}: member continuity {members_ok} vs induced {induced}")
    return r


def subspace(ctx: Context) -> PropertyResult:
    r = PropertyResult("subspace")
    for tau in ctx.topologies:
        for y in range(1, tau.full + 1):
            for q in (1, 2):
                r.expect(omega(relative_topology(tau, y), q) == relative_fuzzy_topology(omega(tau, q), y),
                         f"{tau!r} Y={points_of(y)} q={q}")
    for d in ctx.fuzzies[: ctx.pairs]:
        rep = classify(d)
        for y in range(1, (1 << d.n)):
            sub = relative_fuzzy_topology(d, y)
            r.expect(iota(sub) == relative_topology(iota(d), y), f"{d!r} Y={points_of(y)} levels")
            if rep.is_laminated:
                r.expect(is_laminated(sub), f"{d!r} Y={points_of(y)} lamination lost")
            if rep.is_induced_on_grid:
                r.expect(classify(sub).is_induced_on_grid, f"{d!r} Y={points_of(y)} inducedness lost")
    return r


def _pairs(ctx: Context, salt: str):
    fz = _small_fuzzies(ctx)
    rng = ctx.rng(salt)
    if not fz:
        return []
    return [(rng.choice(fz), rng.choice(fz)) for _ in range(ctx.pairs)]


def products(ctx: Context) -> PropertyResult:
    r = PropertyResult("product")
    for d1, d2 in _pairs(ctx, "product"):
        p = product_fuzzy_topology(d1, d2)
        r.expect(iota(p) == product_topology(iota(d1), iota(d2)), f"{d1!r} x {d2!r} levels")
        if d1.q != d2.q:
            # grid lamination and inducedness are only comparable on a common grid
            continue
        if is_laminated(d1) or is_laminated(d2):
            r.expect(is_laminated(p), f"{d1!r} x {d2!r} lamination")
        if omega(iota(d1), d1.q) == d1 and omega(iota(d2), d2.q) == d2:
            r.expect(omega(iota(p), p.q) == p, f"{d1!r} x {d2!r} inducedness")
    return r


def coproducts(ctx: Context) -> PropertyResult:
    r = PropertyResult("coproduct")
    for d1, d2 in _pairs(ctx, "coproduct"):
        s = coproduct_fuzzy_topology(d1, d2)
        r.expect(iota(s) == coproduct_topology(iota(d1), iota(d2)), f"{d1!r} + {d2!r} levels")
        if d1.q != d2.q:
            continue
        if is_laminated(d1) and is_laminated(d2):
            r.expect(is_laminated(s), f"{d1!r} + {d2!r} lamination")
        if omega(iota(d1), d1.q) == d1 and omega(iota(d2), d2.q) == d2:
            r.expect(omega(iota(s), s.q) == s, f"{d1!r} + {d2!r} inducedness")
    return r


def induced_products(ctx: Context) -> PropertyResult:
    r = PropertyResult("induced-products")
    rng = ctx.rng("induced-products")
    tops = _small(ctx)
    for _ in range(ctx.pairs if tops else 0):
        t1, t2 = rng.choice(tops), rng.choice(tops)
        q = rng.choice((1, 2))
        w1, w2 = omega(t1, q), omega(t2, q)
        r.expect(product_fuzzy_topology(w1, w2) == omega(product_topology(t1, t2), q), f"{t1!r} x {t2!r} q={q}")
        r.expect(coproduct_fuzzy_topology(w1, w2) == omega(coproduct_topology(t1, t2), q), f"{t1!r} + {t2!r} q={q}")
    return r


# --- compactness -------------------------------------------------------------

def random_cover(rng: random.Random, tau: Topology, q: int) -> CoverInstance:
    """A grid target, a random fuzzy open family patched so that it covers
    the target, and a random positive epsilon."""
    n = tau.n
    target = FuzzySet.from_codes([rng.randint(0, q) for _ in range(n)], q)
    opens = [c for c in Grid(q, n).functions() if code_is_lsc(c, tau.opens)]
    family = [FuzzySet.from_codes(rng.choice(opens), q) for _ in range(rng.randint(1, 4))]
    if not dominates(family, target):
        # the lsc hull of the target's positive part keeps the cover fuzzy open
        for x in range(n):
            if max(g[x] for g in family) < target[x]:
                nb = tau.neighbourhood(x)
                family.append(FuzzySet([target[x] if nb >> y & 1 else 0 for y in range(n)]))
        family = [g if is_fuzzy_open(g, tau) else FuzzySet.indicator(n, tau.full) for g in family]
    rng.shuffle(family)
    eps = Fraction(rng.randint(1, 4 * q), 4 * q)
    return CoverInstance(target, family, eps, tau)


def subcover(ctx: Context, count: int = 500) -> PropertyResult:
    r = PropertyResult("subcover")
    rng = ctx.rng("subcover")
    for _ in range(count):
        tau = random_topology(rng, rng.randint(1, 4))
        inst = random_cover(rng, tau, rng.randint(1, 4))
        cert = extract_subcover(inst)
        sub = [inst.family[i] for i in cert.indices]
        ok = all(max(g[x] for g in sub) >= inst.target[x] - inst.epsilon for x in range(tau.n))
        r.expect(ok, f"{inst}")
    return r


def random_designated_oracle(rng: random.Random, tau: Topology, seeds) -> CompactnessOracle:
    """Smallest valid designated family containing ``seeds`` plus noise:
    alternately close under pairwise unions and closed subsets until stable."""
    fam = {0} | set(seeds) | {rng.randint(0, tau.full) for _ in range(rng.randint(0, 2))}
    closed = tau.closed_sets()
    while True:
        grown = {a | b for a in fam for b in fam}
        grown |= {c for k in grown for c in closed if c & ~k == 0}
        if grown == fam:
            return CompactnessOracle.designated(fam, tau)
        fam = grown


def closed_below(ctx: Context, count: int = 100) -> PropertyResult:
    r = PropertyResult("closed-below")
    rng = ctx.rng("closed-below")
    done = 0
    while done < count:
        tau = random_topology(rng, rng.randint(1, 3))
        q = rng.randint(1, 4)
        n = tau.n
        f = FuzzySet.from_codes([rng.randint(0, q) for _ in range(n)], q)
        closed = [FuzzySet.from_codes(c, q) for c in Grid(q, n).functions()]
        closed = [g for g in closed if all(a <= b for a, b in zip(g, f)) and is_fuzzy_closed(g, tau)]
        if not closed:
            continue
        g = rng.choice(closed)
        levels = {level_at_least(f, c) for c in set(f) if c > 0}
        oracle = random_designated_oracle(rng, tau, levels if rng.random() < 0.8 else ())
        if levels_below_one_compact(f, oracle):
            r.expect(is_fuzzy_compact(g, tau, oracle), f"{tau!r} f={f} g={g}")
        done += 1
    return r


def compact_vs_condition_L(ctx: Context) -> PropertyResult:
    r = PropertyResult("compact-vs-condition-L")
    for tau in _small(ctx, 3):
        q = 2
        opens = [FuzzySet.from_codes(c, q) for c in Grid(q, tau.n).functions() if code_is_lsc(c, tau.opens)]
        # a designated family containing every closed set is consistent with
        # "closed subsets of compact sets are compact" once the carrier is compact
        consistent = CompactnessOracle.designated(tau.closed_sets(), tau)
        for c in Grid(q, tau.n).functions():
            f = FuzzySet.from_codes(c, q)
            for oracle in (ALL_COMPACT, consistent):
                compact = is_fuzzy_compact(f, tau, oracle)
                if compact:
                    verdict = check_condition_L(f, opens, Fraction(1, 4), tau, oracle)
                    r.expect(verdict.holds, f"{tau!r} {f} compact but Condition L failed")
                if is_fuzzy_closed(f, tau):
                    cond = check_condition_L(f, opens, Fraction(1, 4), tau, ALL_COMPACT).holds
                    r.expect(not cond or compact, f"{tau!r} {f} closed with Condition L but not compact")
    return r


def compact_carrier(ctx: Context) -> PropertyResult:
    r = PropertyResult("compact-carrier")
    for tau in _small(ctx, 3):
        verdicts = compactness_equivalents(tau, 2)
        r.expect(all(verdicts), f"{tau!r} {verdicts}")
    return r


def hausdorff(ctx: Context) -> PropertyResult:
    r = PropertyResult("hausdorff")
    for tau in ctx.topologies:
        discrete = len(tau.opens) == 1 << tau.n
        r.expect(is_hausdorff(tau) == discrete, f"{tau!r} Hausdorff vs discrete")
        if discrete:
            for c in Grid(2, tau.n).functions():
                f = FuzzySet.from_codes(c, 2)
                r.expect(is_fuzzy_compact(f, tau) and is_fuzzy_closed(f, tau), f"{tau!r} {f}")
    return r


def tychonoff_levels(ctx: Context) -> PropertyResult:
    r = PropertyResult("tychonoff-levels")
    for n1, n2 in product(range(1, 4), repeat=2):
        for q in (1, 2):
            for c1 in Grid(q, n1).functions():
                for c2 in Grid(q, n2).functions():
                    f1, f2 = FuzzySet.from_codes(c1, q), FuzzySet.from_codes(c2, q)
                    for j in range(1, q + 1):
                        r.expect(tychonoff_level_identity(f1, f2, Fraction(j, q)), f"{f1} {f2} c={j}/{q}")
    return r


def one_point(ctx: Context) -> PropertyResult:
    r = PropertyResult("one-point")
    rng = ctx.rng("one-point")
    for n in (1, 2, 3):
        tau = Topology.discrete(n)
        oracles = [ALL_COMPACT] + [random_designated_oracle(rng, tau, ()) for _ in range(3)]
        for oracle in oracles:
            for c in Grid(2, n).functions():
                f = FuzzySet.from_codes(c, 2)
                compact, closed = one_point_equivalence(f, tau, oracle)
                r.expect(compact == closed, f"n={n} {f} oracle={oracle}")
    return r


# --- gallery -----------------------------------------------------------------

def gallery_a(ctx: Context, q: int = 4) -> PropertyResult:
    r = PropertyResult("gallery-A")
    for tau in _small(ctx, 2):
        for k in range(q - 1):
            for mid in combinations(range(1, q), k):
                levels = SupClosedSubgrid(q, (0,) + mid + (q,))
                rep = classify(gallery.omega_sub_L(tau, levels))
                r.expect(rep.is_weakly_induced and not rep.is_laminated, f"{tau!r} L={levels.levels}")
        r.expect(gallery.omega_sub_L(tau, SupClosedSubgrid(q, (0, q))) == chi(tau, q), f"{tau!r} indicators")
        for y in tau.opens:
            if y in (0, tau.full):
                continue
            d = gallery.open_subspace_extension(tau, y, 2)
            rep = classify(d)
            r.expect(rep.is_weakly_induced and iota(d) == tau and d.constants() == [0, 1],
                     f"{tau!r} open subspace {points_of(y)}")
    return r


def _families(q: int):
    h = Fraction(1, 2)
    return [gallery.IntervalFamily.of((0, h)), gallery.IntervalFamily.of((h, 1)),
            gallery.IntervalFamily.of((0, Fraction(1, 4)), (h, 1))]


def gallery_b(ctx: Context, q: int = 4) -> PropertyResult:
    r = PropertyResult("gallery-B")
    for tau in _small(ctx, 3):
        for fam in _families(q):
            d = gallery.omega_J(tau, fam, q)
            r.expect(chi_star(d) == Topology.indiscrete(tau.n), f"{tau!r} {fam.intervals} indicators")
            r.expect(iota(d) == tau, f"{tau!r} {fam.intervals} levels")
            r.expect(is_laminated(d), f"{tau!r} {fam.intervals} lamination")
    return r


def gallery_c(ctx: Context, q: int = 2) -> PropertyResult:
    r = PropertyResult("gallery-C")
    tops = _small(ctx, 2)
    for t1, t2 in product(tops, repeat=2):
        d = gallery.product_pathology(t1, t2, q)
        p1, p2 = product_projections(t1.n, t2.n)
        for f in d:
            r.expect(gallery.factors_through(f, p1) or gallery.factors_through(f, p2), f"{f} mixes coordinates")
        r.expect(iota(d) == product_topology(t1, t2), f"{t1!r} x {t2!r} levels")
    return r


def _assignments(tau: Topology):
    """Finite subbases of ``tau`` paired with disjoint grid intervals."""
    sub = [u for u in tau.sorted_opens() if u not in (0, tau.full)]
    quarter = [(Fraction(i, 4), Fraction(i + 1, 4)) for i in range(4)]
    if len(sub) > 4:
        sub = sub[:4]
    return gallery.IntervalAssignment(tuple(sub), gallery.IntervalFamily(tuple(quarter[: len(sub)]))) if sub else None


def gallery_d(ctx: Context, q: int = 4) -> PropertyResult:
    r = PropertyResult("gallery-D")
    for tau in _small(ctx, 3):
        a = _assignments(tau)
        if a is None:
            continue
        d = gallery.delta_rho(a, tau.n, q)
        levels = set()
        for f in d:
            levels |= {level_above(f, c) for c in Grid(q, tau.n).levels}
        r.expect(levels == set(a.subbase) | {0, tau.full}, f"{tau!r} level-set identity")
        r.expect(iota(d) == generate_topology(a.subbase, tau.n), f"{tau!r} generated topology")
        if is_connected(generate_topology(a.subbase, tau.n)):
            maps = gallery.continuous_maps_into_usual_interval(d, 2)
            r.expect(all(len(set(h.image)) == 1 for h in maps), f"{tau!r} nonconstant continuous map")
    return r


def gallery_e(ctx: Context, q: int = 2) -> PropertyResult:
    r = PropertyResult("gallery-E")
    tops = _small(ctx, 3)
    sources = [chi(t, q) for t in tops] + [gallery.omega_sub_L(t, SupClosedSubgrid(q, (0, q))) for t in _small(ctx, 2)]
    sources += [d for d in ctx.fuzzies if not is_laminated(d) and d.n <= 3 and d.q == q][:20]
    targets = [omega(t, q) for t in tops if t.n <= 2] + [d for d in ctx.fuzzies if is_laminated(d) and d.q == q][:10]
    for d1 in sources:
        if is_laminated(d1):
            continue
        for d2 in targets:
            for h in all_maps(d1.n, d2.n):
                r.expect(gallery.lamination_transfer_check(h, d1, d2), f"{d1!r} -> {d2!r} via {h}")
    return r


REGISTRY: dict[str, Callable[[Context], PropertyResult]] = {
    "functor-round-trip": functor_round_trip,
    "inclusion": inclusion,
    "equivalence": equivalence,
    "generation": generation,
    "sublattice": sublattice,
    "pullback-levels": pullback_levels,
    "continuity": continuity,
    "interval-test": interval_test,
    "subspace": subspace,
    "product": products,
    "coproduct": coproducts,
    "induced-products": induced_products,
    "subcover": subcover,
    "closed-below": closed_below,
    "compact-vs-condition-L": compact_vs_condition_L,
    "compact-carrier": compact_carrier,
    "hausdorff": hausdorff,
    "tychonoff-levels": tychonoff_levels,
    "one-point": one_point,
}

GALLERY: dict[str, Callable[[Context], PropertyResult]] = {
    "A": gallery_a,
    "B": gallery_b,
    "C": gallery_c,
    "D": gallery_d,
    "E": gallery_e,
}

# short numbered identifiers accepted by the command line
ALIASES = {
    "thm-1.3": "functor-round-trip",
    "thm-1.4": "inclusion",
    "thm-1.5": "equivalence",
    "prop-1.6": "equivalence",
    "thm-1.9": "generation",
    "thm-1.10": "continuity",
    "eq-04": "pullback-levels",
    "prop-1.10a": "interval-test",
    "prop-1.10b": "subspace",
    "eq-04b": "subspace",
    "prop-1.11": "product",
    "eq-05": "product",
    "prop-1.12": "coproduct",
    "eq-08": "coproduct",
    "cor-1.13": "induced-products",
    "eq-09": "induced-products",
    "prop-1.14": "sublattice",
    "lemma-2.2": "subcover",
    "thm-2.3": "compact-vs-condition-L",
    "cor-2.4": "compact-carrier",
    "cor-2.5": "hausdorff",
    "thm-2.6": "tychonoff-levels",
    "eq-18": "tychonoff-levels",
    "prop-2.7": "one-point",
}


def resolve(name: str) -> str:
    key = ALIASES.get(name.lower(), name.lower())
    if key not in REGISTRY:
        raise KeyError(name)
    return key
