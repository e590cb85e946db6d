"""Command-line front end: ``python -m fuzzytop <command> ...``.

Exit status is 0 when every verdict holds, 1 when some property fails and 2
on input errors (bad documents, unknown identifiers, out-of-range guards).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import properties
from .census import MAX_FUZZY_FUNCTIONS, run_equivalence_census
from .compactness import (
    CoverInstance,
    NotCompact,
    dominates,
    extract_subcover,
    is_fuzzy_closed,
    is_fuzzy_compact,
    is_fuzzy_open,
    one_point_equivalence,
    product_min,
    tychonoff_level_identity,
)
from .constructions import (
    coproduct_fuzzy_topology,
    is_fuzzy_continuous,
    is_fuzzy_quotient,
    product_fuzzy_topology,
    relative_fuzzy_topology,
)
from .fuzzy import SupClosedSubgrid, chi_star, classify, iota, omega
from .gallery import IntervalFamily, omega_J, omega_sub_L, product_pathology
from .instance import InstanceDocument, InstanceError, parse_instance
from .lattice import FuzzySet, mask_of, points_of
from .topology import (
    Topology,
    coproduct_topology,
    is_continuous,
    is_quotient_map,
    product_topology,
    relative_topology,
)


class UsageError(ValueError):
    """Input problem that maps to exit status 2."""


# --- rendering ---------------------------------------------------------------

def plain(obj):
    """Exact, JSON-ready form of library values; rationals become "p/q"."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Topology):
        return obj.as_lists()
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, FuzzySet)):
        return [plain(v) for v in obj]
    if hasattr(obj, "members"):
        return [plain(f) for f in obj.members]
    return str(obj)


class Report:
    def __init__(self, command: list[str]):
        self.command = command
        self.verdicts: dict[str, bool] = {}
        self.details: dict = {}
        self.seconds: Optional[float] = None

    def verdict(self, name: str, ok: bool):
        self.verdicts[name] = bool(ok)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        out = {"command": self.command, "passed": self.passed, "verdicts": self.verdicts,
               "details": plain(self.details)}
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out

    def render(self, style: str) -> str:
        d = self.to_dict()
        if style == "json":
            return json.dumps(d, indent=2, sort_keys=False) + "\n"
        lines = [f"command: {' '.join(d['command'])}"]
        for k, v in d["verdicts"].items():
            lines.append(f"  {'PASS' if v else 'FAIL'}  {k}")
        for k, v in d["details"].items():
            lines.append(f"  {k}: {json.dumps(v)}")
        if "seconds" in d:
            lines.append(f"  seconds: {d['seconds']}")
        lines.append(f"result: {'PASS' if d['passed'] else 'FAIL'}")
        return "\n".join(lines) + "\n"


# --- helpers -----------------------------------------------------------------

def _read(path: Optional[str], args) -> Optional[InstanceDocument]:
    if path is None:
        return None
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    return parse_instance(text, max_n=args.max_n or 24, max_q=args.max_q or 10**6)


def _space(doc: InstanceDocument):
    """The document's fuzzy topology, or the induced one of its topology."""
    delta = doc.fuzzy_topology()
    if delta is not None:
        return delta
    tau = doc.tau()
    if tau is None:
        raise UsageError("document has neither a topology nor fuzzy sets")
    return omega(tau, doc.denominator)


def _require_tau(doc: InstanceDocument) -> Topology:
    tau = doc.tau()
    if tau is None:
        raise UsageError("document needs a topology")
    return tau


def _fraction(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational: {text!r}") from None
    if "." in text:
        raise UsageError(f"use p/q instead of decimal {text!r}")
    return v


def _subset_arg(text: str) -> int:
    try:
        return mask_of(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad subset {text!r}; expected comma separated indices") from None


def _classification(delta) -> dict:
    rep = classify(delta)
    return {
        "chang": rep.is_chang,
        "laminated": rep.is_laminated,
        "weakly_induced_conditions": list(rep.weakly_induced_conditions),
        "grid_affine_invariant": rep.is_grid_affine_invariant,
        "grid_rescaling_closed": rep.is_grid_rescaling_closed,
        "induced_on_grid": rep.is_induced_on_grid,
        "witnesses": rep.witnesses,
    }


def _context(args, doc: Optional[InstanceDocument]) -> properties.Context:
    max_n = args.max_n or 3
    max_q = args.max_q or 4
    ctx = properties.Context.builtin(seed=args.seed, max_n=max_n, max_q=max_q)
    if doc is not None:
        tau = doc.tau()
        delta = doc.fuzzy_topology()
        ctx.topologies = [tau] if tau is not None else []
        ctx.fuzzies = [delta] if delta is not None else ([omega(tau, doc.denominator)] if tau else [])
    return ctx


# --- commands ----------------------------------------------------------------

def cmd_classify(args, report: Report):
    doc = _read(args.file, args)
    if doc is None:
        raise UsageError("classify needs an instance document")
    delta = _space(doc)
    info = _classification(delta)
    report.details.update(info)
    report.details["members"] = delta
    report.details["iota"] = iota(delta)
    report.verdict("weakly-induced conditions agree", len(set(info["weakly_induced_conditions"])) == 1)
    report.verdict("chang fuzzy topology", info["chang"])


def cmd_check(args, report: Report):
    try:
        name = properties.resolve(args.property)
    except KeyError:
        raise UsageError(f"unknown property {args.property!r}; known: "
                         + ", ".join(sorted(set(properties.REGISTRY) | set(properties.ALIASES)))) from None
    doc = _read(args.file, args)
    result = properties.REGISTRY[name](_context(args, doc))
    report.details.update(result.to_dict())
    report.verdict(name, result.passed)


def cmd_census(args, report: Report):
    max_n, max_q = args.max_n or 2, args.max_q or 2
    pairs = [(n, q) for n in range(1, max_n + 1) for q in range(1, max_q + 1) if (q + 1) ** n <= MAX_FUZZY_FUNCTIONS]
    if not pairs:
        raise UsageError("no feasible (n, q) under the given guards")
    runs = []
    for n, q in pairs:
        rep = run_equivalence_census(n, q, strict=False)
        runs.append(rep.to_dict())
        report.verdict(f"equivalence n={n} q={q}", not rep.violations and not rep.inconsistent)
    report.details["census"] = runs


def cmd_construct(args, report: Report):
    docs = [_read(p, args) for p in args.files]
    if not docs:
        raise UsageError("construct needs at least one instance document")
    kind = args.kind
    if kind in ("product", "coproduct"):
        if len(docs) != 2:
            raise UsageError(f"{kind} needs two instance documents")
        d1, d2 = (_space(d) for d in docs)
        make = product_fuzzy_topology if kind == "product" else coproduct_fuzzy_topology
        top = product_topology if kind == "product" else coproduct_topology
        out = make(d1, d2)
        report.details.update(n=out.n, q=out.q, members=out, iota=iota(out))
        report.verdict("levels of the construction", iota(out) == top(iota(d1), iota(d2)))
        if d1.q == d2.q and omega(iota(d1), d1.q) == d1 and omega(iota(d2), d2.q) == d2:
            report.verdict("induced factors give an induced result", omega(iota(out), out.q) == out)
    elif kind == "subspace":
        if args.subset is None:
            raise UsageError("subspace needs --subset")
        y = _subset_arg(args.subset)
        delta = _space(docs[0])
        if y == 0 or y >> delta.n:
            raise UsageError("subset must be nonempty and inside the carrier")
        out = relative_fuzzy_topology(delta, y)
        report.details.update(subset=points_of(y), members=out, iota=iota(out))
        report.verdict("levels of the subspace", iota(out) == relative_topology(iota(delta), y))
    else:
        if len(docs) != 2 or args.map is None:
            raise UsageError("quotient needs a source document with --map NAME and a target document")
        try:
            h = docs[0].map(args.map)
        except KeyError:
            raise UsageError(f"no map named {args.map!r} in the source document") from None
        d1, d2 = (_space(d) for d in docs)
        if h.source != d1.n or h.target != d2.n:
            raise UsageError("map does not match the carriers")
        cont = is_fuzzy_continuous(h, d1, d2)
        quot = is_fuzzy_quotient(h, d1, d2)
        report.details.update(map=list(h.image), fuzzy_continuous=cont.continuous, fuzzy_quotient=quot.quotient,
                              witness=quot.witness, continuous=is_continuous(h, iota(d1), iota(d2)),
                              quotient=is_quotient_map(h, iota(d1), iota(d2)))
        if cont.continuous:
            report.verdict("fuzzy continuity implies continuity of levels", is_continuous(h, iota(d1), iota(d2)))


def cmd_gallery(args, report: Report):
    entry = args.entry.upper()
    doc = _read(args.file, args)
    tau = doc.tau() if doc is not None and doc.topology is not None else Topology.sierpinski()
    showcase = {"topology": tau}
    if entry == "A":
        q = args.q or 4
        levels = SupClosedSubgrid.of([_fraction(t) for t in (args.levels or "0,1").split(",")], q)
        d = omega_sub_L(tau, levels)
        showcase.update(levels=list(levels.levels), members=d, classification=_classification(d))
    elif entry == "B":
        q = args.q or 2
        ivs = args.interval or ["0,1/2"]
        fam = IntervalFamily(tuple(tuple(_fraction(t) for t in iv.split(",")) for iv in ivs))
        d = omega_J(tau, fam, q)
        showcase.update(intervals=[list(iv) for iv in fam.intervals], members=d, chi_star=chi_star(d), iota=iota(d))
    elif entry == "C":
        d = product_pathology(tau, tau, args.q or 2)
        showcase.update(members=d, iota=iota(d), product=product_topology(tau, tau))
    ctx = _context(args, None)
    result = properties.GALLERY[entry](ctx)
    report.details["instance"] = showcase
    report.details.update(result.to_dict())
    report.verdict(f"gallery {entry}", result.passed)


def cmd_compactness(args, report: Report):
    doc = _read(args.file, args)
    task = args.task
    if doc is None:
        name = {"subcover": "subcover", "levels": "compact-vs-condition-L",
                "tychonoff": "tychonoff-levels", "onepoint": "one-point"}[task]
        result = properties.REGISTRY[name](_context(args, None))
        report.details.update(result.to_dict())
        report.verdict(name, result.passed)
        return
    tau = _require_tau(doc)
    oracle = doc.compactness_oracle()
    fs = list(doc.fuzzy_sets)
    if task == "subcover":
        if len(fs) < 2:
            raise UsageError("subcover needs a target followed by at least one family member")
        eps = _fraction(args.epsilon or "1/4")
        try:
            inst = CoverInstance(fs[0], fs[1:], eps, tau)
            cert = extract_subcover(inst, oracle)
        except NotCompact as e:
            report.details["not_compact"] = str(e)
            report.verdict("levels compact", False)
            return
        except ValueError as e:
            raise UsageError(str(e)) from None
        # family indices are reported relative to fs[1:]
        sub = [inst.family[i] for i in cert.indices]
        report.details.update(indices=list(cert.indices), epsilon=eps, ladder_steps=len(cert.ladder) - 1)
        report.verdict("subfamily dominates target - epsilon", dominates(sub, inst.target, eps))
    elif task == "levels":
        rows = []
        for f in fs:
            rows.append({"f": f, "fuzzy_open": is_fuzzy_open(f, tau), "fuzzy_closed": is_fuzzy_closed(f, tau),
                         "fuzzy_compact": is_fuzzy_compact(f, tau, oracle)})
        report.details["levels"] = rows
    elif task == "tychonoff":
        if len(fs) < 2:
            raise UsageError("tychonoff needs two fuzzy sets")
        f1, f2 = fs[0], fs[1]
        q = doc.denominator
        ok = all(tychonoff_level_identity(f1, f2, Fraction(j, q)) for j in range(1, q + 1))
        report.details.update(product_min=product_min(f1, f2))
        report.verdict("weak levels of the product minimum", ok)
    else:
        rows = []
        for f in fs:
            compact, closed = one_point_equivalence(f, tau, oracle)
            rows.append({"f": f, "fuzzy_compact": compact, "extension_fuzzy_closed": closed})
        report.details["one_point"] = rows
        if len(tau.opens) == 1 << tau.n:
            report.verdict("compact iff extension closed", all(r["fuzzy_compact"] == r["extension_fuzzy_closed"] for r in rows))


COMMANDS = {
    "classify": cmd_classify,
    "check": cmd_check,
    "census": cmd_census,
    "construct": cmd_construct,
    "gallery": cmd_gallery,
    "compactness": cmd_compactness,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--max-q", type=int, default=None)
    common.add_argument("--timing", action="store_true", help="append wall-clock time (breaks byte-identity)")

    p = argparse.ArgumentParser(prog="fuzzytop", description="Exact computations on finite fuzzy topological spaces.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("classify", parents=[common])
    s.add_argument("file", nargs="?")
    s = sub.add_parser("check", parents=[common])
    s.add_argument("property")
    s.add_argument("file", nargs="?")
    sub.add_parser("census", parents=[common])
    s = sub.add_parser("construct", parents=[common])
    s.add_argument("kind", choices=("product", "coproduct", "subspace", "quotient"))
    s.add_argument("files", nargs="*")
    s.add_argument("--subset")
    s.add_argument("--map")
    s = sub.add_parser("gallery", parents=[common])
    s.add_argument("entry", choices=("A", "B", "C", "D", "E", "a", "b", "c", "d", "e"))
    s.add_argument("file", nargs="?")
    s.add_argument("--q", type=int)
    s.add_argument("--levels", help="comma separated values of a sup-closed subgrid (A)")
    s.add_argument("--interval", action="append", help="lo,hi of one interval (B); repeatable")
    s = sub.add_parser("compactness", parents=[common])
    s.add_argument("task", choices=("subcover", "levels", "tychonoff", "onepoint"))
    s.add_argument("file", nargs="?")
    s.add_argument("--epsilon")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for guard in ("max_n", "max_q"):
        v = getattr(args, guard)
        if v is not None and v < 1:
            parser.error(f"--{guard.replace('_', '-')} must be positive")
    argv = list(sys.argv[1:] if argv is None else argv)
    report = Report([a for a in argv if a not in ("--timing",)])
    start = time.perf_counter()
    try:
        COMMANDS[args.command](args, report)
    except InstanceError as e:
        for problem in e.problems:
            print(f"error: {problem}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.timing:
        report.seconds = time.perf_counter() - start
    sys.stdout.write(report.render(args.report))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
