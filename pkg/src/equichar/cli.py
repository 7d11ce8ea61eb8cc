"""Command-line front end.

Exit codes: 0 on success, 2 when a verification ran and failed, 1 for
usage errors (bad flags, malformed input files, budget violations).

Output is deterministic for a fixed (input, seed): JSON reports omit
wall-clock milliseconds unless --timings is passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache, harness, io
from .cells import CellSpace
from .cells import chi as cells_chi
from .errors import InvariantViolation, ResourceLimitError, UsageError
from .euler import chi_k, chi_orb, chi_k_equivariant
from .groups import conjugacy_classes
from .motivic import (L, embed, lext_coeff_ring, orbifold_class_from_datum,
                      zeta_L)
from .powerstruct import (INT_RING, TruncatedSeries, burnside_coeff_ring,
                          power, zeta_series)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the contract reserves 2 for
    verification failures, so route parse errors through UsageError."""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    p = _Parser(prog="equichar",
                description="Exact equivariant Euler characteristics, "
                            "power structures, and identity verification.")
    p.add_argument("--cache-dir", default=None,
                   help="directory for tables of marks "
                        "(default: $EQUICHAR_CACHE)")
    sub = p.add_subparsers(dest="verb", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    g = sub.add_parser("group", help="inspect a finite group")
    g.add_argument("action", choices=("show", "classes", "subgroups", "marks"))
    g.add_argument("--input", required=True)
    add_format(g)

    for verb, takes_k in (("chi", False), ("chi-orb", False),
                          ("chi-k", True), ("chi-k-eq", True)):
        sp = sub.add_parser(verb)
        sp.add_argument("--input", required=True)
        if takes_k:
            sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--cross-check", action="store_true")
        add_format(sp)

    sp = sub.add_parser("power", help="raise a series to a ring-element power")
    sp.add_argument("--input", required=True)
    sp.add_argument("--N", type=int, required=True)
    add_format(sp)

    sp = sub.add_parser("zeta", help="zeta series of a single generator")
    sp.add_argument("--input", required=True)
    sp.add_argument("--N", type=int, required=True)
    add_format(sp)

    sp = sub.add_parser("orbifold-class")
    sp.add_argument("--input", required=True)
    add_format(sp)

    v = sub.add_parser("verify", help="check an identity degree by degree")
    vsub = v.add_subparsers(dest="identity", required=True)

    t1 = vsub.add_parser("theorem1")
    t1.add_argument("--input", required=True)
    t1.add_argument("--k", type=int, required=True)
    t1.add_argument("--N", type=int, required=True)
    t1.add_argument("--max-wreath", type=int, default=None)
    t1.add_argument("--max-points", type=int, default=None)
    t1.add_argument("--cross-check", action="store_true")

    l1 = vsub.add_parser("lemma1")
    l1.add_argument("--input", required=True)
    l1.add_argument("--N", type=int, required=True)
    l1.add_argument("--max-points", type=int, default=None)

    ax = vsub.add_parser("axioms")
    ax.add_argument("--ring", choices=("int", "burnside", "lext"),
                    required=True)
    ax.add_argument("--trials", type=int, default=100)
    ax.add_argument("--N", type=int, default=6)
    ax.add_argument("--seed", type=int, default=0)

    pr = vsub.add_parser("props12")
    pr.add_argument("--trials", type=int, default=100)
    pr.add_argument("--N", type=int, default=5)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--weights", default=None,
                    help="comma-separated rationals, e.g. 1/2,1")

    for vp in (t1, l1, ax, pr):
        add_format(vp)
        vp.add_argument("--timings", action="store_true")
    return p


def _emit(args, text_value, json_value) -> None:
    if args.format == "json":
        print(json.dumps(json_value, sort_keys=True))
    else:
        print(text_value)


def _ring_for(G, args):
    return cache.cached_burnside_ring(G,
                                      cache.resolve_cache_dir(args.cache_dir))


def _load_space(args, need_ring: bool = True):
    X = io.space_from_json(io.load_json(args.input), args.input)
    if need_ring:
        _ring_for(X.gB, args)
    return X


# -- verb handlers -----------------------------------------------------------

def _cmd_group(args) -> int:
    G = io.group_from_json(io.load_json(args.input), args.input)
    if args.action == "show":
        _emit(args,
              f"{G.label}: order {G.order}, {len(G.generators)} generators",
              {"label": G.label, "order": G.order,
               "generators": len(G.generators)})
        return 0
    if args.action == "classes":
        classes = conjugacy_classes(G)
        sizes = [len(c) for c in classes]
        _emit(args, f"{len(classes)} conjugacy classes, sizes {sizes}",
              {"count": len(classes), "sizes": sizes,
               "representatives": [c[0] for c in classes]})
        return 0
    ring = _ring_for(G, args)
    if args.action == "subgroups":
        rows = [{"name": ring.basis_name(i),
                 "order": ring.lattice.classes[i].order,
                 "index": G.order // ring.lattice.classes[i].order}
                for i in range(ring.n)]
        _emit(args,
              "\n".join(f"{r['name']}: order {r['order']} index {r['index']}"
                        for r in rows),
              rows)
        return 0
    # marks
    names = [ring.basis_name(i) for i in range(ring.n)]
    text = "\n".join(f"{names[i]:>8} " +
                     " ".join(f"{v:>4}" for v in row)
                     for i, row in enumerate(ring.marks_rows))
    _emit(args, text, {"basis": names,
                       "marks": [list(r) for r in ring.marks_rows]})
    return 0


def _cmd_chi(args) -> int:
    X = _load_space(args, need_ring=False)
    value = cells_chi(X)
    _emit(args, str(value), value)
    return 0


def _cmd_chi_orb(args) -> int:
    X = _load_space(args)
    value = chi_orb(X, cross_check=True if args.cross_check else None)
    _emit(args, str(value), value)
    return 0


def _cmd_chi_k(args) -> int:
    X = _load_space(args)
    value = chi_k(X, args.k, cross_check=True if args.cross_check else None)
    _emit(args, str(value), value)
    return 0


def _cmd_chi_k_eq(args) -> int:
    X = _load_space(args)
    el = chi_k_equivariant(X, args.k,
                           cross_check=True if args.cross_check else None)
    _emit(args, el.render(), io.burnside_to_json(el))
    return 0


def _series_context(obj, path, args):
    """Resolve the coefficient ring named in a power/zeta input file."""
    choice = obj.get("ring", "int")
    if choice == "int":
        def parse(v):
            if isinstance(v, bool) or not isinstance(v, int):
                raise UsageError(f"{path}: integer coefficient expected")
            return v
        return INT_RING, parse, str
    if isinstance(choice, dict) and "burnside" in choice:
        bring = _ring_for(io.group_from_json(choice["burnside"], path), args)
        return (burnside_coeff_ring(bring),
                lambda v: io.burnside_from_json(v, bring, path),
                lambda c: c.render())
    if isinstance(choice, dict) and "lext" in choice:
        bring = _ring_for(io.group_from_json(choice["lext"], path), args)
        return (lext_coeff_ring(bring),
                lambda v: io.lext_from_json(v, bring, path),
                lambda c: c.render())
    raise UsageError(f"{path}: ring must be \"int\", "
                     f"{{\"burnside\": <group>}}, or {{\"lext\": <group>}}")


def _cmd_power(args) -> int:
    obj = io.load_json(args.input)
    ring, parse, render = _series_context(obj, args.input, args)
    raw = obj.get("series")
    if not isinstance(raw, list) or not raw:
        raise UsageError(f"{args.input}: \"series\" must be a nonempty list")
    coeffs = [parse(v) for v in raw]
    coeffs = coeffs[:args.N + 1]
    coeffs += [ring.zero] * (args.N + 1 - len(coeffs))
    A = TruncatedSeries(ring, tuple(coeffs))
    if "exponent" not in obj:
        raise UsageError(f"{args.input}: missing field 'exponent'")
    m = parse(obj["exponent"])
    out = power(A, m)
    _emit(args, io.render_series(out, render),
          io.series_to_json(out, lambda c: render(c)))
    return 0


def _cmd_zeta(args) -> int:
    obj = io.load_json(args.input)
    path = args.input
    bring = _ring_for(io.group_from_json(io._field(obj, "group", path), path),
                      args)
    idx = io._field(obj, "index", path)
    if not isinstance(idx, int) or not 0 <= idx < bring.n:
        raise UsageError(f"{path}: index must name one of the {bring.n} "
                         f"basis classes")
    if "exp" in obj:
        q = io.parse_fraction(obj["exp"], path)
        out = zeta_L(L(bring, q) * embed(bring.basis(idx)), args.N)
        render = lambda c: c.render()
    else:
        out = zeta_series(burnside_coeff_ring(bring), idx, args.N)
        render = lambda c: c.render()
    _emit(args, io.render_series(out, render),
          io.series_to_json(out, render))
    return 0


def _cmd_orbifold_class(args) -> int:
    datum = io.datum_from_json(io.load_json(args.input), args.input)
    _ring_for(datum.bring.group, args)
    el = orbifold_class_from_datum(datum)
    _emit(args, el.render(), io.lext_to_json(el))
    return 0


def _parse_weights(raw, path="--weights"):
    if raw is None:
        return None
    return tuple(io.parse_fraction(part.strip(), path)
                 for part in raw.split(","))


def _cmd_verify(args) -> int:
    if args.identity == "theorem1":
        X = _load_space(args)
        if isinstance(X, CellSpace):
            raise UsageError("theorem1 verification needs a finite set, "
                             "not a cell space")
        kw = {}
        if args.max_wreath is not None:
            kw["max_wreath"] = args.max_wreath
        if args.max_points is not None:
            kw["max_points"] = args.max_points
        report = harness.verify_theorem1(
            X, args.k, args.N,
            cross_check=True if args.cross_check else None, **kw)
    elif args.identity == "lemma1":
        X = _load_space(args)
        if isinstance(X, CellSpace):
            raise UsageError("lemma1 verification needs a finite set, "
                             "not a cell space")
        kw = {}
        if args.max_points is not None:
            kw["max_points"] = args.max_points
        report = harness.verify_lemma1(X, args.N, **kw)
    elif args.identity == "axioms":
        report = harness.verify_axioms(args.ring, args.trials, args.N,
                                       args.seed)
    else:
        report = harness.verify_props12(args.trials, args.N, args.seed,
                                        weights=_parse_weights(args.weights))
    if args.format == "json":
        print(json.dumps(report.to_json(timings=args.timings),
                         sort_keys=True))
    else:
        print(report.render())
    return 0 if report.passed else 2


_HANDLERS = {
    "group": _cmd_group,
    "chi": _cmd_chi,
    "chi-orb": _cmd_chi_orb,
    "chi-k": _cmd_chi_k,
    "chi-k-eq": _cmd_chi_k_eq,
    "power": _cmd_power,
    "zeta": _cmd_zeta,
    "orbifold-class": _cmd_orbifold_class,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _HANDLERS[args.verb](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except InvariantViolation as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
