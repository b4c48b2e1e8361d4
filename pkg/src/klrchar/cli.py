"""Command line front end.

Every subcommand writes one deterministic JSON document to stdout (or to
--out) and a short human-readable table to stderr.  Failed checks exit
nonzero with a machine-readable error document.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canonical import CanonicalTable
from .cartan import CartanType, RootSystem
from .convex import (ConvexOrder, good_lyndon_words, lyndon_order,
                     order_from_reduced_word)
from .klr import KLR
from .kostant import kostant_partitions, kp_scalars, kp_sort_key
from .laurent import LaurentPoly, factor_quantum
from .modules import ProperStandard, rank_over
from .pbw import PBWCharacters, dim_H, dim_proper_standard, standard_divisor
from .resolutions import euler_matches, resolution, verify_complex
from .shuffle import sh_to_json
from . import verify as verify_mod


def _parse_weight(text: str, rank: int):
    parts = [int(t) for t in text.replace(";", ",").split(",")]
    if len(parts) != rank:
        raise SystemExit(_fail(f"--alpha needs {rank} comma-separated coefficients"))
    return tuple(parts)


def _parse_lambda(text: str, rank: int):
    out = []
    for part in text.split(";"):
        out.append(tuple(int(t) for t in part.split(",")))
        if len(out[-1]) != rank:
            raise SystemExit(_fail(f"--parts entries need {rank} coefficients"))
    return tuple(out)


def _parse_eps(text: str | None, rs: RootSystem):
    if not text:
        return None
    eps = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        sign = 1 if chunk[0] == "+" else -1
        i, j = int(chunk[1]), int(chunk[2])
        eps[(i, j)] = sign
    for i in range(1, rs.rank + 1):
        for j in range(1, rs.rank + 1):
            if i != j and rs.cartan[i - 1][j - 1] < 0 and (i, j) not in eps:
                eps[(i, j)] = -eps.get((j, i), -(1 if i < j else -1))
    return eps


def _build_order(args, rs: RootSystem) -> ConvexOrder:
    spec = args.order
    if spec == "lyndon":
        return lyndon_order(rs)
    word = tuple(int(t) for t in (spec.split(",") if "," in spec else spec))
    return order_from_reduced_word(word, rs)


def _emit(doc: dict, args, table: str):
    blob = json.dumps(doc, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(blob + "\n")
    else:
        print(blob)
    if table:
        print(table, file=sys.stderr)


def _fail(message: str, **extra) -> int:
    doc = {"error": message}
    doc.update(extra)
    print(json.dumps(doc, sort_keys=True))
    return 1


def _word_str(w) -> str:
    return "".join(map(str, w)) if all(x <= 9 for x in w) else ",".join(map(str, w))


def _root_str(b) -> str:
    return "+".join(f"{c}a{i+1}" if c > 1 else f"a{i+1}"
                    for i, c in enumerate(b) if c) or "0"


def _d_labels(rs: RootSystem) -> dict[int, int]:
    out: dict[int, int] = {}
    for node, d in enumerate(rs.d, start=1):
        out.setdefault(d, node)
    return out


def _coeff_word(c: LaurentPoly, w, rs: RootSystem) -> str:
    pretty = factor_quantum(c, _d_labels(rs))
    word = _word_str(w)
    return word if pretty == "1" else f"{pretty} {word}"


# -- subcommands ---------------------------------------------------------------


def cmd_roots(args, rs: RootSystem) -> int:
    order = _build_order(args, rs)
    items = [
        {"root": list(b), "height": sum(b), "d": rs.d_root(b),
         "rank": order.rank_of[b]}
        for b in order.roots
    ]
    doc = {"type": str(rs.cartan_type), "count": len(items), "roots": items,
           "order": order.label}
    lines = [f"{order.rank_of[b]:>3}  {_root_str(b):<22} ht={sum(b)} d={rs.d_root(b)}"
             for b in order.roots]
    _emit(doc, args, "\n".join(lines))
    return 0


def cmd_orders(args, rs: RootSystem) -> int:
    order = _build_order(args, rs)
    doc = {"type": str(rs.cartan_type), "order": order.label,
           "roots": [list(b) for b in order.roots]}
    _emit(doc, args, " < ".join(_root_str(b) for b in order.roots))
    return 0


def cmd_lyndon(args, rs: RootSystem) -> int:
    words = good_lyndon_words(rs)
    rows = sorted((w, b) for b, w in words.items())
    doc = {"type": str(rs.cartan_type),
           "words": [{"word": _word_str(w), "root": list(b)} for w, b in rows]}
    _emit(doc, args, "\n".join(f"{_word_str(w):<30} {_root_str(b)}" for w, b in rows))
    return 0


def cmd_kp(args, rs: RootSystem) -> int:
    order = _build_order(args, rs)
    weight = _parse_weight(args.alpha, rs.rank)
    kps = sorted(kostant_partitions(weight, order), key=lambda l: kp_sort_key(l, order))
    items = []
    lines = []
    for lam in kps:
        fact, s, kappa, word = kp_scalars(lam, order)
        items.append({
            "parts": [list(p) for p in lam],
            "factorial": fact.to_json(),
            "s": s,
            "kappa": kappa.to_json(),
            "word": _word_str(word),
        })
        lines.append(f"({', '.join(_root_str(p) for p in lam)}): word {_word_str(word)}, "
                     f"s={s}, kappa={factor_quantum(kappa, _d_labels(rs))}")
    doc = {"type": str(rs.cartan_type), "alpha": list(weight),
           "order": order.label, "count": len(items), "partitions": items}
    _emit(doc, args, "\n".join(lines))
    return 0


def cmd_pbw_char(args, rs: RootSystem) -> int:
    order = _build_order(args, rs)
    pbw = PBWCharacters(order)
    roots = order.roots
    if args.alpha:
        weight = _parse_weight(args.alpha, rs.rank)
        if weight not in rs.positive_set:
            return _fail(f"{weight} is not a positive root")
        roots = (weight,)
    items = []
    lines = []
    for b in roots:
        ch = pbw.dual_root(b)
        items.append({"root": list(b), "character": sh_to_json(ch)})
        pretty = " + ".join(_coeff_word(c, w, rs) for w, c in sorted(ch.items()))
        lines.append(f"r*({_root_str(b)}) = {pretty}")
    doc = {"type": str(rs.cartan_type), "order": order.label, "characters": items}
    _emit(doc, args, "\n".join(lines))
    return 0


def cmd_canonical(args, rs: RootSystem) -> int:
    order = _build_order(args, rs)
    table = CanonicalTable(order, cache_dir=args.cache_dir)
    weights = [tuple(b) for b in order.roots]
    if args.alpha:
        weights = [_parse_weight(args.alpha, rs.rank)]
    items = []
    lines = []
    for weight in weights:
        kps = table.compute_weight(weight)
        for lam in kps:
            ch = table.char(lam)
            items.append({
                "weight": list(weight),
                "kp": [list(p) for p in lam],
                "character": sh_to_json(ch),
            })
            pretty = " + ".join(_coeff_word(c, w, rs) for w, c in sorted(ch.items()))
            lines.append(f"b*({', '.join(_root_str(p) for p in lam)}) = {pretty}")
    doc = {"type": str(rs.cartan_type), "order": order.label, "entries": items}
    _emit(doc, args, "\n".join(lines))
    return 0


def cmd_dim_check(args, rs: RootSystem) -> int:
    from .laurent import PowerSeries

    order = _build_order(args, rs)
    pbw = PBWCharacters(order)
    trunc = args.truncate
    weights = ([_parse_weight(args.alpha, rs.rank)] if args.alpha
               else list(verify_mod.weights_up_to(rs, args.max_height)))
    items = []
    ok = True
    for weight in weights:
        lhs = dim_H(weight, rs, trunc)
        rhs = PowerSeries({}, trunc)
        for lam in kostant_partitions(weight, order):
            dbar = dim_proper_standard(lam, pbw)
            work = trunc + max(0, -dbar.min_exp())
            dd = PowerSeries.from_poly(dbar, work).div_poly(standard_divisor(lam, rs))
            rhs = rhs + (dd * dbar).truncate(trunc)
        match = lhs == rhs
        ok = ok and match
        items.append({"alpha": list(weight), "dim_H": lhs.to_json(),
                      "sum_over_kp": rhs.to_json(), "match": match})
    doc = {"type": str(rs.cartan_type), "order": order.label,
           "truncate": trunc, "checks": items, "all_match": ok}
    lines = [f"{item['alpha']}: {'ok' if item['match'] else 'MISMATCH'}"
             for item in items]
    _emit(doc, args, "\n".join(lines))
    return 0 if ok else _fail("dimension formula mismatch",
                              failed=[i["alpha"] for i in items if not i["match"]])


def cmd_gram(args, rs: RootSystem) -> int:
    mods = [int(p) for p in args.mod.split(",")] if args.mod else [2]
    if args.willcex:
        if str(rs.cartan_type) != "A5":
            return _fail("--willcex needs --type A --rank 5")
        M = verify_mod.willcex_module()
        G = verify_mod.willcex_gram()
        lam = M.lam
        word = verify_mod.WILLCEX_WORD
        degree = 0
    else:
        if not (args.parts and args.word):
            return _fail("gram needs --parts and --word (or --willcex)")
        lam = _parse_lambda(args.parts, rs.rank)
        word = tuple(int(ch) for ch in args.word)
        degree = args.degree
        order = _build_order(args, rs)
        engine = KLR(rs, _parse_eps(args.eps, rs))
        M = ProperStandard(engine, order, lam)
        G = M.gram_matrix(word, degree)
    doc = {
        "lambda": [list(p) for p in lam],
        "word": _word_str(word),
        "degree": degree,
        "matrix": G,
        "rank_char0": rank_over(G, 0),
        "rank_mod": {str(p): rank_over(G, p) for p in mods},
    }
    lines = ["  ".join(f"{e:>3}" for e in row) for row in G]
    lines.append(f"rank over Q: {doc['rank_char0']}; " +
                 "; ".join(f"rank mod {p}: {r}" for p, r in doc["rank_mod"].items()))
    _emit(doc, args, "\n".join(lines))
    return 0


def cmd_resolve(args, rs: RootSystem) -> int:
    order = _build_order(args, rs)
    if not args.alpha:
        return _fail("resolve needs --alpha")
    alpha = _parse_weight(args.alpha, rs.rank)
    if alpha not in rs.positive_set:
        return _fail(f"{alpha} is not a positive root")
    engine = KLR(rs, _parse_eps(args.eps, rs))
    cx = resolution(alpha, order, engine)
    d_ok = verify_complex(cx)
    e_ok = euler_matches(cx, order, PBWCharacters(order), args.truncate)
    doc = cx.to_json()
    doc["differential_squares_to_zero"] = d_ok
    doc["euler_matches_standard_character"] = e_ok
    lines = []
    for d in sorted(cx.terms, reverse=True):
        lines.append(f"P_{d} = " + " + ".join(f"q^{s} H 1_{_word_str(w)}"
                                              for s, w in cx.terms[d]))
    lines.append(f"d^2 = 0: {d_ok}; Euler matches: {e_ok}")
    _emit(doc, args, "\n".join(lines))
    return 0 if (d_ok and e_ok) else _fail("resolution check failed")


def cmd_verify_all(args, rs=None) -> int:
    count = len(verify_mod.ALL_CHECKS)
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(partial(verify_mod.run_check, seed=args.seed),
                                    range(count)))
    else:
        results = [verify_mod.run_check(t, args.seed) for t in range(count)]
    # timings stay out of the JSON so output is byte-identical across runs
    doc = {"seed": args.seed,
           "results": [{k: r[k] for k in ("name", "passed", "detail")}
                       for r in results],
           "passed": all(r["passed"] for r in results)}
    lines = [f"[{'PASS' if r['passed'] else 'FAIL'}] {r['name']}: "
             f"{r['detail']} ({r['seconds']}s)" for r in results]
    _emit(doc, args, "\n".join(lines))
    if not doc["passed"]:
        return _fail("verification failed",
                     failed=[r["name"] for r in results if not r["passed"]])
    return 0


COMMANDS = {
    "roots": cmd_roots,
    "orders": cmd_orders,
    "lyndon": cmd_lyndon,
    "kp": cmd_kp,
    "pbw-char": cmd_pbw_char,
    "canonical": cmd_canonical,
    "dim-check": cmd_dim_check,
    "gram": cmd_gram,
    "resolve": cmd_resolve,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="klrchar",
        description="Exact computations for finite type quiver Hecke algebras",
    )
    sub = top.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", dest="family", default="A",
                       help="Cartan family A..G")
        p.add_argument("--rank", type=int, default=2)
        p.add_argument("--order", default="lyndon",
                       help="'lyndon' or a reduced word like 121")
        p.add_argument("--mod", default="",
                       help="comma-separated characteristics for ranks")
        p.add_argument("--truncate", type=int, default=12,
                       help="series truncation degree")
        p.add_argument("--eps", default="",
                       help="sign convention, e.g. '+12,-21'; default +1 for i<j")
        p.add_argument("--seed", type=int, default=20260809)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out", default="")
        p.add_argument("--cache-dir", dest="cache_dir", default="")
        p.add_argument("--alpha", default="",
                       help="weight as comma-separated coefficients")
        p.add_argument("--parts", default="",
                       help="Kostant partition parts, ';'-separated weights")
        p.add_argument("--word", default="", help="target word, e.g. 2121")
        p.add_argument("--degree", type=int, default=0)
        p.add_argument("--max-height", dest="max_height", type=int, default=4)
        p.add_argument("--willcex", action="store_true",
                       help="the characteristic-2 Gram example in A5")
        p.add_argument("--config", default="",
                       help="JSON file of option defaults; flags win")
    return top


def _apply_config(args, parser):
    if not args.config:
        return args
    with open(args.config) as fh:
        conf = json.load(fh)
    sub = parser._subparsers._group_actions[0].choices[args.command]
    by_option = {}
    for action in sub._actions:
        for opt in action.option_strings:
            by_option[opt.lstrip("-")] = action
    for key, value in conf.items():
        action = by_option.get(key)
        if action is None:
            continue
        if getattr(args, action.dest) == action.default:
            setattr(args, action.dest, value)
    return args


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args = _apply_config(args, parser)
    if args.command == "verify-all":
        return cmd_verify_all(args)
    try:
        ct = CartanType(args.family, args.rank)
    except ValueError as e:
        return _fail(str(e))
    rs = RootSystem(ct)
    try:
        return COMMANDS[args.command](args, rs)
    except (ValueError, ArithmeticError) as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())
