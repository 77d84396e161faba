"""Batch command line front end.

Every computation is exposed as a subcommand printing JSON (or an aligned
table with --table) to stdout.  Output bytes are deterministic for
identical inputs: keys are sorted and rationals are rendered as "p/q" in
lowest terms; elapsed time goes to stderr.  Exit codes: 0 success, 1 usage
error, 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import hecke, kottwitz, muordinary, oracles, rootdata
from .rationals import rat, rat_str

SCHEMA = "newtonkit/1"

_LABELING_NOTES = {
    "D": "fork nodes: classical alpha_{n-1} and alpha_{n-1}^+ are Bourbaki "
         "nodes n-1 and n",
    "E7": "the coefficient-one (minuscule) node is Bourbaki node 7; sources "
          "that call it alpha_1 number the long chain in the other direction",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _max_rank() -> int:
    return int(os.environ.get("NEWTONKIT_MAX_RANK", "8"))


def _get_datum(args) -> rootdata.RootDatum:
    if args.type is None or args.rank is None:
        raise ValueError("--type and --rank are required (flags or --in file)")
    rank = int(args.rank)
    if rank > _max_rank():
        raise ValueError(
            f"rank {rank} exceeds NEWTONKIT_MAX_RANK={_max_rank()}"
        )
    sigma = getattr(args, "sigma", None)
    if isinstance(sigma, str) and sigma.startswith("["):
        sigma = json.loads(sigma)
    return rootdata.build_datum(args.type, rank, sigma)


def _node_coweight(datum, node: int):
    coweights = rootdata.fundamental_coweights(datum)
    if not 1 <= node <= datum.rank:
        raise ValueError(f"node {node} out of range 1..{datum.rank}")
    return rootdata.RationalCocharacter(coweights[node - 1], datum)


def _vec(arg) -> tuple[Fraction, ...]:
    if isinstance(arg, str):
        arg = json.loads(arg)
    return tuple(rat(x) for x in arg)


def _cmd_datum(args):
    datum = _get_datum(args)
    payload = rootdata.datum_to_json(datum)
    payload.update(
        {
            "ambient_dim": datum.ambient_dim,
            "cartan": [list(r) for r in datum.cartan],
            "simple_roots": [rootdata.vector_to_json(r) for r in datum.simple_roots],
            "simple_coroots": [rootdata.vector_to_json(r) for r in datum.simple_coroots],
            "fundamental_weights": [
                rootdata.vector_to_json(w) for w in rootdata.fundamental_weights(datum)
            ],
            "fundamental_coweights": [
                rootdata.vector_to_json(w) for w in rootdata.fundamental_coweights(datum)
            ],
            "special_roots": sorted(rootdata.special_roots(datum)),
            "labeling": _labeling_payload(datum, args.labeling),
        }
    )
    return payload


def _labeling_payload(datum, requested: str) -> dict:
    aliases = {}
    if datum.type_label == "D":
        n = datum.rank
        aliases[f"alpha_{n - 1}"] = n - 1
        aliases[f"alpha_{n - 1}+"] = n
    if datum.type_label == "E7":
        # sources numbering the long chain from the far end call node 7 alpha_1
        aliases["alpha_1 (reversed chain)"] = 7
    return {
        "requested": requested,
        "node_map": {str(i): i for i in range(1, datum.rank + 1)},
        "aliases": aliases,
        "note": _LABELING_NOTES.get(datum.type_label, "classical labels coincide "
                                    "with Bourbaki labels"),
    }


def _cmd_bgmu(args):
    datum = _get_datum(args)
    mu = _node_coweight(datum, args.node)
    ks = kottwitz.enumerate_bgmu(mu)
    return kottwitz.kottwitz_set_to_json(ks)


def _cmd_maximal(args):
    datum = _get_datum(args)
    mu = _node_coweight(datum, args.node)
    ks = kottwitz.enumerate_bgmu(mu)
    mx = kottwitz.maximal_elements(ks, exclude_top=args.exclude_top)
    return {
        "maximal": [
            rootdata.vector_to_json(e.nu.coords)
            for e in sorted(mx, key=lambda e: e.nu.coords)
        ]
    }


def _cmd_leq(args):
    datum = _get_datum(args)
    x = rootdata.RationalCocharacter(_vec(args.x), datum)
    y = rootdata.RationalCocharacter(_vec(args.y), datum)
    result = {"leq": kottwitz.newton_leq(x, y)}
    if args.verify:
        result["hull_oracle"] = oracles.convex_hull_membership(x, y)
    return result


def _cmd_slopes(args):
    profile = muordinary.profile_from_newton(_vec(args.nu), args.dim)
    return muordinary.profile_to_json(profile)


def _cmd_degrees(args):
    profile = muordinary.profile_from_json(json.loads(args.profile))
    dd = muordinary.degrees(profile)
    return {
        "d": [rat_str(x) for x in dd.d],
        "delta": rat_str(dd.delta) if dd.delta is not None else None,
        "heights": list(profile.heights),
    }


def _cmd_uniqueness(args):
    profile = muordinary.profile_from_json(json.loads(args.profile))
    dd = muordinary.degrees(profile)
    ok, bad_h = muordinary.check_uniqueness(dd, args.i)
    return {"unique": ok, "violating_height": bad_h}


def _cmd_mepsilon(args):
    full = _vec(args.full)
    n = len(full) // 2
    if args.shape == "siegel":
        roots = hecke.siegel_radical_roots(n, lower=not args.upper)
    elif args.shape == "gl":
        roots = hecke.gl_upper_roots(len(full))
    else:
        raise ValueError(f"unknown radical shape {args.shape!r}")
    val = hecke.m_epsilon_valuation(full, roots)
    return {"valuation": rat_str(val),
            "count": str(args.p ** int(val)) if val.denominator == 1 else None}


def _cmd_lambdag(args):
    t = _vec(args.t)
    eps = hecke.HeckeValuation.from_blocks(t, rat(args.s), args.p)
    return {"valuation": rat_str(hecke.lambda_g_valuation(eps))}


def _cmd_hasse(args):
    return {"hasse_number": hecke.hasse_number(args.w, args.p)}


def _verify_maximal_theorem(report):
    cases = [("A", n, k) for n in range(1, 5) for k in range(1, n + 1)]
    cases += [("B", n, 1) for n in (2, 3, 4)]
    cases += [("C", n, n) for n in (2, 3, 4)]
    cases += [("D", n, k) for n in (3, 4) for k in (1, n - 1, n)]
    ok_all = True
    for t, n, k in cases:
        datum = rootdata.build_datum(t, n)
        mu = _node_coweight(datum, k)
        ks = kottwitz.enumerate_bgmu(mu)
        mx = kottwitz.maximal_elements(ks, exclude_top=True)
        half = Fraction(1, 2)
        expected = tuple(
            m - half * c
            for m, c in zip(ks.mubar.coords, datum.simple_coroots[k - 1])
        )
        ok = {e.nu.coords for e in mx} == {expected}
        ok_all &= ok
        report.append((f"maximal-element {t}{n} node {k}", ok))
    return ok_all


def _verify_grid(report):
    ok_all = True
    for t, n in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3),
                 ("C", 2), ("C", 3), ("D", 3)]:
        datum = rootdata.build_datum(t, n)
        for k in sorted(rootdata.special_roots(datum)):
            mu = _node_coweight(datum, k)
            main = {e.nu.coords for e in kottwitz.enumerate_bgmu(mu).elements}
            grid = oracles.grid_enumerate_bgmu(mu)
            ok = main == grid
            ok_all &= ok
            report.append((f"grid-enumeration {t}{n} node {k}", ok))
    return ok_all


def _verify_order(report):
    import random

    rng = random.Random(1789)
    ok_all = True
    for t, n in [("A", 2), ("B", 2), ("C", 2), ("G2", 2), ("A", 3), ("C", 3)]:
        datum = rootdata.build_datum(t, n)
        agree = True
        for _ in range(60):
            pts = []
            for _ in range(2):
                coords = tuple(
                    Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in
                    range(datum.ambient_dim)
                )
                pts.append(rootdata.dominant_representative(
                    rootdata.RationalCocharacter(coords, datum)))
            x, y = pts
            agree &= kottwitz.newton_leq(x, y) == oracles.convex_hull_membership(x, y)
        ok_all &= agree
        report.append((f"order-vs-hull {t}{n} x60", agree))
    return ok_all


def _verify_hecke(report):
    ok_all = True
    shapes = [
        ("gl2", oracles.upper_unipotent_shape(2), hecke.gl_upper_roots(2),
         [(0, 0), (1, 0), (2, 1)]),
        ("siegel2", oracles.siegel_shape(2), hecke.siegel_radical_roots(2),
         [(0, 0, 1, 1), (0, 1, 1, 2), (1, 1, 1, 1)]),
    ]
    for name, shape, roots, val_list in shapes:
        for vals in val_list:
            p = 3
            k = max(vals) + 1
            count = oracles.coset_count_bruteforce(list(vals), shape, p, k)
            val = hecke.m_epsilon_valuation(list(vals), roots)
            ok = val.denominator == 1 and count == p ** int(val)
            ok_all &= ok
            report.append((f"coset-count {name} {vals} p=3", ok))
    return ok_all


def _verify_polygons(report):
    from .muordinary import SlopeProfile, degrees, next_to_max_profile, modified_degrees

    ok_all = True
    for n in (1, 2, 3):
        profile = SlopeProfile((Fraction(1), Fraction(0)), (n, n), polarized=True)
        for dh in range(1, n + 1):
            split = next_to_max_profile(profile, 1, dh)
            below = oracles.polygon_leq(split, profile)
            strict = any(
                muordinary.max_degree_bound(split, h)
                < muordinary.max_degree_bound(profile, h)
                for h in range(profile.total_height + 1)
            )
            mod = modified_degrees(split)
            fold = degrees(split).d
            ok = below and strict and mod == fold
            ok_all &= ok
            report.append((f"polygon-split n={n} dh={dh}", ok))
    return ok_all


def _verify_hasse(report):
    ok_all = True
    for p in (3, 5, 7, 11, 13):
        w = 1
        while p ** w <= 243:
            ok = (hecke.hasse_number(w, p)
                  == oracles.multiplicative_group_exponent(p, w))
            ok_all &= ok
            report.append((f"hasse-number p={p} w={w}", ok))
            w += 1
    return ok_all


def _cmd_verify_all(args):
    report: list[tuple[str, bool]] = []
    ok = True
    ok &= _verify_maximal_theorem(report)
    ok &= _verify_grid(report)
    ok &= _verify_order(report)
    ok &= _verify_hecke(report)
    ok &= _verify_polygons(report)
    ok &= _verify_hasse(report)
    payload = {
        "checks": [{"name": name, "pass": passed} for name, passed in report],
        "total": len(report),
        "failures": sum(1 for _, passed in report if not passed),
        "all_pass": ok,
    }
    return payload


_COMMANDS = {
    "datum": _cmd_datum,
    "bgmu": _cmd_bgmu,
    "maximal": _cmd_maximal,
    "leq": _cmd_leq,
    "slopes": _cmd_slopes,
    "degrees": _cmd_degrees,
    "uniqueness": _cmd_uniqueness,
    "mepsilon": _cmd_mepsilon,
    "lambdag": _cmd_lambdag,
    "hasse": _cmd_hasse,
    "verify-all": _cmd_verify_all,
}


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", action="store_true", default=argparse.SUPPRESS,
                        help="aligned table output instead of JSON")
    common.add_argument("--in", dest="infile", metavar="FILE",
                        default=argparse.SUPPRESS,
                        help="read subcommand arguments from a JSON file")
    parser = _Parser(prog="newtonkit", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command")

    def add(name, *specs):
        p = sub.add_parser(name, parents=[common])
        for flags, kwargs in specs:
            p.add_argument(flags, **kwargs)
        return p

    type_args = [
        ("--type", {"required": False}),
        ("--rank", {"type": int, "required": False}),
        ("--sigma", {"default": None,
                     "help": "identity, flip, or a JSON permutation"}),
        ("--labeling", {"choices": ["paper", "bourbaki"], "default": "bourbaki"}),
    ]
    add("datum", *type_args)
    add("bgmu", *type_args, ("--node", {"type": int}))
    add("maximal", *type_args, ("--node", {"type": int}),
        ("--exclude-top", {"action": "store_true", "dest": "exclude_top"}))
    add("leq", *type_args, ("--x", {}), ("--y", {}),
        ("--verify", {"action": "store_true"}))
    add("slopes", ("--nu", {}), ("--dim", {"type": int}))
    add("degrees", ("--profile", {"help": "SlopeProfile JSON"}))
    add("uniqueness", ("--profile", {}), ("--i", {"type": int}))
    add("mepsilon", ("--full", {}), ("--shape", {"default": "siegel"}),
        ("--upper", {"action": "store_true"}), ("--p", {"type": int, "default": 3}))
    add("lambdag", ("--t", {}), ("--s", {"default": "1"}),
        ("--p", {"type": int, "default": 3}))
    add("hasse", ("--w", {"type": int}), ("--p", {"type": int}))
    add("verify-all")
    return parser


def _render_table(payload, out):
    def rows(prefix, value):
        if isinstance(value, dict):
            for key in sorted(value):
                yield from rows(f"{prefix}{key}.", value[key])
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            for idx, item in enumerate(value):
                yield from rows(f"{prefix}{idx}.", item)
        else:
            yield prefix.rstrip("."), json.dumps(value, sort_keys=True)

    table = list(rows("", payload))
    width = max((len(k) for k, _ in table), default=0)
    for key, value in table:
        out.write(f"{key.ljust(width)}  {value}\n")


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    if args.command is None:
        print("usage error: no subcommand given", file=sys.stderr)
        return 1
    infile = getattr(args, "infile", None)
    if infile:
        try:
            with open(infile, "r", encoding="utf-8") as fh:
                overrides = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            _emit_error(args, f"cannot read --in file: {exc}")
            return 2
        for key, value in overrides.items():
            attr = key.replace("-", "_")
            if getattr(args, attr, None) in (None, False):
                setattr(args, attr, value)
    handler = _COMMANDS[args.command]
    start = time.monotonic()
    try:
        payload = handler(args)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        _emit_error(args, str(exc))
        return 2
    elapsed_ms = int((time.monotonic() - start) * 1000)
    payload = {"schema": SCHEMA, **payload}
    result = {"status": "ok", "payload": payload}
    if getattr(args, "table", False):
        _render_table(result, sys.stdout)
    else:
        print(json.dumps(result, sort_keys=True, separators=(",", ":")))
    print(f"elapsed_ms={elapsed_ms}", file=sys.stderr)
    if args.command == "verify-all" and not payload["all_pass"]:
        return 2
    return 0


def _emit_error(args, message: str) -> None:
    result = {"status": "error", "payload": {"schema": SCHEMA, "error": message}}
    if getattr(args, "table", False):
        _render_table(result, sys.stdout)
    else:
        print(json.dumps(result, sort_keys=True, separators=(",", ":")))


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
