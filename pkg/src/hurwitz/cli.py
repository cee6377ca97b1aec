"""Command-line surface.

Subcommands: orbit, equiv, normal-form, components, cayley, npsemi, verify.
Human-readable text by default, machine-readable JSON with ``--json``.
Exit codes: 0 ok, 1 error (bad input, failed check), 2 inconclusive
(search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from collections import Counter

from . import checks
from .cayley import (
    GroupTable,
    cayley_structure_check,
    cyclic_table,
    galois_components,
    klein_four_table,
    symmetric3_table,
)
from .components import count_components
from .npsemi import intersect, member, origins, union
from .orbits import InconclusiveSearchError, SearchLimits, hurwitz_equivalent, hurwitz_orbit
from .perm import Perm
from .sigma3 import count_components_deg3, sigma3_normal_form
from .transpositions import (
    reduce_identity_transpositions,
    stable_canonical_form,
)
from .words import Word

ENV_MAX_STATES = "HURWITZ_MAX_STATES"


def _limits(args) -> SearchLimits:
    if getattr(args, "max_states", None):
        return SearchLimits(args.max_states)
    if os.environ.get(ENV_MAX_STATES):
        return SearchLimits(int(os.environ[ENV_MAX_STATES]))
    return SearchLimits()


def _parse_letter_spec(spec: str) -> Counter:
    """Parse a letter-type multiset like ``[3]x6`` or ``[2,2]x1 [4]x1``."""
    counts: Counter = Counter()
    for term in spec.split():
        match = re.fullmatch(r"\[(\d+(?:,\d+)*)?\]x(\d+)", term)
        if not match:
            raise ValueError(f"bad letter-type term {term!r}; expected [k1,k2,...]xCOUNT")
        parts = tuple(int(x) for x in match.group(1).split(",")) if match.group(1) else ()
        counts[parts] += int(match.group(2))
    if not counts:
        raise ValueError("empty letter-type specification")
    return counts


def _parse_type(text: str) -> tuple[int, ...]:
    match = re.fullmatch(r"\[(\d+(?:,\d+)*)?\]", text.strip())
    if not match:
        raise ValueError(f"bad cycle type {text!r}; expected [k1,k2,...]")
    return tuple(int(x) for x in match.group(1).split(",")) if match.group(1) else ()


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _cmd_orbit(args) -> int:
    word = Word.parse(args.word)
    result = hurwitz_orbit(word, _limits(args))
    payload = {
        "status": "ok" if result.exhausted else "inconclusive",
        "size": result.size,
        "canonical": str(result.canonical),
        "exhausted": result.exhausted,
        "states_explored": result.states_explored,
    }
    _emit(
        args,
        payload,
        f"orbit size {result.size} (exhausted: {result.exhausted})\n"
        f"canonical: {result.canonical}",
    )
    return 0 if result.exhausted else 2


def _cmd_equiv(args) -> int:
    left, right = Word.parse(args.left), Word.parse(args.right)
    answer = hurwitz_equivalent(left, right, _limits(args))
    _emit(
        args,
        {"status": "ok", "equivalent": answer},
        "equivalent" if answer else "not equivalent",
    )
    return 0


def _cmd_normal_form(args) -> int:
    word = Word.parse(args.word)
    if word.degree == 3:
        form = sigma3_normal_form(word)
        payload = {
            "status": "ok",
            "kind": "degree-3",
            "family": form.family,
            "params": list(form.params),
            "exact": form.exact,
            "conjugator": str(form.conjugator),
            "representative": str(form.representative()),
        }
        text = (
            f"degree-3 form: {form.family}{form.params} "
            f"({'exact' if form.exact else 'up to conjugation, witness ' + str(form.conjugator)})\n"
            f"representative: {form.representative()}"
        )
    elif word.is_transposition_word() and word.product().is_identity():
        form = reduce_identity_transpositions(word)
        payload = {
            "status": "ok",
            "kind": "identity-transpositions",
            "components": [
                {"points": list(points), "multiplicity": k}
                for points, k in form.components
            ],
            "representative": str(form.to_word()),
        }
        text = "identity transposition form: " + "; ".join(
            f"M={set(points)} k={k}" for points, k in form.components
        ) + f"\nrepresentative: {form.to_word()}"
    else:
        form = stable_canonical_form(word)
        payload = {
            "status": "ok",
            "kind": "stable",
            "cycle_parts": [str(p) for p in form.cycle_parts],
            "residual": str(form.residual),
            "genus": form.genus,
            "representative": str(form.reconstruction()),
        }
        text = (
            f"stable form: parts {[str(p) for p in form.cycle_parts]}, "
            f"residual {form.residual}, genus {form.genus}\n"
            f"representative: {form.reconstruction()}"
        )
    _emit(args, payload, text)
    return 0


def _cmd_components(args) -> int:
    letter_types = _parse_letter_spec(args.letters) if args.letters else None
    product = None
    product_type = None
    if args.product:
        if args.product.strip() == "identity":
            product = Perm.identity(args.degree)
        else:
            product = Perm.parse(args.product, args.degree)
    if args.product_type:
        product_type = _parse_type(args.product_type)
    if args.degree == 3 and args.closed_form:
        result = count_components_deg3(
            args.length,
            product_type or (),
            args.galois or "alternating",
            args.space,
            with_oracle=args.oracle,
            limits=_limits(args),
        )
        payload = {
            "status": "ok",
            "count": result.count,
            "closed_form": result.closed_form,
            "formula": result.paper_formula,
            "oracle": result.oracle_count,
            "flagged": result.flagged,
        }
        text = f"components: {result.count}"
        if result.flagged:
            text += f" (floor formula gives {result.paper_formula}; flagged)"
        _emit(args, payload, text)
        return 0
    report = count_components(
        args.degree,
        args.length,
        letter_types=letter_types,
        product=product,
        product_type=product_type,
        galois=args.galois,
        space=args.space,
        marked=args.marked,
        limits=_limits(args),
    )
    payload = {
        "status": "ok",
        "count": report.count,
        "representatives": [str(w) for w in report.representatives],
        "exhausted": report.exhausted,
    }
    text = f"components: {report.count}\n" + "\n".join(
        f"  {w}" for w in report.representatives
    )
    _emit(args, payload, text)
    return 0


_BUILTIN_TABLES = {
    "z2": lambda: cyclic_table(2),
    "z3": lambda: cyclic_table(3),
    "z4": lambda: cyclic_table(4),
    "z5": lambda: cyclic_table(5),
    "z6": lambda: cyclic_table(6),
    "klein4": klein_four_table,
    "s3": symmetric3_table,
}


def _load_table(args) -> GroupTable:
    if args.builtin:
        return _BUILTIN_TABLES[args.builtin]()
    with open(args.table, encoding="utf-8") as handle:
        data = json.load(handle)
    table = GroupTable(tuple(tuple(row) for row in data["table"]), data["identity"])
    if table.order != data.get("order", table.order):
        raise ValueError("table axiom fails: declared order differs from the table")
    return table


def _cmd_cayley(args) -> int:
    table = _load_table(args)
    if args.components is not None:
        count, representatives = galois_components(
            table, args.components, _limits(args)
        )
        payload = {
            "status": "ok",
            "count": count,
            "representatives": [str(w) for w in representatives],
        }
        _emit(
            args,
            payload,
            f"components: {count}\n" + "\n".join(f"  {w}" for w in representatives),
        )
        return 0
    report = cayley_structure_check(table)
    payload = {
        "status": "ok",
        "group_order": report.group_order,
        "centralizer_order": report.centralizer_order,
        "normalizer_order": report.normalizer_order,
        "aut_order": report.aut_order,
        "amalgam_order": report.amalgam_order,
        "amalgam_expected": report.amalgam_expected,
        "all_automorphisms_realized": report.all_automorphisms_realized,
        "passed": report.passed,
    }
    _emit(
        args,
        payload,
        f"|G|={report.group_order} |C(G)|={report.centralizer_order} "
        f"|N(G)|={report.normalizer_order} |Aut(G)|={report.aut_order} "
        f"amalgam {report.amalgam_order}/{report.amalgam_expected} "
        f"passed={report.passed}",
    )
    return 0 if report.passed else 1


def _parse_points(text: str) -> list:
    points = json.loads(text)
    if not isinstance(points, list):
        raise ValueError("expected a JSON list of points")
    return points


def _cmd_npsemi(args) -> int:
    if args.npsemi_command == "origins":
        result = origins(_parse_points(args.points))
        payload = {"status": "ok", "origins": [list(p) for p in result.sorted_points()]}
        _emit(args, payload, "origins: " + str(result.sorted_points()))
    elif args.npsemi_command == "member":
        origin_set = origins(_parse_points(args.points))
        answer = member(origin_set, tuple(json.loads(args.point)))
        _emit(args, {"status": "ok", "member": answer}, "member" if answer else "not a member")
    else:
        left = origins(_parse_points(args.left))
        right = origins(_parse_points(args.right))
        combined = intersect(left, right) if args.npsemi_command == "intersect" else union(left, right)
        payload = {"status": "ok", "origins": [list(p) for p in combined.sorted_points()]}
        _emit(args, payload, "origins: " + str(combined.sorted_points()))
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for name in checks.CHECKS:
            print(name)
        return 0
    names = args.checks or list(checks.CHECKS)
    options = {}
    for key in ("degree", "max_genus", "max_length", "instances", "seed", "max_states"):
        value = getattr(args, key, None)
        if value is not None:
            options[key] = value
    results = [checks.run_check(name, **options) for name in names]
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "summary": r.summary,
                        "details": r.details,
                    }
                    for r in results
                ],
                indent=2,
                default=str,
            )
        )
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.summary}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz",
        description="Hurwitz equivalence of monodromy factorizations: orbits, "
        "normal forms, component counts.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="enumerate a Hurwitz orbit")
    p.add_argument("--word", required=True, help='word literal, e.g. "3: (1 2) | (2 3)"')
    p.add_argument("--max-states", type=int)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("equiv", help="decide Hurwitz equivalence")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--max-states", type=int)
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser(
        "normal-form",
        help="normal form (degree-3 classifier, identity-transposition form, "
        "or stable form, by input shape)",
    )
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_normal_form)

    p = sub.add_parser("components", help="count stratum components")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--letters", help='letter-type multiset, e.g. "[3]x6"')
    p.add_argument("--product", help='"identity" or a permutation literal')
    p.add_argument("--product-type", help='cycle type of the product, e.g. "[3]"')
    p.add_argument("--galois", choices=["trivial", "alternating", "full_symmetric", "other"])
    p.add_argument("--space", choices=["line", "disc"], default="disc")
    p.add_argument("--marked", action="store_true", help="skip conjugation fusion")
    p.add_argument(
        "--closed-form",
        action="store_true",
        help="degree 3 only: use the classification instead of enumeration",
    )
    p.add_argument("--oracle", action="store_true", help="cross-check closed form")
    p.add_argument("--max-states", type=int)
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("cayley", help="regular embedding of a finite group")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--table", help="JSON file {order, identity, table}")
    source.add_argument("--builtin", choices=sorted(_BUILTIN_TABLES))
    p.add_argument(
        "--components",
        type=int,
        help="count identity-product component classes of this length",
    )
    p.add_argument("--max-states", type=int)
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("npsemi", help="upward-closed subsemigroups of Z^m")
    npsub = p.add_subparsers(dest="npsemi_command", required=True)
    q = npsub.add_parser("origins")
    q.add_argument("--points", required=True, help="JSON list of points")
    q = npsub.add_parser("member")
    q.add_argument("--points", required=True)
    q.add_argument("--point", required=True, help="JSON point")
    for name in ("intersect", "union"):
        q = npsub.add_parser(name)
        q.add_argument("--left", required=True)
        q.add_argument("--right", required=True)
    p.set_defaults(func=_cmd_npsemi)

    p = sub.add_parser("verify", help="run named verification checks")
    p.add_argument("checks", nargs="*", help="check names (default: all)")
    p.add_argument("--list", action="store_true", help="list available checks")
    p.add_argument("--degree", type=int)
    p.add_argument("--max-genus", type=int)
    p.add_argument("--max-length", type=int)
    p.add_argument("--instances", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-states", type=int)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InconclusiveSearchError as error:
        print(f"inconclusive: {error}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
