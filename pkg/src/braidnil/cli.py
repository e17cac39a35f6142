"""
Command-line front end.

Every subcommand prints one canonical JSON document on stdout (key-sorted,
compact), or an aligned text rendering with --pretty where that makes sense;
diagnostics go to stderr.  Element arguments are expression strings (see
expr.py) unless they start with '{', in which case they are read as element
JSON.  Exit codes: 0 success, 1 verification failure, 2 expression syntax
error, 3 domain error (bad indices, violated preconditions, malformed JSON).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import invariants, presentations, torsion
from .core import (
    DomainError,
    NilElement,
    collect,
    conj,
    dumps_canonical,
    element_from_dict,
    element_to_dict,
    inv,
    mul,
    order,
    power,
    word_from_dict,
)
from .expr import ExpressionError, parse
from .orbits import orbit_partition


def _element_arg(text: str, n: int) -> NilElement:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"bad element JSON: {exc}") from exc
        if "word" in data:
            w = word_from_dict(data)
            if w.n != n:
                raise DomainError(f"word is on {w.n} strands, expected {n}")
            return collect(w)
        e = element_from_dict(data)
        if e.n != n:
            raise DomainError(f"element is on {e.n} strands, expected {n}")
        return e
    return parse(text, n).element()


def _print(doc) -> None:
    sys.stdout.write(dumps_canonical(doc) + "\n")


def _render_element(e: NilElement) -> str:
    bits = [f"perm={list(e.perm.image)}"]
    bits += [f"A[{i},{j}]^{x}" for i, j, x in e.pure.entries]
    bits += [f"a[{i},{j},{k}]^{c}" for i, j, k, c in e.comm.entries]
    return " ".join(bits)


def _add_n(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--n", type=int, required=required, help="strand count")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="braidnil",
        description="exact computation in the class-2 nilpotent quotients of braid groups",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("collect", help="normal form of an expression")
    _add_n(p)
    p.add_argument("expr")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("mul", help="product of two elements")
    _add_n(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("inv", help="inverse of an element")
    _add_n(p)
    p.add_argument("expr")

    p = sub.add_parser("pow", help="integer power of an element")
    _add_n(p)
    p.add_argument("expr")
    p.add_argument("exponent", type=int)

    p = sub.add_parser("conj", help="conjugate: g x g^-1")
    _add_n(p)
    p.add_argument("g")
    p.add_argument("x")

    p = sub.add_parser("order", help="order of an element (integer or infinite)")
    _add_n(p)
    p.add_argument("expr")

    p = sub.add_parser("delta", help="the mixed-sign cycle element on a block")
    _add_n(p)
    p.add_argument("--k", type=int, required=True, help="odd block length >= 3")
    p.add_argument("--r", type=int, default=0, help="block offset (default 0)")

    p = sub.add_parser("delta-pow", help="level-2 coordinates of the n-th power of the cycle element")
    _add_n(p)

    p = sub.add_parser("orbits", help="cycle-element orbits of the triple basis")
    _add_n(p)
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("ranks", help="graded ranks of the pure lattice")
    _add_n(p)
    p.add_argument("--q", type=int, help="a single level")
    p.add_argument("--qmax", type=int, default=10, help="levels 1..qmax (default 10)")

    p = sub.add_parser("table", help="dimension table over n and k")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("torsion", help="torsion spectrum and finite-order constructions")
    _add_n(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--spectrum", action="store_true", help="all finite orders > 1")
    g.add_argument("--cycle-type", help="comma-separated parts, e.g. 5,7")
    g.add_argument("--residues", help='residue matrix JSON {"n":..,"residues":[[..],..]}')

    p = sub.add_parser("conjugacy", help="decide conjugacy or produce a witness")
    p.add_argument("mode", choices=("decide", "witness"))
    _add_n(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("holonomy", help="graded action matrices of an element")
    _add_n(p)
    p.add_argument("expr")
    p.add_argument("--paper-basis", action="store_true",
                   help="n=3 only: order the pair basis (1,3),(2,3),(1,2)")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("verify", help="run a presentation / identity suite")
    p.add_argument("--suite", choices=("pn3", "bn3", "b3", "fulltwist"), required=True)
    p.add_argument("--n", type=int, help="strand count (pn3/bn3/fulltwist)")
    p.add_argument("--subgroup", choices=presentations.SUBGROUPS,
                   help="b3 only: verify a single subgroup (default: all four)")
    return ap


def _cmd_torsion(args) -> int:
    if args.spectrum:
        _print({"n": args.n, "spectrum": torsion.torsion_spectrum(args.n)})
        return 0
    if args.cycle_type:
        parts = [int(x) for x in args.cycle_type.split(",") if x.strip()]
        e = torsion.element_with_cycle_type(args.n, parts)
        _print({
            "n": args.n,
            "parts": parts,
            "order": order(e),
            "element": element_to_dict(e),
        })
        return 0
    try:
        data = json.loads(args.residues)
        rows = [[int(x) for x in row] for row in data["residues"]]
        if int(data.get("n", args.n)) != args.n:
            raise DomainError("residue matrix strand count disagrees with --n")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DomainError(f"bad residue JSON: {exc}") from exc
    e = torsion.finite_order_element(args.n, rows)
    q = order(e)
    _print({
        "n": args.n,
        "order": q if q is not None else "infinite",
        "element": element_to_dict(e),
    })
    return 0


def _cmd_verify(args) -> int:
    reports = []
    if args.suite == "b3":
        names = [args.subgroup] if args.subgroup else list(presentations.SUBGROUPS)
        reports = [presentations.subgroup_presentation(s) for s in names]
    else:
        if args.n is None:
            raise DomainError(f"--n is required for suite {args.suite}")
        if args.suite == "pn3":
            reports = [presentations.pure_presentation(args.n)]
        elif args.suite == "bn3":
            reports = [presentations.braid_presentation(args.n)]
        else:
            reports = [presentations.full_twist(args.n)]
    _print({"reports": [r.to_dict() for r in reports]})
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "collect":
            e = _element_arg(args.expr, args.n)
            if args.pretty:
                print(_render_element(e))
            else:
                _print(element_to_dict(e))
        elif args.command == "mul":
            _print(element_to_dict(mul(_element_arg(args.left, args.n),
                                       _element_arg(args.right, args.n))))
        elif args.command == "inv":
            _print(element_to_dict(inv(_element_arg(args.expr, args.n))))
        elif args.command == "pow":
            _print(element_to_dict(power(_element_arg(args.expr, args.n), args.exponent)))
        elif args.command == "conj":
            _print(element_to_dict(conj(_element_arg(args.g, args.n),
                                        _element_arg(args.x, args.n))))
        elif args.command == "order":
            q = order(_element_arg(args.expr, args.n))
            _print({"n": args.n, "order": q if q is not None else "infinite"})
        elif args.command == "delta":
            _print(element_to_dict(torsion.delta(args.r, args.k, args.n)))
        elif args.command == "delta-pow":
            comm, constants = torsion.delta_power_coefficients(args.n)
            basis = orbit_partition(args.n)
            _print({
                "n": args.n,
                "comm": [[i, j, k, c] for i, j, k, c in comm.entries],
                "orbit_constants": constants,
                "orbit_representatives": [list(t) for t in basis.representatives()],
            })
        elif args.command == "orbits":
            basis = orbit_partition(args.n)
            if args.pretty:
                for i, orbit in enumerate(basis.orbits):
                    chain = " -> ".join("a[%d,%d,%d]" % st.triple for st in orbit)
                    print(f"orbit {i} (length {len(orbit)}): {chain}")
            else:
                _print({
                    "n": args.n,
                    "orbits": [
                        {
                            "length": len(orbit),
                            "triples": [list(st.triple) for st in orbit],
                            "signs": [st.sign for st in orbit],
                        }
                        for orbit in basis.orbits
                    ],
                })
        elif args.command == "ranks":
            if args.q is not None:
                _print({"n": args.n, "ranks": [{"q": args.q, "rank": invariants.lcs_rank(args.n, args.q)}]})
            else:
                _print({"n": args.n, "ranks": [
                    {"q": q, "rank": invariants.lcs_rank(args.n, q)}
                    for q in range(1, args.qmax + 1)
                ]})
        elif args.command == "table":
            t = invariants.dimension_table(args.nmax, args.kmax)
            if args.pretty:
                print(t.render_text())
            else:
                _print({"rows": t.to_rows()})
        elif args.command == "torsion":
            return _cmd_torsion(args)
        elif args.command == "conjugacy":
            a = _element_arg(args.left, args.n)
            b = _element_arg(args.right, args.n)
            same = torsion.conjugacy_decide(a, b)
            doc = {
                "n": args.n,
                "conjugate": same,
                "cycle_types": [list(a.perm.cycle_type()), list(b.perm.cycle_type())],
                "proven_range": args.n >= 5,
            }
            if args.n < 5:
                print("note: conjugacy criterion is outside its proven range for n < 5", file=sys.stderr)
            if args.mode == "decide":
                _print(doc)
                return 0
            if not same:
                raise DomainError("witness requires conjugate inputs (equal cycle types)")
            g = torsion.conjugacy_witness(a, b)
            if g is None:
                print("witness construction failed verification", file=sys.stderr)
                return 1
            doc["witness"] = element_to_dict(g)
            _print(doc)
            return 0
        elif args.command == "holonomy":
            e = _element_arg(args.expr, args.n)
            pair_basis = None
            if args.paper_basis:
                if args.n != 3:
                    raise DomainError("--paper-basis is only defined for n=3")
                pair_basis = ((1, 3), (2, 3), (1, 2))
            h = invariants.holonomy_matrix(e, pair_basis=pair_basis)
            if args.pretty:
                for row in invariants.combined_matrix(h):
                    print(" ".join(f"{x:>2}" for x in row))
                print(f"det = {h.det}")
            else:
                _print({
                    "n": h.n,
                    "pair_basis": [list(p) for p in h.pair_basis],
                    "triple_basis": [list(t) for t in h.triple_basis],
                    "block1": [list(r) for r in h.block1],
                    "block2": [list(r) for r in h.block2],
                    "det": h.det,
                })
        elif args.command == "verify":
            return _cmd_verify(args)
        return 0
    except ExpressionError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
