"""Command line interface.

Every subcommand renders one canonical document: json (default, sorted keys,
stable bytes), csv (flat rows), or md (human tables).  Exit codes: 0 on
success, 1 when a both-routes comparison or a verify run finds a mismatch,
2 on invalid input.
"""

import argparse
import json
import sys
from fractions import Fraction
from math import gcd

from .chains import (BadFamilyParams, build_chain, cohomology_basis,
                     middle_cohomology_basis)
from .counting import block_multiplicity_poly, lattice_step
from .cyclo import signed_orbit_count, vanishing_orbits, vanishing_tuple_count
from .families import Family
from .hodge import (CoprimalityRequired, NonIntegralDimension, dims_airy, dims_kl,
                    hodge_airy_closed, hodge_airy_from_basis, hodge_kl3_div3,
                    hodge_kl_closed, hodge_kl_from_basis, hodge_v21,
                    mixed_hodge_tilde_kl3, verify, verify_sweep)
from .weyl import DimensionMismatch, v21_chain

SCHEMA_VERSION = "1"


def _ser_level(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def _diamond_payload(dm) -> dict:
    return {
        "family": dm.family.value,
        "n": dm.n,
        "k": dm.k,
        "weight": dm.weight,
        "kind": dm.kind,
        "levels": [{"p": _ser_level(p), "q": _ser_level(q), "h": h}
                   for (p, q), h in dm.sorted_entries()],
    }


def _dims_payload(rep) -> dict:
    return {
        "family": rep.family.value,
        "n": rep.n,
        "k": rep.k,
        "dim_h1": rep.dim_h1,
        "dim_mid": rep.dim_mid,
        "soln_zero": rep.soln_zero,
        "soln_infty": rep.soln_infty,
        "irregularity": rep.irregularity,
    }


def _report_payload(rep) -> dict:
    return {
        "n": rep.n,
        "k": rep.k,
        "all_pass": rep.all_pass,
        "checks": [{"name": c.name, "pass": c.passed, "detail": c.detail}
                   for c in rep.checks],
        "notes": list(rep.notes),
    }


def _render_vector(vec, labels) -> list:
    """Translate a {(z_power, column): coeff} vector through the chain labels."""
    terms = []
    for (a, j), c in sorted(vec.items()):
        term = {"coeff": c, "z": a}
        if labels is None:
            term["u"] = j
        else:
            term["v"] = list(labels[j])
        terms.append(term)
    return terms


def _emit(doc: dict, fmt: str, out_path):
    if fmt == "json":
        text = json.dumps(doc, sort_keys=True) + "\n"
    elif fmt == "csv":
        text = _to_csv(doc)
    else:
        text = _to_md(doc)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_rows_for_payload(command: str, payload: dict) -> tuple[list[str], list[list]]:
    if command == "hodge":
        if "closed" in payload:
            header = ["route", "p", "q", "h"]
            rows = []
            for route in ("closed", "basis"):
                for lev in payload[route]["levels"]:
                    rows.append([route, lev["p"], lev["q"], lev["h"]])
            return header, rows
        return ["p", "q", "h"], [[lev["p"], lev["q"], lev["h"]]
                                 for lev in payload["levels"]]
    if command == "dims":
        return ["key", "value"], [[key, payload[key]] for key in sorted(payload)]
    if command == "counts":
        if "values" in payload:
            return ["d", "value"], [[d, v] for d, v in enumerate(payload["values"])]
        if "coefficients" in payload:
            return ["d", "coefficient"], [[d, v] for d, v in
                                          enumerate(payload["coefficients"])]
        return ["key", "value"], [[key, payload[key]] for key in sorted(payload)
                                  if not isinstance(payload[key], list)]
    if command == "basis":
        return ["degree", "count"], [[ent["degree"], ent["count"]]
                                     for ent in payload["cardinalities"]]
    if command == "verify":
        header = ["n", "k", "check", "pass"]
        rows = []
        for rep in payload.get("reports", [payload]):
            for c in rep["checks"]:
                rows.append([rep["n"], rep["k"], c["name"], c["pass"]])
        return header, rows
    return ["key", "value"], [[key, payload[key]] for key in sorted(payload)]


def _to_csv(doc: dict) -> str:
    header, rows = _csv_rows_for_payload(doc["command"], doc["payload"])
    lines = [",".join(str(x) for x in header)]
    for row in rows:
        lines.append(",".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def _md_diamond(payload: dict) -> list[str]:
    lines = [f"**{payload['family']}** n={payload['n']} k={payload['k']} "
             f"weight={payload['weight']} ({payload['kind']})", ""]
    if payload["kind"] == "pure" and all(isinstance(l["p"], int)
                                         for l in payload["levels"]):
        tup = [str(l["h"]) for l in payload["levels"]]
        lines.append("(" + ", ".join(tup) + ")")
    else:
        lines.append("| p | q | h |")
        lines.append("| - | - | - |")
        for lev in payload["levels"]:
            lines.append(f"| {lev['p']} | {lev['q']} | {lev['h']} |")
    return lines


def _to_md(doc: dict) -> str:
    command = doc["command"]
    payload = doc["payload"]
    if command == "hodge":
        if "closed" in payload:
            lines = ["## closed", ""]
            lines += _md_diamond(payload["closed"])
            lines += ["", "## basis", ""]
            lines += _md_diamond(payload["basis"])
            lines += ["", f"routes equal: {payload['equal']}"]
        else:
            lines = _md_diamond(payload)
    else:
        header, rows = _csv_rows_for_payload(command, payload)
        lines = ["| " + " | ".join(str(h) for h in header) + " |",
                 "| " + " | ".join("-" for _ in header) + " |"]
        for row in rows:
            lines.append("| " + " | ".join(str(x) for x in row) + " |")
    return "\n".join(lines) + "\n"


class CliError(Exception):
    """Invalid input, reported on stderr with exit code 2."""


def _need_nk(args):
    if args.n is None or args.k is None:
        raise CliError("--n and --k are required for this family")
    if args.n < 1 or args.k < 1:
        raise CliError("--n and --k must be positive")


def _forbid_nk(args):
    if args.n is not None or args.k is not None:
        raise CliError("--family v21 takes no --n or --k")


def _closed_kl(n: int, k: int):
    if gcd(k, n + 1) == 1:
        return hodge_kl_closed(n, k)
    if n == 2 and k % 3 == 0:
        return hodge_kl3_div3(k)
    raise CliError(f"no closed table for n={n}, k={k}: "
                   f"needs gcd(k, n+1) = 1 or n = 2 with 3 | k")


def _cmd_hodge(args) -> int:
    family = Family.from_tag(args.family)
    route = args.route
    if family is Family.V21:
        _forbid_nk(args)
        if route is None:
            route = "both"
        closed = hodge_v21("closed")
        basis = hodge_v21("basis") if route in ("basis", "both") else None
        pick = {"closed": closed, "basis": basis}
    elif family is Family.KL_TILDE_T:
        _need_nk(args)
        if args.n != 2:
            raise CliError("the mixed tilde table is defined for n = 2")
        if route in ("basis", "both"):
            raise CliError("the mixed tilde table has a closed route only")
        route = "closed"
        pick = {"closed": mixed_hodge_tilde_kl3(args.k), "basis": None}
    elif family is Family.AIRY_Z:
        _need_nk(args)
        if route is None:
            route = "both"
        closed = hodge_airy_closed(args.n, args.k) if route in ("closed", "both") else None
        basis = (hodge_airy_from_basis(args.n, args.k, args.max_degree)
                 if route in ("basis", "both") else None)
        pick = {"closed": closed, "basis": basis}
    else:
        _need_nk(args)
        if route is None:
            route = "both"
        closed = _closed_kl(args.n, args.k) if route in ("closed", "both") else None
        basis = (hodge_kl_from_basis(args.n, args.k, args.max_degree)
                 if route in ("basis", "both") else None)
        pick = {"closed": closed, "basis": basis}

    if route == "both":
        equal = pick["closed"].levels == pick["basis"].levels
        payload = {
            "closed": _diamond_payload(pick["closed"]),
            "basis": _diamond_payload(pick["basis"]),
            "equal": equal,
        }
        code = 0 if equal else 1
    else:
        payload = _diamond_payload(pick[route])
        code = 0
    _emit(_document("hodge", args, payload), args.format, args.out)
    return code


def _cmd_dims(args) -> int:
    family = Family.from_tag(args.family)
    _need_nk(args)
    if family is Family.AIRY_Z:
        rep = dims_airy(args.n, args.k)
    elif family in (Family.KL_Z, Family.KL_TILDE_T):
        rep = dims_kl(args.n, args.k, family)
    else:
        raise CliError("dims covers kl, kl-tilde, and airy")
    _emit(_document("dims", args, _dims_payload(rep)), args.format, args.out)
    return 0


def _cmd_counts(args) -> int:
    _need_nk(args)
    n, k = args.n, args.k
    m = n + 1
    what = args.what
    if args.d is not None and what not in ("q", "n"):
        raise CliError("--d applies to --what q and --what n only")
    if what == "q":
        coeffs = list(block_multiplicity_poly(n, k))
        if args.d is not None:
            payload = {"n": n, "k": k, "d": args.d,
                       "value": coeffs[args.d] if 0 <= args.d < len(coeffs) else 0}
        else:
            payload = {"n": n, "k": k, "coefficients": coeffs}
    elif what == "n":
        if args.d is not None:
            payload = {"n": n, "k": k, "d": args.d, "value": lattice_step(n, k, args.d)}
        else:
            payload = {"n": n, "k": k,
                       "values": [lattice_step(n, k, d) for d in range(n * k + 2)]}
    elif what == "d":
        payload = {"n": n, "k": k, "m": m, "count": vanishing_tuple_count(m, k)}
    elif what == "a":
        orbits = vanishing_orbits(m, k)
        payload = {"n": n, "k": k, "m": m, "count": len(orbits),
                   "orbit_representatives": [list(rep) for rep in orbits.reps]}
    else:  # b
        payload = {"n": n, "k": k, "m": m, "count": signed_orbit_count(m, k)}
    _emit(_document("counts", args, payload), args.format, args.out)
    return 0


def _cmd_basis(args) -> int:
    family = Family.from_tag(args.family)
    if family is Family.V21:
        _forbid_nk(args)
        chain = v21_chain() if args.max_degree is None else v21_chain(args.max_degree)
    else:
        _need_nk(args)
        chain = build_chain(family, args.n, args.k, args.max_degree)
    basis = middle_cohomology_basis(chain) if args.mid else cohomology_basis(chain)
    cards = basis.cardinalities()
    payload = {
        "family": family.value,
        "n": chain.n,
        "k": chain.k,
        "kind": basis.kind,
        "cardinalities": [{"degree": d, "count": cards[d]} for d in sorted(cards)],
        "total": basis.total(),
    }
    if args.vectors:
        labels = None if family is Family.V21 else chain.labels
        payload["vectors"] = {
            str(d): [_render_vector(vec, labels) for vec in vecs]
            for d, vecs in sorted(basis.vectors.items()) if vecs
        }
    _emit(_document("basis", args, payload), args.format, args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.sweep:
        if args.n is not None or args.k is not None:
            raise CliError("--sweep is exclusive with --n/--k")
        reports = verify_sweep(args.max_n, args.max_k)
        payload = {
            "all_pass": all(r.all_pass for r in reports),
            "reports": [_report_payload(r) for r in reports],
        }
        ok = payload["all_pass"]
    else:
        if args.n is None or args.k is None:
            raise CliError("provide --n and --k, or --sweep with --max-n/--max-k")
        rep = verify(args.n, args.k)
        payload = _report_payload(rep)
        ok = rep.all_pass
    _emit(_document("verify", args, payload), args.format, args.out)
    return 0 if ok else 1


def _document(command: str, args, payload) -> dict:
    request = {}
    for key in ("family", "n", "k", "route", "what", "d", "mid", "vectors",
                "sweep", "max_n", "max_k", "max_degree"):
        if hasattr(args, key) and getattr(args, key) not in (None, False):
            request[key] = getattr(args, key)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "request": request,
        "payload": payload,
    }


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="json")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="hodgemoments",
        description="Exact Hodge and cohomology tables for symmetric power moments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hodge", parents=[common], help="Hodge number tables")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--route", choices=("closed", "basis", "both"), default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=_cmd_hodge)

    p = sub.add_parser("dims", parents=[common], help="cohomology dimension report")
    p.add_argument("--family", required=True,
                   choices=[Family.KL_Z.value, Family.KL_TILDE_T.value, Family.AIRY_Z.value])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("counts", parents=[common], help="counting tables")
    p.add_argument("--what", required=True, choices=("q", "n", "d", "a", "b"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(func=_cmd_counts)

    p = sub.add_parser("basis", parents=[common], help="cohomology basis data")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mid", action="store_true", help="middle part instead of full")
    p.add_argument("--vectors", action="store_true", help="include representative vectors")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("verify", parents=[common], help="cross-route consistency checks")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-k", type=int, default=10)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (CoprimalityRequired, NonIntegralDimension, BadFamilyParams,
            DimensionMismatch, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
