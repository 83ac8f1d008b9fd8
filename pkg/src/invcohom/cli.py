"""Command-line interface.

Subcommands: validate, invariants, cyb, support, central-z, twist-verify,
classify, bset, corpus.  Input files use the JSON schemas of the Lie-algebra
and group-input loaders; reports are emitted as JSON (default) or text, are
deterministic byte-for-byte for identical inputs, and carry a schema_version
field.  Exit status: 0 on success with all residuals exactly zero, 1 on a
validation or verification failure, 2 on I/O or schema errors.
"""

import argparse
import json
import re
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import invariants as inv
from . import pbw
from .classify import bset_elements, classify_connected, group_input_from_json
from .invariants import (
    NotIdealError,
    NotInvariantError,
    WedgeElement,
    wedge_from_json,
)
from .lie import SchemaError, lie_from_json
from .pbw import NotNilpotentError, PBWContext

SCHEMA_VERSION = 1


class CliError(Exception):
    def __init__(self, message, exit_code):
        super().__init__(message)
        self.exit_code = exit_code


def _load_json(path):
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise CliError(f"{path}: {err.strerror or err}", 2) from err
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise CliError(f"{path}:{err.lineno}:{err.colno}: invalid JSON: {err.msg}", 2) from err


def _load_lie(path):
    try:
        return lie_from_json(_load_json(path), path=str(path))
    except SchemaError as err:
        raise CliError(str(err), 2) from err


def _load_group(path):
    try:
        return group_input_from_json(_load_json(path), path=str(path))
    except SchemaError as err:
        raise CliError(str(err), 2) from err


_PAIR = re.compile(r"(\d+)\s*,\s*(\d+)")


def _parse_wedge(g, spec, flag):
    """Either the shorthand "i,j" for x_i ^ x_j or a JSON file of terms."""
    m = _PAIR.fullmatch(spec.strip())
    if m:
        i, j = int(m.group(1)), int(m.group(2))
        if not (0 <= i < g.dim and 0 <= j < g.dim and i != j):
            raise CliError(f"{flag}: wedge pair ({i},{j}) out of range", 2)
        return WedgeElement(g, {(i, j): 1})
    try:
        return wedge_from_json(g, _load_json(spec), path=f"{flag} ({spec})")
    except SchemaError as err:
        raise CliError(str(err), 2) from err


def _emit(report, args):
    report = {"schema_version": SCHEMA_VERSION, **report}
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        lines = []

        def walk(prefix, value):
            if isinstance(value, dict):
                items = [(str(k), v) for k, v in value.items()]
                items.sort(key=lambda kv: kv[0])
            elif isinstance(value, list):
                items = [(str(i), v) for i, v in enumerate(value)]
            else:
                lines.append(f"{prefix}: {value}")
                return
            for key, item in items:
                walk(f"{prefix}.{key}" if prefix else key, item)

        walk("", report)
        text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _check_trunc(args, minimum=1):
    if args.trunc < minimum:
        raise CliError(
            f"--trunc {args.trunc} too small: this command needs at least {minimum}"
            " so degree-3 elements survive truncation",
            2,
        )


# -- commands -------------------------------------------------------------------


def cmd_validate(args):
    g = _load_lie(args.input)
    report = g.validate()
    _emit({"command": "validate", "input": args.input, **report.to_json()}, args)
    return 0 if report.ok else 1


def cmd_invariants(args):
    g = _load_lie(args.input)
    within = g.unipotent_subspace() if args.within == "unipotent" else None
    basis = inv.invariant_wedge2(g, within)
    _emit(
        {
            "command": "invariants",
            "input": args.input,
            "within": args.within,
            "dimension": len(basis),
            "basis": [r.to_json() for r in basis],
        },
        args,
    )
    return 0


def cmd_cyb(args):
    g = _load_lie(args.input)
    r = _parse_wedge(g, args.r, "--r")
    residual = inv.cyb_residual(r)
    ok = residual.is_zero()
    _emit(
        {
            "command": "cyb",
            "input": args.input,
            "r": r.to_json(),
            "residual": residual.to_json(),
            "is_solution": ok,
            "components_commute": inv.components_commute(r),
        },
        args,
    )
    return 0 if ok else 1


def cmd_support(args):
    g = _load_lie(args.input)
    r = _parse_wedge(g, args.r, "--r")
    sup = inv.support(r)
    report = {
        "command": "support",
        "input": args.input,
        "r": r.to_json(),
        "support_basis": [[str(x) for x in v] for v in sup.basis],
        "dimension": sup.dim,
        "abelian_ideal": g.is_abelian_ideal(sup),
        "invariant": inv.is_invariant(r),
    }
    if report["invariant"]:
        report["omega"] = [[str(x) for x in row] for row in inv.theta_lie(r).omega]
    _emit(report, args)
    return 0


def cmd_central_z(args):
    _check_trunc(args, 3)
    g = _load_lie(args.input)
    r = _parse_wedge(g, args.r, "--r")
    s = _parse_wedge(g, args.s, "--s")
    data = inv.central_element_z(r, s)
    _emit(
        {
            "command": "central-z",
            "input": args.input,
            "r": r.to_json(),
            "s": s.to_json(),
            "bracket_rs": data.bracket_rs.to_json(),
            "z": data.z.to_json(),
            "c_symmetric": {
                ",".join(map(str, k)): str(v) for k, v in data.c_symmetric.items()
            },
            "identity_holds": data.identity_holds,
        },
        args,
    )
    return 0 if data.identity_holds else 1


def cmd_twist_verify(args):
    _check_trunc(args, 3)
    g = _load_lie(args.input)
    n = args.trunc
    ctx = PBWContext(g)
    r = _parse_wedge(g, args.r, "--r")
    report = {"command": "twist-verify", "input": args.input, "trunc": n, "r": r.to_json()}
    ok = True

    def element_block(w):
        nonlocal ok
        twist = pbw.twist_defect_of(ctx, w, n)
        defects = pbw.invariance_defect_of(ctx, w, n)
        good = twist.is_zero() and all(d.is_zero() for d in defects)
        ok = ok and good
        return {
            "twist_defect_zero": twist.is_zero(),
            "invariance_defect_zero": all(d.is_zero() for d in defects),
            "twist_defect": twist.to_json(),
        }

    report["r_checks"] = element_block(r)
    if args.s is not None:
        s = _parse_wedge(g, args.s, "--s")
        report["s"] = s.to_json()
        report["s_checks"] = element_block(s)
        relation = pbw.verify_product_relation(ctx, r, s, n)
        ok = ok and relation.holds
        report["product_relation"] = relation.to_json()
    _emit(report, args)
    return 0 if ok else 1


def cmd_classify(args):
    gi = _load_group(args.input)
    rep = classify_connected(gi)
    _emit({"command": "classify", "input": args.input, **rep.to_json()}, args)
    return 0


def cmd_bset(args):
    gi = _load_group(args.input)
    elems = bset_elements(gi)
    _emit(
        {
            "command": "bset",
            "input": args.input,
            "elements": [
                {**data.to_json(), "minimal": minimal} for data, minimal in elems
            ],
        },
        args,
    )
    return 0


def _corpus_check_file(path, n):
    """Full invariant-property battery for one structure-constant file."""
    entry = {"file": path.name}
    try:
        g = lie_from_json(json.loads(path.read_text()), path=path.name)
    except (json.JSONDecodeError, SchemaError) as err:
        entry.update(status="schema-error", error=str(err))
        return entry
    validation = g.validate()
    if not validation.ok:
        entry.update(status="invalid", error="structure constants fail validation")
        return entry
    basis = inv.invariant_wedge2(g)
    oracle = corpus_mod.oracle_invariants(g)
    checks = {
        "solver_matches_oracle": basis == oracle,
        "cyb_zero": all(inv.cyb_residual(r).is_zero() for r in basis),
        "components_commute": all(inv.components_commute(r) for r in basis),
        "supports_abelian_ideals": all(
            g.is_abelian_ideal(inv.support(r)) for r in basis
        ),
        "theta_round_trip": all(
            inv.wedge_from_symplectic(
                g, inv.theta_lie(r).support, inv.theta_lie(r).omega
            )
            == r
            for r in basis
        ),
    }
    if basis:
        ctx = PBWContext(g)
        checks["twist_defects_zero"] = all(
            pbw.twist_defect_of(ctx, r, n).is_zero() for r in basis
        )
        checks["invariance_defects_zero"] = all(
            all(d.is_zero() for d in pbw.invariance_defect_of(ctx, r, n))
            for r in basis
        )
        checks["product_relations_hold"] = all(
            pbw.verify_product_relation(ctx, r, s, n).holds
            for r in basis
            for s in basis
        )
    entry["invariant_dimension"] = len(basis)
    entry["checks"] = checks
    entry["status"] = "pass" if all(checks.values()) else "fail"
    return entry


def cmd_corpus(args):
    root = Path(args.input)
    if not root.is_dir():
        raise CliError(f"{args.input}: not a directory", 2)
    entries = []
    for path in sorted(root.glob("*.json")):
        entries.append(_corpus_check_file(path, args.trunc))
    all_passed = all(e["status"] == "pass" for e in entries)
    _emit(
        {
            "command": "corpus",
            "input": args.input,
            "trunc": args.trunc,
            "files": entries,
            "all_passed": all_passed,
        },
        args,
    )
    return 0 if all_passed else 1


# -- wiring ----------------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--trunc", type=int, default=6, metavar="N",
                     help="verification degree for truncated identities (default 6)")
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="invcohom",
        description="Exact invariant-cohomology computations for Lie algebras"
        " and connected affine algebraic groups over characteristic 0.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check antisymmetry and the Jacobi identity")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="basis of the invariant wedge elements")
    p.add_argument("input")
    p.add_argument("--within", choices=("all", "unipotent"), default="all")
    _add_common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("cyb", help="classical Yang-Baxter residual of a wedge element")
    p.add_argument("input")
    p.add_argument("--r", required=True, help="wedge element: 'i,j' or a JSON file")
    _add_common(p)
    p.set_defaults(func=cmd_cyb)

    p = sub.add_parser("support", help="support and symplectic data of a wedge element")
    p.add_argument("input")
    p.add_argument("--r", required=True, help="wedge element: 'i,j' or a JSON file")
    _add_common(p)
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("central-z", help="degree-3 central element of an invariant pair")
    p.add_argument("input")
    p.add_argument("--r", required=True)
    p.add_argument("--s", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_central_z)

    p = sub.add_parser(
        "twist-verify",
        help="cocycle and invariance identities for exponential twists",
    )
    p.add_argument("input")
    p.add_argument("--r", required=True)
    p.add_argument("--s", help="also verify the product relation for the pair (r, s)")
    _add_common(p)
    p.set_defaults(func=cmd_twist_verify)

    p = sub.add_parser("classify", help="classification report for a connected group")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bset", help="parameterizing (support, form) pairs of a group")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_bset)

    p = sub.add_parser("corpus", help="run the full property battery over a directory")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.exit_code
    except (NotInvariantError, NotIdealError, NotNilpotentError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
