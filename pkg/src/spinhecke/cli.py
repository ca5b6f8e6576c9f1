"""Command-line front end: deterministic verification suites and exact
computations over the eight presented algebras.

Every command emits either readable text or the versioned JSON report
schema ``spinhecke-report/1``; repeated runs with identical inputs produce
byte-identical output.  Exit codes: 0 all checks pass, 1 check failures,
2 usage or parse errors.  The environment variable ``SPINHECKE_WORKERS``
caps the relation-suite worker pool (default 1, serial).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import algebras
from . import clifford_family as cf
from . import dunkl as dk
from . import morphisms as mo
from . import spin_family as sf
from .engine import AlgebraError, element_from_terms, verify_relations
from .exprparse import ParseError, parse_expression, parse_scalar
from .render import element_json, element_str
from .reports import Report
from .structure import all_perms, spin_group

SCHEMA = "spinhecke-report/1"


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1))
    else:
        for line in text_lines:
            print(line)


def _report_payload(command: str, sig_name: str, n: int, report: Report) -> dict:
    body = report.sorted().to_json()
    return {
        "schema": SCHEMA,
        "command": command,
        "algebra": sig_name,
        "n": n,
        "results": body["results"],
        "summary": body["summary"],
    }


def _report_text(report: Report):
    rep = report.sorted()
    for r in rep.results:
        status = "pass" if r.ok else "FAIL"
        line = f"{status}  {r.id}"
        if not r.ok and r.witness:
            line += f"  [{r.witness}]"
        yield line
    yield f"summary: {rep.n_pass} pass, {rep.n_fail} fail"


def _algebra_from_args(args):
    u = parse_scalar(args.u).constant_value() if args.u is not None else None
    return algebras.by_name(args.algebra, args.n, u)


def _finish_report(args, command: str, sig_name: str, n: int, report: Report) -> int:
    _emit(
        _report_payload(command, sig_name, n, report),
        args.format,
        _report_text(report),
    )
    return 0 if report.ok else 1


# -- subcommands -------------------------------------------------------------

def _cmd_normalize(args) -> int:
    sig = _algebra_from_args(args)
    elem = parse_expression(args.expr, sig)
    payload = {
        "schema": SCHEMA,
        "command": "normalize",
        "algebra": sig.name,
        "n": sig.n,
        "result": element_json(elem),
    }
    _emit(payload, args.format, [element_str(elem)])
    return 0


def _relation_worker(payload):
    family, n, u_text, ids = payload
    u = parse_scalar(u_text).constant_value() if u_text is not None else None
    sig = algebras._make(family, n, u)
    wanted = set(ids)
    report = Report("chunk")
    for rel_id, lhs, rhs in sig.relations():
        if rel_id not in wanted:
            continue
        diff = element_from_terms(sig, lhs) - element_from_terms(sig, rhs)
        report.add(rel_id, diff.is_zero, None if diff.is_zero else element_str(diff))
    return [(r.id, r.ok, r.witness) for r in report.results]


def _cmd_verify_relations(args) -> int:
    sig = _algebra_from_args(args)
    workers = int(os.environ.get("SPINHECKE_WORKERS", "1"))
    if workers > 1:
        ids = [rel_id for rel_id, _, _ in sig.relations()]
        chunks = [ids[k::workers] for k in range(workers) if ids[k::workers]]
        payloads = [(sig.family, sig.n, args.u, chunk) for chunk in chunks]
        report = Report(f"relations[{sig.name}, n={sig.n}]")
        try:
            import multiprocessing as mp

            with mp.get_context("fork").Pool(len(chunks)) as pool:
                for rows in pool.map(_relation_worker, payloads):
                    for rel_id, ok, witness in rows:
                        report.add(rel_id, ok, witness)
        except (ImportError, OSError):
            report = verify_relations(sig)
    else:
        report = verify_relations(sig)
    return _finish_report(args, "verify-relations", sig.name, sig.n, report)


def _cmd_verify_morphisms(args) -> int:
    names = [args.name] if args.name else ["PhiFin", "PhiHat", "Phi", "PhiTr"]
    report = Report(f"morphisms[n={args.n}]")
    for name in names:
        m = mo.named_morphism(name, args.n)
        hom = mo.check_homomorphism(m)
        for r in hom.results:
            report.add(f"{name}:{r.id}", r.ok, r.witness)
    if not args.name:
        for label, f, g, fb in mo.inverse_pairs(args.n):
            inv = mo.check_inverse_pair(f, g, fb)
            for r in inv.results:
                report.add(f"{label}:{r.id}", r.ok, r.witness)
    return _finish_report(args, "verify-morphisms", "-", args.n, report)


def _cmd_verify_modules(args) -> int:
    family = args.algebra.lower()
    W = dk.regular_spin(args.n) if family == "sdaha" else dk.basic_spin(args.n)
    if args.module:
        W = dk.basic_spin(args.n) if args.module == "basic-spin" else dk.regular_spin(args.n)
    report = dk.verify_module(family, W, args.degree_bound)
    report.extend(dk.oracle_equivalence(family, W, args.degree_bound))
    return _finish_report(args, "verify-modules", family, args.n, report)


def _cmd_center_check(args) -> int:
    sig = _algebra_from_args(args)
    candidate = parse_expression(args.expr, sig)
    report = cf.center_check(candidate)
    return _finish_report(args, "center-check", sig.name, sig.n, report)


def _cmd_embedding_check(args) -> int:
    alpha = parse_scalar(args.alpha)
    family = args.algebra.lower()
    if family == "sdaha":
        report = sf.spin_affine_embedding_check(alpha, args.n)
    else:
        report = cf.affine_embedding_check(alpha, args.n)
    return _finish_report(args, "embedding-check", family, args.n, report)


def _cmd_cocycle_table(args) -> int:
    sg = spin_group(args.n)
    rows = []
    for p in sorted(all_perms(args.n)):
        for q in sorted(all_perms(args.n)):
            rows.append({"p": list(p), "q": list(q), "beta": sg.beta(p, q)})
    payload = {
        "schema": SCHEMA,
        "command": "cocycle-table",
        "algebra": "SpinSym",
        "n": args.n,
        "result": rows,
    }
    lines = [f"beta{tuple(r['p'])},{tuple(r['q'])} = {r['beta']:+d}" for r in rows]
    _emit(payload, args.format, lines)
    return 0


def _cmd_act(args) -> int:
    name = {"dunkl-x": "dahca", "dunkl-y": "dahca", "dunkl-xi": "sdaha"}[args.op]
    sig = algebras.by_name(name, args.n)
    side = "x" if args.op == "dunkl-y" else "y"
    W = dk.regular_spin(args.n) if args.module == "regular-spin" else dk.basic_spin(args.n)
    if args.op == "dunkl-xi" and not W.spin:
        raise AlgebraError("dunkl-xi needs --module regular-spin")
    if args.op != "dunkl-xi" and W.spin:
        raise AlgebraError(f"{args.op} needs --module basic-spin")
    poly_elem = parse_expression(args.expr, algebras.by_name(name, args.n))
    terms = {}
    for (left, grp, cliff, right), coeff in poly_elem.terms.items():
        slot = right if side == "y" else left
        other = left if side == "y" else right
        if any(other) or grp != tuple(range(1, args.n + 1)) or any(cliff):
            raise AlgebraError(f"--expr must be a polynomial in the {side} variables")
        terms[(slot, args.vector)] = coeff
    vec = dk.InducedVector(W, side, terms)
    out = dk.act_token((args.op.split("-")[1], args.i), vec, sig.u_scalar)
    payload = {
        "schema": SCHEMA,
        "command": "act",
        "algebra": sig.name,
        "n": args.n,
        "result": out.render(),
    }
    _emit(payload, args.format, [out.render()])
    return 0


def _cmd_map(args) -> int:
    m = mo.named_morphism(args.name, args.n)
    elem = parse_expression(args.expr, m.source)
    image = mo.apply_morphism(m, elem)
    payload = {
        "schema": SCHEMA,
        "command": "map",
        "algebra": m.target.name,
        "n": args.n,
        "morphism": args.name,
        "result": element_json(image),
    }
    _emit(payload, args.format, [element_str(image)])
    return 0


# -- argument plumbing --------------------------------------------------------

def _add_common(p, algebra=True, expr=False):
    if algebra:
        p.add_argument("--algebra", required=True, help="one of " + ", ".join(algebras.ALGEBRA_NAMES))
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--u", default=None, help="specialize u (e.g. 0, 1, 1/2); default symbolic")
    if expr:
        p.add_argument("--expr", required=True, help="expression source text")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spinhecke",
        description="Exact computations in the double affine Hecke algebras of the spin symmetric group.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("normalize", help="PBW normal form of an expression")
    _add_common(p, expr=True)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("verify-relations", help="check every defining relation instance")
    _add_common(p)
    p.set_defaults(func=_cmd_verify_relations)

    p = sub.add_parser("verify-morphisms", help="homomorphism and inverse-pair checks")
    p.add_argument("--name", default=None, help="one of " + ", ".join(mo.MORPHISM_NAMES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify_morphisms)

    p = sub.add_parser("verify-modules", help="Dunkl operator module checks")
    p.add_argument("--algebra", required=True, choices=("dahca", "sdaha"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--module", choices=("basic-spin", "regular-spin"), default=None)
    p.add_argument("--degree-bound", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify_modules)

    p = sub.add_parser("center-check", help="is the expression in the even center?")
    _add_common(p, expr=True)
    p.set_defaults(func=_cmd_center_check)

    p = sub.add_parser("embedding-check", help="affine Hecke subalgebra embedding")
    p.add_argument("--algebra", required=True, choices=("dahca", "sdaha"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="0", help="the parameter alpha (scalar, e.g. 0, 1, u)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_embedding_check)

    p = sub.add_parser("cocycle-table", help="the full sign cocycle table of CS_n^-")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_cocycle_table)

    p = sub.add_parser("act", help="apply a Dunkl operator to an induced vector")
    p.add_argument("--op", required=True, choices=("dunkl-x", "dunkl-y", "dunkl-xi"))
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--module", default="basic-spin", choices=("basic-spin", "regular-spin"))
    p.add_argument("--vector", type=int, default=0, help="basis index of the W factor")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("map", help="apply a named morphism to an expression")
    p.add_argument("--name", required=True, choices=mo.MORPHISM_NAMES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_map)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
