"""Command-line front end.

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import complexes as cx
from .configurations import (
    HypergraphSpec,
    TetrahedralExponents,
    hypergraph_equals_lambda,
    hypergraph_ideal,
    lambda_config_ideal,
    power_substitution,
    specialize,
    tetrahedral_conditions,
    tetrahedral_ideal,
    tetrahedral_is_acm,
    tetrahedral_oracle,
)
from .hilbert import LambdaConfig, lambda_degree, lambda_hvector, lambda_trace
from .ideals import BudgetExceeded, MonomialIdeal
from .resolution import DEFAULT_LATTICE_BUDGET, betti_table
from .symbolic import is_contained, resurgence_search, symbolic_power, waldschmidt


class UsageError(Exception):
    pass


def _ints(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_matroid(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--uniform", type=_ints, metavar="S,C", help="uniform matroid U(s,c)")
    g.add_argument("--facets", metavar="PATH", help="facet-list file")


def _matroid(args):
    if args.uniform is not None:
        if len(args.uniform) != 2:
            raise UsageError("--uniform takes exactly S,C")
        return cx.uniform_matroid(*args.uniform)
    with open(args.facets) as fh:
        return cx.MatroidComplex.of(cx.SimplicialComplex.loads(fh.read()))


def _weights(args, mat):
    if getattr(args, "weights", None) is None:
        return None
    if len(args.weights) != mat.vertex_count:
        raise UsageError(f"--weights needs {mat.vertex_count} entries")
    return args.weights


def build_parser():
    parser = argparse.ArgumentParser(prog="matconf", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--budget", type=int, default=None,
                        help="cap on elementary operations (membership checks, lattice size)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hvector", parents=[common], help="h-vector of a hypersurface configuration")
    p.add_argument("--lambda", dest="lam", type=_ints, required=True)
    p.add_argument("--codim", type=int, required=True)

    p = sub.add_parser("ideal", parents=[common], help="Stanley-Reisner or configuration ideal")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--uniform", type=_ints, metavar="S,C")
    g.add_argument("--facets", metavar="PATH")
    g.add_argument("--lambda", dest="lam", type=_ints)
    p.add_argument("--codim", type=int)
    p.add_argument("--dual", action="store_true", help="print the Alexander dual instead")

    p = sub.add_parser("symbolic", parents=[common], help="symbolic power generators")
    _add_matroid(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--weights", type=_ints)

    p = sub.add_parser("containment", parents=[common], help="is I^(m) inside I^r?")
    _add_matroid(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("waldschmidt", parents=[common], help="Waldschmidt constant bracket")
    _add_matroid(p)
    p.add_argument("--weights", type=_ints)
    p.add_argument("--mmax", type=int, default=8)

    p = sub.add_parser("resurgence", parents=[common], help="containment grid search")
    _add_matroid(p)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--uniform", type=_ints, metavar="S,C")
    g.add_argument("--facets", metavar="PATH")
    g.add_argument("--ideal", metavar="PATH", help="ideal file (vars=/weights= header)")
    p.add_argument("--symbolic", type=int, default=1, metavar="M")
    p.add_argument("--specialize", type=_ints, metavar="D1,...,DS",
                   help="substitute y_i -> x_{i-1}^{d_i} first")

    p = sub.add_parser("hypergraph", parents=[common], help="complete multipartite hypergraph ideal")
    p.add_argument("--blocks", required=True, metavar="E1,E2,...;C")

    p = sub.add_parser("tetrahedral", parents=[common], help="tetrahedral curve ACM test")
    p.add_argument("--p", type=_ints, required=True, metavar="P1,...,P6")

    p = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    p.add_argument("--scale", choices=("quick", "full"), default="quick")
    return parser


# rendering ------------------------------------------------------------------

def _row(values, width):
    return " ".join(f"{v:>{width}}" for v in values)


def render_trace(cfg: LambdaConfig) -> str:
    """Staircase layout: each linkage step shows the shifted previous
    h-vector above the hypersurface section, then their sum."""
    steps = lambda_trace(cfg)
    width = max(len(str(x)) for st in steps for x in st.result)
    lines = []

    def name(degrees, c):
        return f"V_({','.join(map(str, degrees))}),{c}"

    for st in steps:
        if st.kind != "link":
            lines.append(f"{name(st.degrees, st.c)} [{st.kind}]: " + _row(st.result, width))
            continue
        label_a = f"{name(st.degrees[:-1], st.c)}(-{st.shift}):"
        label_b = "X:"
        label_c = f"{name(st.degrees, st.c)}:"
        lw = max(len(label_a), len(label_b), len(label_c))
        shifted = ["-"] * st.shift + list(st.shifted)
        n = max(len(shifted), len(st.section), len(st.result))
        lines.append("")
        lines.append(f"{label_a:>{lw}} " + _row(shifted, width))
        lines.append(f"{label_b:>{lw}} " + _row(st.section, width))
        lines.append("-" * (lw + 1 + n * (width + 1)))
        lines.append(f"{label_c:>{lw}} " + _row(st.result, width))
    return "\n".join(lines)


def _emit(out, fmt, payload, text=None, rows=None):
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in rows if rows is not None else [(k, json.dumps(v)) for k, v in sorted(payload.items())]:
            w.writerow(r)
        out.write(buf.getvalue())
    else:
        out.write((text if text is not None else json.dumps(payload, indent=2, sort_keys=True)) + "\n")


def _ideal_payload(I: MonomialIdeal):
    return {"vars": I.context.count, "weights": list(I.context.weights),
            "names": list(I.context.names), "generators": [list(g) for g in I.generators]}


# subcommands ----------------------------------------------------------------

def cmd_hvector(args, out):
    cfg = LambdaConfig(args.lam, args.codim)
    h = lambda_hvector(cfg)
    deg = lambda_degree(cfg)
    payload = {"lambda": list(cfg.degrees), "c": cfg.c, "h_vector": list(h), "degree": deg}
    text = (render_trace(cfg) + "\n\n" + "h-vector: " + " ".join(map(str, h))
            + f"\ndegree: {deg}")
    _emit(out, args.format, payload, text, [("t", "h")] + list(enumerate(h)))


def cmd_ideal(args, out):
    if args.lam is not None:
        if args.codim is None:
            raise UsageError("--lambda needs --codim")
        I = lambda_config_ideal(LambdaConfig(args.lam, args.codim))
    else:
        I = cx.stanley_reisner(_matroid(args) if args.uniform else
                               cx.SimplicialComplex.loads(open(args.facets).read()))
    if args.dual:
        I = cx.alexander_dual(I)
    _emit(out, args.format, _ideal_payload(I), I.dumps().rstrip("\n"),
          [tuple(I.context.names)] + [g for g in I.generators])


def cmd_symbolic(args, out):
    mat = _matroid(args)
    I = symbolic_power(mat, args.m, _weights(args, mat))
    payload = _ideal_payload(I)
    payload["m"] = args.m
    _emit(out, args.format, payload, I.dumps().rstrip("\n"),
          [tuple(I.context.names)] + [g for g in I.generators])


def cmd_containment(args, out):
    from .symbolic import Budget

    mat = _matroid(args)
    cert = is_contained(mat, args.m, args.r, Budget(args.budget))
    payload = cert.to_json()
    text = f"I^({args.m}) {'is' if cert.contained else 'is not'} contained in I^{args.r}"
    if not cert.contained:
        text += f"\nwitness: {' '.join(map(str, cert.witness))}"
    _emit(out, args.format, payload, text,
          [("m", "r", "contained", "witness"), (cert.m, cert.r, cert.contained, payload["witness"] or "")])


def cmd_waldschmidt(args, out):
    mat = _matroid(args)
    rep = waldschmidt(mat, _weights(args, mat), args.mmax)
    payload = rep.to_json()
    lines = [f"m={m}: alpha={a}  alpha/m={Fraction(a, m)}" for m, a in rep.samples]
    lines.append(f"bounds: {rep.lower} <= waldschmidt <= {rep.upper}")
    if rep.closed_form is not None:
        lines.append(f"closed form: {rep.closed_form}")
    _emit(out, args.format, payload, "\n".join(lines),
          [("m", "alpha")] + [tuple(x) for x in rep.samples])


def cmd_resurgence(args, out):
    mat = _matroid(args)
    rep = resurgence_search(mat, args.mmax, args.rmax, budget=args.budget)
    payload = rep.to_json()
    lines = []
    for c in rep.certificates:
        mark = "contained" if c.contained else f"NOT contained, witness {' '.join(map(str, c.witness))}"
        lines.append(f"m={c.m} r={c.r}: {mark}")
    lines.append(f"max m/r among non-containments: {rep.max_ratio_not_contained}")
    if rep.formula is not None:
        lines.append(f"resurgence formula c(s-c+1)/s: {rep.formula}")
    if rep.truncated:
        lines.append(f"TRUNCATED after {rep.checks} membership checks (budget {args.budget})")
    _emit(out, args.format, payload, "\n".join(lines),
          [("m", "r", "contained", "witness")] + [
              (c.m, c.r, c.contained, c.to_json()["witness"] or "") for c in rep.certificates])


def cmd_betti(args, out):
    if args.ideal:
        with open(args.ideal) as fh:
            I = MonomialIdeal.loads(fh.read())
    else:
        mat = _matroid(args)
        I = symbolic_power(mat, args.symbolic)
    if args.specialize:
        I = specialize(I, power_substitution(args.specialize, I.context))
    table = betti_table(I, args.budget or DEFAULT_LATTICE_BUDGET)
    payload = table.to_json()
    text = table.render() + f"\npd = {table.pd}, codim = {table.codim}, " \
                            f"Cohen-Macaulay: {'yes' if table.pd == table.codim else 'no'}"
    _emit(out, args.format, payload, text,
          [("i", "j", "rank")] + [tuple(e) for e in payload["entries"]])


def cmd_hypergraph(args, out):
    try:
        spec = HypergraphSpec.parse(args.blocks)
    except ValueError as exc:
        raise UsageError(f"--blocks: {exc}")
    I = hypergraph_ideal(spec)
    same = hypergraph_equals_lambda(spec)
    payload = _ideal_payload(I)
    payload["equals_lambda_configuration"] = same
    _emit(out, args.format, payload,
          f"{I}\nequals lambda-configuration ideal: {'yes' if same else 'no'}")


def cmd_tetrahedral(args, out):
    p = TetrahedralExponents(args.p)
    conds = tetrahedral_conditions(p)
    acm = tetrahedral_is_acm(p)
    oracle = tetrahedral_oracle(p, args.budget)
    I = tetrahedral_ideal(p)
    payload = {"p": list(p.p), "normalized": list(conds["normalized"]),
               "permutation": list(conds["permutation"]),
               "conditions": {k: conds[k] for k in ("i", "ii", "iii", "iv")},
               "classifier": acm, "oracle": oracle, "agreement": acm == oracle,
               "generators": [list(g) for g in I.generators]}
    yes = lambda b: "true" if b else "false"
    text = (f"normalized p: {','.join(map(str, conds['normalized']))} "
            f"(variable permutation {conds['permutation']})\n"
            + "conditions: " + ", ".join(f"({k}) {yes(conds[k])}" for k in ("i", "ii", "iii", "iv"))
            + f"\nACM: {yes(acm)} (classifier), {yes(oracle)} (oracle), "
              f"agreement: {'yes' if acm == oracle else 'no'}")
    _emit(out, args.format, payload, text)


def cmd_verify(args, out):
    from .verify import run_all

    results = run_all(args.scale)
    payload = {"scale": args.scale,
               "results": [{"name": n, "ok": ok, "detail": d} for n, ok, d in results]}
    lines = [f"{'PASS' if ok else 'FAIL'}  {n}: {d}" for n, ok, d in results]
    passed = sum(ok for _, ok, _ in results)
    lines.append(f"{passed}/{len(results)} suites passed")
    _emit(out, args.format, payload, "\n".join(lines),
          [("suite", "ok", "detail")] + [(n, ok, d) for n, ok, d in results])
    return 0 if passed == len(results) else 1


COMMANDS = {
    "hvector": cmd_hvector, "ideal": cmd_ideal, "symbolic": cmd_symbolic,
    "containment": cmd_containment, "waldschmidt": cmd_waldschmidt,
    "resurgence": cmd_resurgence, "betti": cmd_betti, "hypergraph": cmd_hypergraph,
    "tetrahedral": cmd_tetrahedral, "verify": cmd_verify,
}


def report_schema(command: str) -> dict:
    """JSON schema for one subcommand's report."""
    from importlib.resources import files

    root = json.loads(files("matconf").joinpath("schemas/reports.schema.json").read_text())
    if command not in root["commands"]:
        raise KeyError(command)
    return {**root, "$ref": f"#/commands/{command}"}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status = COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except BudgetExceeded as exc:
        err.write(json.dumps({"error": "budget exceeded", "message": str(exc),
                              "spent": exc.spent}) + "\n")
        return 1
    except (ValueError, ArithmeticError, OSError) as exc:
        err.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
