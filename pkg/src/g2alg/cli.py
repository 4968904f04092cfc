"""Command-line front end: ``g2 <subcommand> ...``.

Exit codes: 0 success, 1 a verification came out negative, 2 bad usage.
JSON output always uses sorted keys so identical invocations give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .exactfield import FieldElement, render
from .g2core import (
    Gen,
    bracket,
    half_sum_R,
    parse_gen,
    positive_roots,
    structure_constants,
)
from .pbw import format_monomial, format_polynomial, parse_polynomial

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


# -- formatting helpers ---------------------------------------------------------


def coef_text(c) -> str:
    return render(c) if isinstance(c, FieldElement) else str(c)


def weight_json(w) -> list[str]:
    return [render(w.comp1), render(w.comp2)]


def terms_json(poly: dict) -> list[dict]:
    return [{"exp": list(m), "coef": coef_text(poly[m])} for m in sorted(poly)]


def _boson_json(op) -> dict:
    return {
        "terms": [{"exp": [list(p) for p in k], "coef": coef_text(c)} for k, c in op.sorted_terms()],
        "text": str(op),
    }


def _fermion_json(op) -> dict:
    from .oscillator.fermion import correspondence_terms

    return {
        "matrix": [[render(x) for x in row] for row in op.m],
        "terms": [{"coef": render(c), "op": t} for c, t in correspondence_terms(op)],
    }


def emit_json(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=2))
    out.write("\n")


def parse_monomial(text: str, size: int) -> tuple[int, ...]:
    try:
        exps = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"monomial {text!r} must be comma-separated integers") from None
    if len(exps) != size or any(e < 0 for e in exps):
        raise UsageError(f"monomial {text!r} needs {size} non-negative exponents")
    return exps


def _gen(text: str) -> Gen:
    try:
        return parse_gen(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _highest_weight(args):
    from .reps.elementary import SYMBOLIC, HighestWeight

    if args.p is None and args.q is None:
        return SYMBOLIC
    if args.p is None or args.q is None:
        raise UsageError("give both --p and --q, or neither for symbolic Lambda")
    if args.p < 0 or args.q < 0:
        raise UsageError("Dynkin labels must be non-negative")
    return HighestWeight.from_labels(args.p, args.q)


# -- subcommands ----------------------------------------------------------------


def cmd_roots(args, out) -> int:
    roots = positive_roots()
    consts = structure_constants()
    if args.format == "json":
        emit_json(
            {
                "positive_roots": [
                    {"index": i, "label": f"alpha{i}", "weight": weight_json(r)}
                    for i, r in enumerate(roots, start=1)
                ],
                "half_sum_R": weight_json(half_sum_R()),
                "structure_constants": [
                    {"a": a, "b": b, "value": render(v)} for (a, b), v in sorted(consts.items())
                ],
            },
            out,
        )
        return 0
    for i, r in enumerate(roots, start=1):
        out.write(f"alpha{i} = ({render(r.comp1)}, {render(r.comp2)})\n")
    R = half_sum_R()
    out.write(f"R = ({render(R.comp1)}, {render(R.comp2)})\n")
    for (a, b), v in sorted(consts.items()):
        out.write(f"N({a},{b}) = {render(v)}\n")
    return 0


def cmd_bracket(args, out) -> int:
    x, y = _gen(args.x), _gen(args.y)
    res = bracket(x, y)
    items = [(g, res[g]) for g in sorted(res)]
    if args.format == "json":
        emit_json({"x": x.label, "y": y.label,
                   "result": [{"gen": g.label, "coef": render(c)} for g, c in items]}, out)
    else:
        text = " + ".join(f"[{render(c)}] {g.label}" for g, c in items) or "0"
        out.write(text + "\n")
    return 0


def cmd_normal_order(args, out) -> int:
    try:
        poly = parse_polynomial(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = format_polynomial(poly)
    if args.format == "json":
        emit_json({"input": args.word, "terms": terms_json(poly), "text": text}, out)
    else:
        out.write(text + "\n")
    return 0


def cmd_rho(args, out) -> int:
    from .reps.closed_forms import closed_rho
    from .reps.master import rho_apply

    g = _gen(args.gen)
    x = parse_monomial(args.monomial, 14)
    if args.source == "engine":
        poly = rho_apply(g, x)
    else:
        poly = closed_rho(g, x, corrected=args.source == "table-corrected")
    text = format_polynomial(poly)
    if args.format == "json":
        emit_json({"gen": g.label, "monomial": list(x), "source": args.source,
                   "terms": terms_json(poly), "text": text}, out)
    else:
        out.write(text + "\n")
    return 0


def _format_verma(poly: dict) -> str:
    from .reps.elementary import to_full

    if not poly:
        return "0"
    return " + ".join(f"[{coef_text(poly[m])}] {format_monomial(to_full(m))}" for m in sorted(poly))


def cmd_elementary(args, out) -> int:
    from .reps.closed_forms import closed_d_lambda
    from .reps.elementary import d_lambda_apply

    lam = _highest_weight(args)
    g = _gen(args.gen)
    x = parse_monomial(args.monomial, 6)
    if args.source == "engine":
        poly = d_lambda_apply(lam, g, x)
    else:
        poly = closed_d_lambda(lam, g, x, corrected=args.source == "table-corrected")
    text = _format_verma(poly)
    if args.format == "json":
        emit_json({"gen": g.label, "monomial": list(x), "lambda": [str(lam.l1), str(lam.l2)],
                   "source": args.source, "terms": terms_json(poly), "text": text}, out)
    else:
        out.write(text + "\n")
    return 0


def cmd_quotients(args, out) -> int:
    from .reps.master import quotient_catalog

    spaces = quotient_catalog()
    if args.format == "json":
        emit_json(
            [
                {"name": s.name, "bosons": s.bosons, "caps": s.caps.caps(),
                 "generators": [g.label for g in s.generators]}
                for s in spaces
            ],
            out,
        )
        return 0
    for s in spaces:
        out.write(f"{s.bosons}\t{s.name}\t{' '.join(g.label for g in s.generators)}\n")
    return 0


def cmd_extremal(args, out) -> int:
    from .extremal import ExtremalError, bgg_weights, layer_order_holds, materialize_all, y61_scalar
    from .reps.elementary import HighestWeight

    if args.p < 0 or args.q < 0:
        raise UsageError("Dynkin labels must be non-negative")
    lam = HighestWeight.from_labels(args.p, args.q)
    P, Q = args.p + 1, args.q + 1
    try:
        vectors = materialize_all(lam)
    except ExtremalError as exc:
        emit_json({"error": str(exc), "residual": terms_json(exc.residual)}, out)
        return 1
    orbit = bgg_weights(lam)
    orbit_set = {w for w, _ in orbit}
    weights_ok = len(orbit) == 12 and {v.weight for v in vectors} == orbit_set
    order_ok = layer_order_holds(vectors)
    emit_json(
        {
            "p": args.p,
            "q": args.q,
            "P": P,
            "Q": Q,
            "vectors": [
                {
                    "label": v.recipe.label,
                    "word": v.recipe.word(P, Q),
                    "weight": weight_json(v.weight),
                    "terms": terms_json(v.vector),
                }
                for v in vectors
            ],
            "orbit": [
                {"weight": weight_json(w), "reflections": list(word)}
                for w, word in sorted(orbit, key=lambda t: (len(t[1]), t[1]))
            ],
            "orbit_size": len(orbit),
            "weights_match_orbit": weights_ok,
            "layer_order_holds": order_ok,
            "y61_scalar": render(y61_scalar(lam)),
        },
        out,
    )
    return 0 if weights_ok and order_ok else 1


def cmd_fundamental(args, out) -> int:
    from .reps.elementary import to_full
    from .reps.fundamental import build_fundamental_01

    rep = build_fundamental_01()
    if args.format == "tsv":
        out.write("basis\tH1\tH2\tH1_decimal\tH2_decimal\n")
        for b, w in zip(rep.basis, rep.weights):
            out.write(
                f"{format_monomial(to_full(b))}\t{render(w.comp1)}\t{render(w.comp2)}\t"
                f"{w.comp1.decimal_str()}\t{w.comp2.decimal_str()}\n"
            )
        return 0
    relations = []
    for depth, b in zip(rep.depths, rep.basis):
        for m6 in rep.spaces[depth].monomials:
            if m6 != b:
                relations.append({"lhs": format_monomial(to_full(m6)), "rhs": format_monomial(to_full(b)),
                                  "scalar": render(rep.relation(m6, b))})
    emit_json(
        {
            "dimension": rep.dim,
            "basis": [format_monomial(to_full(b)) for b in rep.basis],
            "weights": [weight_json(w) for w in rep.weights],
            "relations": relations,
            "matrices": {g.label: [[render(x) for x in row] for row in rep.matrices[g]] for g in Gen},
        },
        out,
    )
    return 0


def _realization_table(form: str, variant: str, args):
    from .oscillator.fermion import generated_F, transcribed_F
    from .oscillator.realizations import generated_B5, generated_B6, transcribed_B5, transcribed_B6
    from .params import L1

    if form == "three-fermion":
        if args.p is not None or args.q is not None:
            raise UsageError("the three-fermion realization has no highest-weight parameters")
        return generated_F() if variant == "generated" else transcribed_F()
    lam = _highest_weight(args)
    if form == "six-boson":
        return generated_B6(lam) if variant == "generated" else transcribed_B6(lam)
    if lam.is_symbolic:
        l1 = L1
    else:
        if lam.labels[1] != 0:
            raise UsageError("the five-boson realization needs --q 0")
        l1 = lam.l1
    return generated_B5(l1) if variant == "generated" else transcribed_B5(l1)


def cmd_realize(args, out) -> int:
    table = _realization_table(args.form, args.variant, args)
    render_op = _fermion_json if args.form == "three-fermion" else _boson_json
    emit_json({"form": args.form, "variant": args.variant,
               "operators": {g.label: render_op(table[g]) for g in Gen}}, out)
    return 0


def cmd_verify(args, out) -> int:
    from .oscillator.verify import verify_realization

    table = _realization_table(args.form, args.variant, args)
    report = verify_realization(table)
    emit_json({"form": args.form, "variant": args.variant, **report.summary()}, out)
    return 0 if report.passed else 1


def cmd_adjudicate(args, out) -> int:
    from .oscillator.fermion import generated_F, transcribed_F
    from .oscillator.realizations import generated_B5, generated_B6, transcribed_B5, transcribed_B6
    from .oscillator.verify import adjudicate
    from .reps.closed_forms import discrepancy_report

    report = {
        "master_table": discrepancy_report("master", samples=args.samples, seed=args.seed),
        "elementary_table": discrepancy_report("elementary", samples=args.samples, seed=args.seed),
        "six_boson": adjudicate(transcribed_B6(), generated_B6(), "six-boson"),
        "five_boson": adjudicate(transcribed_B5(), generated_B5(), "five-boson"),
        "three_fermion": adjudicate(transcribed_F(), generated_F(), "three-fermion"),
    }
    emit_json(report, out)
    return 0


def cmd_weights(args, out) -> int:
    from .reps.master import quotient_by_name, quotient_weights

    try:
        space = quotient_by_name(args.space)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    try:
        counts = quotient_weights(space, args.max_degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write("H1\tH2\tH1_decimal\tH2_decimal\tcount\n")
    for w in sorted(counts, key=lambda w: (w.comp1.to_decimal(), w.comp2.to_decimal())):
        out.write(
            f"{render(w.comp1)}\t{render(w.comp2)}\t{w.comp1.decimal_str()}\t"
            f"{w.comp2.decimal_str()}\t{counts[w]}\n"
        )
    return 0


# -- parser ---------------------------------------------------------------------


def _add_lambda(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, help="first Dynkin label (omit both for symbolic Lambda)")
    p.add_argument("--q", type=int, help="second Dynkin label")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="g2", description="Exact G2 algebra, representations and realizations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots, half-sum and structure constants")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("bracket", help="[x, y] of two generators")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("normal-order", help="normal-order a word such as 'E1*E-1^2'")
    p.add_argument("word")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_normal_order)

    p = sub.add_parser("rho", help="master representation on a PBW monomial (14 exponents)")
    p.add_argument("gen", help="generator label, e.g. E-3 or H1")
    p.add_argument("monomial", help="14 comma-separated exponents in PBW order")
    p.add_argument("--source", choices=("engine", "table", "table-corrected"), default="engine")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("elementary", help="elementary representation on a lowering monomial (6 exponents)")
    p.add_argument("gen", help="generator label, e.g. E-3 or H1")
    p.add_argument("monomial", help="6 comma-separated exponents of E-1..E-6")
    _add_lambda(p)
    p.add_argument("--source", choices=("engine", "table", "table-corrected"), default="engine")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_elementary)

    p = sub.add_parser("quotients", help="catalog of quotient spaces and their boson counts")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_quotients)

    p = sub.add_parser("extremal", help="the twelve extremal vectors and the BGG orbit")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("fundamental", help="the seven-dimensional (0,1) representation")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_fundamental)

    forms = ("six-boson", "five-boson", "three-fermion")
    for name, func, helptext in (
        ("realize", cmd_realize, "print a boson or fermion realization"),
        ("verify", cmd_verify, "check all 91 commutators of a realization"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--form", choices=forms, required=True)
        p.add_argument("--variant", choices=("generated", "transcribed"), default="generated")
        _add_lambda(p)
        p.set_defaults(func=func)

    p = sub.add_parser("adjudicate", help="compare every transcribed table with the engine")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_adjudicate)

    p = sub.add_parser("weights", help="weight lattice of a quotient space as TSV")
    p.add_argument("--space", required=True, help="e.g. Omega/U_K1K2N15N6 (see 'g2 quotients')")
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=cmd_weights)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args, out)
        out.flush()
        return code
    except UsageError as exc:
        err.write(f"g2 {args.command}: {exc}\n")
        return 2
    except BrokenPipeError:
        # downstream reader (e.g. head) closed early; silence the exit-time flush
        if out is sys.stdout:
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
