"""Command-line interface.

Exit status is 0 on success, 2 on usage or input-format errors and 1 on
domain errors (for example characteristic 2 passed to the automorphism
commands).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import determinant as det_mod
from .errors import GrassmannError, ParseError
from .exterior import AlgebraSignature, Multivector
from .invariant import classify_bruteforce, custom, invariance_check, is_subalgebra
from .morphisms import (
    apply_morphism,
    center_basis,
    comm_subalgebra_basis,
    invert_automorphism,
    is_automorphism,
    semidirect_factor,
)
from .parsing import (
    format_canonical,
    load_morphism,
    morphism_to_dict,
    multivector_to_json,
    parse_expr,
    parse_matrix,
    parse_word,
    read_matrix_file,
    signature_to_dict,
)
from .scalars import FieldSpec
from .tensor import RelationMode, SortedWord, char2_report, normalize_word


class UsageError(Exception):
    pass


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_label(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grades(text: str) -> list[int]:
    try:
        return sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated grades, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    fieldopt = argparse.ArgumentParser(add_help=False)
    fieldopt.add_argument("--field", type=_field, default=FieldSpec(), help="q (default) or fp:P")
    nopt = argparse.ArgumentParser(add_help=False)
    nopt.add_argument("--n", type=int, required=True, help="number of generators")
    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int, default=200)
    sampling.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="grassmann", description="Exact exterior algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common, fieldopt, nopt], help="evaluate an expression")
    s.add_argument("expr")

    s = sub.add_parser("det", parents=[common, fieldopt], help="determinant of a matrix")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", metavar="FILE")
    src.add_argument("--inline", metavar="ROWS", help='rows separated by ";", e.g. "1 2; 3 4"')
    s.add_argument("--method", choices=("wedge", "leibniz", "cofactor", "all"), default="wedge")
    s.add_argument("--row", type=int, default=1, help="expansion row for --method cofactor")

    aut = sub.add_parser("aut", help="algebra morphisms from a map file")
    aut_sub = aut.add_subparsers(dest="aut_command", required=True)
    s = aut_sub.add_parser("apply", parents=[common])
    s.add_argument("--map", required=True, metavar="FILE")
    s.add_argument("expr")
    for name in ("check", "decompose", "invert"):
        s = aut_sub.add_parser(name, parents=[common])
        s.add_argument("--map", required=True, metavar="FILE")

    sub.add_parser("center", parents=[common, fieldopt, nopt], help="blade basis of the center")
    sub.add_parser("comm", parents=[common, fieldopt, nopt], help="basis of the commutator subalgebra")

    inv = sub.add_parser("invariant", help="invariant graded subalgebras")
    inv_sub = inv.add_subparsers(dest="inv_command", required=True)
    s = inv_sub.add_parser("check", parents=[common, fieldopt, nopt, sampling])
    s.add_argument("--grades", type=_grades, required=True, help="comma-separated grades")
    inv_sub.add_parser("classify", parents=[common, fieldopt, nopt, sampling])

    con = sub.add_parser("construct", help="free-algebra quotient constructions")
    con_sub = con.add_subparsers(dest="con_command", required=True)
    con_sub.add_parser("char2-demo", parents=[common])
    s = con_sub.add_parser("normalize", parents=[common, fieldopt, nopt])
    s.add_argument("--mode", choices=[m.value for m in RelationMode], default="alternating_m1")
    s.add_argument("word")
    return p


def _sig(args) -> AlgebraSignature:
    try:
        return AlgebraSignature(args.n, args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _blades_text(blades) -> str:
    return ", ".join("1" if not b else "^".join(f"e{i}" for i in b) for b in blades)


def _scalar_json(sig: AlgebraSignature, value) -> dict:
    return multivector_to_json(sig.scalar(value))


def _cmd_eval(args):
    x = parse_expr(args.expr, _sig(args))
    return format_canonical(x), multivector_to_json(x)


def _cmd_det(args):
    field = args.field
    A = read_matrix_file(args.matrix, field) if args.matrix else parse_matrix(args.inline, field, ";")
    sig = AlgebraSignature(A.n, field)
    methods = ["wedge", "leibniz", "cofactor"] if args.method == "all" else [args.method]
    values = {}
    for m in methods:
        if m == "wedge":
            values[m] = det_mod.det_wedge(A)
        elif m == "leibniz":
            values[m] = det_mod.det_leibniz(A)
        elif args.method == "all":
            rows = [det_mod.det_cofactor(A, r) for r in range(1, A.n + 1)]
            values[m] = rows[0]
            values["cofactor_rows"] = rows
        else:
            values[m] = det_mod.det_cofactor(A, args.row)
    main = values[methods[0]]
    agree = all(values[m] == main for m in methods) and all(
        v == main for v in values.get("cofactor_rows", [])
    )
    lines = [f"{m}: {values[m]}" for m in methods]
    if args.method == "all":
        lines.append("cofactor rows: " + " ".join(str(v) for v in values["cofactor_rows"]))
        lines.append(f"agree: {str(agree).lower()}")
    payload = _scalar_json(sig, main)
    payload["methods"] = {m: str(values[m]) for m in methods}
    if "cofactor_rows" in values:
        payload["cofactor_rows"] = [str(v) for v in values["cofactor_rows"]]
    payload["agree"] = agree
    return "\n".join(lines), payload


def _matrix_lines(tau) -> list[str]:
    return ["  " + " ".join(str(x) for x in r) for r in tau.rows]


def _cmd_aut(args):
    f = load_morphism(args.map)
    sig = f.signature
    if args.aut_command == "apply":
        y = apply_morphism(f, parse_expr(args.expr, sig))
        return format_canonical(y), multivector_to_json(y)
    if args.aut_command == "check":
        auto = is_automorphism(f)
        lines = ["valid: true", f"automorphism: {str(auto).lower()}"]
        lines += [f"e{i} -> {format_canonical(img)}" for i, img in enumerate(f.images, 1)]
        payload = {
            "signature": signature_to_dict(sig),
            "result": "automorphism" if auto else "endomorphism",
            "valid": True,
            "automorphism": auto,
            "morphism": morphism_to_dict(f),
        }
        return "\n".join(lines), payload
    if args.aut_command == "invert":
        g = invert_automorphism(f)
        lines = [f"e{i} -> {format_canonical(img)}" for i, img in enumerate(g.images, 1)]
        payload = {"signature": signature_to_dict(sig), "result": "inverse", "inverse": morphism_to_dict(g)}
        return "\n".join(lines), payload
    n_part, tau = semidirect_factor(f)
    lines = ["n_part:"]
    lines += [f"  e{i} -> {format_canonical(img)}" for i, img in enumerate(n_part.images, 1)]
    lines += ["tau (columns are images of e1..en):"] + _matrix_lines(tau)
    payload = {
        "signature": signature_to_dict(sig),
        "result": "sigma = n_part o g(tau)",
        "n_part": morphism_to_dict(n_part),
        "tau": [[str(x) for x in r] for r in tau.rows],
    }
    return "\n".join(lines), payload


def _blade_cmd(args, fn, name):
    sig = _sig(args)
    blades = fn(sig)
    text = f"{name} (n={sig.n}, dim={len(blades)}): {_blades_text(blades)}"
    payload = {
        "signature": signature_to_dict(sig),
        "result": _blades_text(blades),
        "blades": [list(b) for b in blades],
        "dimension": len(blades),
    }
    return text, payload


def _report_lines(report) -> list[str]:
    lines = [
        f"grades: {sorted(report.spec.grades)}",
        f"subalgebra: {str(is_subalgebra(report.spec)).lower()}",
        f"verdict: {report.verdict} ({report.samples_tested} samples)",
    ]
    w = report.witness
    if w is not None:
        lines.append(f"witness ({w.profile}): blade {_blades_text([w.blade])} escapes to grade {w.escaping_grade}")
        lines += [f"  e{i} -> {format_canonical(img)}" for i, img in enumerate(w.morphism.images, 1)]
    return lines


def _cmd_invariant(args):
    sig = _sig(args)
    if args.inv_command == "check":
        try:
            spec = custom(sig, args.grades)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        report = invariance_check(spec, args.samples, args.seed)
        payload = {"signature": signature_to_dict(sig), "result": report.verdict}
        payload.update(report.as_dict())
        return "\n".join(_report_lines(report)), payload
    result = classify_bruteforce(sig, args.samples, args.seed)
    lines = [f"n={sig.n} samples={args.samples} seed={args.seed}", "matched:"]
    lines += [f"  {sorted(g)}: {', '.join(labels)}" for g, labels in result.matched]
    lines.append("anomalies: " + (", ".join(str(sorted(g)) for g in result.anomalies) or "none"))
    lines.append("refuted:")
    for g, closed, rep in result.refuted:
        w = rep.witness
        lines.append(
            f"  {sorted(g)}{'' if closed else ' (not a subalgebra)'}: {w.profile} sends "
            f"{_blades_text([w.blade])} to grade {w.escaping_grade}"
        )
    lines.append(
        "form conflicts: " + (", ".join(f"{sorted(g)} [{'; '.join(f)}]" for g, f in result.form_conflicts) or "none")
    )
    if result.non_subalgebra_survivors:
        lines.append("non-subalgebra survivors: " + ", ".join(str(sorted(g)) for g in result.non_subalgebra_survivors))
    payload = {"signature": signature_to_dict(sig), "result": f"{len(result.anomalies)} anomalies"}
    payload.update(result.as_dict())
    return "\n".join(lines), payload


def _cmd_construct(args):
    if args.con_command == "char2-demo":
        sig = AlgebraSignature(2, FieldSpec(2))
        rep = char2_report(sig)
        lines = [
            f"m1 (v v = 0): e1e2 == e2e1: {str(rep.m1_commutative).lower()}",
            f"m1 (v v = 0): e1e1 == 0: {str(rep.m1_square_zero).lower()}",
            f"m2 (v w + w v = 0): e1e1 reducible to 0: {str(rep.m2_reduces_square).lower()}",
            "witness:",
        ] + [f"  {w}" for w in rep.witness]
        payload = {"signature": signature_to_dict(sig), "result": "char2-demo"}
        payload.update(rep.as_dict())
        return "\n".join(lines), payload
    sig = _sig(args)
    word = parse_word(args.word, sig)
    nf = normalize_word(word, args.mode, sig)
    if isinstance(nf, Multivector):
        return format_canonical(nf), multivector_to_json(nf)
    if isinstance(nf, SortedWord):
        text = str(nf)
        return text, {
            "signature": signature_to_dict(sig),
            "result": text,
            "coefficient": str(nf.coefficient),
            "letters": list(nf.letters),
        }
    return str(nf), {
        "signature": signature_to_dict(sig),
        "result": str(nf),
        "coefficient": str(nf.coefficient),
        "exponents": list(nf.exponents),
    }


_DISPATCH = {
    "eval": _cmd_eval,
    "det": _cmd_det,
    "aut": _cmd_aut,
    "center": lambda a: _blade_cmd(a, center_basis, "center"),
    "comm": lambda a: _blade_cmd(a, comm_subalgebra_basis, "commutator subalgebra"),
    "invariant": _cmd_invariant,
    "construct": _cmd_construct,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, payload = _DISPATCH[args.command](args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"grassmann: error: {exc}", file=stderr)
        return 2
    except (GrassmannError, ValueError, ZeroDivisionError) as exc:
        print(f"grassmann: {exc}", file=stderr)
        return 1
    if args.output == "json":
        # every payload carries the common keys; non-multivector results have no terms
        payload.setdefault("terms", [])
        print(json.dumps(payload, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
