"""Command-line front end: gen, verify, equiv, export.

Spins are passed as doubled integers ("--spins 1,1,0,0" is the
representation (1/2,1/2)+(0,0)).  Scalar parameters accept literals made
of terms joined by "+": each term is an optional rational "p/q", an
optional imaginary marker "i", and an optional "sqrt(d)", joined by "*"
(examples: "1", "-1/2", "i", "3/4*i*sqrt(6)", "1+i", "1/2*sqrt(2)+i").

Exit status: 0 success / all rules hold; 1 verification failure;
2 spins admit no nonzero solution; 3 I/O, format, or argument error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from fractions import Fraction

from .bundle import (
    MatrixBundle,
    load_bundle,
    save_bundle,
    scalar_to_json,
)
from .cg import LambdaParams, RatioFit, cg_vector_matrices, equivalence_ratio
from .generators import direct_sum
from .momentum import BlockChoice, momentum_from_vectors
from .radical import ONE, RadicalScalar
from .spins import Spin, SpinPair
from .vectors import (
    CaseTag,
    FreeParams,
    NoSolutionError,
    classify_case,
    closed_form_vectors,
    recursion_solve,
    vectors_from_coefficients,
)
from .verify import check_lorentz, check_poincare, check_translations, check_vector_rules

EXIT_OK = 0
EXIT_RULE_FAILURE = 1
EXIT_NO_SOLUTION = 2
EXIT_BAD_INPUT = 3

SOURCES = ("closed-form", "recursion", "clebsch-gordan")

_TERM_RE = re.compile(
    r"^(?P<sign>[+-])?(?P<num>\d+(?:/\d+)?)?(?:\*?(?P<i>i))?(?:\*?sqrt\((?P<d>\d+)\))?$"
)


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_BAD_INPUT):
        super().__init__(message)
        self.code = code


def parse_scalar(text: str) -> RadicalScalar:
    """Parse a scalar literal like "1/2*sqrt(2)+i" into an exact value."""
    text = text.strip().replace(" ", "")
    if not text:
        raise CliError("empty scalar literal")
    text = text.replace("-", "+-").lstrip("+")
    triples = []
    for term in text.split("+"):
        m = _TERM_RE.match(term)
        if not m or (m.group("num") is None and m.group("i") is None and m.group("d") is None):
            raise CliError(f"cannot parse scalar term {term!r}")
        coeff = Fraction(m.group("num")) if m.group("num") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        d = int(m.group("d")) if m.group("d") else 1
        if m.group("i"):
            triples.append((d, Fraction(0), coeff))
        else:
            triples.append((d, coeff, Fraction(0)))
    return RadicalScalar.from_terms(triples)


def parse_spins(text: str) -> tuple[Spin, Spin, Spin, Spin]:
    parts = text.split(",")
    if len(parts) != 4:
        raise CliError("--spins needs four comma-separated doubled integers")
    try:
        doubled = [int(p) for p in parts]
    except ValueError as exc:
        raise CliError(f"bad spin value in {text!r}: {exc}") from exc
    if any(t < 0 for t in doubled):
        raise CliError("spins must be nonnegative doubled integers")
    return tuple(Spin(t) for t in doubled)  # type: ignore[return-value]


def _scalar_json(value: RadicalScalar) -> dict:
    return {"display": str(value), "terms": scalar_to_json(value)}


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {out}: {exc}") from exc


def _build_vectors(source: str, spins, params: FreeParams):
    A, B, C, D = spins
    if source == "closed-form":
        return closed_form_vectors(A, B, C, D, params)
    if source == "recursion":
        return vectors_from_coefficients(recursion_solve(A, B, C, D, params))
    if source == "clebsch-gordan":
        return cg_vector_matrices(A, B, C, D, LambdaParams(params.t12, params.t21))
    raise CliError(f"unknown source {source!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    spins = parse_spins(args.spins)
    params = FreeParams(parse_scalar(args.t12), parse_scalar(args.t21))
    vec = _build_vectors(args.source, spins, params)
    gen = direct_sum(SpinPair(spins[0], spins[1]), SpinPair(spins[2], spins[3]))
    if args.block != "both":
        choice = BlockChoice.KEEP_12 if args.block == "keep12" else BlockChoice.KEEP_21
        vec = momentum_from_vectors(vec, choice)
    bundle = MatrixBundle(
        spins=tuple(s.twice for s in spins),
        case=vec.case,
        source=args.source,
        block=args.block,
        params=params,
        generators=gen,
        vectors=vec,
    )
    try:
        save_bundle(bundle, args.out)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}") from exc
    sys.stdout.write(
        f"wrote {bundle.dimension}x{bundle.dimension} bundle ({bundle.case.value}, "
        f"source={args.source}, block={args.block}) to {args.out}\n"
    )
    return EXIT_OK


def _verify_bundle(path: str) -> dict:
    bundle = load_bundle(path)
    reports = check_poincare(bundle.generators, bundle.vectors)
    return {
        "bundle": path,
        "spins": list(bundle.spins),
        "caseTag": bundle.case.value,
        "block": bundle.block,
        "rules": [r.to_json() for r in reports],
        "allHold": all(r.holds for r in reports),
    }


def _verify_sweep(bound: int) -> dict:
    """Check every quadruple with doubled spins <= bound, exactly."""
    one = FreeParams(ONE, ONE)
    total = admissible = checks = 0
    failures: list[str] = []

    def run(tag: str, reports) -> None:
        nonlocal checks
        for rep in reports:
            checks += 1
            if not rep.holds:
                failures.append(f"{tag}:{rep.rule_id}")

    for quad in itertools.product(range(bound + 1), repeat=4):
        total += 1
        A, B, C, D = (Spin(t) for t in quad)
        label = ",".join(str(t) for t in quad)
        if classify_case(A, B, C, D) is CaseTag.NO_SOLUTION:
            try:
                closed_form_vectors(A, B, C, D, one)
                failures.append(f"{label}:expected-no-solution")
            except NoSolutionError:
                pass
            continue
        admissible += 1
        gen = direct_sum(SpinPair(A, B), SpinPair(C, D))
        run(label + ":lorentz", check_lorentz(gen))
        built = {}
        for source in SOURCES:
            built[source] = _build_vectors(source, (A, B, C, D), one)
        if any(
            built["recursion"].component(mu) != built["closed-form"].component(mu)
            for mu in "xyzt"
        ):
            failures.append(f"{label}:recursion-mismatch")
        fit = equivalence_ratio(built["closed-form"], built["clebsch-gordan"])
        if not isinstance(fit, RatioFit):
            failures.append(f"{label}:cg-not-proportional")
        for source in ("closed-form", "clebsch-gordan"):
            vec = built[source]
            run(f"{label}:{source}:V", check_vector_rules(gen, vec))
            for choice in BlockChoice:
                mom = momentum_from_vectors(vec, choice)
                run(f"{label}:{source}:{choice.value}", check_vector_rules(gen, mom))
                run(f"{label}:{source}:{choice.value}", check_translations(mom))
    return {
        "sweepBound": bound,
        "quadruples": total,
        "admissible": admissible,
        "rulesChecked": checks,
        "failures": failures,
        "allHold": not failures,
    }


def cmd_verify(args: argparse.Namespace) -> int:
    if (args.infile is None) == (args.sweep is None):
        raise CliError("verify needs exactly one of --in or --sweep")
    if args.infile is not None:
        try:
            report = _verify_bundle(args.infile)
        except (OSError, ValueError, KeyError) as exc:
            raise CliError(f"cannot verify {args.infile}: {exc}") from exc
    else:
        if args.sweep < 0:
            raise CliError("--sweep bound must be nonnegative")
        report = _verify_sweep(args.sweep)
    _write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK if report["allHold"] else EXIT_RULE_FAILURE


def cmd_equiv(args: argparse.Namespace) -> int:
    spins = parse_spins(args.spins)
    params = FreeParams(parse_scalar(args.t12), parse_scalar(args.t21))
    lams = LambdaParams(parse_scalar(args.lambda12), parse_scalar(args.lambda21))
    reference = closed_form_vectors(*spins, params)
    candidate = cg_vector_matrices(*spins, lams)
    fit = equivalence_ratio(reference, candidate)
    if isinstance(fit, RatioFit):
        payload = {
            "spins": [s.twice for s in spins],
            "caseTag": reference.case.value,
            "proportional": True,
            "ratio12": _scalar_json(fit.ratio12),
            "ratio21": _scalar_json(fit.ratio21),
        }
        _write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    payload = {
        "spins": [s.twice for s in spins],
        "caseTag": reference.case.value,
        "proportional": False,
        "mismatch": {
            "block": fit.block,
            "component": fit.component,
            "row": fit.row,
            "col": fit.col,
            "reference": _scalar_json(fit.reference),
            "candidate": _scalar_json(fit.candidate),
        },
    }
    _write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_RULE_FAILURE


def cmd_export(args: argparse.Namespace) -> int:
    try:
        bundle = load_bundle(args.infile)
    except (OSError, ValueError, KeyError) as exc:
        raise CliError(f"cannot read {args.infile}: {exc}") from exc
    if args.format == "exact-json":
        _write_text(bundle.dumps(), args.out)
        return EXIT_OK
    mats = dict(zip(("Jx", "Jy", "Jz"), bundle.generators.J))
    mats.update(zip(("Kx", "Ky", "Kz"), bundle.generators.K))
    mats.update(zip(("Vx", "Vy", "Vz", "Vt"), bundle.vectors.components()))
    if args.format == "float-json":
        payload = {
            "schemaVersion": bundle.to_json_dict()["schemaVersion"],
            "spins": list(bundle.spins),
            "caseTag": bundle.case.value,
            "block": bundle.block,
            "dimension": bundle.dimension,
            "matrices": {
                key: [
                    [val.real, val.imag]
                    for row in mat.to_numpy().tolist()
                    for val in row
                ]
                for key, mat in mats.items()
            },
        }
        _write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    if args.format == "plain":
        lines = [
            f"spins (doubled): {','.join(str(t) for t in bundle.spins)}"
            f"  case: {bundle.case.value}  block: {bundle.block}"
            f"  dimension: {bundle.dimension}",
            f"t12 = {bundle.params.t12}   t21 = {bundle.params.t21}",
        ]
        for key in ("Jx", "Jy", "Jz", "Kx", "Ky", "Kz", "Vx", "Vy", "Vz", "Vt"):
            lines.append("")
            lines.append(f"{key}:")
            lines.append(str(mats[key]))
        _write_text("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    raise CliError(f"unknown format {args.format!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with 2; keep 3
        raise CliError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="poincarerep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a matrix bundle")
    gen.add_argument("--spins", required=True, help="doubled 2A,2B,2C,2D")
    gen.add_argument("--t12", default="1", help="12-block parameter (lambda12 for clebsch-gordan)")
    gen.add_argument("--t21", default="1", help="21-block parameter (lambda21 for clebsch-gordan)")
    gen.add_argument("--source", choices=SOURCES, default="closed-form")
    gen.add_argument("--block", choices=("both", "keep12", "keep21"), default="both")
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check commutation rules")
    ver.add_argument("--in", dest="infile", help="bundle file to verify")
    ver.add_argument("--sweep", type=int, help="check all quadruples with doubled spins <= N")
    ver.add_argument("--out", help="write the JSON report here instead of stdout")
    ver.set_defaults(func=cmd_verify)

    eq = sub.add_parser("equiv", help="fit per-block ratios between construction routes")
    eq.add_argument("--spins", required=True)
    eq.add_argument("--t12", default="1")
    eq.add_argument("--t21", default="1")
    eq.add_argument("--lambda12", default="1")
    eq.add_argument("--lambda21", default="1")
    eq.add_argument("--out")
    eq.set_defaults(func=cmd_equiv)

    exp = sub.add_parser("export", help="re-emit a bundle in another format")
    exp.add_argument("--in", dest="infile", required=True)
    exp.add_argument("--format", choices=("exact-json", "float-json", "plain"), required=True)
    exp.add_argument("--out")
    exp.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except NoSolutionError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NO_SOLUTION


if __name__ == "__main__":
    sys.exit(main())
