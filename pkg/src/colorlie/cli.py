"""The colorlie command line interface.

Subcommands are thin wrappers over the library; exit codes are

    0  success / property holds
    1  property fails / does not hold
    2  invalid input or internal inconsistency

`--json` switches to a machine report with the stable field set
{command, verdict, classification, witness, evidence, agreement}; the JSON
output carries no wall-clock data, so identical inputs and seeds produce
byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import lie
from .cyclo import format_scalar
from .errors import ColorLieError, ValidationError
from .fileformat import (emit_algebra_file, emit_pairing_file,
                         parse_algebra_file, parse_pairing_file)
from .gradings import (Grading, induce_grading, is_coarsening,
                       standard_grading, validate_grading)
from .abgroup import GroupHom, GroupSpec
from .pairings import Cocycle, check_cocycle_identity, scheunert_sigma
from .pbw import check_scheunert_iso
from .pipeline import diamond_color_pipeline, lie_to_color


def _seed_from(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("COLORLIE_SEED")
    if env is not None:
        return int(env)
    return lie.DEFAULT_SEED


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_algebra_file(fh.read())
    except OSError as exc:
        raise ColorLieError(f"cannot read {path}: {exc}")


def _load_sigma(spec: str, algebra) -> Cocycle:
    if spec == "trivial":
        return Cocycle.trivial(algebra.group, algebra.order)
    if spec == "scheunert":
        return scheunert_sigma(algebra.epsilon)
    try:
        with open(spec, encoding="utf-8") as fh:
            return parse_pairing_file(fh.read(), algebra.group, algebra.order)
    except OSError as exc:
        raise ColorLieError(f"cannot read {spec}: {exc}")


def _as_lie(algebra) -> lie.LieAlgebra:
    """Forget the grading of a trivially-colored algebra."""
    from .cyclo import CycloScalar
    one = CycloScalar.one(algebra.order)
    n = algebra.group.ngens
    for i in range(n):
        for j in range(n):
            if algebra.epsilon.values[i][j] != one:
                raise ValidationError(
                    "this command needs an ordinary Lie algebra "
                    "(trivial commutation factor); run `diamond` for the "
                    "color pipeline")
    return lie.LieAlgebra(algebra.order, algebra.dim, algebra.brackets)


def _vectors_json(vectors):
    if vectors is None:
        return None
    return [[format_scalar(c) for c in v] for v in vectors]


def _pairing_json(p):
    return [[format_scalar(v) for v in row] for row in p.values]


class Reporter:
    def __init__(self, command: str, args):
        self.command = command
        self.json = args.json
        self.timings = getattr(args, "timings", False)
        self.start = time.monotonic()
        self.payload = {"command": command, "verdict": None,
                        "classification": None, "witness": None,
                        "evidence": {}, "agreement": None}
        self.lines = []

    def say(self, text: str):
        self.lines.append(text)

    def finish(self, exit_code: int) -> int:
        if self.json:
            if self.timings:
                self.payload["evidence"]["elapsed_s"] = round(
                    time.monotonic() - self.start, 3)
            print(json.dumps(self.payload, indent=2, sort_keys=True))
        else:
            for line in self.lines:
                print(line)
            if self.timings:
                print(f"elapsed: {time.monotonic() - self.start:.3f}s")
        return exit_code


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(args) -> int:
    rep = Reporter("verify", args)
    parsed = _load(args.file)
    report = parsed.algebra.validate()
    rep.say(str(report))
    ok = report.ok
    if parsed.grading is not None:
        greport = validate_grading(parsed.grading)
        rep.say(str(greport))
        ok = ok and greport.ok
    rep.payload["verdict"] = "valid" if ok else "invalid"
    rep.payload["evidence"]["violations"] = list(report.violations)
    return rep.finish(0 if ok else 1)


def cmd_twist(args) -> int:
    rep = Reporter("twist", args)
    parsed = _load(args.file)
    sigma = _load_sigma(args.sigma, parsed.algebra)
    cocycle_report = check_cocycle_identity(sigma)
    if not cocycle_report.ok:
        raise ColorLieError(f"sigma fails the cocycle identity at "
                            f"{cocycle_report.witness}")
    twisted = parsed.algebra.twist(sigma)
    text = emit_algebra_file(twisted, parsed.grading)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.say(f"wrote {args.output}")
    else:
        rep.say(text.rstrip("\n"))
    rep.payload["verdict"] = "twisted"
    rep.payload["evidence"]["sigma"] = _pairing_json(sigma)
    rep.payload["evidence"]["algebra"] = text
    return rep.finish(0)


def cmd_superize(args) -> int:
    rep = Reporter("superize", args)
    parsed = _load(args.file)
    superized, sigma = parsed.algebra.superize()
    text = emit_algebra_file(superized)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.say(f"wrote {args.output}")
    else:
        rep.say(text.rstrip("\n"))
    rep.say("sigma:")
    rep.say(emit_pairing_file(sigma).rstrip("\n"))
    rep.payload["verdict"] = "superized"
    rep.payload["evidence"]["sigma"] = _pairing_json(sigma)
    rep.payload["evidence"]["algebra"] = text
    return rep.finish(0)


def cmd_index(args) -> int:
    rep = Reporter("index", args)
    g = _as_lie(_load(args.file).algebra)
    report = lie.lie_index(g, seed=_seed_from(args))
    rep.say(f"dim {report.dim}  generic rank {report.generic_rank}  "
            f"index {report.index}  almost maximal: {report.almost_maximal}")
    rep.payload["verdict"] = report.index
    rep.payload["classification"] = ("almost-maximal" if report.almost_maximal
                                     else "not-almost-maximal")
    rep.payload["evidence"] = {
        "dim": report.dim, "generic_rank": report.generic_rank,
        "index": report.index,
        "evaluation_ranks": list(report.evaluation_ranks)}
    rep.payload["agreement"] = True
    return rep.finish(0)


def cmd_lcs(args) -> int:
    rep = Reporter("lcs", args)
    algebra = _load(args.file).algebra
    profile = algebra.descending_central_series()
    rep.say("dims " + ",".join(str(d) for d in profile.dims))
    rep.say(f"nilpotent: {profile.nilpotent}")
    rep.payload["verdict"] = "nilpotent" if profile.nilpotent else "not-nilpotent"
    rep.payload["evidence"]["dims"] = list(profile.dims)
    return rep.finish(0 if profile.nilpotent else 1)


def cmd_strip(args) -> int:
    rep = Reporter("strip", args)
    g = _as_lie(_load(args.file).algebra)
    result = lie.strip_central_abelian_factor(g)
    rep.say(f"central abelian factor: dim {len(result.factor_basis)}")
    rep.say(f"remaining subalgebra: dim {result.subalgebra.dim}")
    rep.payload["verdict"] = "stripped"
    rep.payload["evidence"] = {
        "factor_dim": len(result.factor_basis),
        "factor_basis": _vectors_json(result.factor_basis),
        "subalgebra_dim": result.subalgebra.dim,
        "subalgebra_basis": _vectors_json(result.subalgebra_basis)}
    return rep.finish(0)


def cmd_diamond(args) -> int:
    rep = Reporter("diamond", args)
    parsed = _load(args.file)
    try:
        result = diamond_color_pipeline(parsed.algebra, seed=_seed_from(args))
    except ValidationError as exc:
        raise ColorLieError(f"Theorem requires nilpotent L: {exc}")
    v = result.verdict
    rep.say(f"diamond property: {'holds' if v.holds else 'does not hold'}")
    rep.say(f"classification: {v.classification}")
    rep.say(f"even part dim {result.even_part.dim}, "
            f"stripped dim {v.stripped_dim}, series {v.series_dims}")
    if v.index_report is not None:
        rep.say(f"index {v.index_report.index} "
                f"(generic rank {v.index_report.generic_rank}); "
                f"routes agree: {v.routes_agree}")
    rep.payload["verdict"] = "holds" if v.holds else "does-not-hold"
    rep.payload["classification"] = v.classification
    rep.payload["witness"] = _vectors_json(v.witness)
    rep.payload["agreement"] = v.routes_agree
    rep.payload["evidence"] = {
        "sigma": _pairing_json(result.sigma),
        "superized": emit_algebra_file(result.superized),
        "even_indices": [i + 1 for i in result.even_indices],
        "odd_indices": [i + 1 for i in result.odd_indices],
        "even_dim": result.even_part.dim,
        "stripped_dim": v.stripped_dim,
        "series_dims": list(v.series_dims),
    }
    if v.index_report is not None:
        rep.payload["evidence"]["index"] = v.index_report.index
        rep.payload["evidence"]["generic_rank"] = v.index_report.generic_rank
        rep.payload["evidence"]["evaluation_ranks"] = list(
            v.index_report.evaluation_ranks)
    return rep.finish(0 if v.holds else 1)


def cmd_pbw_check(args) -> int:
    rep = Reporter("pbw-check", args)
    parsed = _load(args.file)
    sigma = _load_sigma(args.sigma, parsed.algebra)
    report = check_scheunert_iso(parsed.algebra, sigma, args.max_degree)
    rep.say(f"pairs checked: {report.pairs_checked} "
            f"(degree bound {report.degree_bound})")
    if report.ok:
        rep.say("U(L^sigma) = U(L)^sigma on all checked pairs")
    else:
        rep.say(f"MISMATCH at {report.mismatch[0]} * {report.mismatch[1]}:")
        rep.say(f"  U(L^sigma): {report.mismatch[2]}")
        rep.say(f"  U(L)^sigma: {report.mismatch[3]}")
    rep.payload["verdict"] = "pass" if report.ok else "mismatch"
    rep.payload["evidence"] = {
        "pairs_checked": report.pairs_checked,
        "degree_bound": report.degree_bound,
        "mismatch": report.mismatch}
    return rep.finish(0 if report.ok else 1)


def _parse_hom(spec: str, source: GroupSpec, target: GroupSpec) -> GroupHom:
    """Rows separated by ';', one per source generator: the image coords."""
    rows = [r.strip() for r in spec.split(";") if r.strip()]
    images = []
    for r in rows:
        coords = [int(c) for c in r.replace(",", " ").split()]
        images.append(target.element(coords))
    return GroupHom(source, target, tuple(images))


def cmd_grading(args) -> int:
    rep = Reporter(f"grading-{args.action}", args)
    if args.action == "verify":
        parsed = _load(args.file)
        if parsed.grading is None:
            raise ColorLieError("file carries no grading section")
        report = validate_grading(parsed.grading)
        rep.say(str(report))
        rep.payload["verdict"] = "valid" if report.ok else "invalid"
        rep.payload["evidence"]["violations"] = list(report.violations)
        return rep.finish(0 if report.ok else 1)
    if args.action == "induce":
        parsed = _load(args.file)
        if parsed.grading is None:
            raise ColorLieError("file carries no grading section")
        if args.target is None or args.hom is None:
            raise ColorLieError("induce needs --target and --hom")
        from .fileformat import _parse_group_line
        target = _parse_group_line("group " + args.target, 0)
        hom = _parse_hom(args.hom, parsed.grading.group, target)
        induced = induce_grading(parsed.grading, hom)
        text = emit_algebra_file(parsed.algebra, induced)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
            rep.say(f"wrote {args.output}")
        else:
            rep.say(text.rstrip("\n"))
        rep.payload["verdict"] = "induced"
        rep.payload["evidence"]["degrees"] = [str(d) for d in induced.degrees]
        return rep.finish(0)
    if args.action == "coarsen":
        a = _load(args.file)
        b = _load(args.file2)
        if a.grading is None or b.grading is None:
            raise ColorLieError("both files need grading sections")
        result = is_coarsening(a.grading, b.grading)
        rep.say(f"first grading is a coarsening of the second: {result}")
        rep.payload["verdict"] = "coarsening" if result else "not-coarsening"
        return rep.finish(0 if result else 1)
    raise ColorLieError(f"unknown grading action {args.action!r}")


def cmd_catalog(args) -> int:
    rep = Reporter("catalog", args)
    g = lie.catalog(args.name)
    text = emit_algebra_file(lie_to_color(g))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.say(f"wrote {args.output}")
    else:
        rep.say(text.rstrip("\n"))
    rep.payload["verdict"] = "emitted"
    rep.payload["evidence"]["algebra"] = text
    return rep.finish(0)


def cmd_report(args) -> int:
    from .report import write_report
    rep = Reporter("report", args)
    path = write_report(args.files, args.outdir, _seed_from(args),
                        parallel=args.parallel)
    rep.say(f"wrote {path} and figures in {args.outdir}")
    rep.payload["verdict"] = "written"
    rep.payload["evidence"]["summary"] = path
    return rep.finish(0)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorlie",
        description="Exact computations with Lie color algebras: twists, "
                    "superization, PBW checks and the diamond decision.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable report on stdout")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized cross-checks "
                             "(or COLORLIE_SEED)")
    parser.add_argument("--timings", action="store_true",
                        help="include wall-clock timing in the report")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("verify", help="validate the color axioms (and grading)")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("twist", help="apply a cocycle twist")
    p.add_argument("file")
    p.add_argument("--sigma", required=True,
                   help="sigma file, or 'trivial'/'scheunert'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("superize", help="twist by the Scheunert cocycle")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_superize)

    p = sub.add_parser("index", help="generic rank and index")
    p.add_argument("file")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("lcs", help="descending central series")
    p.add_argument("file")
    p.set_defaults(func=cmd_lcs)

    p = sub.add_parser("strip", help="split off the central abelian factor")
    p.add_argument("file")
    p.set_defaults(func=cmd_strip)

    p = sub.add_parser("diamond", help="full color diamond decision")
    p.add_argument("file")
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("pbw-check", help="check U(L^sigma) = U(L)^sigma")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--sigma", default="scheunert",
                   help="sigma file, or 'trivial'/'scheunert' (default)")
    p.set_defaults(func=cmd_pbw_check)

    p = sub.add_parser("grading", help="grading operations")
    p.add_argument("action", choices=["verify", "induce", "coarsen"])
    p.add_argument("file")
    p.add_argument("file2", nargs="?")
    p.add_argument("--target", help="target group, e.g. 'free=1 torsion='")
    p.add_argument("--hom", help="generator images, rows ';'-separated")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_grading)

    p = sub.add_parser("catalog", help="emit a named catalog algebra")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("report", help="corpus summary with figures")
    p.add_argument("files", nargs="+")
    p.add_argument("--outdir", required=True)
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ColorLieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
