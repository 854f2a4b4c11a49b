"""Command-line front end over the JSON space and belief documents."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import Any

from . import bridges, monotone, regions
from .core import DECIDER_KINDS, SApproxError, SApproxSpace
from .evidence import evaluate, format_rational
from .serialize import (
    belief_from_doc,
    dumps,
    induced_from_doc,
    induced_to_doc,
    inflection_to_doc,
    quality_to_doc,
    regions_to_doc,
    space_from_doc,
    space_to_doc,
)
from .verify import GeneratorConfig, exit_code, verify_claims


class UsageError(SApproxError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _space(args: argparse.Namespace) -> SApproxSpace:
    return space_from_doc(_load(args.space))


def _belief(path: str):
    doc = _load(path)
    if isinstance(doc, dict) and "valid" in doc:
        return induced_from_doc(doc).structure()
    return belief_from_doc(doc)


def _query(universe, raw: str):
    labels = [part.strip() for part in raw.split(",")] if raw.strip() else []
    if len(set(labels)) != len(labels):
        raise UsageError(f"repeated label in --set {raw!r}")
    return universe.subset(labels)


def cmd_regions(args: argparse.Namespace) -> Any:
    g = _space(args)
    x = _query(g.w, args.set)
    return regions_to_doc(regions.lower_approx(g, x), regions.upper_approx(g, x), regions.decompose(g, x, check=True))


def cmd_quality(args: argparse.Namespace) -> Any:
    g = _space(args)
    if args.set is None:
        return [quality_to_doc(x, regions.quality(g, x)) for x in g.w.subsets()]
    x = _query(g.w, args.set)
    return quality_to_doc(x, regions.quality(g, x))


def cmd_check(args: argparse.Namespace) -> Any:
    g = _space(args)
    report = monotone.check_partial_monotone(g, args.scope)
    doc: dict[str, Any] = {"scope": args.scope, "partial_monotone": report.holds, "witness": None}
    if report.witness is not None:
        w = report.witness
        doc["witness"] = {"A": w.a.labels, "X": w.x.labels, "Y": w.y.labels}
    # trivial elements are only defined for monotone spaces
    if monotone.check_partial_monotone(g, "space").holds:
        trivial = monotone.trivial_elements(g)
        doc["trivial"] = trivial.labels
        doc["irreducible"] = not trivial
    return doc


def cmd_reduce(args: argparse.Namespace) -> Any:
    return space_to_doc(monotone.reduce(_space(args)))


def cmd_inflection(args: argparse.Namespace) -> Any:
    return inflection_to_doc(monotone.inflection_set(_space(args)).points)


def cmd_belief_from_space(args: argparse.Namespace) -> Any:
    return induced_to_doc(bridges.belief_from_space(_space(args), strict=args.strict))


def cmd_space_from_belief(args: argparse.Namespace) -> Any:
    return space_to_doc(bridges.space_from_belief(_belief(args.belief)))


def cmd_bel_pl(args: argparse.Namespace) -> Any:
    bs = _belief(args.belief)
    x = _query(bs.w, args.set)
    r = evaluate(bs, x)
    return {"set": x.labels, "bel": format_rational(r.bel), "pl": format_rational(r.pl), "ignorance": format_rational(r.ignorance)}


def cmd_induce(args: argparse.Namespace) -> Any:
    return induced_to_doc(bridges.induce_belief(_belief(args.belief), _space(args), strict=args.strict))


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    sources = [args.space is not None, args.belief is not None, args.random is not None]
    if sum(sources) != 1:
        raise UsageError("verify needs exactly one of --space, --belief or --random")
    claims = [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else None
    beliefs_u = ()
    if args.belief_u is not None:
        if args.space is None:
            raise UsageError("--belief-u only applies together with --space")
        beliefs_u = (_belief(args.belief_u),)
    if args.space is not None:
        source: Any = _space(args)
    elif args.belief is not None:
        source = _belief(args.belief)
    else:
        if args.random < 0:
            raise UsageError("--random needs a non-negative trial count")
        kinds = tuple(k.strip() for k in args.kinds.split(",")) if args.kinds else DECIDER_KINDS
        for k in kinds:
            if k not in DECIDER_KINDS:
                raise UsageError(f"unknown decider kind {k!r}")
        source = GeneratorConfig(trials=args.random, seed=args.seed, kinds=kinds)
    reports = verify_claims(source, claims, beliefs_u=beliefs_u)
    text = "".join(dumps(r.to_doc()) + "\n" for r in reports)
    return text, exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sapprox", description=__doc__)
    parser.add_argument("--out", help="write output to this path instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_space(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--space", required=True, help="space JSON document")
        return p

    p = with_space(sub.add_parser("regions", help="approximations and decision regions of a set"))
    p.add_argument("--set", required=True, help="comma-separated W labels (empty string for the empty set)")
    p.set_defaults(func=cmd_regions)

    p = with_space(sub.add_parser("quality", help="lower and upper qualities"))
    p.add_argument("--set", help="comma-separated W labels; omit for every subset")
    p.set_defaults(func=cmd_quality)

    p = with_space(sub.add_parser("check", help="partial monotonicity and trivial elements"))
    p.add_argument("--scope", choices=("space", "decider"), default="space")
    p.set_defaults(func=cmd_check)

    with_space(sub.add_parser("reduce", help="drop trivial elements")).set_defaults(func=cmd_reduce)
    with_space(sub.add_parser("inflection", help="minimal accepted sets per element")).set_defaults(func=cmd_inflection)

    belief = sub.add_parser("belief", help="belief structures derived from spaces")
    bsub = belief.add_subparsers(dest="belief_command", required=True)
    p = with_space(bsub.add_parser("from-space", help="Möbius inverse of the lower quality"))
    p.add_argument("--strict", action="store_true", help="refuse non-monotone or reducible spaces")
    p.set_defaults(func=cmd_belief_from_space)

    space = sub.add_parser("space", help="spaces derived from belief structures")
    ssub = space.add_subparsers(dest="space_command", required=True)
    p = ssub.add_parser("from-belief", help="inclusion space reproducing Bel and Pl")
    p.add_argument("--belief", required=True, help="belief JSON document")
    p.set_defaults(func=cmd_space_from_belief)

    p = sub.add_parser("bel-pl", help="belief, plausibility and ignorance of a set")
    p.add_argument("--belief", required=True)
    p.add_argument("--set", required=True)
    p.set_defaults(func=cmd_bel_pl)

    p = with_space(sub.add_parser("induce", help="carry a belief structure on U over to W"))
    p.add_argument("--belief", required=True, help="belief JSON document over the space's U")
    p.add_argument("--strict", action="store_true", help="refuse reducible spaces")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("verify", help="check the propositions, one JSON line per claim")
    p.add_argument("--space")
    p.add_argument("--belief")
    p.add_argument("--belief-u", help="belief on U used for the cross-universe claim (with --space)")
    p.add_argument("--random", type=int, metavar="N", help="check N seeded random subjects")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--claims", help="comma-separated claim ids (default: all)")
    p.add_argument("--kinds", help="comma-separated decider kinds for --random")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            text, code = result
        else:
            text, code = dumps(result) + "\n", 0
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return code
    except (ValueError, TypeError, KeyError, OSError) as exc:
        print(f"sapprox: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
