"""Command line front end.

Subcommands: stats, dist, gf, check, bcode, verify, chainword.  Everything
is a thin wrapper over the library; output is plain text by default or JSON
with --format json.  Exit codes: 0 success (or positive check), 1 negative
check / verification disagreement, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bcode import BCode, bcode_decode, bcode_encode
from .errors import InvalidArguments, MahonianError
from .oracle import (
    STAT_IDS,
    DEFAULT_MAX_ALPHABET,
    distribution,
    verify_theorem1,
    verify_theorem2,
)
from .qseries import gf_bipartitional, gf_sorting
from .relations import (
    OrderedBipartition,
    Relation,
    effective_core,
    is_essentially_bipartitional,
    natural_order,
    relation_from_json_dict,
    relation_from_text,
    satisfies_sorting_conditions,
    to_ordered_bipartition,
)
from .statistics import (
    DEFAULT_TIE_RULE,
    TIE_COPY_LABEL_MAX,
    TIE_LEFTMOST,
    TIE_RIGHTMOST,
    graphical_descent_count,
    graphical_descent_set,
    graphical_inversions,
    graphical_major_index,
    graphical_sorting_index,
    graphical_sorting_trace,
    maximal_chain_word,
)
from .words import (
    DEFAULT_MAX_CLASS,
    MultiplicityVector,
    infer_alpha,
    make_word,
    parse_letters,
    render_letters,
)

TIE_RULE_FLAGS = {
    "copy-label": TIE_COPY_LABEL_MAX,
    "leftmost": TIE_LEFTMOST,
    "rightmost": TIE_RIGHTMOST,
}


def _default_max_class() -> int:
    raw = os.environ.get("MAHONIAN_MAX_CLASS")
    if raw is None:
        return DEFAULT_MAX_CLASS
    try:
        return int(raw)
    except ValueError:
        raise InvalidArguments(
            f"MAHONIAN_MAX_CLASS must be an integer, got {raw!r}"
        )


def _read_source(spec: str) -> str:
    """Inline text, or the contents of @path."""
    if spec.startswith("@"):
        try:
            with open(spec[1:], "r", encoding="utf-8") as handle:
                return handle.read()
        except OSError as exc:
            raise InvalidArguments(f"cannot read {spec[1:]}: {exc}")
    return spec


def _parse_json(text: str, what: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArguments(f"malformed {what} JSON: {exc}")
    if not isinstance(data, dict):
        raise InvalidArguments(f"{what} JSON must be an object")
    return data


def _parse_edges(text: str, n: int | None) -> Relation:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split()
        if len(parts) != 2:
            raise InvalidArguments(f"cannot parse edge {chunk!r} (expected 'x y')")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidArguments(f"cannot parse edge {chunk!r} (expected integers)")
    if n is None:
        if not pairs:
            raise InvalidArguments("empty --edges needs an explicit --n")
        n = max(max(x, y) for x, y in pairs)
    return Relation(n, frozenset(pairs))


def _resolve_relation(args, n_hint: int | None = None) -> Relation:
    """Build the relation from --relation/--edges, preferring --n, then the
    caller's hint (alpha or word alphabet), then letters mentioned."""
    n = args.n if args.n is not None else n_hint
    if args.relation is not None and args.edges is not None:
        raise InvalidArguments("pass either --relation or --edges, not both")
    if args.relation is not None:
        if args.relation == "natural":
            if n is None:
                raise InvalidArguments(
                    "--relation natural needs --n (or --alpha/--word to infer from)"
                )
            return natural_order(n)
        if args.relation.startswith("@"):
            text = _read_source(args.relation).strip()
            if text.startswith("{"):
                return relation_from_json_dict(_parse_json(text, "relation"))
            return relation_from_text(text, n)
        raise InvalidArguments(
            f"--relation must be 'natural' or '@file', got {args.relation!r}"
        )
    if args.edges is not None:
        return _parse_edges(args.edges, n)
    raise InvalidArguments("a relation is required: --relation or --edges")


def _resolve_alpha(args) -> MultiplicityVector:
    if args.alpha is None:
        raise InvalidArguments("--alpha is required")
    return MultiplicityVector.parse(args.alpha)


def _resolve_tie_rule(args) -> str:
    if getattr(args, "tie_rule", None) is None:
        return DEFAULT_TIE_RULE
    return TIE_RULE_FLAGS[args.tie_rule]


def _emit(args, text_value: str, json_value) -> None:
    if args.format == "json":
        print(json.dumps(json_value))
    else:
        print(text_value)


def _add_common(parser, *, relation=False, alpha=False, word=False, fmt=True):
    if relation:
        parser.add_argument(
            "--relation", metavar="SPEC", help="'natural' or @file (JSON or 'x y' lines)"
        )
        parser.add_argument(
            "--edges", metavar="PAIRS", help="inline edges, e.g. \"5 3;5 2\""
        )
        parser.add_argument("--n", type=int, help="alphabet size when not inferable")
    if alpha:
        parser.add_argument(
            "--alpha", metavar="COUNTS", help="multiplicities, e.g. 2,1,1,3,1"
        )
    if word:
        parser.add_argument(
            "--word",
            metavar="LETTERS",
            help="contiguous digits (alphabet <= 9) or space-separated integers",
        )
    if fmt:
        parser.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )


def _add_tie_rule(parser):
    parser.add_argument(
        "--tie-rule",
        choices=tuple(TIE_RULE_FLAGS),
        help="tie rule for the sorting index (default copy-label)",
    )


# ---------------------------------------------------------------- handlers


def _cmd_stats(args) -> int:
    alpha = MultiplicityVector.parse(args.alpha) if args.alpha else None
    if args.word is None:
        raise InvalidArguments("--word is required")
    n_hint = args.n if args.n is not None else (alpha.n if alpha else None)
    letters = parse_letters(args.word, n_hint)
    if not letters:
        raise InvalidArguments("empty word")
    relation = _resolve_relation(
        args, n_hint if n_hint is not None else max(letters)
    )
    if alpha is not None:
        make_word(letters, alpha)  # validates membership in the class
    tie_rule = _resolve_tie_rule(args)

    values = {
        "inv": graphical_inversions(relation, letters),
        "des": graphical_descent_count(relation, letters),
        "maj": graphical_major_index(relation, letters),
        "sor": graphical_sorting_index(relation, letters, tie_rule),
    }
    if args.stat is not None:
        _emit(args, str(values[args.stat]), {args.stat: values[args.stat]})
        return 0

    lines = [f"{name} {value}" for name, value in values.items()]
    payload = dict(values)
    payload["descent_set"] = sorted(graphical_descent_set(relation, letters))
    if args.trace:
        trace = graphical_sorting_trace(relation, letters, tie_rule)
        lines.append(f"trace (tie rule {tie_rule}):")
        lines.append("j i letter contribution")
        for step in trace.steps:
            lines.append(
                f"{step.mover_position} {step.target_position}"
                f" {step.letter} {step.contribution}"
            )
        lines.append(f"final {render_letters(trace.final_letters, relation.n)}")
        payload["trace"] = {
            "tie_rule": tie_rule,
            "steps": [
                {
                    "j": step.mover_position,
                    "i": step.target_position,
                    "letter": step.letter,
                    "contribution": step.contribution,
                }
                for step in trace.steps
            ],
            "final": render_letters(trace.final_letters, relation.n),
        }
    _emit(args, "\n".join(lines), payload)
    return 0


def _cmd_dist(args) -> int:
    alpha = _resolve_alpha(args)
    relation = None
    if args.stat.endswith("-graphical"):
        relation = _resolve_relation(args, alpha.n)
    elif args.relation is not None or args.edges is not None:
        relation = _resolve_relation(args, alpha.n)
    poly = distribution(
        args.stat,
        alpha,
        relation,
        tie_rule=_resolve_tie_rule(args),
        max_class=args.max_class,
        jobs=args.jobs,
    )
    _emit(args, poly.render(), poly.to_json_dict())
    return 0


def _cmd_gf(args) -> int:
    alpha = _resolve_alpha(args)
    if args.bipartition is not None:
        if args.relation is not None or args.edges is not None:
            raise InvalidArguments("pass either --bipartition or a relation, not both")
        data = _parse_json(_read_source(args.bipartition), "bipartition")
        bp = OrderedBipartition.from_json_dict(data)
    else:
        relation = _resolve_relation(args, alpha.n)
        if args.stat == "sor":
            # loops on letters occurring <= once never affect statistics,
            # so recovery works on the stripped core
            relation = effective_core(relation, alpha)
        bp = to_ordered_bipartition(relation)
        if bp is None:
            raise InvalidArguments(
                "relation is not bipartitional, so it has no generating function here"
            )
    if args.stat == "sor":
        poly = gf_sorting(alpha, bp)
    else:
        poly = gf_bipartitional(alpha, bp)
    _emit(args, poly.render(), poly.to_json_dict())
    return 0


def _cmd_check(args) -> int:
    if args.what == "bipartitional":
        relation = _resolve_relation(args)
        bp = to_ordered_bipartition(relation)
        if bp is None:
            _emit(args, "no: not bipartitional", {"ok": False})
            return 1
        _emit(args, f"yes: {bp.render()}", {"ok": True, "bipartition": bp.to_json_dict()})
        return 0
    alpha = _resolve_alpha(args)
    relation = _resolve_relation(args, alpha.n)
    if args.what == "essential":
        witness = is_essentially_bipartitional(relation, alpha)
        if witness is None:
            _emit(
                args,
                "no: not essentially bipartitional for this class",
                {"ok": False},
            )
            return 1
        removed = ",".join(str(x) for x in sorted(witness.removed_loops)) or "-"
        added = ",".join(str(x) for x in sorted(witness.added_loops)) or "-"
        _emit(
            args,
            f"yes: remove loops [{removed}] add loops [{added}]"
            f" -> {witness.bipartition.render()}",
            {
                "ok": True,
                "removed_loops": sorted(witness.removed_loops),
                "added_loops": sorted(witness.added_loops),
                "bipartition": witness.bipartition.to_json_dict(),
            },
        )
        return 0
    # sor-conditions
    ok, reasons = satisfies_sorting_conditions(relation, alpha)
    if ok:
        _emit(args, "yes: sorting conditions hold", {"ok": True, "reasons": []})
        return 0
    _emit(args, "no: " + "; ".join(reasons), {"ok": False, "reasons": reasons})
    return 1


def _cmd_bcode(args) -> int:
    if args.action == "encode":
        if args.word is None:
            raise InvalidArguments("--word is required for encode")
        alpha = MultiplicityVector.parse(args.alpha) if args.alpha else None
        n_hint = args.n if args.n is not None else (alpha.n if alpha else None)
        letters = parse_letters(args.word, n_hint)
        relation = _resolve_relation(
            args, n_hint if n_hint is not None else max(letters, default=None)
        )
        word = (
            make_word(letters, alpha)
            if alpha is not None
            else make_word(letters, infer_alpha(letters, relation.n))
        )
        code = bcode_encode(relation, word)
        _emit(args, json.dumps(code.to_json_dict()), code.to_json_dict())
        return 0
    # decode
    alpha = _resolve_alpha(args)
    relation = _resolve_relation(args, alpha.n)
    if args.code is None:
        raise InvalidArguments("--code is required for decode")
    code = BCode.from_json_dict(_parse_json(_read_source(args.code), "code"))
    word = bcode_decode(relation, alpha, code)
    rendered = word.render()
    _emit(args, rendered, {"word": rendered, "letters": list(word.letters)})
    return 0


def _cmd_verify(args) -> int:
    alpha = _resolve_alpha(args)
    if args.theorem == "thm1":
        report = verify_theorem1(
            args.n,
            alpha,
            max_alphabet=args.max_alphabet,
            max_class=args.max_class,
            jobs=args.jobs,
        )
    else:
        report = verify_theorem2(
            args.n,
            alpha,
            tie_rule=_resolve_tie_rule(args),
            max_alphabet=args.max_alphabet,
            max_class=args.max_class,
            jobs=args.jobs,
        )
    _emit(args, report.render(), report.to_json_dict())
    return 0 if report.ok else 1


def _cmd_chainword(args) -> int:
    alpha = _resolve_alpha(args)
    relation = _resolve_relation(args, alpha.n)
    word = maximal_chain_word(relation, alpha, args.max_total)
    rendered = word.render()
    _emit(args, rendered, {"word": rendered, "letters": list(word.letters)})
    return 0


# ----------------------------------------------------------------- parser


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="mahonian",
        description="Statistics on words driven by a directed relation: "
        "inversions, descents, major index, sorting index, their "
        "distributions, generating functions, codes and exhaustive checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    registry: dict[str, argparse.ArgumentParser] = {}

    p = sub.add_parser("stats", help="statistics of one word under a relation")
    _add_common(p, relation=True, alpha=True, word=True)
    p.add_argument("--stat", choices=("inv", "des", "maj", "sor"), help="print one value only")
    _add_tie_rule(p)
    p.add_argument("--trace", action="store_true", help="show the sorting steps")
    p.set_defaults(handler=_cmd_stats)
    registry["stats"] = p

    p = sub.add_parser("dist", help="distribution of a statistic over a class")
    _add_common(p, relation=True, alpha=True)
    p.add_argument("--stat", choices=STAT_IDS, required=True)
    _add_tie_rule(p)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument(
        "--max-class",
        type=int,
        default=None,
        help="enumeration cap (default MAHONIAN_MAX_CLASS or 10^7)",
    )
    p.set_defaults(handler=_cmd_dist)
    registry["dist"] = p

    p = sub.add_parser("gf", help="closed-form generating function of a statistic")
    _add_common(p, relation=True, alpha=True)
    p.add_argument("--stat", choices=("inv", "maj", "sor"), required=True)
    p.add_argument(
        "--bipartition",
        metavar="JSON",
        help='inline JSON or @file: {"blocks":[[5,4],[3],[2,1]],"flags":[0,0,0]}',
    )
    p.set_defaults(handler=_cmd_gf)
    registry["gf"] = p

    p = sub.add_parser("check", help="structural predicates of a relation")
    p.add_argument(
        "what", choices=("bipartitional", "essential", "sor-conditions")
    )
    _add_common(p, relation=True, alpha=True)
    p.set_defaults(handler=_cmd_check)
    registry["check"] = p

    p = sub.add_parser("bcode", help="encode a word as a code, or decode one")
    p.add_argument("action", choices=("encode", "decode"))
    _add_common(p, relation=True, alpha=True, word=True)
    p.add_argument(
        "--code",
        metavar="JSON",
        help='inline JSON or @file: {"partitions":[[4,2,2,1],[1],[0,0,0]],"markers":[3,0,2]}',
    )
    p.set_defaults(handler=_cmd_bcode)
    registry["bcode"] = p

    p = sub.add_parser("verify", help="exhaustive equidistribution sweeps")
    p.add_argument("theorem", choices=("thm1", "thm2"))
    p.add_argument("--n", type=int, required=True, help="alphabet size to sweep")
    _add_common(p, alpha=True)
    _add_tie_rule(p)
    p.add_argument(
        "--max-alphabet",
        type=int,
        default=DEFAULT_MAX_ALPHABET,
        help="largest alphabet the sweep will accept",
    )
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--max-class", type=int, default=None)
    p.set_defaults(handler=_cmd_verify)
    registry["verify"] = p

    p = sub.add_parser("chainword", help="word built from longest relation chains")
    _add_common(p, relation=True, alpha=True)
    p.add_argument(
        "--max-total", type=int, default=12, help="cap on the class mass"
    )
    p.set_defaults(handler=_cmd_chainword)
    registry["chainword"] = p

    return parser, registry


def run_cli(argv=None) -> int:
    parser, registry = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if hasattr(args, "max_class") and args.max_class is None:
            args.max_class = _default_max_class()
        return args.handler(args)
    except MahonianError as exc:
        print(f"error: {exc}", file=sys.stderr)
        synopsis = registry.get(args.command)
        if synopsis is not None:
            print(synopsis.format_usage(), end="", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
