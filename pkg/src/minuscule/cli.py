"""Command-line front end: compute, convert, render, verify.

One object per invocation, read from --in or stdin, written to --out or
stdout.  Tableaux are accepted either as JSON ({"kind": ..., "n": ...,
"shapes": [...]}) or in compact text (semicolon-separated shapes; pass
--kind and, for oscillating tableaux, --n).  Exit codes: 0 success, 1
verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import verify as verify_mod
from .diagrams import (
    DiagramError,
    matching_from_json,
    matching_to_json,
    matching_to_text,
    permutation_from_json,
    permutation_to_json,
    permutation_to_text,
    render_chord_svg,
)
from .growth import (
    GrowthError,
    growth_diagram_alternating,
    growth_diagram_oscillating,
    growth_to_json,
    perm_growth,
    render_growth_text,
    sundaram,
    syt_to_text,
)
from .local_rules import (
    cactus_apply,
    decorate_evacuation_diagram,
    evacuate,
    evacuation_diagram,
    promote,
    promote_empty_shape_variant,
    promotion_diagram,
    render_evacuation_diagram,
    render_promotion_diagram,
)
from .shapes import ShapeError
from .tableaux import (
    AlternatingTableau,
    OscillatingTableau,
    TableauError,
    alternating_from_text,
    embed_osc_as_alt,
    min_embedding_rank,
    oscillating_from_text,
    pad_zeros,
    restrict_alt_to_osc,
    strip_zeros,
    tableau_from_json,
    tableau_to_json,
    tableau_to_text,
)

_INPUT_ERRORS = (ShapeError, TableauError, GrowthError, DiagramError, ValueError)


class CliError(Exception):
    pass


def _read_input(args) -> str:
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return sys.stdin.read().strip()


def _write_output(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_tableau_text(args, raw: str):
    kind = getattr(args, "kind", None)
    if kind == "oscillating":
        if getattr(args, "n", None) is None:
            raise CliError("compact oscillating input needs --n")
        return oscillating_from_text(raw, args.n)
    if kind == "alternating":
        return alternating_from_text(raw)
    raise CliError("compact input needs --kind oscillating|alternating")


def _read_batch(args) -> list | None:
    """A JSON array input selects batch mode; returns None otherwise."""
    raw = _read_input(args)
    args._raw_input = raw
    if raw.lstrip().startswith("["):
        return [tableau_from_json(json.dumps(item)) for item in json.loads(raw)]
    return None


def _emit_batch(args, tableaux) -> None:
    if args.format == "json":
        _write_output(args, "[" + ",".join(tableau_to_json(t) for t in tableaux) + "]")
    else:
        _write_output(args, "\n".join(tableau_to_text(t) for t in tableaux))


def _read_tableau(args) -> OscillatingTableau | AlternatingTableau:
    raw = getattr(args, "_raw_input", None)
    if raw is None:
        raw = _read_input(args)
    if not raw:
        raise CliError("no input tableau")
    if raw.lstrip().startswith("{"):
        t = tableau_from_json(raw)
    else:
        t = _parse_tableau_text(args, raw)
    want = getattr(args, "kind", None)
    if want == "oscillating" and not isinstance(t, OscillatingTableau):
        raise CliError("expected an oscillating tableau")
    if want == "alternating" and not isinstance(t, AlternatingTableau):
        raise CliError("expected an alternating tableau")
    return t


def _emit_tableau(args, t) -> None:
    if args.format == "json":
        _write_output(args, tableau_to_json(t))
    else:
        _write_output(args, tableau_to_text(t))


def _add_io_options(sub, kinds=True) -> None:
    sub.add_argument("--in", dest="infile", help="input file (default: stdin)")
    sub.add_argument("--out", help="output file (default: stdout)")
    sub.add_argument(
        "--format", choices=("json", "text", "svg"), default="text", help="output format"
    )
    if kinds:
        sub.add_argument("--kind", choices=("oscillating", "alternating"))
        sub.add_argument("--n", type=int, help="rank for compact oscillating input")


def _cmd_promote(args) -> int:
    batch = _read_batch(args)
    if batch is not None:
        op = promote_empty_shape_variant if args.variant else promote
        _emit_batch(args, [op(t) for t in batch])
        return 0
    t = _read_tableau(args)
    if args.variant:
        if not isinstance(t, AlternatingTableau):
            raise CliError("--variant applies to alternating tableaux")
        result = promote_empty_shape_variant(t)
    else:
        result = promote(t)
    if args.diagram:
        if not isinstance(t, AlternatingTableau):
            raise CliError("--diagram applies to alternating tableaux")
        _write_output(args, render_promotion_diagram(promotion_diagram(t)))
    else:
        _emit_tableau(args, result)
    return 0


def _cmd_evacuate(args) -> int:
    batch = _read_batch(args)
    if batch is not None:
        _emit_batch(args, [evacuate(t) for t in batch])
        return 0
    t = _read_tableau(args)
    if args.diagram:
        d = evacuation_diagram(t)
        if args.decorate:
            d = decorate_evacuation_diagram(d)
            _write_output(
                args,
                render_evacuation_diagram(d)
                + "marks: "
                + " ".join(f"({r},{c}){m}" for r, c, m in d.decorations),
            )
        else:
            _write_output(args, render_evacuation_diagram(d))
    else:
        _emit_tableau(args, evacuate(t))
    return 0


def _cmd_cactus(args) -> int:
    batch = _read_batch(args)
    if batch is not None:
        _emit_batch(args, [cactus_apply(t, args.p, args.q) for t in batch])
        return 0
    t = _read_tableau(args)
    if not (1 <= args.p <= args.q <= t.r):
        raise CliError(f"need 1 <= p <= q <= {t.r}")
    _emit_tableau(args, cactus_apply(t, args.p, args.q))
    return 0


def _cmd_sundaram(args) -> int:
    t = _read_tableau(args)
    if not isinstance(t, OscillatingTableau):
        raise CliError("sundaram expects an oscillating tableau")
    m, tab = sundaram(t)
    if args.format == "json":
        payload = {
            "matching": json.loads(matching_to_json(m)),
            "tableau": [list(row) for row in tab.rows],
        }
        _write_output(args, json.dumps(payload))
    else:
        _write_output(args, f"matching: {matching_to_text(m)}\ntableau: {syt_to_text(tab)}")
    return 0


def _cmd_perm(args) -> int:
    t = _read_tableau(args)
    if not isinstance(t, AlternatingTableau):
        raise CliError("perm expects an alternating tableau")
    pi, tab_p, tab_q = perm_growth(t)
    if args.format == "json":
        payload = {
            "permutation": json.loads(permutation_to_json(pi)),
            "P": [list(row) for row in tab_p.rows],
            "Q": [list(row) for row in tab_q.rows],
        }
        _write_output(args, json.dumps(payload))
    else:
        _write_output(
            args,
            f"permutation: {permutation_to_text(pi)}\n"
            f"P: {syt_to_text(tab_p)}\nQ: {syt_to_text(tab_q)}",
        )
    return 0


def _cmd_embed(args) -> int:
    t = _read_tableau(args)
    if args.restrict:
        if not isinstance(t, AlternatingTableau):
            raise CliError("--restrict expects an alternating tableau")
        _emit_tableau(args, restrict_alt_to_osc(t))
        return 0
    if not isinstance(t, OscillatingTableau):
        raise CliError("embed expects an oscillating tableau")
    rank = args.rank if args.rank is not None else min_embedding_rank(t)
    result = embed_osc_as_alt(t, rank)
    if args.format != "json":
        sys.stderr.write(f"minimal embedding rank: {min_embedding_rank(t)}\n")
    _emit_tableau(args, result)
    return 0


def _cmd_strip(args) -> int:
    t = _read_tableau(args)
    if not isinstance(t, AlternatingTableau):
        raise CliError("strip expects an alternating tableau")
    if (args.m is None) == (args.pad is None):
        raise CliError("pass exactly one of --m (strip) or --pad (pad)")
    result = strip_zeros(t, args.m) if args.m is not None else pad_zeros(t, args.pad)
    _emit_tableau(args, result)
    return 0


def _cmd_render(args) -> int:
    raw = _read_input(args)
    if not raw.lstrip().startswith("{"):
        raise CliError("render expects a JSON object")
    payload = json.loads(raw)
    if "pairs" in payload:
        obj = matching_from_json(raw)
    elif "map" in payload:
        obj = permutation_from_json(raw)
    elif payload.get("kind") in ("oscillating", "alternating"):
        t = tableau_from_json(raw)
        g = (
            growth_diagram_oscillating(t)
            if isinstance(t, OscillatingTableau)
            else growth_diagram_alternating(t)
        )
        if args.format == "json":
            _write_output(args, growth_to_json(g))
        else:
            _write_output(args, render_growth_text(g))
        return 0
    else:
        raise CliError("render expects a matching, permutation or tableau")
    if args.format == "svg":
        _write_output(args, render_chord_svg(obj, size=args.size))
    elif args.format == "json":
        _write_output(
            args,
            matching_to_json(obj) if hasattr(obj, "pairs") else permutation_to_json(obj),
        )
    else:
        _write_output(
            args,
            matching_to_text(obj) if hasattr(obj, "pairs") else permutation_to_text(obj),
        )
    return 0


def _cmd_enumerate(args) -> int:
    spec = verify_mod.EnumerationSpec(
        kind=args.kind, r=args.r, n=args.n, shape="empty" if args.empty else "any",
        bound=args.bound,
    )
    if args.count:
        _write_output(args, str(sum(1 for _ in verify_mod.enumerate_spec(spec))))
        return 0
    lines = []
    for obj in verify_mod.enumerate_spec(spec):
        if isinstance(obj, (OscillatingTableau, AlternatingTableau)):
            lines.append(tableau_to_json(obj) if args.format == "json" else tableau_to_text(obj))
        elif hasattr(obj, "pairs"):
            lines.append(matching_to_json(obj) if args.format == "json" else matching_to_text(obj))
        elif hasattr(obj, "arcs"):
            lines.append(
                permutation_to_json(obj) if args.format == "json" else permutation_to_text(obj)
            )
        else:
            lines.append(json.dumps({"r": obj.r, "blocks": [list(b) for b in obj.blocks]}))
    _write_output(args, "\n".join(lines) if lines else "")
    return 0


def _run_named_suite(item) -> "verify_mod.TheoremReport":
    name, r_max, n_max = item
    return verify_mod.run_suite(name, r_max, n_max)


def _cmd_verify(args) -> int:
    names = sorted(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in verify_mod.SUITES:
            raise CliError(f"unknown suite {name!r}; choose from {sorted(verify_mod.SUITES)}")
    tasks = [(name, args.r_max, args.n_max) for name in names]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_named_suite, tasks))
    else:
        reports = [_run_named_suite(t) for t in tasks]
    if args.format == "json":
        _write_output(args, json.dumps([r.to_json_dict() for r in reports]))
    else:
        _write_output(args, "\n".join(r.summary() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_csp(args) -> int:
    rep = verify_mod.csp_qcatalan_check(args.r_max)
    if args.format == "json":
        _write_output(args, json.dumps(rep.to_json_dict()))
    else:
        _write_output(args, rep.summary())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minuscule",
        description="Promotion, evacuation and chord-diagram bijections for "
        "oscillating and alternating tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("promote", help="promotion of a tableau")
    _add_io_options(p)
    p.add_argument("--variant", action="store_true", help="two-pass empty-shape variant")
    p.add_argument("--diagram", action="store_true", help="print the promotion diagram")
    p.set_defaults(func=_cmd_promote)

    p = sub.add_parser("evacuate", help="evacuation of a tableau")
    _add_io_options(p)
    p.add_argument("--diagram", action="store_true", help="print the evacuation diagram")
    p.add_argument("--decorate", action="store_true", help="mark the diagram cells")
    p.set_defaults(func=_cmd_evacuate)

    p = sub.add_parser("cactus", help="apply a cactus-group generator")
    _add_io_options(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_cactus)

    p = sub.add_parser("sundaram", help="matching and tableau of an oscillating tableau")
    _add_io_options(p)
    p.set_defaults(func=_cmd_sundaram, kind="oscillating")

    p = sub.add_parser("perm", help="partial permutation and tableau pair")
    _add_io_options(p)
    p.set_defaults(func=_cmd_perm, kind="alternating")

    p = sub.add_parser("embed", help="embed an oscillating tableau as alternating")
    _add_io_options(p)
    p.add_argument("--rank", type=int, help="target rank (default: minimal)")
    p.add_argument("--restrict", action="store_true", help="inverse direction")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("strip", help="strip or pad zeros of an alternating tableau")
    _add_io_options(p)
    p.add_argument("--m", type=int, help="strip to this rank")
    p.add_argument("--pad", type=int, help="pad to this rank")
    p.set_defaults(func=_cmd_strip, kind="alternating")

    p = sub.add_parser("render", help="render a chord diagram or growth diagram")
    _add_io_options(p, kinds=False)
    p.add_argument("--size", type=int, default=360, help="SVG canvas size")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("enumerate", help="stream all objects of a kind")
    _add_io_options(p, kinds=False)
    p.add_argument(
        "--kind",
        required=True,
        choices=("oscillating", "alternating", "matching", "permutation", "ncpartition"),
    )
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--empty", action="store_true", help="empty final shape only")
    p.add_argument("--bound", type=int, help="crossing or LIS bound")
    p.add_argument("--count", action="store_true", help="print only the count")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run theorem suites")
    _add_io_options(p, kinds=False)
    p.add_argument("--suite", default="all", help="suite name or 'all'")
    p.add_argument("--r-max", dest="r_max", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("csp", help="cyclic sieving check for noncrossing matchings")
    _add_io_options(p, kinds=False)
    p.add_argument("--r-max", dest="r_max", type=int, default=6)
    p.set_defaults(func=_cmd_csp)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except _INPUT_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
