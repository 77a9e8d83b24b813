"""Command-line front end.

Subcommands mirror the library: ``lob``, ``constants``, ``poly family``,
``poly graph``, ``poly medial``, ``poly dual``, ``link two-bridge``,
``link twists``, ``link augment``.  Reports render as a fixed-width table or
a JSON document (``--format json``); numeric output is fixed at six decimals
(round-half-even).  Exit codes: 0 success, 2 invalid input, 3 when a bound
requested with ``--bound`` is not applicable under the given hypotheses.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import augmented, links, maps, polyhedra
from .lobachevsky import (
    V_OCT,
    V_TET,
    antiprism_volume,
    lobachevsky,
    twisted_antiprism_volume,
)
from .twists import (
    TwistDecomposition,
    continued_fraction,
    load_diagram,
    save_diagram,
    twist_stats,
    two_bridge_diagram,
)

_FAMILIES = {
    "tetrahedron": (lambda n: maps.tetrahedron(), False),
    "cube": (lambda n: maps.cube(), False),
    "octahedron": (lambda n: maps.octahedron(), False),
    "pyramid": (maps.pyramid, True),
    "bipyramid": (maps.bipyramid, True),
    "prism": (maps.prism, True),
    "antiprism": (maps.antiprism, True),
    "two-apex-pyramid": (maps.two_apex_pyramid, True),
    "twisted-antiprism": (maps.twisted_antiprism, True),
}


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _census_block(census) -> dict:
    return {
        "V": census.V,
        "E": census.E,
        "F": census.F,
        "degree_counts": {str(k): v for k, v in sorted(census.degree_counts.items())},
        "face_counts": {str(k): v for k, v in sorted(census.face_counts.items())},
    }


def _bound_rows(bounds) -> list[dict]:
    return [
        {
            "name": b.name,
            "kind": b.kind,
            "value": _fmt(b.value) if b.value is not None else None,
            "applicable": b.applicable,
            "best": b.best,
            "hypotheses": list(b.hypotheses),
            "citation": b.citation,
        }
        for b in bounds
    ]


def _render(doc: dict, fmt: str, out=None) -> None:
    out = out if out is not None else sys.stdout
    if fmt == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    for key, value in doc.items():
        if key == "bounds":
            out.write("bounds:\n")
            header = f"  {'name':<26} {'kind':<6} {'value':>12} {'appl':<5} {'best':<5} citation\n"
            out.write(header)
            for row in value:
                val = row["value"] if row["value"] is not None else "--"
                out.write(
                    f"  {row['name']:<26} {row['kind']:<6} {val:>12} "
                    f"{'yes' if row['applicable'] else 'no':<5} "
                    f"{'*' if row['best'] else '':<5} {row['citation']}\n"
                )
        elif key == "warnings":
            for w in value:
                out.write(f"warning: {w}\n")
        elif isinstance(value, dict):
            flat = " ".join(f"{k}={v}" for k, v in value.items())
            out.write(f"{key}: {flat}\n")
        else:
            out.write(f"{key}: {value}\n")


def _select_bound(doc: dict, name: str) -> int:
    rows = [r for r in doc.get("bounds", []) if r["name"] == name]
    if not rows:
        print(f"error: unknown bound name {name!r}", file=sys.stderr)
        return 2
    row = rows[0]
    if not row["applicable"]:
        print(f"bound {name} not applicable under the given hypotheses", file=sys.stderr)
        return 3
    print(row["value"])
    return 0


def _cmd_lob(args) -> int:
    print(_fmt(lobachevsky(args.theta)))
    return 0


def _cmd_constants(args) -> int:
    doc = {"v_tet": _fmt(V_TET), "v_oct": _fmt(V_OCT)}
    _render(doc, args.format)
    return 0


def _poly_doc(m, description: str, family=None, n=None) -> dict:
    census = maps.validate_map(m)
    doc: dict = {"input": description, "census": _census_block(census)}
    bounds = polyhedra.rectification_bounds(m)
    if family == "prism":
        extra = polyhedra.PolyhedronBound(
            name="prism-atkinson",
            kind="upper",
            value=polyhedra.prism_atkinson_bound(n),
            applicable=True,
            hypotheses=("prism",),
            citation="Atkinson 2011 prism bound",
        )
        bounds = bounds + [extra]
    if family == "pyramid":
        extra = polyhedra.PolyhedronBound(
            name="antiprism-volume",
            kind="upper",
            value=antiprism_volume(n),
            applicable=True,
            hypotheses=("exact rectification volume",),
            citation="Thurston antiprism volume (exact sup)",
        )
        bounds = bounds + [extra]
    if family == "two-apex-pyramid":
        extra = polyhedra.PolyhedronBound(
            name="twisted-antiprism-volume",
            kind="upper",
            value=twisted_antiprism_volume(n),
            applicable=True,
            hypotheses=("exact rectification volume",),
            citation="twisted antiprism volume (exact sup)",
        )
        bounds = bounds + [extra]
    doc["bounds"] = _bound_rows(bounds)
    doc["warnings"] = []
    return doc


def _cmd_poly_family(args) -> int:
    if args.name not in _FAMILIES:
        print(f"error: unknown family {args.name!r}; choices: {sorted(_FAMILIES)}", file=sys.stderr)
        return 2
    builder, needs_n = _FAMILIES[args.name]
    if needs_n and args.n is None:
        print(f"error: family {args.name} needs --n", file=sys.stderr)
        return 2
    m = builder(args.n)
    desc = args.name if not needs_n else f"{args.name}({args.n})"
    if args.out:
        maps.save_map(m, args.out)
    if not args.bounds:
        census = maps.validate_map(m)
        _render({"input": desc, "census": _census_block(census)}, args.format)
        return 0
    doc = _poly_doc(m, desc, family=args.name, n=args.n)
    if args.bound:
        return _select_bound(doc, args.bound)
    _render(doc, args.format)
    return 0


def _cmd_poly_graph(args) -> int:
    m = maps.load_map(args.file)
    doc = _poly_doc(m, f"map file {args.file}")
    if args.bound:
        return _select_bound(doc, args.bound)
    _render(doc, args.format)
    return 0


def _cmd_poly_medial(args) -> int:
    m = maps.load_map(args.file)
    med = maps.medial(m)
    if args.out:
        maps.save_map(med, args.out)
    census = maps.validate_map(med)
    _render({"input": f"medial of {args.file}", "census": _census_block(census)}, args.format)
    return 0


def _cmd_poly_dual(args) -> int:
    m = maps.load_map(args.file)
    d = maps.dual(m)
    if args.out:
        maps.save_map(d, args.out)
    census = maps.validate_map(d)
    _render({"input": f"dual of {args.file}", "census": _census_block(census)}, args.format)
    return 0


def _parse_fraction(text: str) -> tuple[int, int]:
    try:
        p_str, q_str = text.split("/")
        return int(p_str), int(q_str)
    except ValueError as exc:
        raise ValueError(f"--fraction expects p/q, got {text!r}") from exc


def _parse_jones(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--jones expects two comma-separated integers, got {text!r}")
    return abs(int(parts[0])), abs(int(parts[1]))


def _link_doc(decomposition, flags, white_census=None, jones=None, description="", warnings=()) -> dict:
    s = twist_stats(decomposition)
    doc: dict = {
        "input": description,
        "twists": {
            "lengths": list(decomposition.lengths),
            "t": s.t,
            "c": s.c,
        },
        "flags": {
            "reduced": flags.reduced,
            "alternating": flags.alternating,
            "two_bridge": flags.two_bridge,
            "not_figure_eight": flags.not_figure_eight,
            "not_borromean": flags.not_borromean,
        },
    }
    if white_census is not None:
        doc["white_census"] = {str(k): v for k, v in sorted(white_census.items())}
    rows = links.link_report(decomposition, flags, white_census=white_census, jones_coefficients=jones)
    doc["bounds"] = _bound_rows(rows)
    doc["warnings"] = sorted(warnings)
    return doc


def _flags_from_args(args) -> links.HypothesisFlags:
    return links.HypothesisFlags(
        reduced=args.reduced,
        alternating=args.alternating,
        two_bridge=args.two_bridge,
        not_figure_eight=args.not_figure_eight,
        not_borromean=args.not_borromean,
    )


def _cmd_link_two_bridge(args) -> int:
    p, q = _parse_fraction(args.fraction)
    digits = continued_fraction(p, q)
    diagram = two_bridge_diagram(p, q)
    poly = augmented.augment(diagram)
    warnings = []
    if q % p in (1 % p, (p - 1) % p):
        warnings.append(f"b({p}/{q}) is a torus link; the hyperbolicity hypotheses fail")
    # Conway normal forms are reduced alternating two-bridge diagrams; the
    # figure-eight knot is exactly b(5/2) (and its mirror b(5/3))
    flags = links.HypothesisFlags(
        reduced=True,
        alternating=True,
        two_bridge=True,
        not_figure_eight=p != 5,
        not_borromean=True,
    )
    doc = _link_doc(
        diagram.decomposition(),
        flags,
        white_census=poly.white_census,
        jones=_parse_jones(args.jones),
        description=f"two-bridge b({p}/{q}), continued fraction {digits}",
        warnings=warnings,
    )
    if args.bound:
        return _select_bound(doc, args.bound)
    _render(doc, args.format)
    return 0


def _cmd_link_twists(args) -> int:
    lengths = tuple(int(x) for x in args.lengths.split(","))
    decomposition = TwistDecomposition(lengths)
    doc = _link_doc(
        decomposition,
        _flags_from_args(args),
        jones=_parse_jones(args.jones),
        description=f"twist decomposition {list(lengths)}",
    )
    if args.bound:
        return _select_bound(doc, args.bound)
    _render(doc, args.format)
    return 0


def _cmd_link_augment(args) -> int:
    if args.fraction:
        p, q = _parse_fraction(args.fraction)
        diagram = two_bridge_diagram(p, q)
        desc = f"augmentation of b({p}/{q})"
    else:
        diagram = load_diagram(args.file)
        desc = f"augmentation of {args.file}"
    poly = augmented.augment(diagram)
    if args.out:
        augmented.save_augmented(poly, args.out)
    if args.out_diagram:
        save_diagram(diagram, args.out_diagram)
    census = maps.validate_map(poly.map)
    doc = {
        "input": desc,
        "census": _census_block(census),
        "red_vertices": sorted(poly.red_vertices),
        "dark_faces": sorted(poly.dark_faces),
        "white_census": {str(k): v for k, v in sorted(poly.white_census.items())},
        "white_face_bound": _fmt(links.white_face_bound(poly.t, poly.white_census)),
    }
    _render(doc, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="volbounds",
        description="Volume bounds for generalized hyperbolic polyhedra and links",
    )
    parser.add_argument("--format", choices=("table", "json"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p_lob = sub.add_parser("lob", help="evaluate the Lobachevsky function")
    p_lob.add_argument("--theta", type=float, required=True)
    p_lob.set_defaults(func=_cmd_lob)

    p_const = sub.add_parser("constants", help="print v_tet and v_oct")
    p_const.set_defaults(func=_cmd_constants)

    p_poly = sub.add_parser("poly", help="polyhedron operations")
    poly_sub = p_poly.add_subparsers(dest="poly_command", required=True)

    p_family = poly_sub.add_parser("family", help="build a named family member")
    p_family.add_argument("--name", required=True)
    p_family.add_argument("--n", type=int)
    p_family.add_argument("--bounds", action="store_true")
    p_family.add_argument("--bound", help="print just this bound (exit 3 if not applicable)")
    p_family.add_argument("--out", help="write the map file")
    p_family.set_defaults(func=_cmd_poly_family)

    p_graph = poly_sub.add_parser("graph", help="bounds for a map file")
    p_graph.add_argument("--file", required=True)
    p_graph.add_argument("--bound")
    p_graph.set_defaults(func=_cmd_poly_graph)

    p_medial = poly_sub.add_parser("medial", help="medial map of a map file")
    p_medial.add_argument("--file", required=True)
    p_medial.add_argument("--out")
    p_medial.set_defaults(func=_cmd_poly_medial)

    p_dual = poly_sub.add_parser("dual", help="dual map of a map file")
    p_dual.add_argument("--file", required=True)
    p_dual.add_argument("--out")
    p_dual.set_defaults(func=_cmd_poly_dual)

    p_link = sub.add_parser("link", help="link-volume bounds")
    link_sub = p_link.add_subparsers(dest="link_command", required=True)

    p_tb = link_sub.add_parser("two-bridge", help="bounds for a two-bridge link b(p/q)")
    p_tb.add_argument("--fraction", required=True, help="p/q with gcd(p,q)=1, 0<q<p")
    p_tb.add_argument("--jones", help="|a_{n+1}|,|a_{m-1}| Jones coefficient magnitudes")
    p_tb.add_argument("--bound")
    p_tb.set_defaults(func=_cmd_link_two_bridge)

    p_tw = link_sub.add_parser("twists", help="bounds from a twist decomposition")
    p_tw.add_argument("--lengths", required=True, help="comma-separated signed twist lengths")
    p_tw.add_argument("--jones")
    p_tw.add_argument("--bound")
    for flag in ("reduced", "alternating", "two-bridge", "not-figure-eight", "not-borromean"):
        p_tw.add_argument(f"--{flag}", dest=flag.replace("-", "_"), action="store_true")
    p_tw.set_defaults(func=_cmd_link_twists)

    p_aug = link_sub.add_parser("augment", help="augmented polyhedron of a diagram")
    group = p_aug.add_mutually_exclusive_group(required=True)
    group.add_argument("--fraction")
    group.add_argument("--file", help="twist-reduced diagram file")
    p_aug.add_argument("--out", help="write the augmented polyhedron file")
    p_aug.add_argument("--out-diagram", help="write the twist-reduced diagram file")
    p_aug.set_defaults(func=_cmd_link_augment)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
