"""``curvatess`` command line."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .codecs import PLANAR_CODE_HEADER, CodecError, decode, encode
from .generate.combos import degree_combination_solutions, filter_combinations
from .generate.corner import generate_corner_candidates
from .generate.quadrangulations import QuadConstraints, generate_quadrangulations
from .maps import EmbeddedMap
from .pipeline import PipelineAssertion, classify_corner, classify_forman, report, save_catalog, worker_count
from .transforms import TransformError, dual, inverse_medial, medial

MISMATCH = 2

# counts the classifications must reproduce
EXPECTED = {
    "forman": {"sphere_classes": 116, "medial_graphs": 73, "self_dual_pairs": 30, "rp2_classes": 0},
    "corner": {"sphere_classes": 22, "generated": 13, "self_dual": 3, "rp2_classes": 2},
}


def _read_maps(path: str) -> list[EmbeddedMap]:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    if data.startswith(PLANAR_CODE_HEADER):
        return decode(data, "planar_code")
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        text = None
    if text is not None and ":" in text:
        return decode(data, "adj")
    return decode(data, "planar_code")


def _write(data: bytes, out) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _cmd_classify(args) -> int:
    cat = classify_forman() if args.kind == "forman" else classify_corner()
    if args.out:
        save_catalog(cat, args.out)
    if args.format == "planar_code":
        if not args.out:
            _write(encode([r.map for r in cat.records]), None)
    else:
        summary = {
            "positivity": cat.positivity,
            "stats": cat.stats,
            "edge_histogram": cat.edge_histogram(),
            "records": [{"name": r.name, "V": r.num_vertices, "E": r.num_edges, "F": r.num_faces,
                         "dual": r.dual_name, "connectivity": r.connectivity} for r in cat.records],
            "rp2": [{"name": r.name, "V": r.num_vertices, "E": r.num_edges, "F": r.num_faces}
                    for r in cat.rp2],
        }
        print(json.dumps(summary, indent=1))
    status = 0
    for key, want in EXPECTED[args.kind].items():
        got = cat.stats.get(key)
        if got != want:
            print(f"mismatch: {key} = {got}, expected {want}", file=sys.stderr)
            status = MISMATCH
    return status


def _cmd_report(args) -> int:
    out = [report(m, args.dual, args.medial) for m in _read_maps(args.file)]
    print(json.dumps(out[0] if len(out) == 1 else out, indent=1))
    return 0


def _cmd_transform(args) -> int:
    result = []
    for m in _read_maps(args.input):
        if args.op == "dual":
            result.append(dual(m))
        elif args.op == "medial":
            result.append(medial(m))
        else:
            pair = inverse_medial(m)
            result.extend([pair.primal] if pair.self_dual else [pair.primal, pair.dual])
    _write(encode(result, args.format), args.output)
    return 0


def _cmd_gen(args) -> int:
    if args.what == "combos":
        combos = degree_combination_solutions(args.vmin, args.vmax)
        if args.apply_facts:
            combos = filter_combinations(combos)
        if args.format == "json":
            print(json.dumps([c.to_json() for c in combos], indent=1))
        else:
            for c in combos:
                print(c.as_line())
        return 0
    if args.what == "quad":
        pats = QuadConstraints().allowed_face_patterns if args.vp_filter else None
        maps = generate_quadrangulations(QuadConstraints(max_faces=args.max_faces, allowed_face_patterns=pats))
    else:
        maps = generate_corner_candidates()
    print(f"{len(maps)} maps", file=sys.stderr)
    if args.format == "json":
        _write((json.dumps([m.rotations() for m in maps]) + "\n").encode(), args.output)
    else:
        _write(encode(maps, args.format), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvatess", description="Curvature and tessellations of embedded graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="run a classification pipeline")
    c.add_argument("kind", choices=["forman", "corner"])
    c.add_argument("--out", metavar="DIR", help="write <kind>_catalog.json and .pc here")
    c.add_argument("--format", choices=["json", "planar_code"], default="json")
    c.set_defaults(func=_cmd_classify)

    r = sub.add_parser("report", help="curvature and tessellation report of maps in FILE")
    r.add_argument("file", help="planar_code or adjacency text; '-' for stdin")
    r.add_argument("--dual", action="store_true")
    r.add_argument("--medial", action="store_true")
    r.set_defaults(func=_cmd_report)

    t = sub.add_parser("transform", help="dual, medial or inverse medial")
    t.add_argument("op", choices=["dual", "medial", "inverse-medial"])
    t.add_argument("input")
    t.add_argument("-o", "--output")
    t.add_argument("--format", choices=["planar_code", "adj", "dot"], default="planar_code")
    t.set_defaults(func=_cmd_transform)

    g = sub.add_parser("gen", help="run a generator")
    gs = g.add_subparsers(dest="what", required=True)
    q = gs.add_parser("quad", help="sphere quadrangulations")
    q.add_argument("--max-faces", type=int, required=True)
    q.add_argument("--vp-filter", action="store_true", help="only face patterns admissible for positive Forman curvature")
    q.add_argument("--format", choices=["planar_code", "adj", "dot", "json"], default="planar_code")
    q.add_argument("-o", "--output")
    k = gs.add_parser("corner", help="positive corner curvature candidates")
    k.add_argument("--format", choices=["planar_code", "adj", "dot", "json"], default="planar_code")
    k.add_argument("-o", "--output")
    b = gs.add_parser("combos", help="degree combinations of the corner integer system")
    b.add_argument("--vmin", type=int, required=True)
    b.add_argument("--vmax", type=int, required=True)
    b.add_argument("--apply-facts", action="store_true")
    b.add_argument("--format", choices=["text", "json"], default="text")
    g.set_defaults(func=_cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    worker_count()
    try:
        return args.func(args)
    except PipelineAssertion as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return MISMATCH
    except (CodecError, TransformError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
