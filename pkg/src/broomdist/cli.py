"""Command-line interface: distances, geodesics, oracles, sampling, benching.

All subcommands read instance JSON files and write a single JSON report to
stdout.  Validation and parse failures exit with code 2 and a structured
error object on stderr; exceeding an enumeration cap exits with code 3.
Reports are deterministic for a fixed instance and seed once --no-timings
strips the wall-clock fields.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import __version__
from .bench import DEFAULT_SIZES, run_bench
from .core import Broom, SplitGraphSpec, instance_to_doc, parse_instance
from .errors import BroomDistError, TooLargeError
from .geodesic import construct_path
from .mincut import build_cut_graph, distance_from_cut, min_cut, rotation_distance
from .model import coefficients, derive_sets, explain_doc
from .oracle import (
    DEFAULT_CAP,
    bfs_distance,
    broom_count,
    brute_min_objective,
    enumerate_brooms,
    random_broom,
)
from .rotations import neighbors, rotation_to_doc

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_TOO_LARGE = 3


def _load_instance(path: str) -> tuple[Broom, Broom]:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(json.load(fh))


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _xstar_doc(assignment) -> list[int]:
    return sorted(u.index for u, bit in assignment.items() if bit)


def cmd_distance(args) -> int:
    t1, t2 = _load_instance(args.instance)
    timings = {}
    t0 = time.perf_counter()
    sets = derive_sets(t1, t2)
    timings["derive"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    coeffs = coefficients(sets)
    graph = build_cut_graph(coeffs)
    timings["coefficients"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    cut = min_cut(graph)
    timings["min_cut"] = time.perf_counter() - t0

    report = {
        "instance": instance_to_doc(t1, t2),
        "distance": distance_from_cut(coeffs, graph, cut),
        "xstar": _xstar_doc(cut.assignment),
    }
    if args.explain:
        report["model"] = explain_doc(sets)
    if args.dump_cut_graph:
        report["cut_graph"] = graph.to_doc()
    if not args.no_timings:
        report["timings"] = {k: round(v, 6) for k, v in timings.items()}
    _emit(report)
    return EXIT_OK


def cmd_geodesic(args) -> int:
    t1, t2 = _load_instance(args.instance)
    t0 = time.perf_counter()
    distance, xstar = rotation_distance(t1, t2)
    plan = construct_path(t1, t2, xstar)
    elapsed = time.perf_counter() - t0
    assert len(plan) == distance
    report = {
        "instance": instance_to_doc(t1, t2),
        "distance": distance,
        "xstar": _xstar_doc(xstar),
        "geodesic": plan.to_doc(trace=args.trace),
    }
    if not args.no_timings:
        report["timings"] = {"total": round(elapsed, 6)}
    _emit(report)
    return EXIT_OK


def cmd_neighbors(args) -> int:
    t1, t2 = _load_instance(args.instance)
    broom = t1 if args.tree == "t1" else t2
    moves = neighbors(broom)
    _emit(
        {
            "tree": args.tree,
            "broom": broom.to_doc(),
            "degree": len(moves),
            "neighbors": [
                {"rotation": rotation_to_doc(r), "broom": b.to_doc()} for r, b in moves
            ],
        }
    )
    return EXIT_OK


def cmd_validate(args) -> int:
    t1, t2 = _load_instance(args.instance)
    _emit({"valid": True, "instance": instance_to_doc(t1, t2)})
    return EXIT_OK


def cmd_oracle(args) -> int:
    t1, t2 = _load_instance(args.instance)
    spec = t1.spec
    count = broom_count(spec)
    if args.all_pairs:
        index = enumerate_brooms(spec, cap=args.cap)
        mismatches = []
        checked = 0
        for i in range(len(index.brooms)):
            dist = index.bfs_from(i)
            for j in range(len(index.brooms)):
                checked += 1
                got = rotation_distance(index.brooms[i], index.brooms[j])[0]
                if got != dist[j]:
                    mismatches.append(
                        {
                            "t1": index.brooms[i].to_doc(),
                            "t2": index.brooms[j].to_doc(),
                            "mincut": got,
                            "bfs": dist[j],
                        }
                    )
        _emit(
            {
                "spec": {"p": spec.p, "q": spec.q},
                "broom_count": count,
                "ordered_pairs": checked,
                "agree": not mismatches,
                "mismatches": mismatches[:10],
            }
        )
        return EXIT_OK

    mincut_distance, xstar = rotation_distance(t1, t2)
    bfs = bfs_distance(t1, t2, cap=args.cap)
    sets = derive_sets(t1, t2)
    brute, _, monotone = brute_min_objective(sets)
    _emit(
        {
            "instance": instance_to_doc(t1, t2),
            "broom_count": count,
            "mincut": mincut_distance,
            "bfs": bfs,
            "brute": brute,
            "monotone_witness": monotone,
            "xstar": _xstar_doc(xstar),
            "verdicts": {
                "mincut==bfs": mincut_distance == bfs,
                "mincut==brute": mincut_distance == brute,
                "mincut==bfs==brute": mincut_distance == bfs == brute,
            },
        }
    )
    return EXIT_OK


def cmd_random(args) -> int:
    spec = SplitGraphSpec(args.p, args.q)
    rng = random.Random(args.seed)
    t1 = random_broom(spec, rng)
    t2 = random_broom(spec, rng)
    _emit(instance_to_doc(t1, t2))
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    report = run_bench(sizes, args.seed, Path(args.out))
    _emit(report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="broomdist",
        description="Exact rotation distance between brooms on complete split graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("instance", help="path to an instance JSON file")
        p.add_argument("--no-timings", action="store_true", help="omit wall times from the report")
        p.set_defaults(func=func)
        return p

    p = add_instance_cmd("distance", cmd_distance, "compute the rotation distance")
    p.add_argument("--explain", action="store_true", help="include the derived model in the report")
    p.add_argument("--dump-cut-graph", action="store_true", help="include the cut instance in the report")

    p = add_instance_cmd("geodesic", cmd_geodesic, "compute a shortest rotation sequence")
    p.add_argument("--trace", action="store_true", help="include every intermediate broom")

    p = sub.add_parser("neighbors", help="list all rotations of one broom of the instance")
    p.add_argument("instance")
    p.add_argument("--tree", choices=("t1", "t2"), default="t1")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("validate", help="validate and canonicalize an instance")
    p.add_argument("instance")
    p.set_defaults(func=cmd_validate)

    p = add_instance_cmd("oracle", cmd_oracle, "cross-check mincut against BFS and brute force")
    p.add_argument("--all-pairs", action="store_true", help="check every ordered broom pair of the split graph")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")

    p = sub.add_parser("random", help="emit a seeded uniformly random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("bench", help="time the pipeline across sizes; writes CSV + figure")
    p.add_argument("--sizes", default=",".join(str(s) for s in DEFAULT_SIZES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="bench-report")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        json.dump({"error": {"type": type(exc).__name__, "message": str(exc)}}, sys.stderr)
        sys.stderr.write("\n")
        return EXIT_TOO_LARGE
    except (BroomDistError, OSError, json.JSONDecodeError) as exc:
        json.dump({"error": {"type": type(exc).__name__, "message": str(exc)}}, sys.stderr)
        sys.stderr.write("\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
