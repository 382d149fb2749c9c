"""Command-line interface.

Subcommands: count, series, enumerate, map, sample, stats, verify, render.
Usage errors exit 2 (argparse), validation errors exit 1 with the error
name, verify failures exit 3.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import paths, render, series, stats, verify
from .animals import Animal, animal_to_heap, enumerate_directed_animals, heap_to_animal
from .bijection import phi, phi_inv
from .heaps import Heap, HeapError, enumerate_heaps
from .paths import InvalidPath, Mode

PATH_CLASSES = {"motzkin": Mode.PLAIN, "cat": Mode.CAT, "cat0": Mode.CAT0}
HEAP_CLASSES = {
    "half-pyramid": (dict(strict=True, half_pyramid=True), Mode.PLAIN),
    "pyramid": (dict(strict=True, pyramid=True), Mode.CAT0),
    "stacked": (dict(stacked=True), Mode.CAT),
}
ALL_CLASSES = sorted(PATH_CLASSES) + sorted(HEAP_CLASSES) + ["directed-animal"]


def _read_input(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    with open(spec, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_count(args) -> int:
    if args.cls in PATH_CLASSES:
        print(paths.excursion_count(args.n, PATH_CLASSES[args.cls]))
        return 0
    # heap/animal classes: size n objects <-> length n-1 paths
    if args.n < 1:
        print(0)
        return 0
    mode = Mode.CAT0 if args.cls == "directed-animal" else HEAP_CLASSES[args.cls][1]
    print(paths.excursion_count(args.n - 1, mode))
    return 0


def cmd_series(args) -> int:
    order = args.order if args.order is not None else series.DEFAULT_ORDER
    if args.which == "P":
        table = series.series_pyramids(order)
        if args.json:
            print(table.to_json())
        else:
            for n, row in enumerate(table.rows):
                print(f"z^{n}: " + " ".join(str(c) for c in row))
        return 0
    if args.which == "S":
        table = series.series_stacked(order)
        if args.json:
            print(table.to_json())
        else:
            for (n, ju, jt), c in sorted(table.entries.items()):
                if c:
                    print(f"z^{n} u^{ju} t^{jt}: {c}")
        return 0
    builders = {
        "E": series.series_motzkin_excursions,
        "M": series.series_motzkin_meanders,
        "Ecat": series.series_catastrophe_excursions,
        "Q": series.series_half_pyramids,
    }
    s = builders[args.which](order)
    if args.json:
        print(s.to_json())
    else:
        for n in range(s.order):
            print(f"z^{n}: {s[n]}")
    return 0


def cmd_enumerate(args) -> int:
    limit = args.limit if args.limit is not None else float("inf")

    def emit(objs):
        for i, text in enumerate(objs):
            if i >= limit:
                break
            print(text)

    if args.cls in PATH_CLASSES:
        emit(
            paths.path_to_json(p)
            for p in paths.enumerate_paths(args.n, PATH_CLASSES[args.cls])
        )
    elif args.cls == "directed-animal":
        emit(a.to_json() for a in enumerate_directed_animals(args.n))
    else:
        flags = HEAP_CLASSES[args.cls][0]
        emit(h.to_json() for h in enumerate_heaps(args.n, **flags))
    return 0


def _parse_object(text: str, kind: str):
    if kind == "path":
        tokens = paths.path_from_json(text)
        paths.validate(tokens, Mode.CAT)
        return tokens
    if kind == "heap":
        return Heap.from_json(text)
    return Animal.from_json(text)


def _as_heap(obj, kind: str) -> Heap:
    if kind == "path":
        return phi_inv(obj)
    if kind == "animal":
        return animal_to_heap(obj)
    return obj


def cmd_map(args) -> int:
    obj = _parse_object(_read_input(args.input), args.source)
    if args.source == args.target:
        h = obj
    else:
        h = _as_heap(obj, args.source)
    if args.target == "path":
        out = paths.path_to_json(obj if args.source == "path" else phi(h))
    elif args.target == "heap":
        out = h.to_json()
    else:
        out = (obj if args.source == "animal" else heap_to_animal(h)).to_json()
    print(out)
    return 0


def cmd_sample(args) -> int:
    drawn = paths.sample_uniform(args.n, Mode.CAT, args.seed, args.count)
    for p in drawn:
        if args.emit == "paths":
            print(paths.path_to_json(p))
        elif args.emit == "heaps":
            print(phi_inv(p).to_json())
        else:
            print(heap_to_animal(phi_inv(p)).to_json())
    if args.stats:
        reports = [
            stats.width_stats(args.n + 1, samples=args.count, seed=args.seed).to_dict()
        ]
        if args.n >= 1:
            ex = paths.exact_expectations(args.n)
            reports.append(
                {"name": "exact_means", "n": args.n}
                | {k: float(v) for k, v in ex.items()}
            )
        print(json.dumps(reports), file=sys.stderr)
    return 0


def cmd_stats(args) -> int:
    if args.exact:
        reports = [
            stats.expected_catastrophe_total(args.n),
            stats.expected_se_count(args.n),
            stats.expected_minimal_dimers(args.n),
        ]
        for rep in reports:
            print(json.dumps(rep.to_dict()))
        return 0
    rep = stats.width_stats(args.n + 1, samples=args.samples, seed=args.seed)
    print(json.dumps(rep.to_dict()))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_suites(args.suite, args.max_n, args.seed)
    failed = 0
    for r in results:
        print(r.line())
        failed += not r.ok
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 3 if failed else 0


def cmd_render(args) -> int:
    text = _read_input(args.input)
    data = json.loads(text) if text.lstrip().startswith("{") else {"tokens": text.strip()}
    if "tokens" in data:
        tokens = paths.path_from_json(text)
        paths.validate(tokens, Mode.CAT)
        out = render.svg_path(tokens) if args.format == "svg" else render.ascii_path(tokens)
    elif "dimers" in data:
        h = Heap.from_json(text)
        out = render.svg_heap(h) if args.format == "svg" else render.ascii_heap(h)
    elif "cells" in data:
        a = Animal.from_json(text)
        out = render.svg_animal(a) if args.format == "svg" else render.ascii_animal(a)
    else:
        raise InvalidPath("input is not a path, heap, or animal JSON object")
    if args.out == "-":
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out if out.endswith("\n") else out + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyheap",
        description="Stacked heaps of dimers, Motzkin excursions with "
        "catastrophes, and the bijections between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact count of a class at one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=ALL_CLASSES, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="generating-function coefficients")
    p.add_argument("--which", choices=["E", "M", "Ecat", "Q", "P", "S"], required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("enumerate", help="stream all objects of a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=ALL_CLASSES, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="convert between path, heap, and animal")
    p.add_argument("--input", default="-")
    p.add_argument("--from", dest="source", choices=["path", "heap", "animal"], required=True)
    p.add_argument("--to", dest="target", choices=["path", "heap", "animal"], required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("sample", help="uniform random excursions and images")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--emit", choices=["paths", "heaps", "animals"], default="paths")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("stats", help="exact or sampled statistics reports")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exact", action="store_true")
    group.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument(
        "--suite",
        choices=["roundtrip", "counts", "identities", "bounds", "all"],
        default="all",
    )
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a path, heap, or animal")
    p.add_argument("--input", default="-")
    p.add_argument("--format", choices=["svg", "ascii"], default="svg")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HeapError, InvalidPath, series.SeriesError, ValueError, KeyError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
