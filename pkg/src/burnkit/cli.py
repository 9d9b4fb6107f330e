"""Batch command-line front end.

Subcommands: burn, verify, gen, firefight, percolate, bench.  Reports are
canonical JSON on stdout (or a text/DOT rendering); identical configuration
and seed always produce identical bytes.  Exit codes: 0 success or valid,
2 invalid sequence/run, 3 parse error, 4 budget exhausted, 5 precondition
violated.

Input formats (``--format``):
  edges        first line ``n m``, then m lines ``u v`` with 0-based vertex
               ids; ``#`` starts a comment and blank lines are skipped
  intervals    one interval per line as ``start end`` (rationals: 3/2, 1.5)
  permutation  one entry of the permutation of 1..k per line
  disks        one disk per line as ``x y r`` (rationals)
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import approx, exact, families, formats, hardness, processes
from .burning import simulate, verify
from .errors import (
    BudgetError,
    BurnkitError,
    InvalidSequenceError,
    ParseError,
    RejectedInputError,
)
from .graph import (
    Graph,
    components,
    disk_graph,
    from_edge_list,
    interval_graph,
    permutation_graph,
)

NODE_BUDGET_ENV = "BURNKIT_NODE_BUDGET"


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(token) for token in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ParseError(f"bad integer list {text!r}") from exc


def _load_graph(path: str, fmt: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if fmt == "edges":
        return formats.parse_edge_list(text)
    if fmt == "intervals":
        return interval_graph(formats.parse_intervals(text))
    if fmt == "permutation":
        return permutation_graph(formats.parse_permutation(text))
    if fmt == "disks":
        return disk_graph(formats.parse_disks(text))
    raise ParseError(f"unknown input format {fmt!r}")


def _trace_linear(G: Graph, closed: bool) -> list[int]:
    """Vertex order of a path (closed=False) or cycle (closed=True) graph."""
    if G.n == 0:
        raise RejectedInputError("empty graph")
    if len(components(G)) != 1:
        raise RejectedInputError("graph is disconnected")
    degrees = [G.degree(v) for v in range(G.n)]
    if closed:
        if any(d != 2 for d in degrees):
            raise RejectedInputError("graph is not a cycle")
        start = 0
    else:
        ends = [v for v, d in enumerate(degrees) if d <= 1]
        if any(d > 2 for d in degrees) or (G.n > 1 and len(ends) != 2):
            raise RejectedInputError("graph is not a path")
        start = min(ends) if ends else 0
    order = [start]
    previous = None
    current = start
    while len(order) < G.n:
        nxt = [u for u in G.adjacency[current] if u != previous]
        if not nxt:
            raise RejectedInputError("graph is not a single path or cycle")
        previous, current = current, nxt[0]
        order.append(current)
    return order


def _emit(args, record: dict, dot: str | None = None) -> None:
    if args.output == "json":
        sys.stdout.write(formats.dumps(record))
    elif args.output == "dot":
        sys.stdout.write(dot if dot is not None else formats.dumps(record))
    else:
        for key in sorted(record):
            sys.stdout.write(f"{key}: {record[key]}\n")


# -- burn ----------------------------------------------------------------------


def _run_burn_engine(args, G: Graph):
    engine = args.engine
    extras: dict = {}
    if engine == "exact":
        budget = args.node_budget
        if budget is None and os.environ.get(NODE_BUDGET_ENV):
            budget = int(os.environ[NODE_BUDGET_ENV])
        result = exact.burning_number_exact(G, node_budget=budget, workers=args.workers)
        extras["nodes_explored"] = result.nodes_explored
        return list(result.witness.sources), extras
    if engine == "bruteforce":
        result = exact.burning_number_bruteforce(G, cap=args.vertex_cap)
        extras["nodes_explored"] = result.nodes_explored
        return list(result.witness.sources), extras
    if engine == "approx3":
        result = approx.burn_3approx(G, x1=args.x1)
        extras["implied_lower"] = result.implied_lower
        if args.trace:
            extras["trace"] = [list(entry) for entry in result.trace]
        return list(result.sequence), extras
    if engine == "path":
        return families.burn_path(_trace_linear(G, closed=False)), extras
    if engine == "cycle":
        return families.burn_cycle(_trace_linear(G, closed=True)), extras
    if engine == "split":
        if args.clique is not None:
            clique = frozenset(_int_list(args.clique))
            partition = families.SplitPartition(
                clique, frozenset(range(G.n)) - clique
            )
        else:
            partition = families.split_partition(G)
            if partition is None:
                raise RejectedInputError("input is not a split graph")
        return families.burn_split(G, partition), extras
    if engine == "cograph":
        return families.burn_cograph(G), extras
    if engine == "interval-approx":
        return families.burn_interval_approx(G), extras
    raise ParseError(f"unknown engine {engine!r}")


def cmd_burn(args) -> int:
    G = _load_graph(args.input, args.format)
    started = time.perf_counter()
    sequence, extras = _run_burn_engine(args, G)
    elapsed = time.perf_counter() - started
    outcome = simulate(G, sequence)
    record = {
        "command": "burn",
        "engine": args.engine,
        "input": args.input,
        "seed": args.seed,
        "n": G.n,
        "m": G.edge_count,
        "k": len(sequence),
        "sequence": list(sequence),
        "valid": verify(G, sequence),
        "complete": outcome.complete,
        "bounds": {
            "lower": exact.lower_bound(G),
            "upper": exact.upper_bound_radius(G),
        },
    }
    record.update(extras)
    if args.timings:
        record["timings"] = {"seconds": elapsed}
    dot = formats.graph_to_dot(
        G, burn_step=outcome.schedule.burn_step, labels=outcome.schedule.labels
    )
    _emit(args, record, dot)
    return 0


# -- verify --------------------------------------------------------------------


def cmd_verify(args) -> int:
    G = _load_graph(args.input, args.format)
    if args.certificate is not None:
        record_in = formats.load_certificate_record(Path(args.certificate).read_text())
        sequence = record_in.get("canonical_sequence")
        if sequence is None:
            raise RejectedInputError("certificate carries no canonical sequence")
    elif args.sequence is not None:
        sequence = _int_list(args.sequence)
    else:
        raise ParseError("verify needs --sequence or --certificate")
    outcome = simulate(G, sequence)
    valid = verify(G, sequence)
    record = {
        "command": "verify",
        "input": args.input,
        "seed": args.seed,
        "k": len(sequence),
        "sequence": list(sequence),
        "valid": valid,
        "complete": outcome.complete,
        "outcome": formats.burn_outcome_record(outcome),
    }
    dot = formats.graph_to_dot(
        G, burn_step=outcome.schedule.burn_step, labels=outcome.schedule.labels
    )
    _emit(args, record, dot)
    return 0 if valid else 2


# -- gen -----------------------------------------------------------------------


def _write(path: Path, text: str) -> str:
    path.write_text(text)
    return str(path)


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    files: list[str] = []
    record: dict = {"command": "gen", "kind": args.kind, "seed": args.seed}

    def sibling(suffix: str) -> Path:
        return prefix.parent / (prefix.name + suffix)

    def emit_graph(G: Graph) -> None:
        files.append(_write(sibling(".edges"), formats.format_edge_list(G)))
        record["n"] = G.n
        record["m"] = G.edge_count

    kind = args.kind
    if kind == "spider":
        emit_graph(hardness.gen_spider(args.s, args.r))
    elif kind == "spider-forest":
        emit_graph(hardness.gen_spider_forest(_int_list(args.degrees)))
    elif kind == "path":
        emit_graph(from_edge_list(args.n, [(v, v + 1) for v in range(args.n - 1)]))
    elif kind == "cycle":
        if args.n < 3:
            raise RejectedInputError("a cycle needs at least three vertices")
        edges = [(v, (v + 1) % args.n) for v in range(args.n)]
        emit_graph(from_edge_list(args.n, edges))
    elif kind == "random":
        edges = [
            (u, v)
            for u in range(args.n)
            for v in range(u + 1, args.n)
            if rng.random() < args.p
        ]
        emit_graph(from_edge_list(args.n, edges))
    elif kind == "intervals":
        pairs = []
        for _ in range(args.n):
            start = rng.randint(0, 3 * args.n)
            pairs.append((Fraction(start), Fraction(start + rng.randint(1, 4))))
        intervals = formats.IntervalSet(tuple(pairs))
        files.append(_write(sibling(".intervals"), formats.format_intervals(intervals)))
        emit_graph(interval_graph(intervals))
    elif kind == "permutation":
        values = list(range(1, args.k + 1))
        rng.shuffle(values)
        pp = formats.PermutationPair(tuple(values))
        files.append(_write(sibling(".perm"), formats.format_permutation(pp)))
        emit_graph(permutation_graph(pp))
    elif kind in ("ig-gadget", "pg-gadget", "dk-gadget"):
        inst = hardness.validate_d3p(_int_list(args.x))
        solution = None
        if args.solve == "yes" or (args.solve == "auto" and 3 * inst.n <= 12):
            solution = hardness.solve_d3p_bruteforce(inst)
        if kind == "ig-gadget":
            cert = hardness.gen_ig_gadget(inst, solution)
            files.append(
                _write(sibling(".intervals"), formats.format_intervals(cert.intervals))
            )
        elif kind == "pg-gadget":
            pp, cert = hardness.gen_pg_gadget(inst, solution)
            files.append(_write(sibling(".perm"), formats.format_permutation(pp)))
        else:
            if args.q is None:
                raise ParseError("dk-gadget requires --q (ring size)")
            arrangement, cert = hardness.gen_dk_gadget(inst, args.q, solution)
            files.append(_write(sibling(".disks"), formats.format_disks(arrangement)))
        emit_graph(cert.graph)
        files.append(
            _write(sibling(".cert.json"), formats.dumps(formats.certificate_record(cert)))
        )
        record["claimed_k"] = cert.claimed_k
        record["has_canonical_sequence"] = cert.canonical_sequence is not None
    else:
        raise ParseError(f"unknown generator kind {kind!r}")

    record["files"] = sorted(files)
    _emit(args, record)
    return 0


# -- firefight / percolate -------------------------------------------------------


def cmd_firefight(args) -> int:
    G = _load_graph(args.input, args.format)
    if args.engine == "verify":
        run = processes.verify_firefighter(G, args.origin, _int_list(args.placements or ""))
    elif args.engine == "brute":
        run = processes.firefight_bruteforce(G, args.origin, cap=args.cap)
    else:
        run = processes.firefight_pk_free(G, args.origin, args.pk)
    record = {"command": "firefight", "engine": args.engine, "input": args.input, "seed": args.seed}
    record.update(formats.firefight_record(run))
    dot = formats.firefight_to_dot(G, run)
    _emit(args, record, dot)
    return 0 if run.valid else 2


def cmd_percolate(args) -> int:
    G = _load_graph(args.input, args.format)
    run = processes.bootstrap_percolate(G, _int_list(args.seed_set), args.threshold)
    record = {"command": "percolate", "input": args.input, "seed": args.seed}
    record.update(formats.percolation_record(run))
    _emit(args, record)
    return 0


# -- bench -----------------------------------------------------------------------


def cmd_bench(args) -> int:
    sizes = _int_list(args.sizes)
    engines = [token for token in args.engines.split(",") if token]
    results = []
    for size in sizes:
        if args.kind == "path":
            G = from_edge_list(size, [(v, v + 1) for v in range(size - 1)])
            linear = list(range(size))
        else:
            G = from_edge_list(size, [(v, (v + 1) % size) for v in range(size)])
            linear = list(range(size))
        for engine in engines:
            started = time.perf_counter()
            if engine == "exact":
                result = exact.burning_number_exact(G)
                entry = {"k": result.k, "nodes_explored": result.nodes_explored}
            elif engine == "approx3":
                result = approx.burn_3approx(G)
                entry = {"k": result.k, "implied_lower": result.implied_lower}
            elif engine == "path":
                schedule = (
                    families.burn_path(linear)
                    if args.kind == "path"
                    else families.burn_cycle(linear)
                )
                entry = {"k": len(schedule)}
            else:
                raise ParseError(f"unknown bench engine {engine!r}")
            entry.update({"size": size, "engine": engine})
            if args.timings:
                entry["seconds"] = time.perf_counter() - started
            results.append(entry)
    _emit(args, {"command": "bench", "kind": args.kind, "seed": args.seed, "results": results})
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burnkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True):
        p.add_argument("--output", choices=("json", "text", "dot"), default="json")
        p.add_argument("--seed", type=int, default=0)
        if with_format:
            p.add_argument(
                "--format",
                choices=("edges", "intervals", "permutation", "disks"),
                default="edges",
            )

    burn = sub.add_parser("burn", help="compute a burning sequence")
    burn.add_argument("input")
    burn.add_argument(
        "--engine",
        choices=(
            "exact",
            "bruteforce",
            "approx3",
            "path",
            "cycle",
            "split",
            "cograph",
            "interval-approx",
        ),
        default="exact",
    )
    burn.add_argument("--x1", type=int, default=None, help="first source for approx3")
    burn.add_argument("--clique", default=None, help="split partition clique, e.g. '0,1,2'")
    burn.add_argument("--workers", type=int, default=1)
    burn.add_argument("--node-budget", type=int, default=None)
    burn.add_argument("--vertex-cap", type=int, default=9)
    burn.add_argument("--timings", action="store_true")
    burn.add_argument("--trace", action="store_true", help="emit failing-prefix bounds")
    common(burn)
    burn.set_defaults(func=cmd_burn)

    ver = sub.add_parser("verify", help="validate a burning sequence")
    ver.add_argument("input")
    ver.add_argument("--sequence", default=None, help="comma-separated vertices")
    ver.add_argument("--certificate", default=None, help="certificate JSON path")
    common(ver)
    ver.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="generate graphs and hard instances")
    gen.add_argument(
        "kind",
        choices=(
            "spider",
            "spider-forest",
            "path",
            "cycle",
            "random",
            "ig-gadget",
            "pg-gadget",
            "dk-gadget",
            "intervals",
            "permutation",
        ),
    )
    gen.add_argument("--out", required=True, help="output path prefix")
    gen.add_argument("--s", type=int, default=3, help="spider arm count")
    gen.add_argument("--r", type=int, default=3, help="spider arm length")
    gen.add_argument("--degrees", default="", help="spider-forest arm counts")
    gen.add_argument("--n", type=int, default=8)
    gen.add_argument("--p", type=float, default=0.3)
    gen.add_argument("--k", type=int, default=8, help="permutation size")
    gen.add_argument("--x", default="", help="distinct 3-partition elements")
    gen.add_argument("--q", type=int, default=None, help="ring size for dk-gadget")
    gen.add_argument("--solve", choices=("auto", "yes", "no"), default="auto")
    common(gen, with_format=False)
    gen.set_defaults(func=cmd_gen)

    fire = sub.add_parser("firefight", help="simulate or optimize firefighting")
    fire.add_argument("input")
    fire.add_argument("--origin", type=int, required=True)
    fire.add_argument("--engine", choices=("verify", "brute", "pkfree"), default="brute")
    fire.add_argument("--placements", default=None, help="comma-separated vertices")
    fire.add_argument("--pk", type=int, default=5, help="path bound for pkfree")
    fire.add_argument("--cap", type=int, default=9)
    common(fire)
    fire.set_defaults(func=cmd_firefight)

    perc = sub.add_parser("percolate", help="run bootstrap percolation")
    perc.add_argument("input")
    perc.add_argument("--seed-set", required=True, help="comma-separated vertices")
    perc.add_argument("--threshold", type=int, required=True)
    common(perc)
    perc.set_defaults(func=cmd_percolate)

    bench = sub.add_parser("bench", help="run engines over generated families")
    bench.add_argument("--kind", choices=("path", "cycle"), default="path")
    bench.add_argument("--sizes", default="9,16,25")
    bench.add_argument("--engines", default="path,approx3")
    bench.add_argument("--timings", action="store_true")
    common(bench, with_format=False)
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 4
    except InvalidSequenceError as exc:
        print(f"invalid sequence: {exc}", file=sys.stderr)
        return 2
    except RejectedInputError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 5
    except BurnkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
