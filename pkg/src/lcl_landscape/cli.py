"""Command-line entry point.

Exit codes: 0 success, 1 negative verdict or failed certificate, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import classifier, graph_core, turing, width_growth
from .errors import LandscapeError, ParseError, ProfileIncomplete, Timeout
from .local_sim import simulate, verify_lcl

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2
ROUND_CONSTANT = 3  # max_round <= T(s-2) + ROUND_CONSTANT * ceil(log2 n) on valid instances


class InputError(Exception):
    pass


@dataclass
class ExperimentRecord:
    command: str
    parameters: dict
    outputs: dict = field(default_factory=dict)
    seed: int = 0
    wall_time: float = 0.0


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def _load_graph(path: str) -> graph_core.Graph:
    try:
        return graph_core.parse_graph(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_machine(arg: str) -> turing.TuringMachine:
    if os.path.exists(arg):
        try:
            return turing.parse_machine(_read(arg))
        except ParseError as exc:
            raise InputError(f"{arg}: {exc}") from exc
    return turing.machine_from_spec(arg)


def _default_height(m: turing.TuringMachine, s: int, step_cap: int) -> int:
    if s < 3:
        raise InputError(f"s={s}: a path shorter than 3 nodes is itself a rule violation")
    return turing.run(m, turing.ZERO * (s - 2), step_cap).steps + s


# -- subcommands ---------------------------------------------------------

def cmd_classify(args) -> int:
    minors = [(Path(p).stem, _load_graph(p)) for p in args.files]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        verdict = classifier.classify(minors)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _emit(verdict.line() + "\n", args.out)
    return EXIT_OK


def cmd_gen_tree(args) -> int:
    t = graph_core.generate_T(args.k, args.s)
    _emit(graph_core.format_graph(t.tree), args.out)
    return EXIT_OK


def cmd_pathwidth(args) -> int:
    t = graph_core.generate_T(args.k, args.s)
    pd = width_growth.path_decomposition_of_T(args.k, args.s)
    ok = width_growth.validate_path_decomposition(t.tree, pd)
    lines = [f"width={pd.width} bags={len(pd.bags)} valid={'yes' if ok else 'no'}"]
    if args.exhaustive and pd.width > 0:
        lower = width_growth.exists_path_decomposition(t.tree, pd.width - 1)
        lines.append(f"width-{pd.width - 1} exists={'yes' if lower else 'no'}")
        ok = ok and not lower
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(pd.format())
    sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_growth(args) -> int:
    if args.file:
        g = _load_graph(args.file)
    elif args.tree:
        g = graph_core.generate_T(*args.tree).tree
    else:
        raise InputError("growth needs a graph file or --tree K S")
    rep = width_growth.growth_profile(g, args.root, args.radius, args.C)
    _emit(rep.csv(), args.out)
    print(f"exponent={rep.fitted_exponent} violations={len(rep.violations)}", file=sys.stderr)
    return EXIT_NEGATIVE if rep.violations else EXIT_OK


def cmd_tm_profile(args) -> int:
    m = _load_machine(args.machine)
    try:
        prof = turing.time_profile(m, args.s_max, args.step_cap)
    except ProfileIncomplete as exc:
        partial = turing.TimeProfile(exc.partial, None, ())
        _emit(partial.csv(), args.out)
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    _emit(prof.csv(), args.out)
    if prof.violations:
        for v in prof.violations:
            print(f"violation: {v}", file=sys.stderr)
        return EXIT_NEGATIVE
    print(f"good_constant={prof.good_constant:.4f}", file=sys.stderr)
    return EXIT_OK


def cmd_build_instance(args) -> int:
    from .lcl_construct import build_instance

    height = args.height
    if height is None:
        height = _default_height(_load_machine(args.machine), args.s, args.step_cap)
    inst = build_instance(args.s, height, args.doubly)
    _emit(graph_core.format_graph(inst.graph), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    from .lcl_construct import check_rules

    found = check_rules(_load_graph(args.file), args.doubly)
    text = "".join(f"{v.node} {v.rule_id} {v.description}\n" for v in found)
    _emit(text, args.out)
    print(f"violations={len(found)}", file=sys.stderr)
    return EXIT_NEGATIVE if found else EXIT_OK


def cmd_solve(args) -> int:
    from .lcl_construct import lcl_problem_of, solver

    g = _load_graph(args.file)
    m = _load_machine(args.machine)
    res = simulate(solver(m, args.doubly, args.step_cap), g, seed=args.seed)
    ok, bad = verify_lcl(lcl_problem_of(m, args.doubly), g, res.outputs)
    _emit(res.format(), args.out)
    print(f"max_round={res.max_round} verified={'yes' if ok else 'no'}", file=sys.stderr)
    if bad:
        print("rejected centers: " + " ".join(map(str, bad)), file=sys.stderr)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_experiment(args) -> int:
    from .lcl_construct import build_instance, lcl_problem_of, solver

    if args.s_min < 3:
        raise InputError(f"s={args.s_min}: a path shorter than 3 nodes is itself a rule violation")
    m = _load_machine(args.machine)
    alg = solver(m, args.doubly, args.step_cap)
    problem = lcl_problem_of(m, args.doubly)
    rows = ["s,n,max_round,T,bound,verified"]
    status = EXIT_OK
    for s in range(args.s_min, args.s_max + 1):
        try:
            T = turing.run(m, turing.ZERO * (s - 2), args.step_cap).steps
        except Timeout:
            rows.append(f"{s},,,,,incomplete")
            status = EXIT_NEGATIVE
            continue
        inst = build_instance(s, args.height if args.height else T + s, args.doubly)
        res = simulate(alg, inst.graph, seed=args.seed)
        ok, _ = verify_lcl(problem, inst.graph, res.outputs)
        bound = T + ROUND_CONSTANT * math.ceil(math.log2(inst.n))
        rows.append(f"{s},{inst.n},{res.max_round},{T},{bound},{'yes' if ok else 'no'}")
        if not ok or res.max_round > bound:
            status = EXIT_NEGATIVE
    _emit("\n".join(rows) + "\n", args.out)
    return status


def cmd_certify_lb(args) -> int:
    from .lcl_construct import certify_lower_bound

    m = _load_machine(args.machine)
    cert = certify_lower_bound(m, args.s, args.height, args.step_cap)
    _emit(cert.report(), args.out)
    return EXIT_OK if cert.passed else EXIT_NEGATIVE


# -- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--step-cap", type=int, default=turing.DEFAULT_STEP_CAP)
    common.add_argument("--out", help="write the main output here instead of stdout")
    common.add_argument("--record", help="append a JSON experiment record to this file")

    p = argparse.ArgumentParser(prog="lcl-landscape", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="bucket of the class excluding the given minors")
    c.add_argument("files", nargs="*")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("gen-tree", parents=[common], help="print the hierarchical tree T(k, s)")
    c.add_argument("k", type=int)
    c.add_argument("s", type=int)
    c.set_defaults(func=cmd_gen_tree)

    c = sub.add_parser("pathwidth", parents=[common], help="path decomposition of T(k, s)")
    c.add_argument("k", type=int)
    c.add_argument("s", type=int)
    c.add_argument("--exhaustive", action="store_true", help="also rule out width k-1 by search")
    c.set_defaults(func=cmd_pathwidth)

    c = sub.add_parser("growth", parents=[common], help="ball sizes against the layer bound")
    c.add_argument("file", nargs="?")
    c.add_argument("--tree", type=int, nargs=2, metavar=("K", "S"))
    c.add_argument("--root", type=int, default=0)
    c.add_argument("--radius", type=int, default=8)
    c.add_argument("--C", type=int, default=2)
    c.set_defaults(func=cmd_growth)

    c = sub.add_parser("tm-profile", parents=[common], help="running times on 0^s")
    c.add_argument("--machine", default="counter:2")
    c.add_argument("--s-max", type=int, default=10)
    c.set_defaults(func=cmd_tm_profile)

    c = sub.add_parser("build-instance", parents=[common], help="path + tree + grid instance")
    c.add_argument("s", type=int)
    c.add_argument("--height", type=int)
    c.add_argument("--doubly", action="store_true")
    c.add_argument("--machine", default="counter:2", help="sets the default height")
    c.set_defaults(func=cmd_build_instance)

    c = sub.add_parser("check", parents=[common], help="list rule violations of a labeled graph")
    c.add_argument("file")
    c.add_argument("--doubly", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("solve", parents=[common], help="run the local solver and verify its output")
    c.add_argument("file")
    c.add_argument("--machine", default="counter:2")
    c.add_argument("--doubly", action="store_true")
    c.set_defaults(func=cmd_solve)

    c = sub.add_parser("experiment", parents=[common], help="rounds against n over a range of s")
    c.add_argument("--machine", default="counter:2")
    c.add_argument("--s-min", type=int, default=3)
    c.add_argument("--s-max", type=int, default=5)
    c.add_argument("--height", type=int)
    c.add_argument("--doubly", action="store_true")
    c.set_defaults(func=cmd_experiment)

    c = sub.add_parser("certify-lb", parents=[common], help="indistinguishable-pair certificate")
    c.add_argument("s", type=int)
    c.add_argument("--machine", default="counter:2")
    c.add_argument("--height", type=int, help="override the grid height")
    c.set_defaults(func=cmd_certify_lb)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (InputError, LandscapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE if isinstance(exc, Timeout) else EXIT_INPUT
    if args.record:
        params = {k: v for k, v in vars(args).items() if k not in ("func", "record")}
        rec = ExperimentRecord(
            args.command, params, {"exit": code, "out": args.out}, args.seed,
            round(time.perf_counter() - start, 3),
        )
        with open(args.record, "a") as fh:
            fh.write(json.dumps(asdict(rec), sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
