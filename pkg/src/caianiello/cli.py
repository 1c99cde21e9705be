"""Command-line front end.

    caianiello bs incr|value|parse CODE
    caianiello useq --n N --count C
    caianiello vseq --n N --count C [--style table2|csv|json]
    caianiello mcp run (--net FILE | --theorem1 N) --steps S
    caianiello caianiello run --n N --k K [--params FILE] --steps S
    caianiello verify table2|theorem1|corollary1|lemmas|prop1|prop2 [...]
    caianiello align --n N --k K --horizon H [--params FILE]

Ranges are written ``a..b`` (inclusive). ``--json`` switches to JSON lines.
Exit status is 0 iff every check passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import bs_arith as bs
from . import counter_seq as cs
from . import memory_net as mn
from . import threshold_net as tn
from . import verify

TRACE_STYLES = ("table2", "csv", "json")


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def format_trace(trace, style: str = "table2", size: int | None = None) -> str:
    """Render configurations (neuron 1 first) one time step per row, highest neuron first."""
    rows = [[int(b) for b in np.asarray(x)[::-1]] for x in trace]
    if size is None:
        size = len(rows[0]) if rows else 0
    neurons = list(range(size, 0, -1))
    if style == "table2":
        lines = ["\t".join(["Neurones", *map(str, neurons)]), "Temps"]
        lines += ["\t".join([str(t), *map(str, r)]) for t, r in enumerate(rows)]
    elif style == "csv":
        lines = [",".join(f"x{j}" for j in neurons)]
        lines += [",".join(map(str, r)) for r in rows]
    elif style == "json":
        lines = [json.dumps({"neurons": neurons})]
        lines += [json.dumps({"t": t, "state": r}) for t, r in enumerate(rows)]
    else:
        raise ValueError(f"unknown trace style {style!r}")
    return "\n".join(lines) + "\n"


def load_params(path) -> tuple[tn.FamilyParams, np.ndarray | None]:
    """Eight family integers and an optional ``x0`` bit list (neuron 1 first)."""
    if path is None:
        return tn.COUNTER_PARAMS, None
    d = json.loads(Path(path).read_text(encoding="utf-8"))
    x0 = np.asarray(d["x0"], dtype=np.uint8) if "x0" in d else None
    return tn.FamilyParams.from_dict(d), x0


def _emit(reports, args, out) -> int:
    for r in reports:
        if args.json:
            out.write(json.dumps(r.to_dict(timing=args.timing)) + "\n")
        else:
            out.write(r.line(timing=args.timing) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_bs(args, out) -> int:
    code = bs.parse_code(args.code)
    if args.action == "incr":
        result = bs.bs_increment(code)
        out.write(f"{bs.format_code(result, 'pairs')} {bs.format_code(result)} "
                  f"value={bs.code_value(result)}\n")
    elif args.action == "value":
        out.write(f"{bs.code_value(code)}\n")
    else:
        out.write(f"{bs.format_code(code, 'pairs')} {bs.format_code(code)} "
                  f"width={code.width} value={bs.code_value(code)}\n")
    return 0


def cmd_useq(args, out) -> int:
    for j, code in enumerate(cs.u_sequence(args.n, args.count)):
        if args.json:
            out.write(json.dumps({"j": j, "code": bs.format_code(code, "pairs"),
                                  "value": bs.code_value(code)}) + "\n")
        else:
            out.write(f"{j}\t{bs.format_code(code, 'pairs')}\t{bs.code_value(code)}\n")
    return 0


def cmd_vseq(args, out) -> int:
    v = cs.v_initial(args.n)
    trace = []
    for _ in range(args.count):
        trace.append(np.array(v.neurons(), dtype=np.uint8))
        v = cs.v_successor(v)
    out.write(format_trace(trace, args.style, 2 * args.n + 2))
    return 0


def _summary_line(summary, out):
    out.write(json.dumps(summary.to_dict()) + "\n")


def cmd_mcp(args, out) -> int:
    if args.net:
        net, x0 = tn.load_net(args.net)
        if x0 is None:
            raise SystemExit("network file has no 'initial' configuration")
    else:
        net, x0 = tn.build_theorem1_net(args.theorem1)
    if args.orbit:
        _summary_line(tn.orbit(net, x0), out)
        return 0
    out.write(format_trace(tn.run(net, x0, args.steps), args.style, net.size))
    return 0


def cmd_caianiello(args, out) -> int:
    p, x0 = load_params(args.params)
    net = mn.build_simulating_net(args.n, args.k, p)
    window = mn.build_initial_memory(args.n, args.k, x0)
    if args.orbit:
        _summary_line(mn.window_orbit(net, window), out)
        return 0
    out.write(format_trace(mn.run(net, window, args.steps), args.style, net.size))
    return 0


def cmd_verify(args, out) -> int:
    what = args.what
    if what == "table2":
        report = verify.check_golden_trace()
        if not args.json:
            rows = [np.array(list(map(int, r.split()))[::-1], dtype=np.uint8)
                    for r in report.observed]
            out.write(format_trace(rows, "table2", 8))
            out.write(f"table2: {'PASS' if report.passed else 'FAIL'}\n")
            return 0 if report.passed else 1
        return _emit([report], args, out)
    if what == "theorem1":
        reports = verify.check_counter_cycles(args.n or parse_range("3..16"))
        if not args.json:
            for r in reports:
                n = r.params["n"]
                out.write(f"n={n} transient={r.observed['transient']} "
                          f"cycle={r.observed['cycle']} L=2^{n} "
                          f"{'PASS' if r.passed else 'FAIL'}\n")
            return 0 if all(r.passed for r in reports) else 1
        return _emit(reports, args, out)
    if what == "corollary1":
        if args.n or args.k:
            pairs = [(n, k) for n in (args.n or [3]) for k in (args.k or [1])]
        else:
            pairs = list(verify.MEMORY_GRID)
        reports = verify.check_memory_cycles(pairs)
        if not args.json:
            for r in reports:
                n, k = r.params["n"], r.params["k"]
                out.write(f"n={n} k={k} transient={r.observed['transient']} "
                          f"cycle={r.observed['cycle']} "
                          f"expected=k·2^{{nk}}={r.expected['cycle']} "
                          f"{'PASS' if r.passed else 'FAIL'}\n")
            return 0 if all(r.passed for r in reports) else 1
        return _emit(reports, args, out)
    if what == "lemmas":
        return _emit(verify.check_counter_laws(args.n or parse_range("3..8")), args, out)
    if what == "prop1":
        return _emit(verify.check_successor(args.n or parse_range("3..8")), args, out)
    if what == "prop2":
        reports = verify.check_simulation(args.instances, args.seed)
        status = _emit(reports, args, out)
        if not args.json:
            failed = [r for r in reports if not r.passed]
            out.write(f"prop2: {len(reports) - len(failed)}/{len(reports)} checks passed\n")
        return status
    raise SystemExit(f"unknown check {what!r}")


def cmd_align(args, out) -> int:
    p, x0 = load_params(args.params)
    report = verify.check_alignment(args.n, args.k, p, x0, args.horizon)
    return _emit([report], args, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON lines output")
    common.add_argument("--timing", action="store_true", help="include runtimes")
    parser = argparse.ArgumentParser(prog="caianiello", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bs", parents=[common], help="borrow-save code utilities")
    p.add_argument("action", choices=("incr", "value", "parse"))
    p.add_argument("code", help="e.g. 1T0 or '((1,0)(0,1)(0,0))', most significant first")
    p.set_defaults(func=cmd_bs)

    p = sub.add_parser("useq", parents=[common], help="print U_n(0..count-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_useq)

    p = sub.add_parser("vseq", parents=[common], help="print V_n(1..count)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--style", choices=TRACE_STYLES, default="table2")
    p.set_defaults(func=cmd_vseq)

    p = sub.add_parser("mcp", parents=[common], help="run a threshold network")
    p.add_argument("action", choices=("run",))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--net", help="network description JSON")
    src.add_argument("--theorem1", type=int, metavar="N", help="built-in 2N+2 counter net")
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--style", choices=TRACE_STYLES, default="table2")
    p.add_argument("--orbit", action="store_true", help="print transient/cycle summary")
    p.set_defaults(func=cmd_mcp)

    p = sub.add_parser("caianiello", parents=[common], help="run the memory-k simulating network")
    p.add_argument("action", choices=("run",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--params", help="JSON with a1..theta2 and optional x0")
    p.add_argument("--steps", type=int, default=16)
    p.add_argument("--style", choices=TRACE_STYLES, default="table2")
    p.add_argument("--orbit", action="store_true", help="print transient/cycle summary")
    p.set_defaults(func=cmd_caianiello)

    p = sub.add_parser("verify", parents=[common], help="run verification checks")
    p.add_argument("what", choices=("table2", "theorem1", "corollary1", "lemmas", "prop1", "prop2"))
    p.add_argument("--n", type=parse_range)
    p.add_argument("--k", type=parse_range)
    p.add_argument("--seed", type=int, default=20240601)
    p.add_argument("--instances", type=int, default=100)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("align", parents=[common], help="check the epoch alignment of the two networks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--horizon", type=int, default=64)
    p.add_argument("--params", help="JSON with a1..theta2 and optional x0")
    p.set_defaults(func=cmd_align)
    return parser


def run_command(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
