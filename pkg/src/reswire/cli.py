"""Command-line interface: rewire, stats, bounds, curve, verify.

Exit codes: 0 success (including truncated plans), 1 verify-suite failure,
2 unreadable/malformed input, 3 hypothesis violation (bipartite input to
resistance-form bounds).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bd
from . import graph as gr
from . import rewiring as rw
from . import spectral as sp
from .errors import BipartiteGraphError, EdgeListParseError, ReswireError
from .verify import SUITES, run_suites


def _fmt(x):
    """17-significant-digit floats for lossless round-trips; containers
    handled recursively."""
    if isinstance(x, float):
        return float(format(x, ".17g"))
    if isinstance(x, dict):
        return {k: _fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    return x


def _dump_json(obj, path=None):
    text = json.dumps(_fmt(obj), indent=2) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _write_text(text, path=None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path) -> gr.Graph:
    return gr.from_edge_list(Path(path).read_text())


def _plan_payload(input_name, plan: rw.RewirePlan) -> dict:
    payload = {
        "input": str(input_name),
        "method": plan.method,
        "k": plan.k,
        "rtot_initial": plan.rtot_initial,
        "edges": [
            {"u": e.u, "v": e.v, "delta": e.delta,
             "rtot_after": plan.rtot_trajectory[i + 1]}
            for i, e in enumerate(plan.added)
        ],
        "rtot_final": plan.rtot_final,
        "truncated": plan.truncated,
    }
    if plan.seed is not None:
        payload["seed"] = plan.seed
    return payload


def cmd_rewire(args) -> int:
    inputs = _gather_inputs(args)
    if inputs is None:
        return 2
    any_ok = False
    for path in inputs:
        try:
            g = _load_graph(path)
        except (OSError, EdgeListParseError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            if len(inputs) == 1:
                return 2
            continue
        plan = rw.rewire(g, args.k, method=args.method, seed=args.seed)
        payload = _plan_payload(path, plan)
        if args.output:
            out = Path(args.output)
            if len(inputs) > 1:
                out.mkdir(parents=True, exist_ok=True)
                stem = Path(path).stem
                edge_path = out / f"{stem}.rewired.el"
                plan_path = out / f"{stem}.plan.json"
            else:
                edge_path = out
                plan_path = out.with_suffix(out.suffix + ".plan.json")
            edge_path.write_text(gr.to_edge_list(g, plan.edge_list()))
            _dump_json(payload, plan_path)
        else:
            _dump_json(payload)
        any_ok = True
    return 0 if any_ok else 2


def cmd_stats(args) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, EdgeListParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    connected = g.num_components == 1 and g.n > 0
    bipartite = gr.is_bipartite(g)
    payload = {
        "input": str(args.input),
        "n": g.n,
        "m": g.m,
        "components": g.num_components,
        "rtot": sp.total_resistance(g),
        "spectral_gap": sp.spectral_gap(g) if connected and g.n > 1 else None,
        "rmax": sp.rmax(g) if connected and g.n > 1 else None,
        "bipartite_per_component": bipartite,
        "bipartite": all(bipartite),
    }
    _dump_json(payload, args.output)
    return 0


def cmd_bounds(args) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, EdgeListParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    p = bd.BoundParams(alpha=args.alpha, beta=args.beta, r=args.r, mu=args.mu)
    payload = {
        "input": str(args.input),
        "params": {"alpha": args.alpha, "beta": args.beta, "r": args.r,
                   "mu": args.mu},
    }
    try:
        payload["total_bound"] = bd.total_jacobian_bound(g, p)
        payload["spectral_gap_bound"] = bd.spectral_gap_jacobian_bound(g, p)
        if args.pair:
            u, v = args.pair
            adj = bd.jacobian_bound_adjacency(g, u, v, p)
            res = bd.jacobian_bound_resistance(g, u, v, p)
            payload["pair"] = {
                "u": u, "v": v,
                "adjacency_bound": adj,
                "resistance_bound": res,
                "resistance_bound_negative": res < 0,
            }
    except BipartiteGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ReswireError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _dump_json(payload, args.output)
    return 0


def _gather_inputs(args):
    if getattr(args, "input_dir", None):
        files = sorted(Path(args.input_dir).glob("*.el"))
        if not files:
            files = sorted(
                p for p in Path(args.input_dir).iterdir() if p.is_file()
            )
        if not files:
            print(f"error: no input files in {args.input_dir}", file=sys.stderr)
            return None
        return files
    if args.input:
        return [args.input]
    print("error: --input or --input-dir required", file=sys.stderr)
    return None


def cmd_curve(args) -> int:
    inputs = _gather_inputs(args)
    if inputs is None:
        return 2
    trajectories = []
    for path in inputs:
        try:
            g = _load_graph(path)
        except (OSError, EdgeListParseError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            continue
        plan = rw.rewire(g, args.k, method=args.method, seed=args.seed)
        trajectories.append(plan.rtot_trajectory)
    if not trajectories:
        return 2
    if len(trajectories) == 1:
        lines = ["edges_added,rtot"]
        for i, r in enumerate(trajectories[0]):
            lines.append(f"{i},{sp.format_sig(r)}")
    else:
        lines = ["edges_added,mean_rtot,graph_count"]
        max_len = max(len(t) for t in trajectories)
        for i in range(max_len):
            vals = [t[i] for t in trajectories if i < len(t)]
            mean = sum(vals) / len(vals)
            lines.append(f"{i},{sp.format_sig(mean)},{len(vals)}")
    _write_text("\n".join(lines) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else None
    if args.suite and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; "
              f"choose from {sorted(SUITES)}", file=sys.stderr)
        return 2
    results = run_suites(
        names, seed=args.seed, trials=args.trials, n_max=args.n,
        tolerance=args.tolerance,
    )
    all_ok = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = (f"{status} {res.name}: max deviation {res.max_deviation:.3g} "
                f"(tolerance {res.tolerance:.3g})")
        if res.detail:
            line += f" [{res.detail}]"
        print(line)
        all_ok = all_ok and res.passed
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reswire",
        description="Effective-resistance analysis and greedy graph rewiring",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, directory=False):
        p.add_argument("--input", help="edge-list file")
        if directory:
            p.add_argument("--input-dir", help="directory of edge-list files")
        p.add_argument("--output", help="output path (default: stdout)")

    p_rewire = sub.add_parser("rewire", help="add edges greedily or at random")
    add_io(p_rewire, directory=True)
    p_rewire.add_argument("--k", type=int, required=True)
    p_rewire.add_argument("--method", choices=["gtr", "random"], default="gtr")
    p_rewire.add_argument("--seed", type=int, default=0)
    p_rewire.set_defaults(func=cmd_rewire)

    p_stats = sub.add_parser("stats", help="graph summary as JSON")
    add_io(p_stats)
    p_stats.set_defaults(func=cmd_stats)

    p_bounds = sub.add_parser("bounds", help="Jacobian upper bounds as JSON")
    add_io(p_bounds)
    p_bounds.add_argument("--alpha", type=float, default=1.0)
    p_bounds.add_argument("--beta", type=float, default=1.0)
    p_bounds.add_argument("--r", type=int, default=0)
    p_bounds.add_argument("--mu", type=float, default=None)
    p_bounds.add_argument("--pair", type=int, nargs=2, metavar=("U", "V"))
    p_bounds.set_defaults(func=cmd_bounds)

    p_curve = sub.add_parser("curve", help="total resistance vs edges added")
    add_io(p_curve, directory=True)
    p_curve.add_argument("--k", type=int, required=True)
    p_curve.add_argument("--method", choices=["gtr", "random"], default="gtr")
    p_curve.add_argument("--seed", type=int, default=0)
    p_curve.set_defaults(func=cmd_curve)

    p_verify = sub.add_parser("verify", help="run self-check oracle suites")
    p_verify.add_argument("--suite", help="run a single named suite")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--n", type=int, default=None, dest="n")
    p_verify.add_argument("--tolerance", type=float, default=None)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
