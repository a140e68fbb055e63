"""Command line entry point: ``wsnsim {run,compare,oracle}``."""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from .config import ConfigError, ExperimentConfig, dump_config, load_config, parse_seeds
from .network import deploy
from .oracle import exhaustive_best
from .simulation import PROTOCOLS, LifetimeSummary, compare, run_simulation

ROUND_HEADER = ["round", "alive", "total_energy_j", "head_ids", "jumps"]
SUMMARY_HEADER = ["protocol", "seed", "fnd", "hnd", "lnd"]


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def write_rounds(path: Path, summary: LifetimeSummary):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = _writer(fh)
        w.writerow(ROUND_HEADER)
        for r in summary.rounds:
            w.writerow([r.round, r.alive, repr(r.total_energy), " ".join(map(str, r.heads)), r.jumps])


def write_trace(path: Path, summary: LifetimeSummary):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = _writer(fh)
        w.writerow(["round", "generation", "best_cost"])
        for r in summary.rounds:
            for g, c in enumerate(r.cost_trace):
                w.writerow([r.round, g, repr(c)])


def write_jumps(path: Path, summary: LifetimeSummary):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = _writer(fh)
        w.writerow(["round", "generation", "firefly"])
        for r in summary.rounds:
            for g, m in r.jump_events:
                w.writerow([r.round, g, m])


def write_summary(path: Path, summaries):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = _writer(fh)
        w.writerow(SUMMARY_HEADER)
        for s in summaries:
            w.writerow([s.protocol, s.seed, s.fnd, s.hnd, s.lnd])


def _emit(out: Path, config: ExperimentConfig, summaries, trace: bool):
    out.mkdir(parents=True, exist_ok=True)
    (out / "config.txt").write_text(dump_config(config), encoding="utf-8")
    for s in summaries:
        stem = f"{s.protocol}_seed{s.seed}"
        write_rounds(out / f"{stem}.csv", s)
        if trace and s.protocol != "leach":
            write_trace(out / f"{stem}_trace.csv", s)
            if s.protocol == "jfa":
                write_jumps(out / f"{stem}_jumps.csv", s)
    write_summary(out / "summary.csv", summaries)


def _output_dir(args, config: ExperimentConfig) -> Path:
    return Path(args.out or os.environ.get("WSNSIM_OUT") or config.output_dir)


def cmd_run(args, config: ExperimentConfig) -> int:
    seed = args.seed if args.seed is not None else config.seeds[0]
    summary = run_simulation(config, args.protocol, seed)
    out = _output_dir(args, config)
    _emit(out, config, [summary], args.trace)
    print(f"{summary.protocol} seed={seed}: fnd={summary.fnd} hnd={summary.hnd} lnd={summary.lnd} -> {out}")
    return 0


def cmd_compare(args, config: ExperimentConfig) -> int:
    seeds = parse_seeds(args.seeds) if args.seeds else list(config.seeds)
    protocols = args.protocols.split(",") if args.protocols else list(PROTOCOLS)
    stats = compare(config, seeds, protocols, workers=args.workers)
    out = _output_dir(args, config)
    _emit(out, config, [s for seed in seeds for p in protocols
                        for s in stats[p].summaries if s.seed == seed], args.trace)
    print(f"{len(seeds)} seeds -> {out}")
    print(f"{'protocol':<9}{'fnd med':>9}{'hnd med':>9}{'lnd med':>9}{'fnd mean':>10}{'hnd mean':>10}{'lnd mean':>10}")
    for p in protocols:
        t = stats[p].table()
        print(f"{p:<9}{t['median_fnd']:>9.1f}{t['median_hnd']:>9.1f}{t['median_lnd']:>9.1f}"
              f"{t['mean_fnd']:>10.1f}{t['mean_hnd']:>10.1f}{t['mean_lnd']:>10.1f}")
    return 0


def cmd_oracle(args, config: ExperimentConfig) -> int:
    seed = args.seed if args.seed is not None else config.seeds[0]
    cfg = config.replace(node_count=args.nodes)
    network = deploy(cfg.field, seed)
    best, heads, costs = exhaustive_best(network, args.k, cfg.weights)
    print(f"nodes={args.nodes} k={args.k} seed={seed} subsets={len(costs)}")
    print(f"best_heads={' '.join(map(str, heads))}")
    print(f"best_cost={best!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wsnsim", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file (defaults apply when omitted)")
    common.add_argument("--out", help="output directory (overrides WSNSIM_OUT and output_dir)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[common], help="one protocol, one seed")
    p.add_argument("--protocol", choices=PROTOCOLS, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--trace", action="store_true", help="also write optimizer cost traces and jump events")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", parents=[common], help="all protocols over a seed list")
    p.add_argument("--seeds", help="e.g. 0-19 or 1,2,3 (default: config seeds)")
    p.add_argument("--protocols", help="comma-separated subset of " + ",".join(PROTOCOLS))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive best head set on a tiny network")
    p.add_argument("--nodes", type=int, default=6)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config) if args.config else ExperimentConfig().resolved()
        if args.command == "compare" and args.protocols:
            unknown = set(args.protocols.split(",")) - set(PROTOCOLS)
            if unknown:
                raise ConfigError(f"unknown protocol(s): {', '.join(sorted(unknown))}")
        return args.func(args, config)
    except (ConfigError, OSError, ValueError) as exc:
        print(f"wsnsim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
