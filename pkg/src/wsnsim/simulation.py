"""Round-based lifetime simulation and multi-seed protocol comparison."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .clustering import assign_members
from .config import ExperimentConfig
from .firefly import FireflySwarm
from .jumper import JumperSwarm
from .leach import LeachState, elect
from .network import PROTOCOL_STREAM, Network, cluster_count, deploy, stream_rng
from .radio import RadioParams, ch_round_energy, tx_energy

PROTOCOLS = ("leach", "ffa", "jfa")


@dataclass
class Selection:
    heads: list[int]
    cost_trace: list[float] = field(default_factory=list)
    jump_events: list[tuple[int, int]] = field(default_factory=list)


class Leach:
    name = "leach"

    def __init__(self, p: float):
        self.state = LeachState(p)

    def select(self, network: Network, rng: np.random.Generator) -> Selection:
        return Selection(elect(self.state, network, rng))


class Firefly:
    name = "ffa"

    def __init__(self, config: ExperimentConfig):
        self.config = config

    def _swarm(self, network, k, rng):
        c = self.config
        return FireflySwarm(network, k, c.firefly, c.weights, rng, c.field.side_length)

    def select(self, network: Network, rng: np.random.Generator) -> Selection:
        k = cluster_count(network.alive_count, self.config.field.cluster_fraction)
        res = self._swarm(network, k, rng).run()
        return Selection(res.heads.tolist(), res.cost_trace, res.jump_events)


class JumperFirefly(Firefly):
    name = "jfa"

    def _swarm(self, network, k, rng):
        c = self.config
        return JumperSwarm(network, k, c.firefly, c.jumper, c.weights, rng, c.field.side_length)


def make_protocol(name: str, config: ExperimentConfig):
    name, config = name.lower(), config.resolved()
    if name == "leach":
        return Leach(config.leach_p)
    if name == "ffa":
        return Firefly(config)
    if name == "jfa":
        return JumperFirefly(config)
    raise ValueError(f"unknown protocol {name!r}; expected one of {', '.join(PROTOCOLS)}")


@dataclass
class RoundRecord:
    round: int
    alive: int
    total_energy: float
    heads: list[int]
    per_node_dissipation: np.ndarray
    jumps: int = 0
    cost_trace: list[float] = field(default_factory=list)
    jump_events: list[tuple[int, int]] = field(default_factory=list)


@dataclass
class LifetimeSummary:
    protocol: str
    seed: int
    initial_total_energy: float
    node_count: int
    fnd: int = 0
    hnd: int = 0
    lnd: int = 0
    rounds: list[RoundRecord] = field(default_factory=list)
    positions: np.ndarray | None = field(default=None, repr=False)

    def alive_curve(self) -> np.ndarray:
        return np.array([self.node_count] + [r.alive for r in self.rounds])


def round_charges(network: Network, heads, radio: RadioParams) -> np.ndarray:
    """Energy each node owes for one round, from the start-of-round state."""
    charge = np.zeros(len(network))
    alive = network.alive_ids
    bits = radio.payload_bits
    d_bs = network.distance_to_bs()
    if len(heads) == 0:
        charge[alive] = tx_energy(radio, bits, d_bs[alive])
        return charge
    clustering = assign_members(network, heads)
    heads = np.asarray(heads, dtype=int)
    owner = heads[clustering.member_of[alive]]
    members = alive[owner != alive]
    d_head = np.hypot(*(network.positions[members] - network.positions[heads[clustering.member_of[members]]]).T)
    charge[members] = tx_energy(radio, bits, d_head)
    sizes = clustering.sizes() - 1
    charge[heads] = ch_round_energy(radio, sizes, d_bs[heads])
    return charge


def run_round(network: Network, protocol, radio: RadioParams, rng: np.random.Generator,
              round_no: int = 1) -> RoundRecord:
    """Select heads, bill every alive node, and apply the bills at once.

    Nodes whose bill exceeds their residual still finish the round and drop to
    zero. ``network.energy`` is updated in place.
    """
    if network.alive_count == 0:
        raise ValueError("no alive node left to run a round")
    sel = protocol.select(network, rng)
    charge = round_charges(network, sel.heads, radio)
    before = network.energy.copy()
    network.energy = np.maximum(before - charge, 0.0)
    return RoundRecord(
        round=round_no,
        alive=network.alive_count,
        total_energy=math.fsum(network.energy),
        heads=list(sel.heads),
        per_node_dissipation=before - network.energy,
        jumps=len(sel.jump_events),
        cost_trace=sel.cost_trace,
        jump_events=sel.jump_events,
    )


def simulate(network: Network, protocol, radio: RadioParams, rng: np.random.Generator,
             name: str = "", seed: int = 0) -> LifetimeSummary:
    """Run rounds on ``network`` until every node is dead."""
    n = len(network)
    summary = LifetimeSummary(name or getattr(protocol, "name", ""), seed,
                              math.fsum(network.energy), n, positions=network.positions.copy())
    r = 0
    while network.alive_count > 0:
        r += 1
        rec = run_round(network, protocol, radio, rng, r)
        summary.rounds.append(rec)
        if not summary.fnd and rec.alive < n:
            summary.fnd = r
        if not summary.hnd and rec.alive <= n / 2:
            summary.hnd = r
    summary.lnd = r
    return summary


def run_simulation(config: ExperimentConfig, protocol: str, seed: int) -> LifetimeSummary:
    """Deploy with ``seed`` and run ``protocol`` to the last node death."""
    network = deploy(config.field, seed)
    return simulate(network, make_protocol(protocol, config), config.radio,
                    stream_rng(seed, PROTOCOL_STREAM), protocol.lower(), seed)


@dataclass
class ProtocolStats:
    protocol: str
    summaries: list[LifetimeSummary]

    def metric(self, name: str) -> np.ndarray:
        return np.array([getattr(s, name) for s in self.summaries])

    def median(self, name: str) -> float:
        return float(np.median(self.metric(name)))

    def mean(self, name: str) -> float:
        return float(np.mean(self.metric(name)))

    def alive_curves(self) -> list[np.ndarray]:
        return [s.alive_curve() for s in self.summaries]

    def table(self) -> dict[str, float]:
        return {f"{agg}_{m}": getattr(self, agg)(m)
                for m in ("fnd", "hnd", "lnd") for agg in ("median", "mean")}


def _run(args):
    return run_simulation(*args)


def compare(config: ExperimentConfig, seeds, protocols=PROTOCOLS, workers: int = 1) -> dict[str, ProtocolStats]:
    """Run every protocol on the same per-seed deployments.

    Runs are independent; ``workers > 1`` fans them out over processes with
    results identical to a sequential pass.
    """
    jobs = [(config, p, s) for s in seeds for p in protocols]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run, jobs))
    else:
        results = [_run(j) for j in jobs]
    return {p: ProtocolStats(p, [r for r in results if r.protocol == p]) for p in protocols}
