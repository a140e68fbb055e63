"""Distributed LEACH cluster-head election."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clustering import Clustering, assign_members
from .network import Network


def epoch_length(p: float) -> int:
    return max(1, int(round(1.0 / p)))


def leach_threshold(p: float, r: int, in_g: bool) -> float:
    """Election threshold for round ``r``; 0 for nodes that already served this epoch."""
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if r < 0:
        raise ValueError(f"round must be >= 0, got {r}")
    if not in_g:
        return 0.0
    denom = 1.0 - p * (r % epoch_length(p))
    if denom <= 0:
        raise ValueError(f"threshold undefined for p={p}, r={r}")
    t = p / denom
    # The last round of an evenly divisible epoch must elect everyone left in G.
    return 1.0 if abs(t - 1.0) < 1e-9 else min(t, 1.0)


@dataclass
class LeachState:
    p: float
    round: int = 0
    not_yet_ch: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if not 0 < self.p < 1:
            raise ValueError(f"p must lie in (0, 1), got {self.p}")


def elect(state: LeachState, network: Network, rng: np.random.Generator) -> list[int]:
    """Run one election round and advance ``state``.

    Returns the elected head ids, possibly none (callers fall back to direct
    transmission). Every alive node draws once per round, members of G or not,
    so the random stream does not depend on G's contents.
    """
    alive = network.alive
    if state.not_yet_ch is None or state.round % epoch_length(state.p) == 0:
        state.not_yet_ch = alive.copy()
    else:
        state.not_yet_ch &= alive
    t = leach_threshold(state.p, state.round, True)
    ids = np.flatnonzero(alive)
    draws = rng.random(len(ids))
    heads = ids[(draws < t) & state.not_yet_ch[ids]]
    state.not_yet_ch[heads] = False
    state.round += 1
    return heads.tolist()


def join_nearest(network: Network, heads) -> Clustering:
    """Non-heads join the head with the strongest advertisement, i.e. the closest one."""
    return assign_members(network, heads)
