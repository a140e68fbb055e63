"""Nearest-head cluster assignment and the clustering cost.

The cost of a head set is ``beta * f1 + (1 - beta) * f2`` where ``f1`` is the
largest mean node-to-head distance over clusters (heads count as members at
distance zero) and ``f2`` is the network's total initial energy over the heads'
current energy. Lower is better.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import batch_cost
from .network import Network


@dataclass(frozen=True)
class CostWeights:
    beta: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [0, 1], got {self.beta}")


@dataclass(frozen=True)
class Clustering:
    """``member_of[i]`` indexes ``head_ids`` for alive node ``i`` and is -1 for dead nodes."""

    head_ids: np.ndarray
    member_of: np.ndarray

    def members(self, k: int) -> np.ndarray:
        """Node ids in cluster ``k``, head included."""
        return np.flatnonzero(self.member_of == k)

    def sizes(self) -> np.ndarray:
        return np.bincount(self.member_of[self.member_of >= 0], minlength=len(self.head_ids))


def euclidean(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.sqrt(np.sum((a - b) ** 2)))


def assign_members(network: Network, heads) -> Clustering:
    """Attach every alive node to its closest head.

    Equidistant nodes go to the head listed first; heads belong to themselves.
    """
    heads = np.asarray(heads, dtype=int).reshape(-1)
    alive = network.alive_ids
    if len(heads) == 0:
        if len(alive):
            raise ValueError("cannot cluster alive nodes without any head")
        return Clustering(heads, np.full(len(network), -1))
    if len(np.unique(heads)) != len(heads):
        raise ValueError("cluster heads must be distinct")
    if not np.all(network.alive[heads]):
        raise ValueError("cluster heads must be alive")

    diff = network.positions[alive, None, :] - network.positions[None, heads, :]
    dist = np.sqrt(np.sum(diff**2, axis=-1))
    member_of = np.full(len(network), -1)
    member_of[alive] = np.argmin(dist, axis=1)
    member_of[heads] = np.arange(len(heads))
    return Clustering(heads, member_of)


def f1(clustering: Clustering, network: Network) -> float:
    worst = 0.0
    for k, head in enumerate(clustering.head_ids):
        members = clustering.members(k)
        d = np.sqrt(np.sum((network.positions[members] - network.positions[head]) ** 2, axis=1))
        worst = max(worst, float(d.sum() / len(members)))
    return worst


def f2(network: Network, heads) -> float:
    head_energy = math.fsum(network.energy[np.asarray(heads, dtype=int)])
    if head_energy <= 0:
        raise ValueError("cluster heads carry no energy; f2 is undefined")
    return math.fsum(network.initial_energy) / head_energy


def cost(weights: CostWeights, clustering: Clustering, network: Network) -> float:
    return (weights.beta * f1(clustering, network)
            + (1.0 - weights.beta) * f2(network, clustering.head_ids))


def cost_of_heads(weights: CostWeights, network: Network, heads) -> float:
    return cost(weights, assign_members(network, heads), network)


class BatchCost:
    """Cost of many head sets at once against a fixed network snapshot.

    Used by the swarm optimizers; agrees with :func:`cost_of_heads` row by row.
    """

    def __init__(self, network: Network, weights: CostWeights):
        self.beta = float(weights.beta)
        alive = network.alive_ids
        pts = network.positions[alive]
        diff = pts[:, None, :] - pts[None, :, :]
        self._dist = np.sqrt(np.sum(diff**2, axis=-1))       # alive x alive
        self._slot = np.full(len(network), -1)
        self._slot[alive] = np.arange(len(alive))
        self.energy = network.energy
        self.energy_total = math.fsum(network.initial_energy)

    def __call__(self, heads: np.ndarray) -> np.ndarray:
        heads = np.atleast_2d(np.asarray(heads, dtype=np.int64))
        if np.any(self._slot[heads] < 0):
            raise ValueError("cluster heads must be alive")
        return batch_cost(heads, self._slot, self._dist, self.energy, self.energy_total, self.beta)
