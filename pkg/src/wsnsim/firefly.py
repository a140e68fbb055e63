"""Centralized cluster-head search with the firefly algorithm.

A firefly carries K continuous points in the field. Each generation the points
are snapped onto distinct eligible nodes, the resulting head set is scored with
the clustering cost, and every firefly drifts toward each brighter one. A
firefly with no brighter peer (the current leader, or a whole swarm stuck on
one head set) takes a plain random step instead. Brightness is
``1 / (1 + cost)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._kernels import attraction_pass, greedy_snap
from .clustering import BatchCost, CostWeights
from .network import Network


@dataclass(frozen=True)
class FireflyParams:
    """Swarm settings.

    ``gamma`` and ``alpha`` left as ``None`` scale with the field side M:
    ``gamma = 1/M**2`` and ``alpha = 0.05*M``.
    """

    population: int = 25
    max_generations: int = 50
    beta0: float = 1.0
    gamma: float | None = None
    alpha: float | None = None
    exponent: float = 2.0

    def __post_init__(self):
        if self.population < 2:
            raise ValueError(f"population must be >= 2, got {self.population}")
        if self.max_generations < 1:
            raise ValueError(f"max_generations must be >= 1, got {self.max_generations}")
        if not self.beta0 > 0:
            raise ValueError(f"beta0 must be > 0, got {self.beta0}")
        if self.gamma is not None and self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if self.alpha is not None and self.alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")
        if not self.exponent > 0:
            raise ValueError(f"exponent must be > 0, got {self.exponent}")

    def resolved(self, side_length: float) -> FireflyParams:
        return FireflyParams(
            self.population, self.max_generations, self.beta0,
            1.0 / side_length**2 if self.gamma is None else self.gamma,
            0.05 * side_length if self.alpha is None else self.alpha,
            self.exponent,
        )


@dataclass
class Candidate:
    positions: np.ndarray
    snapped_heads: np.ndarray
    cost: float

    @property
    def brightness(self) -> float:
        return 1.0 / (1.0 + self.cost)


@dataclass
class OptimizationResult:
    heads: np.ndarray
    best_cost: float
    cost_trace: list[float]
    jumps: int = 0
    jump_events: list[tuple[int, int]] = field(default_factory=list)


def intensity_at(i0: float, r: float, gamma: float) -> float:
    return i0 * math.exp(-gamma * r * r)


def attractiveness(params: FireflyParams, r):
    return params.beta0 * np.exp(-params.gamma * np.asarray(r, dtype=float) ** params.exponent)


def _as_vector(x) -> np.ndarray:
    if isinstance(x, Candidate):
        x = x.positions
    return np.asarray(x, dtype=float).ravel()


def firefly_distance(a, b) -> float:
    """Distance between two fireflies in the flattened 2K-dimensional position space."""
    a, b = _as_vector(a), _as_vector(b)
    if a.shape != b.shape:
        raise ValueError(f"fireflies carry different numbers of heads: {a.size // 2} vs {b.size // 2}")
    return float(np.sqrt(np.sum((a - b) ** 2)))


def move_towards(xi, xj, params: FireflyParams, rng=None, side_length=None, noise=None):
    """One attraction step of firefly ``xi`` toward the brighter ``xj``.

    ``noise`` overrides the uniform [-0.5, 0.5] draw (one value per coordinate).
    The result is clipped to ``[0, side_length]`` when a side length is given.
    """
    xi, xj = _as_vector(xi), _as_vector(xj)
    if params.gamma is None or params.alpha is None:
        if side_length is None:
            raise ValueError("gamma/alpha default to the field size; pass side_length or set them")
        params = params.resolved(side_length)
    if noise is None:
        noise = rng.uniform(-0.5, 0.5, size=xi.shape) if rng is not None else np.zeros_like(xi)
    r = np.sqrt(np.sum((xi - xj) ** 2))
    out = xi + attractiveness(params, r) * (xj - xi) + params.alpha * np.asarray(noise)
    if side_length is not None:
        out = np.clip(out, 0.0, side_length)
    return out


def eligible_candidates(network: Network, k: int = 1) -> np.ndarray:
    """Alive nodes holding at least the mean alive energy; every alive node if that leaves fewer than ``k``."""
    alive = network.alive_ids
    e = network.energy[alive]
    rich = alive[e >= e.mean()] if len(alive) else alive
    return rich if len(rich) >= k else alive


def snap_to_nodes(positions, eligible, node_positions) -> np.ndarray:
    """Map each point, in order, to the nearest eligible node not already taken.

    ``eligible`` lists node ids; distance ties go to the lowest id.
    """
    return _snap_batch(np.asarray(positions, dtype=float).reshape(1, -1, 2),
                       np.asarray(eligible, dtype=int), np.asarray(node_positions, dtype=float))[0]


def _snap_batch(points: np.ndarray, eligible: np.ndarray, node_positions: np.ndarray) -> np.ndarray:
    S, K, _ = points.shape
    if len(eligible) < K:
        raise ValueError(f"need at least {K} eligible nodes, have {len(eligible)}")
    ids = np.sort(np.asarray(eligible, dtype=np.int64))
    return greedy_snap(np.ascontiguousarray(points, dtype=float), ids,
                       np.ascontiguousarray(node_positions[ids], dtype=float))


class FireflySwarm:
    """One optimizer run over a frozen network snapshot.

    Subclasses hook into :meth:`before_generation`, :meth:`after_evaluation`
    and :meth:`after_move`; the base hooks draw nothing from ``rng`` so a
    subclass that never acts reproduces the plain run exactly.
    """

    def __init__(self, network: Network, k: int, params: FireflyParams,
                 weights: CostWeights, rng: np.random.Generator, side_length: float):
        if k < 1:
            raise ValueError(f"need at least one cluster head, got k={k}")
        if network.alive_count < k:
            raise ValueError(f"cannot place {k} heads among {network.alive_count} alive nodes")
        self.network = network
        self.k = k
        self.params = params.resolved(side_length)
        self.rng = rng
        self.side_length = float(side_length)
        self.eligible = eligible_candidates(network, k)
        self.batch_cost = BatchCost(network, weights)
        S = self.params.population
        self.x = np.stack([self.random_placement() for _ in range(S)])   # (S, K, 2)
        self.heads = None
        self.costs = None
        self.best_cost = math.inf
        self.best_heads = None
        self.trace: list[float] = []
        self.generation = 0

    def random_placement(self) -> np.ndarray:
        ids = self.rng.choice(self.eligible, size=self.k, replace=False)
        return self.network.positions[ids].copy()

    def snap(self, x: np.ndarray) -> np.ndarray:
        return _snap_batch(x, self.eligible, self.network.positions)

    def evaluate(self):
        self.heads = self.snap(self.x)
        self.costs = self.batch_cost(self.heads)
        i = int(np.argmin(self.costs))
        if self.costs[i] < self.best_cost:
            self.best_cost = float(self.costs[i])
            self.best_heads = self.heads[i].copy()
        self.trace.append(self.best_cost)

    def move(self):
        """Pairwise attraction pass.

        Brightness is frozen at the start of the pass and each firefly is pulled
        toward the start-of-pass positions of brighter ones, in index order.
        Fireflies that nobody outshines wander by their own noise draw.
        """
        p = self.params
        S = p.population
        x = self.x.reshape(S, -1)
        noise = p.alpha * self.rng.uniform(-0.5, 0.5, size=(S, S, x.shape[1]))
        attraction_pass(x, 1.0 / (1.0 + self.costs), noise, float(p.beta0), float(p.gamma),
                        float(p.exponent), self.side_length)
        self.x = x.reshape(S, self.k, 2)

    def before_generation(self):
        pass

    def after_evaluation(self):
        pass

    def after_move(self):
        pass

    def run(self) -> OptimizationResult:
        for self.generation in range(self.params.max_generations):
            self.before_generation()
            self.evaluate()
            self.after_evaluation()
            self.move()
            self.after_move()
        return self.result()

    def result(self) -> OptimizationResult:
        return OptimizationResult(self.best_heads.copy(), self.best_cost, list(self.trace))


def optimize(network: Network, k: int, params: FireflyParams, weights: CostWeights,
             rng: np.random.Generator, side_length: float = 200.0) -> OptimizationResult:
    """Search for ``k`` cluster heads minimizing the clustering cost."""
    return FireflySwarm(network, k, params, weights, rng, side_length).run()
