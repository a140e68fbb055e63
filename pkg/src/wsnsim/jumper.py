"""Jumper firefly: a status table watches every firefly and re-seeds the hopeless ones.

Per firefly the table keeps its situation (current positions), fitness
(``1 / (1 + cost)``, higher is better), how often it was the worst of its
generation, and a qualification that accumulates fitness over the run. A
firefly that has been worst most often (more than ``eta`` times), holds the
lowest qualification, and sits more than ``omega`` below the mean
qualification jumps to a fresh random head set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clustering import CostWeights
from .firefly import FireflyParams, FireflySwarm, OptimizationResult
from .network import Network


@dataclass(frozen=True)
class JumperParams:
    eta: int = 5
    omega: float = 0.01

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError(f"eta must be >= 0, got {self.eta}")
        if self.omega < 0:
            raise ValueError(f"omega must be >= 0, got {self.omega}")


@dataclass
class StatusTable:
    situation: np.ndarray
    fitness: np.ndarray
    worst: np.ndarray
    qualification: np.ndarray

    @classmethod
    def empty(cls, population: int, dims: int) -> StatusTable:
        return cls(np.zeros((population, dims)), np.zeros(population),
                   np.zeros(population, dtype=int), np.zeros(population))

    def copy(self) -> StatusTable:
        return StatusTable(self.situation.copy(), self.fitness.copy(),
                           self.worst.copy(), self.qualification.copy())


def fitness_of(cost):
    return 1.0 / (1.0 + cost)


def update_qualification(table: StatusTable, i: int, fitness: float) -> StatusTable:
    table.fitness[i] = fitness
    table.qualification[i] += fitness
    return table


def update_worst(table: StatusTable, costs) -> StatusTable:
    """Bump the worst counter of every firefly tied for the highest cost."""
    costs = np.asarray(costs, dtype=float)
    table.worst[costs == costs.max()] += 1
    return table


def hazard_mask(table: StatusTable, params: JumperParams) -> np.ndarray:
    """Fireflies that are worst most often beyond ``eta``, least qualified, and ``omega`` below the mean."""
    w, q = table.worst, table.qualification
    return (w == w.max()) & (w > params.eta) & (q == q.min()) & (q < q.mean() - params.omega)


def is_hazard(table: StatusTable, m: int, params: JumperParams) -> bool:
    return bool(hazard_mask(table, params)[m])


def apply_jump(table: StatusTable, m: int, situation, fitness: float, mean_qualification: float) -> StatusTable:
    """Record a jump of firefly ``m``; the worst counter starts over."""
    table.situation[m] = np.ravel(situation)
    table.fitness[m] = fitness
    table.qualification[m] = mean_qualification
    table.worst[m] = 0
    return table


class JumperSwarm(FireflySwarm):
    def __init__(self, network: Network, k: int, params: FireflyParams, jumper: JumperParams,
                 weights: CostWeights, rng: np.random.Generator, side_length: float):
        super().__init__(network, k, params, weights, rng, side_length)
        self.jumper = jumper
        self.table = StatusTable.empty(self.params.population, 2 * k)
        self.table.situation[:] = self.x.reshape(self.params.population, -1)
        self.jump_events: list[tuple[int, int]] = []

    def hazards(self) -> list[int]:
        return np.flatnonzero(hazard_mask(self.table, self.jumper)).tolist()

    def jump(self, m: int, mean_qualification: float):
        fresh = self.random_placement()
        fresh_cost = float(self.batch_cost(self.snap(fresh[None]))[0])
        self.x[m] = fresh
        apply_jump(self.table, m, fresh, fitness_of(fresh_cost), mean_qualification)
        self.jump_events.append((self.generation, m))

    def before_generation(self):
        hazardous = self.hazards()
        if hazardous:
            mean_q = float(self.table.qualification.mean())
            for m in hazardous:
                self.jump(m, mean_q)

    def after_evaluation(self):
        fit = fitness_of(self.costs)
        self.table.fitness[:] = fit
        self.table.qualification += fit
        update_worst(self.table, self.costs)

    def after_move(self):
        self.table.situation[:] = self.x.reshape(self.params.population, -1)

    def result(self) -> OptimizationResult:
        res = super().result()
        res.jumps = len(self.jump_events)
        res.jump_events = list(self.jump_events)
        return res


def optimize_jfa(network: Network, k: int, params: FireflyParams, jumper: JumperParams,
                 weights: CostWeights, rng: np.random.Generator,
                 side_length: float = 200.0) -> OptimizationResult:
    return JumperSwarm(network, k, params, jumper, weights, rng, side_length).run()
