"""Sensor field, node population and deployment."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

# Sub-stream indices under a master seed. Deployment and protocol draws never share a stream.
DEPLOY_STREAM = 0
PROTOCOL_STREAM = 1


def stream_rng(seed: int, stream: int) -> np.random.Generator:
    """Independent generator for one named stream of a master seed."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(stream)]))


class EnergyMode(str, Enum):
    HOMOGENEOUS = "homogeneous"
    HETEROGENEOUS = "heterogeneous"


@dataclass(frozen=True)
class FieldConfig:
    side_length: float = 200.0
    node_count: int = 100
    base_station: tuple[float, float] = (100.0, 100.0)
    cluster_fraction: float = 0.05
    energy_mode: EnergyMode = EnergyMode.HOMOGENEOUS
    initial_energy: float = 0.2

    def __post_init__(self):
        object.__setattr__(self, "energy_mode", EnergyMode(self.energy_mode))
        object.__setattr__(self, "base_station", tuple(float(c) for c in self.base_station))
        if not self.side_length > 0:
            raise ValueError(f"side_length must be > 0, got {self.side_length}")
        if int(self.node_count) != self.node_count or self.node_count < 1:
            raise ValueError(f"node_count must be a positive integer, got {self.node_count}")
        if not 0 < self.cluster_fraction <= 1:
            raise ValueError(f"cluster_fraction must lie in (0, 1], got {self.cluster_fraction}")
        if len(self.base_station) != 2:
            raise ValueError("base_station must be a 2-D point")
        if not self.initial_energy > 0:
            raise ValueError(f"initial_energy must be > 0, got {self.initial_energy}")


@dataclass(frozen=True)
class Node:
    id: int
    position: tuple[float, float]
    energy: float
    initial_energy: float

    @property
    def alive(self) -> bool:
        return self.energy > 0


@dataclass(eq=False)
class Network(Sequence):
    """Array-backed node population.

    Behaves as a read-only sequence of :class:`Node` snapshots; the simulation
    engine mutates ``energy`` in place. Dead nodes stay in the arrays so ids
    remain dense ``0..N-1``.
    """

    positions: np.ndarray
    initial_energy: np.ndarray
    energy: np.ndarray
    base_station: np.ndarray = field(default_factory=lambda: np.zeros(2))

    def __post_init__(self):
        self.positions = np.asarray(self.positions, dtype=float).reshape(-1, 2)
        self.initial_energy = np.asarray(self.initial_energy, dtype=float)
        self.energy = np.array(self.energy, dtype=float)
        self.base_station = np.asarray(self.base_station, dtype=float)
        n = len(self.positions)
        if self.initial_energy.shape != (n,) or self.energy.shape != (n,):
            raise ValueError("positions, initial_energy and energy must describe the same nodes")

    def __len__(self) -> int:
        return len(self.positions)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        x, y = self.positions[i]
        return Node(int(range(len(self))[i]), (float(x), float(y)),
                    float(self.energy[i]), float(self.initial_energy[i]))

    @property
    def alive(self) -> np.ndarray:
        return self.energy > 0

    @property
    def alive_ids(self) -> np.ndarray:
        return np.flatnonzero(self.energy > 0)

    @property
    def alive_count(self) -> int:
        return int(np.count_nonzero(self.energy > 0))

    def distance_to_bs(self) -> np.ndarray:
        return np.hypot(*(self.positions - self.base_station).T)

    def copy(self) -> Network:
        return Network(self.positions.copy(), self.initial_energy.copy(),
                       self.energy.copy(), self.base_station.copy())

    @classmethod
    def from_nodes(cls, nodes: Sequence[Node], base_station=(0.0, 0.0)) -> Network:
        nodes = sorted(nodes, key=lambda n: n.id)
        if [n.id for n in nodes] != list(range(len(nodes))):
            raise ValueError("node ids must be dense 0..N-1")
        return cls(np.array([n.position for n in nodes], dtype=float).reshape(-1, 2),
                   np.array([n.initial_energy for n in nodes], dtype=float),
                   np.array([n.energy for n in nodes], dtype=float),
                   np.asarray(base_station, dtype=float))


def deploy(config: FieldConfig, seed: int) -> Network:
    """Drop ``node_count`` nodes uniformly over the square field.

    Heterogeneous mode draws each node's initial energy uniformly from
    ``[E0, 2*E0]``. The result is a pure function of ``(config, seed)``.
    """
    if config.node_count < 1 or config.side_length <= 0:
        raise ValueError("cannot deploy an empty network or a degenerate field")
    rng = stream_rng(seed, DEPLOY_STREAM)
    n = int(config.node_count)
    positions = rng.uniform(0.0, config.side_length, size=(n, 2))
    if config.energy_mode is EnergyMode.HOMOGENEOUS:
        e0 = np.full(n, float(config.initial_energy))
    else:
        e0 = rng.uniform(config.initial_energy, 2.0 * config.initial_energy, size=n)
    return Network(positions, e0, e0.copy(), np.array(config.base_station, dtype=float))


def cluster_count(alive: int, cluster_fraction: float) -> int:
    """Target number of cluster heads: ``max(1, round(fraction * alive))``, or 0 for an empty network."""
    if alive <= 0:
        return 0
    return max(1, int(round(cluster_fraction * alive)))
