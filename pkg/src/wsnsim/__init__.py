"""Wireless sensor network lifetime simulator with LEACH, firefly and jumper-firefly clustering."""

from .clustering import (BatchCost, Clustering, CostWeights, assign_members, cost,
                         cost_of_heads, euclidean, f1, f2)
from .config import ConfigError, ExperimentConfig, dump_config, load_config, parse_config
from .firefly import (Candidate, FireflyParams, FireflySwarm, OptimizationResult, attractiveness,
                      eligible_candidates, firefly_distance, intensity_at, move_towards, optimize,
                      snap_to_nodes)
from .jumper import (JumperParams, JumperSwarm, StatusTable, apply_jump, fitness_of, is_hazard,
                     optimize_jfa, update_qualification, update_worst)
from .leach import LeachState, elect, join_nearest, leach_threshold
from .network import EnergyMode, FieldConfig, Network, Node, cluster_count, deploy
from .oracle import exhaustive_best
from .radio import (RadioParams, aggregation_energy, ch_round_energy, rx_energy,
                    threshold_distance, tx_energy)
from .simulation import (PROTOCOLS, LifetimeSummary, RoundRecord, compare, make_protocol,
                         run_round, run_simulation, simulate)

__version__ = "0.1.0"
