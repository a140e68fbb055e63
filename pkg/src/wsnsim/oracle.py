"""Exhaustive head-set search for tiny instances."""

from __future__ import annotations

import itertools
import math

from .clustering import CostWeights, cost_of_heads
from .firefly import eligible_candidates
from .network import Network


def exhaustive_best(network: Network, k: int, weights: CostWeights):
    """Score every k-subset of the eligible nodes; return ``(best_cost, best_heads, all_costs)``.

    ``all_costs`` maps each sorted head tuple to its cost. Ties keep the
    lexicographically first subset.
    """
    eligible = sorted(int(i) for i in eligible_candidates(network, k))
    costs = {heads: cost_of_heads(weights, network, heads)
             for heads in itertools.combinations(eligible, k)}
    best_heads, best_cost = None, math.inf
    for heads, c in costs.items():
        if c < best_cost:
            best_heads, best_cost = heads, c
    return best_cost, best_heads, costs
