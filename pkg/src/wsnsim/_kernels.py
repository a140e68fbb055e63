"""Compiled inner loops of the swarm optimizers."""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def attraction_pass(x, brightness, noise, beta0, gamma, exponent, side):
    """In-place pairwise pass over ``x`` (S, D).

    Firefly ``i`` moves toward every ``j`` with ``brightness[j] > brightness[i]``,
    taking ``j`` in index order and ``j``'s position from before the pass.
    ``noise[i, j]`` is the already-scaled random step. A firefly with no
    brighter peer takes the random step ``noise[i, i]`` alone.
    """
    S, D = x.shape
    anchor = x.copy()
    moved = np.zeros(S, dtype=np.bool_)
    for j in range(S):
        for i in range(S):
            if brightness[j] > brightness[i]:
                moved[i] = True
                r2 = 0.0
                for d in range(D):
                    delta = anchor[j, d] - x[i, d]
                    r2 += delta * delta
                beta = beta0 * math.exp(-gamma * math.sqrt(r2) ** exponent)
                for d in range(D):
                    v = x[i, d] + beta * (anchor[j, d] - x[i, d]) + noise[i, j, d]
                    x[i, d] = min(max(v, 0.0), side)
    for i in range(S):
        if not moved[i]:
            for d in range(D):
                x[i, d] = min(max(x[i, d] + noise[i, i, d], 0.0), side)


@njit(cache=True)
def greedy_snap(points, ids, node_xy):
    """Points (S, K, 2) onto distinct nodes ``ids`` (sorted ascending), nearest-first in point order."""
    S, K, _ = points.shape
    E = ids.shape[0]
    out = np.empty((S, K), dtype=np.int64)
    taken = np.zeros(E, dtype=np.bool_)
    for s in range(S):
        taken[:] = False
        for k in range(K):
            best, best_d = -1, np.inf
            for e in range(E):
                if taken[e]:
                    continue
                dx = points[s, k, 0] - node_xy[e, 0]
                dy = points[s, k, 1] - node_xy[e, 1]
                d = dx * dx + dy * dy
                if d < best_d:
                    best, best_d = e, d
            taken[best] = True
            out[s, k] = ids[best]
    return out


@njit(cache=True)
def batch_cost(heads, slots, dist, energy, energy_total, beta):
    """Clustering cost of every row of ``heads`` (S, K).

    ``dist`` is the alive-by-alive distance matrix and ``slots[h]`` the row of
    node ``h`` in it. Nodes join the closest head, earliest head on ties;
    heads join themselves.
    """
    S, K = heads.shape
    n = dist.shape[0]
    out = np.empty(S)
    sums = np.zeros(K)
    counts = np.zeros(K)
    for s in range(S):
        sums[:] = 0.0
        counts[:] = 0.0
        head_energy = 0.0
        for k in range(K):
            head_energy += energy[heads[s, k]]
        for v in range(n):
            own = -1
            for k in range(K):
                if slots[heads[s, k]] == v:
                    own = k
                    break
            if own >= 0:
                counts[own] += 1.0
                continue
            best, best_d = 0, dist[v, slots[heads[s, 0]]]
            for k in range(1, K):
                d = dist[v, slots[heads[s, k]]]
                if d < best_d:
                    best, best_d = k, d
            sums[best] += best_d
            counts[best] += 1.0
        spread = 0.0
        for k in range(K):
            spread = max(spread, sums[k] / counts[k])
        out[s] = beta * spread + (1.0 - beta) * energy_total / head_energy
    return out
