"""
Firefly search against brute force
==================================

On a six-node field every head pair can be enumerated, so the swarm's
answer can be checked exactly.
"""

# %%
import numpy as np

import wsnsim as ws

net = ws.deploy(ws.FieldConfig(node_count=6), seed=0)
weights = ws.CostWeights()
best, heads, costs = ws.exhaustive_best(net, 2, weights)
print(f"{len(costs)} head pairs, best {heads} at cost {best:.4f}")

# %%
params = ws.FireflyParams(population=10, max_generations=200)
for seed in range(5):
    ffa = ws.optimize(net, 2, params, weights, np.random.default_rng(seed))
    jfa = ws.optimize_jfa(net, 2, params, ws.JumperParams(), weights, np.random.default_rng(seed))
    print(f"seed {seed}: FFA {ffa.best_cost:.4f}  JFA {jfa.best_cost:.4f} ({jfa.jumps} jumps)")

# %%
# On the full field the trace shows how fast the swarm settles.
net = ws.deploy(ws.FieldConfig(), seed=0)
res = ws.optimize_jfa(net, 5, ws.FireflyParams(), ws.JumperParams(), weights,
                      np.random.default_rng(1))
trace = np.array(res.cost_trace)
print("best cost every 10 generations:", trace[::10].round(3))
print("jump events (generation, firefly):", res.jump_events[:8])
