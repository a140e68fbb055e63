"""
Network lifetime under LEACH, FFA and JFA
=========================================

Every protocol runs on the same deployments until the last node dies.
"""

# %%
import numpy as np

import wsnsim as ws

config = ws.ExperimentConfig()
stats = ws.compare(config, seeds=range(3))

print(f"{'protocol':<8} {'FND':>6} {'HND':>6} {'LND':>6}")
for name, s in stats.items():
    print(f"{name:<8} {s.median('fnd'):6.0f} {s.median('hnd'):6.0f} {s.median('lnd'):6.0f}")

# %%
# Alive nodes every 50 rounds for the first seed.
for name, s in stats.items():
    curve = s.alive_curves()[0]
    print(f"{name:<6}", curve[::50])

# %%
# Where the energy goes in one JFA round: heads spend several times what members do.
run = stats["jfa"].summaries[0]
first = run.rounds[0]
heads = np.array(first.heads)
member = np.setdiff1d(np.arange(run.node_count), heads)
print("head spend   (mJ):", (first.per_node_dissipation[heads] * 1e3).round(3))
print("member spend (mJ): mean", round(first.per_node_dissipation[member].mean() * 1e3, 3))
