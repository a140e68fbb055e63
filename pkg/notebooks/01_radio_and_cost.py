"""
Radio energy and the clustering cost
====================================

How much a frame costs to send, and how a head set is scored.
"""

# %%
import numpy as np

import wsnsim as ws

radio = ws.RadioParams()
print(f"crossover distance d0 = {radio.d0:.2f} m")

# Below d0 the amplifier term grows with d**2, above it with d**4.
for d in (10, 50, 87.7, 100, 150):
    print(f"  {d:6.1f} m  ->  {ws.tx_energy(radio, 4000, d) * 1e3:.4f} mJ")

# %%
# A head pays for receiving its members, fusing every frame, and one long hop.
print("head with 19 members, 50 m from the sink:", ws.ch_round_energy(radio, 19, 50.0), "J")

# %%
# Deploy the default field and score a few random head sets.
net = ws.deploy(ws.FieldConfig(), seed=0)
weights = ws.CostWeights(beta=0.5)
rng = np.random.default_rng(0)
for _ in range(3):
    heads = rng.choice(len(net), size=5, replace=False)
    c = ws.assign_members(net, heads)
    print(f"heads {sorted(heads.tolist())}: f1={ws.f1(c, net):6.2f} m  f2={ws.f2(net, heads):5.2f}"
          f"  cost={ws.cost(weights, c, net):6.2f}")
