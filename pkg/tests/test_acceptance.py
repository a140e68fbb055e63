"""End-to-end acceptance checks; each prints one PASS/FAIL line in the terminal summary."""

import math

import numpy as np
import pytest

from wsnsim import (CostWeights, ExperimentConfig, FieldConfig, FireflyParams, JumperParams, LeachState,
                    RadioParams, compare, deploy, elect, exhaustive_best, optimize, optimize_jfa,
                    threshold_distance, tx_energy)
from wsnsim.cli import main

SEEDS = range(20)


@pytest.fixture(scope="session")
def lifetime_runs():
    """Table II configuration, all protocols on 20 shared deployments."""
    return compare(ExperimentConfig(), SEEDS)


def test_radio_model(report):
    p = RadioParams()
    d0 = threshold_distance(p)
    e50, e100 = tx_energy(p, 4000, 50.0), tx_energy(p, 4000, 100.0)
    ok = (abs(d0 - 87.7058) <= 1e-3 and math.isclose(e50, 3.0e-4, rel_tol=1e-12)
          and math.isclose(e100, 7.2e-4, rel_tol=1e-12))
    report("1 radio model", ok, f"d0={d0:.6f} m, tx(50)={e50:.6e} J, tx(100)={e100:.6e} J")
    assert ok


@pytest.mark.slow
def test_energy_conservation(lifetime_runs, report):
    worst, checked = 0.0, 0
    for proto, stats in lifetime_runs.items():
        for s in stats.summaries[:5]:
            spent = 0.0
            for r in s.rounds:
                spent += math.fsum(r.per_node_dissipation)
                worst = max(worst, abs(s.initial_total_energy - spent - r.total_energy) / s.initial_total_energy)
                checked += 1
    ok = worst <= 1e-9
    report("2 energy conservation", ok, f"3 protocols x 5 seeds, {checked} rounds, max rel error {worst:.2e}")
    assert ok


@pytest.mark.parametrize("algo", ["ffa", "jfa"])
def test_oracle_equivalence(algo, report):
    net, w = deploy(FieldConfig(node_count=6), 0), CostWeights()
    best, heads, costs = exhaustive_best(net, 2, w)
    p = FireflyParams(population=10, max_generations=200)
    hits = 0
    for seed in range(10):
        rng = np.random.default_rng(seed)
        res = (optimize(net, 2, p, w, rng) if algo == "ffa"
               else optimize_jfa(net, 2, p, JumperParams(), w, rng))
        hits += res.best_cost == best
    ok = len(costs) == 15 and hits >= 9
    report(f"3 oracle equivalence ({algo})", ok, f"{hits}/10 seeds hit the exhaustive minimum {best:.6f}")
    assert ok


@pytest.mark.slow
def test_best_cost_monotone(lifetime_runs, report):
    runs = gens = bad = 0
    for proto in ("ffa", "jfa"):
        for s in lifetime_runs[proto].summaries[:3]:
            for r in s.rounds:
                t = r.cost_trace
                runs += 1
                gens += len(t)
                bad += sum(b > a for a, b in zip(t, t[1:]))
    ok = bad == 0 and runs > 0
    report("4 best-cost monotonicity", ok, f"{runs} optimizer runs, {gens} generations, {bad} increases")
    assert ok


def test_jfa_reduces_to_ffa(report):
    cfg = ExperimentConfig().resolved()
    net = deploy(cfg.field, 5)
    net.energy[:] = np.random.default_rng(1).uniform(0.05, 0.2, len(net))
    p = cfg.firefly
    same = True
    for seed in range(3):
        a = optimize(net, 5, p, cfg.weights, np.random.default_rng(seed))
        b = optimize_jfa(net, 5, p, JumperParams(eta=p.max_generations + 1), cfg.weights,
                         np.random.default_rng(seed))
        same &= a.cost_trace == b.cost_trace and a.heads.tolist() == b.heads.tolist() and b.jumps == 0
    report("5 JFA reduces to FFA", same, "eta > max_generations, 3 seeds, exact trace and head equality")
    assert same


def test_leach_epoch_fairness(report):
    n, p = 100, 0.05
    net = deploy(FieldConfig(node_count=n), 0)
    net.energy[:] = 1e9
    state, rng = LeachState(p), np.random.default_rng(0)
    counts = np.zeros(n, dtype=int)
    for _ in range(20):
        np.add.at(counts, elect(state, net, rng), 1)
    once = bool(np.all(counts == 1))
    rng = np.random.default_rng(1)
    first = np.array([len(elect(LeachState(p), net, rng)) for _ in range(1000)])
    se = math.sqrt(n * p * (1 - p) / 1000)
    z = (first.mean() - n * p) / se
    ok = once and abs(z) <= 3
    report("6 LEACH epoch fairness", ok,
           f"every node once per epoch: {once}; first-round mean {first.mean():.3f} vs {n * p} ({z:+.2f} SE)")
    assert ok


@pytest.mark.slow
def test_lifetime_order_last_death(lifetime_runs, report):
    med = {p: lifetime_runs[p].median("lnd") for p in lifetime_runs}
    ok = med["jfa"] >= med["ffa"] >= med["leach"]
    report("7 median LND JFA >= FFA >= LEACH", ok,
           f"20 seeds: JFA {med['jfa']}, FFA {med['ffa']}, LEACH {med['leach']}")
    assert ok


@pytest.mark.slow
def test_lifetime_order_first_death(lifetime_runs, report):
    med = {p: lifetime_runs[p].median("fnd") for p in lifetime_runs}
    ok = med["jfa"] >= med["leach"]
    report("7 median FND JFA >= LEACH", ok,
           f"20 seeds: JFA {med['jfa']}, FFA {med['ffa']}, LEACH {med['leach']}")
    assert ok


@pytest.mark.slow
def test_determinism(tmp_path, report):
    identical = True
    for proto in ("leach", "ffa", "jfa"):
        outs = []
        for rep in ("a", "b"):
            out = tmp_path / f"{proto}_{rep}"
            assert main(["run", "--protocol", proto, "--seed", "1", "--out", str(out), "--trace"]) == 0
            outs.append({f.name: f.read_bytes() for f in sorted(out.iterdir())})
        identical &= outs[0] == outs[1]
    report("8 determinism", identical, "run twice per protocol (Table II, seed 1): all CSVs byte-identical")
    assert identical
