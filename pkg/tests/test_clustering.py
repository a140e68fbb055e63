import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wsnsim import BatchCost, CostWeights, assign_members, cost, cost_of_heads, euclidean, f1, f2

from conftest import make_network


def brute_nearest(points, heads):
    """Plain-Python nearest head, first listed head on ties."""
    out = []
    for x, y in points:
        best, best_d = None, math.inf
        for k, h in enumerate(heads):
            hx, hy = points[h]
            d = math.sqrt((x - hx) ** 2 + (y - hy) ** 2)
            if d < best_d:
                best, best_d = k, d
        out.append(best)
    for k, h in enumerate(heads):
        out[h] = k
    return out


@pytest.mark.parametrize("a, b, d", [((0, 0), (3, 4), 5.0), ((7, 7), (7, 7), 0.0), ((1, 1), (4, 5), 5.0)])
def test_euclidean(a, b, d):
    assert euclidean(a, b) == d


def test_single_head_takes_everyone():
    net = make_network([[0, 0], [5, 5], [9, 1], [3, 3]])
    c = assign_members(net, [2])
    assert c.member_of.tolist() == [0, 0, 0, 0]


def test_tie_goes_to_first_listed_head():
    net = make_network([[0, 0], [10, 0], [5, 0]])
    assert assign_members(net, [1, 0]).member_of[2] == 0   # heads[0] is node 1
    assert assign_members(net, [0, 1]).member_of[2] == 0


def test_opposite_corners_match_distance_table():
    pts = [[0, 0], [100, 100], [10, 20], [90, 70], [40, 45], [60, 52]]
    net = make_network(pts)
    c = assign_members(net, [0, 1])
    assert c.member_of.tolist() == brute_nearest(pts, [0, 1]) == [0, 1, 0, 1, 0, 1]


def test_empty_head_list_rejected():
    with pytest.raises(ValueError):
        assign_members(make_network([[0, 0], [1, 1]]), [])


def test_dead_nodes_are_unassigned():
    net = make_network([[0, 0], [1, 1], [2, 2]], energy=[0.2, 0.0, 0.2])
    assert assign_members(net, [0]).member_of.tolist() == [0, -1, 0]
    with pytest.raises(ValueError, match="alive"):
        assign_members(net, [1])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 50), st.integers(0, 10_000), st.data())
def test_assignment_matches_brute_force(n, seed, data):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0, 200, size=(n, 2)).round(0)   # rounding creates ties
    k = data.draw(st.integers(1, n))
    heads = rng.choice(n, size=k, replace=False).tolist()
    c = assign_members(make_network(pts), heads)
    assert c.member_of.tolist() == brute_nearest(pts.tolist(), heads)


def three_node_cluster(head_energy=0.2):
    # head at origin, members at distance 5 each
    return make_network([[0, 0], [3, 4], [0, 5]], energy=[head_energy, 0.2, 0.2], initial=0.2)


def test_f1_head_inclusive_mean():
    net = three_node_cluster()
    assert f1(assign_members(net, [0]), net) == pytest.approx(10 / 3, rel=1e-15)


def test_f1_zero_when_every_node_heads():
    net = make_network(np.random.default_rng(0).uniform(0, 50, (7, 2)))
    assert f1(assign_members(net, range(7)), net) == 0.0


def test_f1_single_member():
    net = make_network([[1, 1], [1, 8.5]])
    assert f1(assign_members(net, [0]), net) == pytest.approx(7.5 / 2)


def test_f2_examples():
    net = make_network(np.zeros((10, 2)), energy=[0.1, 0.1] + [0.2] * 8, initial=0.2)
    assert f2(net, [0, 1]) == pytest.approx(10.0, rel=1e-15)
    full = make_network(np.zeros((4, 2)))
    assert f2(full, range(4)) == 1.0
    doubled = make_network(np.zeros((10, 2)), energy=[0.2, 0.2] + [0.2] * 8, initial=0.2)
    assert f2(doubled, [0, 1]) == pytest.approx(f2(net, [0, 1]) / 2, rel=1e-15)


def test_f2_rejects_dead_heads():
    net = make_network(np.zeros((3, 2)), energy=[0.0, 0.2, 0.2], initial=0.2)
    with pytest.raises(ValueError):
        f2(net, [0])


def test_f2_ignores_non_head_current_energy():
    net = make_network(np.zeros((5, 2)), energy=[0.1, 0.2, 0.05, 0.0, 0.2], initial=0.2)
    before = f2(net, [0, 1])
    net.energy[2:] = [0.01, 0.0, 0.0]
    assert f2(net, [0, 1]) == before


def test_cost_weighting():
    net = three_node_cluster(head_energy=0.06)   # f2 = 0.6 / 0.06 = 10
    c = assign_members(net, [0])
    assert f2(net, [0]) == pytest.approx(10.0, rel=1e-14)
    assert cost(CostWeights(1.0), c, net) == f1(c, net)
    assert cost(CostWeights(0.0), c, net) == f2(net, [0])
    assert cost(CostWeights(0.5), c, net) == pytest.approx(20 / 3, rel=1e-14)


def test_weights_validated():
    with pytest.raises(ValueError, match="beta"):
        CostWeights(1.5)


@given(st.floats(0, 1), st.floats(0, 1e3), st.floats(0, 1e3), st.floats(0, 1e3))
def test_cost_monotone_in_subobjectives(beta, a, b, extra):
    f = lambda x, y: beta * x + (1 - beta) * y
    assert f(a + extra, b) >= f(a, b)
    assert f(a, b + extra) >= f(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.integers(0, 10_000), st.floats(0, 1))
def test_batch_cost_agrees_with_reference(n, seed, beta):
    rng = np.random.default_rng(seed)
    energy = rng.uniform(0.01, 0.2, n)
    energy[rng.random(n) < 0.2] = 0.0
    net = make_network(rng.uniform(0, 200, (n, 2)), energy=energy, initial=0.2)
    alive = net.alive_ids
    if len(alive) == 0:
        return
    k = int(rng.integers(1, len(alive) + 1))
    heads = np.stack([rng.choice(alive, size=k, replace=False) for _ in range(5)])
    w = CostWeights(beta)
    batch = BatchCost(net, w)(heads)
    ref = [cost_of_heads(w, net, h) for h in heads]
    np.testing.assert_allclose(batch, ref, rtol=1e-12)
