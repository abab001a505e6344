import json

import pytest

import firefighter as ff


def binary_tree(height=2):
    n = 2 ** (height + 1) - 1
    return ff.Graph(n, [((v - 1) // 2, v) for v in range(1, n)])


def cycle(n):
    return ff.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_tree_solvers():
    t = ff.RootedTree(binary_tree(), 0)
    saved, strategy = ff.max_k_protection_tree(t, 2)
    assert saved == 4
    assert len(ff.simulate_v1(t.graph, 0, strategy).saved) == 4
    assert ff.exact_firefighter_tree(t)[0] == 4
    yes, witness = ff.save_all_but_k_tree(t, 3)
    assert yes and witness is not None
    assert ff.save_all_but_k_tree(t, 2) == (False, None)
    assert ff.lemma4_bound(3) == 6


def test_general_and_oracles():
    g = cycle(4)
    assert ff.brute_force_min_burned(g, 0)[0] == 2
    yes, witness = ff.save_all_but_k_general(g, 0, 2)
    assert yes
    assert len(ff.simulate_v2(g, 0, witness).burned) == 2
    one = ff.strategy_II_to_I(g, 0, witness)
    assert ff.simulate_v1(g, 0, one).burned == ff.simulate_v2(g, 0, witness).burned


def test_illegal_move_carries_round():
    with pytest.raises(ff.IllegalMove) as info:
        ff.simulate_v1(cycle(4), 0, ff.StrategyI([1, 3]))
    assert info.value.round == 2
    assert isinstance(info.value, ValueError)


def test_instances_and_generators():
    tri = ff.Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    inst = ff.clique_to_saving_instance(tri, 3)
    assert inst.graph.n == 15 and inst.k == 7
    assert inst.roles[0] == (0, "s")
    back = ff.parse_instance(inst.to_text())
    assert back.graph.edges == inst.graph.edges

    p3 = ff.make_instance(ff.Graph(3, [(0, 1), (1, 2)]), 0, 1)
    composed, leaf_map, height = ff.cross_compose_trees([p3, p3])
    assert composed.graph.n == 7 and composed.k == 2 and height == 1

    t = ff.random_tree(50, 3, 7)
    assert t.graph.max_degree() <= 3

    with pytest.raises(ValueError):
        ff.parse_instance("3 2 0\n0 1\n")


def test_solve_json():
    inst = ff.make_instance(binary_tree(), 0, 2)
    record = json.loads(ff.solve(inst, "max-protection"))
    assert record["optimum_saved"] == 4
    assert record["exit_status"] == 0
