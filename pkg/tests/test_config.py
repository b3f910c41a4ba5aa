"""Configurations, product metrics, trajectories, separation, retraction.

The dense-sampling separation oracle evaluates the inter-particle distance
at 10^4 uniform times; min_separation must agree from below within the
sampling resolution.
"""

import math
import random

import pytest
from scipy.optimize import brentq

from treeplan.tree import Tree, ArgumentError
from treeplan.config import (
    Metric, OrderedConfig, UnorderedConfig, BiPath,
    config_distance, path_length, min_separation, retract_to_feps,
    path_sup_distance,
)
from treeplan.sampling import random_tree, random_point


def sampled_separation(path, n=10_000):
    tree = path.tree
    return min(tree.distance(*path.at(i / n)) for i in range(n + 1))


def leg(t0, t1, a, b):
    return (t0, t1, a, b)


# --------------------------------------------------------------------- #
# config distance
# --------------------------------------------------------------------- #

def test_config_distance_zero(star4):
    a = OrderedConfig(star4.arm_point(1, 1.0), star4.arm_point(2, 2.0))
    assert config_distance(star4, a, a, Metric.L1) == 0.0
    assert config_distance(star4, a, a, Metric.L2) == 0.0


def test_config_distance_star_instance(star4):
    a = OrderedConfig(star4.arm_point(1, 1.0), star4.arm_point(2, 2.0))
    b = OrderedConfig(star4.arm_point(3, 2.0), star4.arm_point(4, 5.0))
    assert config_distance(star4, a, b, Metric.L1) == pytest.approx(3 + 7)
    assert config_distance(star4, a, b, Metric.L2) == pytest.approx(math.hypot(3, 7))


def test_unordered_pairing_symmetry(star4):
    x = star4.arm_point(1, 4.0)
    y = star4.arm_point(2, 6.0)
    a = UnorderedConfig.of(x, y)
    b = UnorderedConfig.of(y, x)
    assert config_distance(star4, a, b, Metric.L1) == 0.0


# --------------------------------------------------------------------- #
# BiPath lengths
# --------------------------------------------------------------------- #

def test_constant_path_zero_length(star4):
    c = OrderedConfig(star4.arm_point(1, 5.0), star4.arm_point(2, 5.0))
    p = BiPath.constant(star4, 1.0, True, c)
    assert path_length(p, Metric.L1) == 0.0
    assert path_length(p, Metric.L2) == 0.0
    assert min_separation(p) == pytest.approx(10.0)


def test_three_four_five_segment(star4):
    a = (star4.arm_point(1, 8.0), star4.arm_point(2, 2.0))
    b = (star4.arm_point(1, 5.0), star4.arm_point(2, 6.0))
    p = BiPath.from_legs(star4, 1.0, True, [leg(0.0, 1.0, a, b)])
    assert path_length(p, Metric.L1) == pytest.approx(7.0)
    assert path_length(p, Metric.L2) == pytest.approx(5.0)


def test_length_refinement_preserves_l2(star4):
    # particle 1 crosses the center mid-leg; hypot must not inflate
    a = (star4.arm_point(1, 3.0), star4.arm_point(2, 9.0))
    b = (star4.arm_point(3, 3.0), star4.arm_point(2, 5.0))
    p = BiPath.from_legs(star4, 1.0, True, [leg(0.0, 1.0, a, b)])
    assert path_length(p, Metric.L2) == pytest.approx(math.hypot(6.0, 4.0))
    assert path_length(p, Metric.L1) == pytest.approx(10.0)


def test_l1_always_at_least_l2(rng, star5):
    for _ in range(50):
        pts = [star5.arm_point(rng.randrange(1, 6), rng.uniform(0.5, 10))
               for _ in range(4)]
        try:
            p = BiPath.from_legs(star5, 0.0, True,
                                 [leg(0.0, 1.0, (pts[0], pts[1]), (pts[2], pts[3]))])
        except ArgumentError:
            continue
        assert path_length(p, Metric.L1) >= path_length(p, Metric.L2) - 1e-12


def test_reversal_preserves_lengths_and_separation(star4):
    a = (star4.arm_point(1, 3.0), star4.arm_point(2, 9.0))
    b = (star4.arm_point(3, 3.0), star4.arm_point(2, 5.0))
    p = BiPath.from_legs(star4, 1.0, True, [leg(0.0, 1.0, a, b)])
    r = p.reversed()
    for m in (Metric.L1, Metric.L2):
        assert path_length(r, m) == pytest.approx(path_length(p, m), abs=1e-12)
    assert min_separation(r) == pytest.approx(min_separation(p), abs=1e-12)


def test_length_bounded_below_by_config_distance(rng, star4):
    for _ in range(40):
        pts = [star4.arm_point(rng.randrange(1, 5), rng.uniform(0.5, 10))
               for _ in range(4)]
        p = BiPath.from_legs(star4, 0.0, True,
                             [leg(0.0, 1.0, (pts[0], pts[1]), (pts[2], pts[3]))])
        a = OrderedConfig(*p.start)
        b = OrderedConfig(*p.end)
        for m in (Metric.L1, Metric.L2):
            assert path_length(p, m) >= config_distance(star4, a, b, m) - 1e-9


# --------------------------------------------------------------------- #
# min separation
# --------------------------------------------------------------------- #

def test_separation_stationary(star4):
    c = OrderedConfig(star4.arm_point(1, 2.0), star4.arm_point(2, 3.0))
    p = BiPath.constant(star4, 1.0, True, c)
    assert min_separation(p) == pytest.approx(5.0)


def test_separation_head_on_crossing():
    tree = Tree([(0, 1, 10.0)], leaf_order=[0, 1])
    a = (tree.edge_point(0, 0.5), tree.edge_point(0, 9.5))
    b = (tree.edge_point(0, 9.5), tree.edge_point(0, 0.5))
    p = BiPath.from_legs(tree, 0.0, True, [leg(0.0, 1.0, a, b)])
    assert min_separation(p) == 0.0


def test_separation_matches_dense_sampling(rng, star4):
    for _ in range(30):
        pts = [star4.arm_point(rng.randrange(1, 5), rng.uniform(0.5, 10))
               for _ in range(6)]
        p = BiPath.from_legs(
            star4, 0.0, True,
            [leg(0.0, 0.5, (pts[0], pts[1]), (pts[2], pts[3])),
             leg(0.5, 1.0, (pts[2], pts[3]), (pts[4], pts[5]))])
        exact = min_separation(p)
        approx = sampled_separation(p, 2000)
        assert exact <= approx + 1e-12
        assert approx - exact <= 0.02  # sampling resolution on speed <= 20


# --------------------------------------------------------------------- #
# sup distance
# --------------------------------------------------------------------- #

def test_sup_distance_identical_zero(star4):
    a = (star4.arm_point(1, 3.0), star4.arm_point(2, 9.0))
    b = (star4.arm_point(3, 3.0), star4.arm_point(2, 5.0))
    p = BiPath.from_legs(star4, 1.0, True, [leg(0.0, 1.0, a, b)])
    assert path_sup_distance(p, p) == 0.0


def test_sup_distance_constant_offset(star4):
    c1 = OrderedConfig(star4.arm_point(1, 2.0), star4.arm_point(2, 2.0))
    c2 = OrderedConfig(star4.arm_point(1, 5.0), star4.arm_point(2, 8.0))
    p = BiPath.constant(star4, 1.0, True, c1)
    q = BiPath.constant(star4, 1.0, True, c2)
    assert path_sup_distance(p, q) == pytest.approx(3.0 + 6.0)


def test_sup_distance_reparametrization_bound(star4):
    # shifting the mid-breakpoint by delta changes sup distance by at most
    # (max speed) * delta
    a = (star4.arm_point(1, 9.0), star4.arm_point(2, 1.0))
    m = (star4.arm_point(1, 5.0), star4.arm_point(2, 3.0))
    b = (star4.arm_point(1, 1.0), star4.arm_point(2, 5.0))
    delta = 0.05
    p = BiPath.from_legs(star4, 1.0, True,
                         [leg(0.0, 0.5, a, m), leg(0.5, 1.0, m, b)])
    q = BiPath.from_legs(star4, 1.0, True,
                         [leg(0.0, 0.5 + delta, a, m), leg(0.5 + delta, 1.0, m, b)])
    max_speed = max(8.0 / 0.5, 4.0 / (0.5 - delta))   # particle 1 arc / duration
    assert path_sup_distance(p, q) <= max_speed * delta + 1e-9


# --------------------------------------------------------------------- #
# retraction
# --------------------------------------------------------------------- #

def test_retract_identity_when_already_separated(star4):
    a = OrderedConfig(star4.arm_point(1, 3.0), star4.arm_point(2, 3.0))
    assert retract_to_feps(star4, a, 1.0) == a


def test_retract_same_edge_symmetric():
    tree = Tree([(0, 1, 10.0)], leaf_order=[0, 1])
    a = OrderedConfig(tree.edge_point(0, 4.9), tree.edge_point(0, 5.1))
    out = retract_to_feps(tree, a, 1.0)
    assert out.p1.offset == pytest.approx(4.5)
    assert out.p2.offset == pytest.approx(5.5)


def test_retract_vertex_between_proportional(star4):
    a = OrderedConfig(star4.arm_point(1, 0.2), star4.arm_point(2, 0.6))
    out = retract_to_feps(star4, a, 1.0)
    assert star4.star_coord(out.p1) == (1, pytest.approx(0.25))
    assert star4.star_coord(out.p2) == (2, pytest.approx(0.75))
    # independent check: root-find the scale s with separation(s) = eps
    def sep(s):
        return 0.2 * (1 + s) + 0.6 * (1 + s) - 1.0
    s_star = brentq(sep, 0.0, 10.0)
    assert 0.2 * (1 + s_star) == pytest.approx(0.25)


def test_retract_vertex_endpoint_case(star4):
    a = OrderedConfig(star4.vertex_point(0), star4.arm_point(2, 0.4))
    out = retract_to_feps(star4, a, 1.0)
    assert out.p1 == star4.vertex_point(0)
    assert star4.star_coord(out.p2) == (2, pytest.approx(1.0))


def test_retract_same_edge_vertex_stop():
    tree = Tree([(0, 1, 10.0)], leaf_order=[0, 1])
    a = OrderedConfig(tree.edge_point(0, 0.1), tree.edge_point(0, 0.3))
    out = retract_to_feps(tree, a, 1.0)
    assert out.p1 == tree.vertex_point(0)
    assert out.p2.offset == pytest.approx(1.0)


def test_retract_rejects_coincident(star4):
    p = star4.arm_point(1, 2.0)
    with pytest.raises(ArgumentError):
        retract_to_feps(star4, OrderedConfig(p, p), 1.0)


def test_retract_output_separation_near_eps(rng, star4):
    for _ in range(100):
        a1 = star4.arm_point(rng.randrange(1, 5), rng.uniform(0.01, 0.6))
        a2 = star4.arm_point(rng.randrange(1, 5), rng.uniform(0.01, 0.6))
        if a1 == a2:
            continue
        a = OrderedConfig(a1, a2)
        if star4.distance(a1, a2) >= 1.0:
            continue
        out = retract_to_feps(star4, a, 1.0)
        assert star4.distance(out.p1, out.p2) >= 1.0 - 1e-9


def test_bipath_json_round_trip(star4):
    a = (star4.arm_point(1, 3.0), star4.arm_point(2, 9.0))
    b = (star4.arm_point(3, 3.0), star4.arm_point(2, 5.0))
    p = BiPath.from_legs(star4, 1.0, True, [leg(0.0, 1.0, a, b)])
    blob = p.to_json()
    assert blob["eps"] == 1.0 and blob["ordered"] is True
    q = BiPath.from_json(star4, blob)
    assert q.breakpoints == p.breakpoints
    assert path_sup_distance(p, q) == 0.0


def test_min_separation_vs_dense_10k(star4):
    a = (star4.arm_point(1, 3.0), star4.arm_point(1, 9.0))
    m = (star4.arm_point(2, 1.0), star4.arm_point(1, 2.0))
    b = (star4.arm_point(3, 3.0), star4.arm_point(2, 5.0))
    p = BiPath.from_legs(star4, 1.0, True,
                         [leg(0.0, 0.4, a, m), leg(0.4, 1.0, m, b)])
    exact = min_separation(p)
    dense = sampled_separation(p, 10_000)
    assert exact <= dense + 1e-12
    assert dense - exact <= 25.0 / 10_000 * 2
