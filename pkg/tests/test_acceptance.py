"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one ``[criterion N] PASS/FAIL`` line (visible under
``pytest -s`` or in the captured output of a failing run).

Known defect, asserted honestly: the stated particle-2-first l2 length for
the 4-arm worked example (sqrt5 + sqrt8 + sqrt13, the corner-hugging
polyline) is not attainable by a correct planner.  The chord through
(-2, 0) is feasible and shorter, giving sqrt5 + sqrt41; the independent
discretized oracle agrees with the chord value to 6e-15 (see
test_oracle.py and notes in the repository history).  Criterion 1 is
therefore split: the three attainable stated values plus both selection
claims pass at 1e-12; the fourth stated value is a strict expected
failure; the derived value passes at 1e-12.
"""

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor

import pytest

from treeplan.tree import Tree
from treeplan.config import (
    Metric, OrderedConfig, UnorderedConfig, min_separation, path_length,
    config_distance, path_sup_distance,
)
from treeplan.star import plan as plan_star, candidates, classify, StarClassKind
from treeplan.unordered import plan_any, plan_y, plan_interval
from treeplan.oracle import oracle_shortest, discretize
from treeplan.sampling import (
    random_star_config, random_tree, random_unordered_config, random_point,
)
from treeplan.audits import (
    audit_partition_ordered, audit_partition_unordered,
    audit_tied_switch_to_one_arm, audit_y_sweep_to_path,
    audit_inner_dot_to_vertex,
)

SEED = 20260810
D11, D21 = 10.0, 12.0
D12 = 1 + math.sqrt(8) + 5
D22_STATED = math.sqrt(5) + math.sqrt(8) + math.sqrt(13)
D22_DERIVED = math.sqrt(5) + math.sqrt(41)


def report(criterion, ok, detail=""):
    print(f"[criterion {criterion}] {'PASS' if ok else 'FAIL'} {detail}")
    return ok


def worked_instance(star):
    return (OrderedConfig(star.arm_point(1, 1.0), star.arm_point(2, 2.0)),
            OrderedConfig(star.arm_point(3, 2.0), star.arm_point(4, 5.0)))


@pytest.fixture(scope="module")
def star4():
    return Tree.star([10.0] * 4)


# ------------------------------------------------------------------ #
# criterion 1: the worked 4-arm example, exact values and selections
# ------------------------------------------------------------------ #

def test_criterion_1_worked_example(star4):
    a, b = worked_instance(star4)
    cands = candidates(star4, 2.0, a, b, Metric.L2)
    by_type = {c.particle: c for c in cands}
    ok = abs(by_type[1].l1_length - D11) <= 1e-12
    ok &= abs(by_type[2].l1_length - D21) <= 1e-12
    ok &= abs(by_type[1].l2_length - D12) <= 1e-12

    res1 = plan_star(star4, 2.0, a, b, Metric.L1)
    res2 = plan_star(star4, 2.0, a, b, Metric.L2)
    ok &= res1.chosen.particle == 1
    ok &= abs(path_length(res1.chosen.path, Metric.L2) - D12) <= 1e-9
    ok &= res2.chosen.particle == 2

    times = []
    for _ in range(20):
        t0 = time.perf_counter()
        candidates(star4, 2.0, a, b, Metric.L2)
        times.append(time.perf_counter() - t0)
    runtime = sorted(times)[len(times) // 2]
    ok &= runtime < 1e-3
    assert report(1, ok, f"(l1: 10/12, l2 type-1: {D12:.6f}, l1 planner "
                         f"chooses type 1, l2 planner chooses type 2, "
                         f"median runtime {runtime * 1e3:.3f} ms)")


@pytest.mark.xfail(strict=True,
                   reason="stated value sqrt5+sqrt8+sqrt13 is the corner-"
                          "hugging polyline, beaten by the feasible chord "
                          "sqrt5+sqrt41 (oracle-confirmed); a correct "
                          "planner cannot reproduce it")
def test_criterion_1_stated_type2_l2_value(star4):
    a, b = worked_instance(star4)
    cands = candidates(star4, 2.0, a, b, Metric.L2)
    d22 = next(c for c in cands if c.particle == 2).l2_length
    ok = abs(d22 - D22_STATED) <= 1e-12
    report(1, ok, f"(reference type-2 l2 value {D22_STATED:.6f} is the "
                  f"corner-hugging polyline, not the class minimum; planner "
                  f"computes {d22:.6f})")
    assert ok


def test_criterion_1_derived_type2_l2_value(star4):
    a, b = worked_instance(star4)
    cands = candidates(star4, 2.0, a, b, Metric.L2)
    d22 = next(c for c in cands if c.particle == 2).l2_length
    ok = abs(d22 - D22_DERIVED) <= 1e-12
    assert report(1, ok, f"(derived type-2 l2 value sqrt5+sqrt41 = "
                         f"{D22_DERIVED:.12f}, planner matches to 1e-12)")


# ------------------------------------------------------------------ #
# criterion 2: the two-arm exchange analogue
# ------------------------------------------------------------------ #

def test_criterion_2_two_arm_analogue(star4):
    t_start = time.perf_counter()
    a = OrderedConfig(star4.arm_point(1, 1.0), star4.arm_point(2, 2.0))
    b = OrderedConfig(star4.arm_point(2, 5.0), star4.arm_point(1, 2.0))
    res = {m: plan_star(star4, 2.0, a, b, m) for m in (Metric.L1, Metric.L2)}
    ok = res[Metric.L1].chosen.particle != res[Metric.L2].chosen.particle
    for m in (Metric.L1, Metric.L2):
        orc = oracle_shortest(star4, 2.0, a, b, m, True, 0.125)
        gap = orc.length - res[m].chosen.length(m)
        ok &= abs(gap) <= 0.5
        # the oracle length certifies the planner's ordering of the types
        other = min(c.length(m) for c in res[m].all_candidates
                    if c.particle != res[m].chosen.particle)
        ok &= orc.length <= other + 0.5
    elapsed = time.perf_counter() - t_start
    ok &= elapsed < 10.0
    assert report(2, ok, f"(l1 type {res[Metric.L1].chosen.particle} vs l2 "
                         f"type {res[Metric.L2].chosen.particle}, {elapsed:.1f} s)")


# ------------------------------------------------------------------ #
# criterion 3: ordered oracle agreement
# ------------------------------------------------------------------ #

def test_criterion_3_ordered_oracle_agreement():
    h = 1 / 16
    rng = random.Random(SEED)
    jobs = []
    for k in (3, 4, 5):
        star = Tree.star([10.0] * k)
        for metric in (Metric.L1, Metric.L2):
            for _ in range(200):
                a = random_star_config(rng, star, 1.0, on_grid=h)
                b = random_star_config(rng, star, 1.0, on_grid=h)
                jobs.append((star, metric, a, b))

    def run(job):
        star, metric, a, b = job
        res = plan_star(star, 1.0, a, b, metric)
        orc = oracle_shortest(star, 1.0, a, b, metric, True, h)
        return orc.length - res.chosen.length(metric)

    run(jobs[0])   # warm the JIT outside the timed window
    t0 = time.perf_counter()
    with ThreadPoolExecutor(2) as ex:
        gaps = list(ex.map(run, jobs))
    elapsed = time.perf_counter() - t0
    worst = max(abs(g) for g in gaps)
    ok = worst <= 4 * h and elapsed < 120.0
    # the oracle's discrete path is realizable, so it never undercuts a
    # correct planner
    ok &= min(gaps) >= -1e-9
    assert report(3, ok, f"({len(jobs)} instances, worst gap {worst:.4f} "
                         f"<= {4 * h}, oracle never below planner, "
                         f"{elapsed:.1f} s)")


# ------------------------------------------------------------------ #
# criterion 4: unordered oracle agreement
# ------------------------------------------------------------------ #

def test_criterion_4_unordered_oracle_agreement():
    rng = random.Random(SEED + 1)
    jobs = []
    for _ in range(10):
        tree = random_tree(rng, max_leaves=12, len_range=(1.0, 5.0))
        h = tree.min_edge_length / 16
        grid = discretize(tree, h)
        for _ in range(20):
            a = random_unordered_config(rng, tree, grid=grid.points)
            b = random_unordered_config(rng, tree, grid=grid.points)
            jobs.append((tree, h, a, b))

    def run(job):
        tree, h, a, b = job
        res = plan_any(tree, a, b)
        orc = oracle_shortest(tree, 0.0, a, b, Metric.L1, False, h)
        return orc.length - res.l1_length, 4 * h

    run(jobs[0])
    t0 = time.perf_counter()
    with ThreadPoolExecutor(2) as ex:
        rows = list(ex.map(run, jobs))
    elapsed = time.perf_counter() - t0
    violations = sum(1 for gap, tol in rows if abs(gap) > tol)
    worst = max(abs(gap) for gap, _ in rows)
    ok = violations == 0 and elapsed < 120.0
    ok &= min(gap for gap, _ in rows) >= -1e-9
    assert report(4, ok, f"({len(jobs)} instances, worst gap {worst:.4f}, "
                         f"{elapsed:.1f} s)")


# ------------------------------------------------------------------ #
# criterion 5: partition cardinality equals GC + 1
# ------------------------------------------------------------------ #

def test_criterion_5_partition_cardinalities():
    n = 10_000
    ok = True
    detail = []
    for k, expect in ((3, {0, 1}), (4, {0, 1, 2}), (5, {0, 1, 2})):
        star = Tree.star([10.0] * k)
        rep = audit_partition_ordered(star, 1.0, Metric.L2, n, SEED + k)
        ok &= set(rep.counts) == expect and rep.total == n
        ok &= sum(rep.counts.values()) == n
        detail.append(f"k={k}: {sorted(rep.counts)}")
    y = Tree.star([10.0] * 3)
    rep = audit_partition_unordered(y, n, SEED + 10)
    ok &= set(rep.counts) == {0, 1} and sum(rep.counts.values()) == n
    detail.append(f"Y: {sorted(rep.counts)}")
    rng = random.Random(SEED + 11)
    tree = random_tree(rng, max_leaves=8)
    while tree.is_interval() or (tree.star_center is not None
                                 and tree.n_leaves == 3):
        tree = random_tree(rng, max_leaves=8)
    rep = audit_partition_unordered(tree, n, SEED + 12)
    ok &= set(rep.counts) == {0, 1, 2} and sum(rep.counts.values()) == n
    detail.append(f"tree: {sorted(rep.counts)}")
    interval = Tree.path([4.0, 6.0])
    rep = audit_partition_unordered(interval, n, SEED + 13)
    ok &= set(rep.counts) == {0} and sum(rep.counts.values()) == n
    detail.append(f"interval: {sorted(rep.counts)}")
    assert report(5, ok, "(" + "; ".join(detail) + ")")


# ------------------------------------------------------------------ #
# criterion 6: cut-locus detection on symmetric ties
# ------------------------------------------------------------------ #

def test_criterion_6_cut_locus_flags(star4):
    # symmetric four-arm instance: equal type lengths by arm relabeling
    a = OrderedConfig(star4.arm_point(1, 2.0), star4.arm_point(2, 2.0))
    b = OrderedConfig(star4.arm_point(3, 5.0), star4.arm_point(4, 5.0))
    res = plan_star(star4, 2.0, a, b, Metric.L2)
    lens = sorted(c.l2_length for c in res.all_candidates)
    ok = res.in_cut_locus and abs(lens[0] - lens[1]) <= 1e-12
    a_p = OrderedConfig(star4.arm_point(1, 2.1), star4.arm_point(2, 2.0))
    ok &= not plan_star(star4, 2.0, a_p, b, Metric.L2).in_cut_locus

    # symmetric two-arm exchange
    a = OrderedConfig(star4.arm_point(1, 3.0), star4.arm_point(2, 3.0))
    b = OrderedConfig(star4.arm_point(2, 3.0), star4.arm_point(1, 3.0))
    res = plan_star(star4, 2.0, a, b, Metric.L2)
    d1 = min(c.l2_length for c in res.all_candidates if c.particle == 1)
    d2 = min(c.l2_length for c in res.all_candidates if c.particle == 2)
    ok &= res.in_cut_locus and abs(d1 - d2) <= 1e-12
    a_p = OrderedConfig(star4.arm_point(1, 3.1), star4.arm_point(2, 3.0))
    res_p = plan_star(star4, 2.0, a_p, b, Metric.L2)
    ok &= res_p.eq is False
    assert report(6, ok, "(ties flagged at 1e-12; 0.1 perturbation unflags)")


# ------------------------------------------------------------------ #
# criterion 7: continuity at the enumerated boundaries
# ------------------------------------------------------------------ #

def test_criterion_7_continuity_audits():
    eps = 1.0
    deltas = [eps / 10, eps / 100, eps / 1000]
    star3 = Tree.star([10.0] * 3)
    star4 = Tree.star([10.0] * 4)
    ok = True
    detail = []
    scenarios = [
        ("tied switch -> one-arm (l2, k=3)",
         audit_tied_switch_to_one_arm(star3, eps, deltas, Metric.L2), True),
        ("tied switch -> one-arm (l1, k=3)",
         audit_tied_switch_to_one_arm(star3, eps, deltas, Metric.L1), True),
        ("3-arm sweep -> path", audit_y_sweep_to_path(star3, deltas), True),
        ("inner dot -> vertex", audit_inner_dot_to_vertex(star4, deltas), True),
    ]
    for name, rep, need_same_rule in scenarios:
        sups = [row[2] for row in rep.rows]
        good = all(s <= 5 * d for (d, _, s, _) in rep.rows)
        good &= all(x > y for x, y in zip(sups, sups[1:]))
        if need_same_rule:
            good &= all(r for (_, _, _, r) in rep.rows)
        ok &= good
        detail.append(f"{name}: sup/delta <= "
                      f"{max(s / d for (d, _, s, _) in rep.rows):.2f}")
    assert report(7, ok, "(" + "; ".join(detail) + ")")


# ------------------------------------------------------------------ #
# criterion 8: the timing parameter formulas
# ------------------------------------------------------------------ #

def test_criterion_8_timing_formulas():
    from treeplan.unordered import diagram_a_t0, diagram_b_t0
    ok = diagram_a_t0(1, 1, 2, 3) == 0.5
    ok &= abs(1 / (1 + 2) - 1 / 3) == 0.0
    ok &= 1 / (1 + 2) < diagram_a_t0(1, 1, 2, 3)          # crosses after
    ok &= diagram_b_t0(1, 1, 2, 3) == pytest.approx(0.2, abs=1e-15)
    ok &= diagram_b_t0(1, 1, 2, 3) < 1 / (1 + 2)          # crosses before
    ok &= diagram_a_t0(1.0, 1.0, 2.0, 0.0) == 1.0         # degenerate inner
    ok &= diagram_b_t0(1.0, 0.0, 2.0, 3.0) == 0.0         # degenerate inner

    # end-to-end: vertex-dot diagrams produce uniform linear motion
    star3 = Tree.star([10.0] * 3)
    a = UnorderedConfig.of(star3.vertex_point(0), star3.arm_point(1, 2.0))
    b = UnorderedConfig.of(star3.arm_point(2, 2.0), star3.arm_point(3, 1.0))
    res = plan_y(star3, a, b)
    ok &= res.t0 == 0.0 and min_separation(res.path) > 0
    a2 = UnorderedConfig.of(star3.arm_point(1, 2.0), star3.arm_point(2, 2.0))
    b2 = UnorderedConfig.of(star3.vertex_point(0), star3.arm_point(3, 1.0))
    res2 = plan_y(star3, a2, b2)
    ok &= res2.t0 == 1.0 and min_separation(res2.path) > 0
    assert report(8, ok, "(A: t0=1/2 after crossing 1/3; B: t0=1/5 before; "
                         "degenerate cases uniform)")


# ------------------------------------------------------------------ #
# criterion 9: property suites
# ------------------------------------------------------------------ #

def test_criterion_9a_metric_axioms_and_four_point():
    rng = random.Random(SEED + 20)
    ok = True
    for _ in range(40):
        tree = random_tree(rng, max_leaves=8)
        pts = [random_point(rng, tree, vertex_prob=0.2) for _ in range(5)]
        for _ in range(25):
            p, q, r = (rng.choice(pts) for _ in range(3))
            dpq = tree.distance(p, q)
            ok &= abs(dpq - tree.distance(q, p)) <= 1e-12
            ok &= (dpq == 0) == (p == q)
            ok &= dpq <= tree.distance(p, r) + tree.distance(r, q) + 1e-9
        for _ in range(25):
            p, q, r, s = (rng.choice(pts) for _ in range(4))
            sums = sorted([tree.distance(p, q) + tree.distance(r, s),
                           tree.distance(p, r) + tree.distance(q, s),
                           tree.distance(p, s) + tree.distance(q, r)])
            ok &= abs(sums[1] - sums[2]) <= 1e-9
    assert report("9a", ok, "(metric axioms + four-point, 1000 cases each)")


def test_criterion_9b_path_feasibility_and_equivariance():
    rng = random.Random(SEED + 21)
    ok = True
    star = Tree.star([10.0] * 4)
    for i in range(1000):
        metric = Metric.L1 if i % 2 else Metric.L2
        a = random_star_config(rng, star, 1.0)
        b = random_star_config(rng, star, 1.0)
        res = plan_star(star, 1.0, a, b, metric)
        ok &= min_separation(res.chosen.path) >= 1.0 - 1e-9
        ok &= res.chosen.path.start == (a.p1, a.p2)
        ok &= res.chosen.path.end == (b.p1, b.p2)
        if i % 10 == 0:
            sw = plan_star(star, 1.0, a.swapped(), b.swapped(), metric)
            ok &= abs(sw.chosen.length(metric)
                      - res.chosen.length(metric)) <= 1e-9
            rv = plan_star(star, 1.0, b, a, metric)
            ok &= abs(rv.chosen.length(metric)
                      - res.chosen.length(metric)) <= 1e-9
            rev = res.chosen.path.reversed()
            ok &= abs(path_length(rev, metric)
                      - path_length(res.chosen.path, metric)) <= 1e-9
    assert report("9b", ok, "(1000 ordered plans feasible; swap/reversal "
                            "equivariance on every 10th)")


def test_criterion_9c_unordered_feasibility():
    rng = random.Random(SEED + 22)
    ok = True
    trees = [Tree.star([10.0] * 3), Tree.star([10.0] * 4)]
    for _ in range(4):
        trees.append(random_tree(rng, max_leaves=9))
    for i in range(1000):
        tree = trees[i % len(trees)]
        a = random_unordered_config(rng, tree)
        b = random_unordered_config(rng, tree)
        res = plan_any(tree, a, b)
        ok &= min_separation(res.path) > 0
        ok &= abs(res.l1_length
                  - config_distance(tree, a, b, Metric.L1)) <= 1e-9
    assert report("9c", ok, "(1000 unordered plans feasible and matching-"
                            "minimal)")


def test_criterion_9d_l2_paths_are_l1_geodesics_on_direct_classes():
    # on one-arm, agreeing two-arm, three-arm, and forced-switch classes,
    # the l2-chosen path must also be l1-minimal (checked against the
    # l1 oracle within 4h)
    h = 1 / 16
    rng = random.Random(SEED + 23)
    star = Tree.star([10.0] * 4)
    eligible = {StarClassKind.X1_PLUS, StarClassKind.X1_MINUS,
                StarClassKind.X2_PLUS, StarClassKind.X3,
                StarClassKind.X2_MINUS_THREE_ON_ARM,
                StarClassKind.X2_MINUS_SPLIT}
    jobs = []
    while len(jobs) < 1000:
        a = random_star_config(rng, star, 1.0, on_grid=h)
        b = random_star_config(rng, star, 1.0, on_grid=h)
        if classify(star, 1.0, a, b).kind in eligible:
            jobs.append((a, b))

    def run(job):
        a, b = job
        res = plan_star(star, 1.0, a, b, Metric.L2)
        l1_of_l2_path = path_length(res.chosen.path, Metric.L1)
        orc = oracle_shortest(star, 1.0, a, b, Metric.L1, True, h)
        return l1_of_l2_path - orc.length

    with ThreadPoolExecutor(2) as ex:
        gaps = list(ex.map(run, jobs))
    worst = max(gaps)
    ok = worst <= 4 * h
    assert report("9d", ok, f"(1000 cases, worst l1 excess of the l2 path "
                            f"{worst:.4f} <= {4 * h})")
