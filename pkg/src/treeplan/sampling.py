"""Random trees, points, and feasible configurations for audits and tests.

All samplers take an explicit ``random.Random`` so audit runs are
reproducible from a seed.
"""

from __future__ import annotations

import random

from .tree import Tree, PointOnTree
from .config import OrderedConfig, UnorderedConfig


def random_tree(rng: random.Random, max_leaves: int = 12,
                len_range=(1.0, 5.0), allow_interval: bool = False) -> Tree:
    """Random metric tree grown by leaf attachment.

    Grows from a single edge by repeatedly attaching a new leaf either to an
    existing vertex (raising its degree) or to the midpoint of an existing
    edge (subdividing it).  Leaf numbering is a random permutation.
    """
    lo, hi = len_range
    edges = [(0, 1, rng.uniform(lo, hi))]
    n = 2
    target = rng.randint(3, max_leaves) if max_leaves >= 3 else 2
    while True:
        leaves = _leaf_count(edges, n)
        if leaves >= target:
            break
        splittable = [i for i, (_, _, L) in enumerate(edges) if L >= 2 * lo]
        if rng.random() < 0.5 and n > 2 or not splittable:
            host = rng.randrange(n)
        else:
            # subdivide an edge, keeping both pieces within the length range
            i = rng.choice(splittable)
            u, v, L = edges[i]
            cut = rng.uniform(lo, L - lo)
            mid = n
            n += 1
            edges[i] = (u, mid, cut)
            edges.append((mid, v, L - cut))
            host = mid
        edges.append((host, n, rng.uniform(lo, hi)))
        n += 1
    leaf_ids = _leaves(edges, n)
    if not allow_interval and len(leaf_ids) < 3:
        return random_tree(rng, max_leaves, len_range, allow_interval)
    rng.shuffle(leaf_ids)
    return Tree(edges, leaf_order=leaf_ids)


def _adjacency_degrees(edges, n):
    deg = [0] * n
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _leaves(edges, n):
    return [v for v, d in enumerate(_adjacency_degrees(edges, n)) if d == 1]


def _leaf_count(edges, n):
    return len(_leaves(edges, n))


def random_point(rng: random.Random, tree: Tree, vertex_prob: float = 0.0):
    if vertex_prob > 0 and rng.random() < vertex_prob:
        return tree.vertex_point(rng.randrange(tree.n_vertices))
    e = rng.randrange(len(tree.edges))
    L = tree.edges[e][2]
    return tree.edge_point(e, rng.uniform(0.0, L))


def random_star_config(rng: random.Random, tree: Tree, eps: float,
                       on_grid: float | None = None) -> OrderedConfig:
    """Feasible ordered configuration on a star: arms uniform, depths
    uniform in [eps, arm length], infeasible pairs rejected."""
    k = tree.n_leaves
    while True:
        pts = []
        for _ in range(2):
            arm = rng.randrange(1, k + 1)
            depth = rng.uniform(eps, tree.arm_length(arm))
            if on_grid:
                depth = max(eps, round(depth / on_grid) * on_grid)
            pts.append(tree.arm_point(arm, depth))
        c = OrderedConfig(*pts)
        if tree.distance(c.p1, c.p2) >= eps:
            return c


def random_ordered_pair(rng, tree, eps, on_grid=None):
    return (random_star_config(rng, tree, eps, on_grid),
            random_star_config(rng, tree, eps, on_grid))


def random_unordered_config(rng: random.Random, tree: Tree,
                            on_grid: bool = False, grid=None) -> UnorderedConfig:
    """Distinct unordered pair; with ``grid`` set, snaps to grid points."""
    while True:
        if grid is not None:
            a = grid[rng.randrange(len(grid))]
            b = grid[rng.randrange(len(grid))]
        else:
            a = random_point(rng, tree)
            b = random_point(rng, tree)
        if a != b:
            return UnorderedConfig.of(a, b)


def random_unordered_pair(rng, tree, grid=None):
    return (random_unordered_config(rng, tree, grid=grid),
            random_unordered_config(rng, tree, grid=grid))
