"""Brute-force ground truth: Dijkstra over a discretized configuration graph.

The tree is subdivided into grid points at pitch <= h (uniform per edge,
vertices always included).  Configuration nodes are pairs of grid points at
separation >= eps (ordered) or distinct (unordered); moves let one or both
particles advance along the grid, and every move is admitted only if the
exact interpolated separation stays feasible throughout (the separation is
piecewise affine per move, so endpoint checks plus a same-edge crossing
test are exact).

For ordered planning on stars, simultaneous moves may advance the two
particles by coprime step counts up to ``max_step`` per move.  Single-step
moves alone quantize directions to multiples of 45 degrees, which inflates
l2 lengths by up to ~8% of the path length -- far above the O(h) accuracy
the validation suite needs; coprime multi-steps bound the directional error
by ~0.5% at max_step=6 while staying plain binary-heap Dijkstra.  l1
lengths are direction-insensitive, so the general kernel uses single steps.

Search is binary-heap Dijkstra with early exit at the target; nothing
smarter, since this module is a correctness instrument.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np
from numba import njit

from .tree import Tree, PointOnTree, ArgumentError, TOL
from .config import Metric

INF = math.inf


# --------------------------------------------------------------------- #
# grids
# --------------------------------------------------------------------- #

@dataclass
class Grid:
    """Grid points on a tree: the vertices plus uniform subdivisions."""

    tree: Tree
    h: float
    points: list
    node_edge: np.ndarray     # carrying edge (-1 for vertices)
    node_off: np.ndarray      # offset on carrying edge
    nbr_ptr: np.ndarray       # CSR adjacency of grid steps
    nbr_tgt: np.ndarray
    nbr_edge: np.ndarray
    nbr_off0: np.ndarray
    nbr_off1: np.ndarray
    nbr_len: np.ndarray
    _index: dict

    def __len__(self):
        return len(self.points)

    def snap(self, p: PointOnTree):
        """(node id, snap distance) of the grid point nearest to p."""
        p = self.tree.check_point(p)
        if p in self._index:
            return self._index[p], 0.0
        if p.at_vertex:
            return self._index[p], 0.0
        u, v, L = self.tree.edges[p.edge]
        n_seg = max(1, round(L / self._edge_step(p.edge)))
        step = L / n_seg
        i = min(n_seg, max(0, round(p.offset / step)))
        q = self.tree.edge_point(p.edge, i * step)
        return self._index[q], self.tree.distance(p, q)

    def _edge_step(self, e):
        L = self.tree.edges[e][2]
        return L / math.ceil(L / self.h - 1e-12)


def discretize(tree: Tree, h: float, edge_caps=None) -> Grid:
    """Subdivide every edge into segments of length <= h.

    ``edge_caps`` optionally truncates the grid of an edge at a distance
    from its u endpoint (used to prune unreachable star arm tails).
    """
    if h <= 0 or h > tree.min_edge_length / 2 + TOL:
        raise ArgumentError("need 0 < h <= (min edge length)/2")
    n = tree.n_vertices
    points = [tree.vertex_point(v) for v in range(n)]
    node_edge = [-1] * n
    node_off = [0.0] * n
    index = {p: i for i, p in enumerate(points)}
    chains = []
    for e, (u, v, L) in enumerate(tree.edges):
        n_seg = math.ceil(L / h - 1e-12)
        step = L / n_seg
        cap = None if edge_caps is None else edge_caps.get(e)
        ids = [u]
        for i in range(1, n_seg):
            off = i * step
            if cap is not None and off > cap + 1e-12 and L - off > cap + 1e-12:
                continue
            p = tree.edge_point(e, off)
            index[p] = len(points)
            ids.append(len(points))
            node_edge.append(e)
            node_off.append(off)
            points.append(p)
        ids.append(v)
        chains.append((e, ids, step))
    adj = [[] for _ in range(len(points))]
    for e, ids, step in chains:
        for a, b in zip(ids, ids[1:]):
            oa = _off_on_edge(tree, points[a], e)
            ob = _off_on_edge(tree, points[b], e)
            adj[a].append((b, e, oa, ob, abs(ob - oa)))
            adj[b].append((a, e, ob, oa, abs(ob - oa)))
    ptr = [0]
    tgt, edg, off0, off1, ln = [], [], [], [], []
    for lst in adj:
        for (t, e, oa, ob, s) in lst:
            tgt.append(t)
            edg.append(e)
            off0.append(oa)
            off1.append(ob)
            ln.append(s)
        ptr.append(len(tgt))
    return Grid(
        tree=tree, h=h, points=points,
        node_edge=np.array(node_edge, dtype=np.int32),
        node_off=np.array(node_off, dtype=np.float64),
        nbr_ptr=np.array(ptr, dtype=np.int64),
        nbr_tgt=np.array(tgt, dtype=np.int32),
        nbr_edge=np.array(edg, dtype=np.int32),
        nbr_off0=np.array(off0, dtype=np.float64),
        nbr_off1=np.array(off1, dtype=np.float64),
        nbr_len=np.array(ln, dtype=np.float64),
        _index=index,
    )


def _off_on_edge(tree, p, e):
    u, v, L = tree.edges[e]
    if p.at_vertex:
        return 0.0 if p.vertex == u else L
    return p.offset


def _exit_tables(grid: Grid):
    """Per-node exit vertices and distances, plus the small vertex matrix."""
    tree = grid.tree
    DV = np.array(tree._D, dtype=np.float64)
    N = len(grid)
    eu = np.empty(N, dtype=np.int64)
    ev = np.empty(N, dtype=np.int64)
    du = np.empty(N, dtype=np.float64)
    dv = np.empty(N, dtype=np.float64)
    for i, p in enumerate(grid.points):
        if p.at_vertex:
            eu[i] = ev[i] = p.vertex
            du[i] = dv[i] = 0.0
        else:
            u, v, L = tree.edges[p.edge]
            eu[i], ev[i] = u, v
            du[i], dv[i] = p.offset, L - p.offset
    return eu, ev, du, dv, DV


def grid_distance_matrix(grid: Grid) -> np.ndarray:
    """All-pairs tree distances between grid points (vectorized 4-way min
    over the exit vertices of the carrying edges)."""
    tree = grid.tree
    n_v = tree.n_vertices
    DV = np.array(tree._D, dtype=np.float64)
    N = len(grid)
    eu = np.empty(N, dtype=np.int64)
    ev = np.empty(N, dtype=np.int64)
    du = np.empty(N, dtype=np.float64)
    dv = np.empty(N, dtype=np.float64)
    for i, p in enumerate(grid.points):
        if p.at_vertex:
            eu[i] = ev[i] = p.vertex
            du[i] = dv[i] = 0.0
        else:
            u, v, L = tree.edges[p.edge]
            eu[i], ev[i] = u, v
            du[i], dv[i] = p.offset, L - p.offset
    D = np.minimum.reduce([
        du[:, None] + DV[eu][:, eu] + du[None, :],
        du[:, None] + DV[eu][:, ev] + dv[None, :],
        dv[:, None] + DV[ev][:, eu] + du[None, :],
        dv[:, None] + DV[ev][:, ev] + dv[None, :],
    ])
    edge_ids = grid.node_edge
    offs = grid.node_off
    same = (edge_ids[:, None] == edge_ids[None, :]) & (edge_ids[:, None] >= 0)
    direct = np.abs(offs[:, None] - offs[None, :])
    D = np.where(same, direct, D)
    return D


# --------------------------------------------------------------------- #
# numba heap helpers
# --------------------------------------------------------------------- #

@njit(cache=True, nogil=True, inline="always")
def _heap_push(hd, hn, size, d, node):
    if size >= hd.shape[0]:
        nd = np.empty(hd.shape[0] * 2, dtype=np.float64)
        nn = np.empty(hn.shape[0] * 2, dtype=np.int32)
        nd[:size] = hd
        nn[:size] = hn
        hd, hn = nd, nn
    hd[size] = d
    hn[size] = node
    i = size
    while i > 0:
        p = (i - 1) >> 1
        if hd[p] <= hd[i]:
            break
        hd[p], hd[i] = hd[i], hd[p]
        hn[p], hn[i] = hn[i], hn[p]
        i = p
    return hd, hn, size + 1


@njit(cache=True, nogil=True, inline="always")
def _heap_pop(hd, hn, size):
    d = hd[0]
    node = hn[0]
    size -= 1
    hd[0] = hd[size]
    hn[0] = hn[size]
    i = 0
    while True:
        l = 2 * i + 1
        r = l + 1
        m = i
        if l < size and hd[l] < hd[m]:
            m = l
        if r < size and hd[r] < hd[m]:
            m = r
        if m == i:
            break
        hd[m], hd[i] = hd[i], hd[m]
        hn[m], hn[i] = hn[i], hn[m]
        i = m
    return d, node, size


# --------------------------------------------------------------------- #
# star kernel (ordered, exact separation, coprime multi-step moves)
# --------------------------------------------------------------------- #

@njit(cache=True, nogil=True, inline="always")
def _move_min_sep(arm1, d1a, d1b, arm2, d2a, d2b):
    """Exact min separation over a move; each particle stays on one arm
    (arm < 0 encodes parked at the center, depth 0)."""
    if arm1 >= 0 and arm1 == arm2:
        fa = d1a - d2a
        fb = d1b - d2b
        if fa == 0.0 or fb == 0.0 or (fa > 0.0) != (fb > 0.0):
            return 0.0
        fa = abs(fa)
        fb = abs(fb)
        return fa if fa < fb else fb
    sa = d1a + d2a
    sb = d1b + d2b
    return sa if sa < sb else sb


@njit(cache=True, nogil=True)
def _star_dir_table(pt_arm, pt_idx, arm_step, arm_n, arm_base):
    """CSR of movement directions per point: travel arm, start depth/index,
    signed step length, max step count, and the arm's id base."""
    k = arm_n.shape[0]
    N = pt_arm.shape[0]
    cap = N * 2 + k
    ptr = np.zeros(N + 1, dtype=np.int64)
    d_arm = np.empty(cap, dtype=np.int64)
    d_j0 = np.empty(cap, dtype=np.int64)
    d_d0 = np.empty(cap, dtype=np.float64)
    d_st = np.empty(cap, dtype=np.float64)
    d_max = np.empty(cap, dtype=np.int64)
    d_base = np.empty(cap, dtype=np.int64)
    cnt = 0
    for p in range(N):
        a = pt_arm[p]
        i = pt_idx[p]
        if a >= 0:
            dep = i * arm_step[a]
            if i > 0:
                d_arm[cnt] = a
                d_j0[cnt] = i
                d_d0[cnt] = dep
                d_st[cnt] = -arm_step[a]
                d_max[cnt] = i
                d_base[cnt] = arm_base[a]
                cnt += 1
            if i < arm_n[a]:
                d_arm[cnt] = a
                d_j0[cnt] = i
                d_d0[cnt] = dep
                d_st[cnt] = arm_step[a]
                d_max[cnt] = arm_n[a] - i
                d_base[cnt] = arm_base[a]
                cnt += 1
        else:
            for arm in range(k):
                if arm_n[arm] > 0:
                    d_arm[cnt] = arm
                    d_j0[cnt] = 0
                    d_d0[cnt] = 0.0
                    d_st[cnt] = arm_step[arm]
                    d_max[cnt] = arm_n[arm]
                    d_base[cnt] = arm_base[arm]
                    cnt += 1
        ptr[p + 1] = cnt
    return ptr, d_arm[:cnt], d_j0[:cnt], d_d0[:cnt], d_st[:cnt], d_max[:cnt], d_base[:cnt]


@njit(cache=True, nogil=True, fastmath=True)
def _dijkstra_star(pt_arm, pt_idx, arm_step, arm_n, arm_base, eps, l2,
                   cp_s1, cp_s2, cp_w, src, dst):
    N = pt_arm.shape[0]
    (dptr, d_arm, d_j0, d_d0, d_st, d_max, d_base) = _star_dir_table(
        pt_arm, pt_idx, arm_step, arm_n, arm_base)
    n_pairs = cp_s1.shape[0]
    dist = np.full(N * N, np.inf, dtype=np.float64)
    hd = np.empty(1 << 20, dtype=np.float64)
    hn = np.empty(1 << 20, dtype=np.int32)
    size = 0
    dist[src] = 0.0
    hd, hn, size = _heap_push(hd, hn, size, 0.0, src)
    eps_tol = eps - 1e-12
    while size > 0:
        d0, node, size = _heap_pop(hd, hn, size)
        if node == dst:
            return d0
        if d0 > dist[node]:
            continue
        p1 = node // N
        p2 = node % N
        a1p = pt_arm[p1]
        a2p = pt_arm[p2]
        dep1 = 0.0 if a1p < 0 else pt_idx[p1] * arm_step[a1p]
        dep2 = 0.0 if a2p < 0 else pt_idx[p2] * arm_step[a2p]
        base1 = p1 * N
        # single-particle unit steps
        for di in range(dptr[p1], dptr[p1 + 1]):
            j = d_j0[di] + (1 if d_st[di] > 0 else -1)
            nd1 = d_d0[di] + d_st[di]
            # separation with particle 2 parked
            if d_arm[di] == a2p:
                fa = dep1 - dep2
                fb = nd1 - dep2
                if fa == 0.0 or fb == 0.0 or (fa > 0.0) != (fb > 0.0):
                    sep = 0.0
                else:
                    sep = min(abs(fa), abs(fb))
            else:
                sep = min(dep1 + dep2, nd1 + dep2)
            if sep < eps_tol:
                continue
            tgt1 = 0 if j == 0 else d_base[di] + j - 1
            tgt = tgt1 * N + p2
            nd = d0 + abs(d_st[di])
            if nd < dist[tgt]:
                dist[tgt] = nd
                hd, hn, size = _heap_push(hd, hn, size, nd, tgt)
        for dj in range(dptr[p2], dptr[p2 + 1]):
            j = d_j0[dj] + (1 if d_st[dj] > 0 else -1)
            nd2 = d_d0[dj] + d_st[dj]
            if d_arm[dj] == a1p:
                fa = dep1 - dep2
                fb = dep1 - nd2
                if fa == 0.0 or fb == 0.0 or (fa > 0.0) != (fb > 0.0):
                    sep = 0.0
                else:
                    sep = min(abs(fa), abs(fb))
            else:
                sep = min(dep1 + dep2, dep1 + nd2)
            if sep < eps_tol:
                continue
            tgt2 = 0 if j == 0 else d_base[dj] + j - 1
            tgt = base1 + tgt2
            nd = d0 + abs(d_st[dj])
            if nd < dist[tgt]:
                dist[tgt] = nd
                hd, hn, size = _heap_push(hd, hn, size, nd, tgt)
        # simultaneous coprime multi-steps
        for di in range(dptr[p1], dptr[p1 + 1]):
            arm1 = d_arm[di]
            j1 = d_j0[di]
            da1 = d_d0[di]
            st1 = d_st[di]
            mx1 = d_max[di]
            bs1 = d_base[di]
            for dj in range(dptr[p2], dptr[p2 + 1]):
                arm2 = d_arm[dj]
                j2 = d_j0[dj]
                da2 = d_d0[dj]
                st2 = d_st[dj]
                mx2 = d_max[dj]
                bs2 = d_base[dj]
                f0 = da1 - da2
                s0 = da1 + da2
                sg1 = 1 if st1 > 0 else -1
                sg2 = 1 if st2 > 0 else -1
                if arm1 == arm2:
                    if f0 == 0.0:
                        continue
                    for pi in range(n_pairs):
                        s1 = cp_s1[pi]
                        if s1 > mx1:
                            continue
                        s2 = cp_s2[pi]
                        if s2 > mx2:
                            continue
                        w1 = st1 * s1
                        w2 = st2 * s2
                        fb = f0 + w1 - w2
                        if fb == 0.0 or (f0 > 0.0) != (fb > 0.0):
                            continue
                        if abs(fb) < eps_tol:
                            continue
                        w = cp_w[pi]
                        if w < 0.0:
                            w = math.sqrt(w1 * w1 + w2 * w2) if l2 \
                                else abs(w1) + abs(w2)
                        jj1 = j1 + sg1 * s1
                        jj2 = j2 + sg2 * s2
                        tgt1 = 0 if jj1 == 0 else bs1 + jj1 - 1
                        tgt2 = 0 if jj2 == 0 else bs2 + jj2 - 1
                        tgt = tgt1 * N + tgt2
                        nd = d0 + w
                        if nd < dist[tgt]:
                            dist[tgt] = nd
                            hd, hn, size = _heap_push(hd, hn, size, nd, tgt)
                else:
                    for pi in range(n_pairs):
                        s1 = cp_s1[pi]
                        if s1 > mx1:
                            continue
                        s2 = cp_s2[pi]
                        if s2 > mx2:
                            continue
                        w1 = st1 * s1
                        w2 = st2 * s2
                        if s0 + w1 + w2 < eps_tol:
                            continue
                        w = cp_w[pi]
                        if w < 0.0:
                            w = math.sqrt(w1 * w1 + w2 * w2) if l2 \
                                else abs(w1) + abs(w2)
                        jj1 = j1 + sg1 * s1
                        jj2 = j2 + sg2 * s2
                        tgt1 = 0 if jj1 == 0 else bs1 + jj1 - 1
                        tgt2 = 0 if jj2 == 0 else bs2 + jj2 - 1
                        tgt = tgt1 * N + tgt2
                        nd = d0 + w
                        if nd < dist[tgt]:
                            dist[tgt] = nd
                            hd, hn, size = _heap_push(hd, hn, size, nd, tgt)
    return np.inf


# --------------------------------------------------------------------- #
# general kernel (arbitrary trees, single-step moves)
# --------------------------------------------------------------------- #

@njit(cache=True, nogil=True, inline="always")
def _node_sep(i, j, node_edge, node_off, node_eu, node_ev, node_du, node_dv, DV):
    if node_edge[i] == node_edge[j] and node_edge[i] >= 0:
        d = node_off[i] - node_off[j]
        return d if d >= 0.0 else -d
    a = node_du[i] + DV[node_eu[i], node_eu[j]] + node_du[j]
    b = node_du[i] + DV[node_eu[i], node_ev[j]] + node_dv[j]
    if b < a:
        a = b
    b = node_dv[i] + DV[node_ev[i], node_eu[j]] + node_du[j]
    if b < a:
        a = b
    b = node_dv[i] + DV[node_ev[i], node_ev[j]] + node_dv[j]
    if b < a:
        a = b
    return a


@njit(cache=True, nogil=True, fastmath=True)
def _dijkstra_general(nbr_ptr, nbr_tgt, nbr_edge, nbr_off0, nbr_off1, nbr_len,
                      node_edge, node_off, node_eu, node_ev, node_du, node_dv,
                      DV, eps, unordered, l2, src, dst):
    N = nbr_ptr.shape[0] - 1
    check_eps = eps > 0.0
    dist = np.full(N * N, np.inf, dtype=np.float64)
    hd = np.empty(1 << 20, dtype=np.float64)
    hn = np.empty(1 << 20, dtype=np.int32)
    size = 0
    dist[src] = 0.0
    hd, hn, size = _heap_push(hd, hn, size, 0.0, src)
    while size > 0:
        d0, node, size = _heap_pop(hd, hn, size)
        if node == dst:
            return d0
        if d0 > dist[node]:
            continue
        p1 = node // N
        p2 = node % N
        # single-particle moves, then simultaneous moves
        for e1 in range(nbr_ptr[p1], nbr_ptr[p1 + 1]):
            q1 = nbr_tgt[e1]
            if q1 == p2:
                continue
            if check_eps and _node_sep(q1, p2, node_edge, node_off, node_eu,
                                       node_ev, node_du, node_dv, DV) < eps - 1e-12:
                continue
            tgt = (q1 * N + p2) if (not unordered or q1 < p2) else (p2 * N + q1)
            nd = d0 + nbr_len[e1]
            if nd < dist[tgt]:
                dist[tgt] = nd
                hd, hn, size = _heap_push(hd, hn, size, nd, tgt)
        for e2 in range(nbr_ptr[p2], nbr_ptr[p2 + 1]):
            q2 = nbr_tgt[e2]
            if q2 == p1:
                continue
            if check_eps and _node_sep(p1, q2, node_edge, node_off, node_eu,
                                       node_ev, node_du, node_dv, DV) < eps - 1e-12:
                continue
            tgt = (p1 * N + q2) if (not unordered or p1 < q2) else (q2 * N + p1)
            nd = d0 + nbr_len[e2]
            if nd < dist[tgt]:
                dist[tgt] = nd
                hd, hn, size = _heap_push(hd, hn, size, nd, tgt)
        for e1 in range(nbr_ptr[p1], nbr_ptr[p1 + 1]):
            q1 = nbr_tgt[e1]
            for e2 in range(nbr_ptr[p2], nbr_ptr[p2 + 1]):
                q2 = nbr_tgt[e2]
                if q1 == q2:
                    continue
                if check_eps and _node_sep(q1, q2, node_edge, node_off, node_eu,
                                           node_ev, node_du, node_dv, DV) < eps - 1e-12:
                    continue
                if nbr_edge[e1] == nbr_edge[e2]:
                    fa = nbr_off0[e1] - nbr_off0[e2]
                    fb = nbr_off1[e1] - nbr_off1[e2]
                    if fa == 0.0 or fb == 0.0 or (fa > 0.0) != (fb > 0.0):
                        continue
                w = math.hypot(nbr_len[e1], nbr_len[e2]) if l2 \
                    else nbr_len[e1] + nbr_len[e2]
                tgt = (q1 * N + q2) if (not unordered or q1 < q2) else (q2 * N + q1)
                nd = d0 + w
                if nd < dist[tgt]:
                    dist[tgt] = nd
                    hd, hn, size = _heap_push(hd, hn, size, nd, tgt)
    return np.inf


# --------------------------------------------------------------------- #
# public driver
# --------------------------------------------------------------------- #

_DIRECTION_PAIRS = {
    # Simultaneous step-count pairs per direction pair.  The l2 direction
    # error is governed by the largest angular gap in the available slopes;
    # atan(1/max_step) next to the axis is always that gap, so only slopes
    # needed to keep every other gap at most as large are kept.
    1: [(1, 1)],
    2: [(1, 1), (1, 2), (2, 1)],
    3: [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)],
    4: [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2),
        (1, 4), (4, 1), (3, 4), (4, 3)],
    5: [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2),
        (1, 5), (5, 1), (2, 5), (5, 2)],
}


def _coprime_pairs(max_step: int):
    """Simultaneous (s1, s2) step pairs; singles are handled separately and
    non-coprime pairs are compositions that add nothing."""
    if max_step in _DIRECTION_PAIRS:
        pairs = _DIRECTION_PAIRS[max_step]
    else:
        pairs = [(i, j) for i in range(1, max_step + 1)
                 for j in range(1, max_step + 1) if math.gcd(i, j) == 1]
    s1 = [p[0] for p in pairs]
    s2 = [p[1] for p in pairs]
    return (np.array(s1, dtype=np.int64), np.array(s2, dtype=np.int64))


@dataclass
class StarGrid:
    """Per-arm uniform grid on a star, optionally depth-pruned."""

    tree: Tree
    eps: float
    pt_arm: np.ndarray
    pt_idx: np.ndarray
    arm_step: np.ndarray
    arm_n: np.ndarray
    arm_base: np.ndarray

    def __len__(self):
        return 1 + int(self.arm_n.sum())

    def snap(self, p: PointOnTree):
        arm, depth = self.tree.star_coord(p)
        if arm is None:
            return 0, 0.0
        a = arm - 1
        i = min(int(self.arm_n[a]), max(0, round(depth / self.arm_step[a])))
        err = abs(depth - i * self.arm_step[a])
        node = 0 if i == 0 else int(self.arm_base[a]) + i - 1
        return node, err


def star_grid(tree: Tree, eps: float, h: float, depth_caps=None) -> StarGrid:
    k = tree.n_leaves
    arm_step = np.empty(k, dtype=np.float64)
    arm_n = np.empty(k, dtype=np.int64)
    for arm in range(1, k + 1):
        L = tree.arm_length(arm)
        n_seg = math.ceil(L / h - 1e-12)
        step = L / n_seg
        cap = n_seg
        if depth_caps is not None and depth_caps.get(arm) is not None:
            cap = min(n_seg, math.ceil(depth_caps[arm] / step - 1e-12))
        arm_step[arm - 1] = step
        arm_n[arm - 1] = cap
    arm_base = np.empty(k, dtype=np.int64)
    base = 1
    for a in range(k):
        arm_base[a] = base
        base += arm_n[a]
    N = base
    pt_arm = np.full(N, -1, dtype=np.int64)
    pt_idx = np.zeros(N, dtype=np.int64)
    for a in range(k):
        for i in range(1, int(arm_n[a]) + 1):
            pid = int(arm_base[a]) + i - 1
            pt_arm[pid] = a
            pt_idx[pid] = i
    return StarGrid(tree=tree, eps=eps, pt_arm=pt_arm, pt_idx=pt_idx,
                    arm_step=arm_step, arm_n=arm_n, arm_base=arm_base)


@dataclass
class OracleResult:
    length: float
    snap_error: float
    nodes: int
    runtime: float


def oracle_shortest(tree: Tree, eps: float, a, b, metric, ordered: bool,
                    h: float, margin: float = 0.0, max_step: int = 5,
                    prune: bool = True) -> OracleResult:
    """Discretized shortest-path length between two configurations.

    Ordered star queries run on the multi-step star kernel (exact
    separation checks, taut paths never go deeper on an arm than the
    endpoint depths there plus eps, which bounds the pruned grid).  All
    other queries use the general single-step kernel.
    """
    metric = Metric.parse(metric)
    t0 = time.perf_counter()
    pts = (a.p1, a.p2, b.p1, b.p2)
    if ordered and tree.star_center is not None:
        caps = None
        if prune:
            caps = {}
            for arm in range(1, tree.n_leaves + 1):
                reach = [dep for p in pts
                         for (pa, dep) in [tree.star_coord(p)] if pa == arm]
                caps[arm] = min(tree.arm_length(arm),
                                max(reach, default=0.0) + eps + margin + 3 * h)
        grid = star_grid(tree, eps, h, caps)
        ids = []
        snap_err = 0.0
        for p in pts:
            i, err = grid.snap(p)
            ids.append(i)
            snap_err = max(snap_err, err)
        N = len(grid)
        src = ids[0] * N + ids[1]
        dst = ids[2] * N + ids[3]
        if metric is Metric.L1:
            # sequential unit steps realize every l1 length exactly: for any
            # feasible simultaneous move one of its two step orders is valid
            cp1 = np.empty(0, dtype=np.int64)
            cp2 = np.empty(0, dtype=np.int64)
        else:
            cp1, cp2 = _coprime_pairs(max_step)
        steps = grid.arm_step
        if np.all(np.abs(steps - steps[0]) < 1e-15):
            if metric is Metric.L2:
                cp_w = steps[0] * np.hypot(cp1.astype(np.float64), cp2)
            else:
                cp_w = steps[0] * (cp1 + cp2).astype(np.float64)
        else:
            cp_w = np.full(cp1.shape[0], -1.0)
        length = _dijkstra_star(grid.pt_arm, grid.pt_idx, grid.arm_step,
                                grid.arm_n, grid.arm_base, eps + margin,
                                metric is Metric.L2, cp1, cp2, cp_w, src, dst)
    else:
        grid = discretize(tree, h)
        ids = []
        snap_err = 0.0
        for p in pts:
            i, err = grid.snap(p)
            ids.append(i)
            snap_err = max(snap_err, err)
        N = len(grid)
        unordered = not ordered
        i1, i2, j1, j2 = ids
        if unordered:
            if i1 > i2:
                i1, i2 = i2, i1
            if j1 > j2:
                j1, j2 = j2, j1
        src = i1 * N + i2
        dst = j1 * N + j2
        use_eps = eps + margin if ordered else 0.0
        eu, ev, du, dv, DV = _exit_tables(grid)
        length = _dijkstra_general(grid.nbr_ptr, grid.nbr_tgt, grid.nbr_edge,
                                   grid.nbr_off0, grid.nbr_off1, grid.nbr_len,
                                   grid.node_edge, grid.node_off, eu, ev, du, dv,
                                   DV, use_eps, unordered,
                                   metric is Metric.L2, src, dst)
    if math.isinf(length):
        raise ArgumentError("oracle found no path: configuration graph is "
                            "disconnected at this eps/h")
    return OracleResult(length=float(length), snap_error=snap_err,
                        nodes=len(grid) ** 2, runtime=time.perf_counter() - t0)
