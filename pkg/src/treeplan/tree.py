"""Finite metric trees: the track network that the two robots move on.

A :class:`Tree` is a connected acyclic graph with positive edge lengths, a
per-vertex cyclic order of incident edges (the embedding), and a total order
1..k on its degree-1 vertices (the leaf numbering).  Points live either at a
vertex or strictly inside an edge; the canonical form never stores a vertex
as an edge offset, so point equality is exact.

All operations are pure; a Tree is immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property

#: absolute tolerance for geometric comparisons against epsilon and offsets
TOL = 1e-9


class TreeStructureError(ValueError):
    """The tree description violates a structural invariant."""


class ShapeError(ValueError):
    """The tree does not have the shape required by the operation."""


class ArgumentError(ValueError):
    """An argument refers to a vertex/edge/point that does not fit the tree."""


@dataclass(frozen=True, order=True)
class PointOnTree:
    """A position on a tree: a vertex, or an interior point of an edge.

    Canonical form: ``offset`` is meaningful only when ``edge >= 0`` and then
    lies strictly inside ``(0, edge length)``.  Vertex points store
    ``edge = -1, offset = 0.0``.  Construct through :meth:`Tree.vertex_point`
    and :meth:`Tree.edge_point`, which canonicalize.
    """

    vertex: int
    edge: int
    offset: float

    @property
    def at_vertex(self) -> bool:
        return self.edge < 0

    def to_json(self) -> dict:
        if self.at_vertex:
            return {"vertex": self.vertex}
        return {"edge": self.edge, "offset": self.offset}

    def __repr__(self) -> str:  # compact, for test failure output
        if self.at_vertex:
            return f"V({self.vertex})"
        return f"E({self.edge}@{self.offset:g})"


def _vertex_pt(v: int) -> PointOnTree:
    return PointOnTree(vertex=v, edge=-1, offset=0.0)


def _edge_pt(e: int, off: float) -> PointOnTree:
    return PointOnTree(vertex=-1, edge=e, offset=off)


class Tree:
    """Immutable finite metric tree with leaf numbering and an embedding.

    Parameters
    ----------
    edges : sequence of (u, v, length)
        Edge i of the tree joins vertices ``u`` and ``v``; ids are assigned
        in input order.  Vertices are ``0 .. n-1`` where ``n = len(edges)+1``.
    leaf_order : sequence of vertex ids
        The degree-1 vertices in leaf-number order; ``leaf_order[j]`` gets
        leaf number ``j+1``.  A clockwise order of a drawn embedding is the
        usual choice, but any total order yields a valid planner.
    cyclic : optional dict vertex -> list of edge ids
        Embedding as cyclic order of incident edges; defaults to input order.
    """

    def __init__(self, edges, leaf_order, cyclic=None):
        edges = [(int(u), int(v), float(L)) for (u, v, L) in edges]
        n = len(edges) + 1
        self.n_vertices = n
        self.edges = tuple(edges)
        adj = [[] for _ in range(n)]
        for i, (u, v, L) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise TreeStructureError(f"edge {i} endpoints invalid: {(u, v)}")
            if not (L > 0.0) or not math.isfinite(L):
                raise TreeStructureError(f"edge {i} length must be positive, got {L}")
            adj[u].append((i, v))
            adj[v].append((i, u))
        self._adj = tuple(tuple(a) for a in adj)

        # connectivity check; acyclicity follows from |E| = |V| - 1
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            x = stack.pop()
            for _, y in self._adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        if count != n:
            raise TreeStructureError("graph is not connected")

        leaves = [v for v in range(n) if len(self._adj[v]) == 1]
        if sorted(leaf_order) != sorted(leaves):
            raise TreeStructureError(
                f"leaf_order {leaf_order} is not a permutation of the degree-1 "
                f"vertices {sorted(leaves)}"
            )
        self.leaf_order = tuple(int(v) for v in leaf_order)
        self.leaf_number = {v: j + 1 for j, v in enumerate(self.leaf_order)}
        self.n_leaves = len(self.leaf_order)

        if cyclic is None:
            self.cyclic = {v: tuple(e for e, _ in self._adj[v]) for v in range(n)}
        else:
            self.cyclic = {v: tuple(cyclic[v]) for v in range(n)}
            for v in range(n):
                if sorted(self.cyclic[v]) != sorted(e for e, _ in self._adj[v]):
                    raise TreeStructureError(f"cyclic order at vertex {v} does not "
                                             "cover its incident edges")

        self._build_tables()
        self._arm_cache: dict[tuple[int, int], int] = {}

    # ------------------------------------------------------------------ #
    # construction helpers
    # ------------------------------------------------------------------ #

    @classmethod
    def star(cls, arm_lengths) -> "Tree":
        """Star graph: center vertex 0, leaf j+1 at the end of arm j+1."""
        edges = [(0, j + 1, L) for j, L in enumerate(arm_lengths)]
        return cls(edges, leaf_order=list(range(1, len(edges) + 1)))

    @classmethod
    def path(cls, segment_lengths) -> "Tree":
        """Path graph 0 - 1 - ... - m (homeomorphic to an interval)."""
        edges = [(i, i + 1, L) for i, L in enumerate(segment_lengths)]
        return cls(edges, leaf_order=[0, len(edges)])

    @classmethod
    def from_json(cls, obj) -> "Tree":
        if isinstance(obj, str):
            obj = json.loads(obj)
        edges_by_id = {}
        for rec in obj["edges"]:
            edges_by_id[int(rec["id"])] = (rec["u"], rec["v"], rec["len"])
        if sorted(edges_by_id) != list(range(len(edges_by_id))):
            raise TreeStructureError("edge ids must be 0..m-1")
        edges = [edges_by_id[i] for i in range(len(edges_by_id))]
        tree = cls(edges, leaf_order=obj["leaf_order"])
        if int(obj["vertices"]) != tree.n_vertices:
            raise TreeStructureError("vertex count does not match edge list")
        return tree

    def to_json(self) -> dict:
        return {
            "vertices": self.n_vertices,
            "edges": [
                {"id": i, "u": u, "v": v, "len": L}
                for i, (u, v, L) in enumerate(self.edges)
            ],
            "leaf_order": list(self.leaf_order),
        }

    def _build_tables(self):
        """All-pairs vertex distances and next hops (trees here are small)."""
        n = self.n_vertices
        INF = math.inf
        D = [[INF] * n for _ in range(n)]
        NXT = [[-1] * n for _ in range(n)]
        for s in range(n):
            D[s][s] = 0.0
            NXT[s][s] = s
            stack = [s]
            while stack:
                x = stack.pop()
                for e, y in self._adj[x]:
                    if D[s][y] == INF:
                        D[s][y] = D[s][x] + self.edges[e][2]
                        NXT[s][y] = y if x == s else NXT[s][x]
                        stack.append(y)
        self._D = D
        self._next = NXT
        self._edge_of = {}
        for i, (u, v, _) in enumerate(self.edges):
            self._edge_of[(u, v)] = i
            self._edge_of[(v, u)] = i

    # ------------------------------------------------------------------ #
    # basic queries
    # ------------------------------------------------------------------ #

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def incident_edges(self, v: int):
        return [e for e, _ in self._adj[v]]

    def edge_length(self, e: int) -> float:
        return self.edges[e][2]

    def other_end(self, e: int, v: int) -> int:
        u, w, _ = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise ArgumentError(f"vertex {v} is not an endpoint of edge {e}")

    @cached_property
    def diameter(self) -> float:
        return max(max(row) for row in self._D)

    @cached_property
    def min_edge_length(self) -> float:
        return min(L for _, _, L in self.edges)

    def is_interval(self) -> bool:
        """True iff the tree is homeomorphic to a closed interval."""
        return all(len(a) <= 2 for a in self._adj)

    # ------------------------------------------------------------------ #
    # points
    # ------------------------------------------------------------------ #

    def vertex_point(self, v: int) -> PointOnTree:
        if not (0 <= v < self.n_vertices):
            raise ArgumentError(f"no vertex {v}")
        return _vertex_pt(v)

    def edge_point(self, e: int, offset: float) -> PointOnTree:
        """Point at ``offset`` from endpoint u of edge e, canonicalized."""
        if not (0 <= e < len(self.edges)):
            raise ArgumentError(f"no edge {e}")
        u, v, L = self.edges[e]
        if offset < -TOL or offset > L + TOL:
            raise ArgumentError(f"offset {offset} outside edge {e} of length {L}")
        if offset <= TOL:
            return _vertex_pt(u)
        if offset >= L - TOL:
            return _vertex_pt(v)
        return _edge_pt(e, float(offset))

    def check_point(self, p: PointOnTree) -> PointOnTree:
        if p.at_vertex:
            if not (0 <= p.vertex < self.n_vertices):
                raise ArgumentError(f"point vertex {p.vertex} not on tree")
            return p
        if not (0 <= p.edge < len(self.edges)):
            raise ArgumentError(f"point edge {p.edge} not on tree")
        L = self.edges[p.edge][2]
        if not (0.0 < p.offset < L):
            raise ArgumentError(f"offset {p.offset} not interior to edge {p.edge}")
        return p

    def point_from_json(self, obj) -> PointOnTree:
        if "vertex" in obj:
            return self.vertex_point(int(obj["vertex"]))
        return self.edge_point(int(obj["edge"]), float(obj["offset"]))

    def _exits(self, p: PointOnTree):
        """(vertex, distance-from-p) pairs through which paths leave p."""
        if p.at_vertex:
            return ((p.vertex, 0.0),)
        u, v, L = self.edges[p.edge]
        return ((u, p.offset), (v, L - p.offset))

    # ------------------------------------------------------------------ #
    # metric
    # ------------------------------------------------------------------ #

    def distance(self, p: PointOnTree, q: PointOnTree) -> float:
        """Length of the unique tree path between p and q."""
        p = self.check_point(p)
        q = self.check_point(q)
        if not p.at_vertex and not q.at_vertex and p.edge == q.edge:
            return abs(p.offset - q.offset)
        return min(
            dp + self._D[x][y] + dq
            for x, dp in self._exits(p)
            for y, dq in self._exits(q)
        )

    def vertex_path(self, x: int, y: int):
        """Vertices along the path from x to y, inclusive."""
        path = [x]
        while path[-1] != y:
            path.append(self._next[path[-1]][y])
        return path

    def geodesic(self, p: PointOnTree, q: PointOnTree):
        """Breakpoints of the unique path p -> q.

        Returns a list ``[(point, cumdist), ...]`` starting at ``(p, 0)`` and
        ending at ``(q, distance(p, q))``, with every traversed vertex as an
        intermediate breakpoint and strictly increasing cumulative distances.
        """
        p = self.check_point(p)
        q = self.check_point(q)
        if p == q:
            return [(p, 0.0)]
        if not p.at_vertex and not q.at_vertex and p.edge == q.edge:
            return [(p, 0.0), (q, abs(p.offset - q.offset))]
        (x, dp), (y, dq) = self._best_exits(p, q)
        total = dp + self._D[x][y] + dq
        out = [(p, 0.0)]
        for v in self.vertex_path(x, y):
            pt = _vertex_pt(v)
            if pt != p:
                out.append((pt, dp + self._D[x][v]))
        if out[-1][0] != q:
            out.append((q, total))
        return out

    def _best_exits(self, p: PointOnTree, q: PointOnTree):
        best = None
        for x, dp in self._exits(p):
            for y, dq in self._exits(q):
                d = dp + self._D[x][y] + dq
                if best is None or d < best[0]:
                    best = (d, (x, dp), (y, dq))
        return best[1], best[2]

    def point_along(self, p: PointOnTree, q: PointOnTree, s: float) -> PointOnTree:
        """The point at arc distance ``s`` from p along the path to q."""
        total = self.distance(p, q)
        if s <= TOL:
            return p
        if s >= total - TOL:
            return q
        bps = self.geodesic(p, q)
        for (a, ca), (b, cb) in zip(bps, bps[1:]):
            if s <= cb + TOL:
                frac = (s - ca) / (cb - ca)
                return self._interpolate_edge(a, b, frac)
        return q

    def _interpolate_edge(self, a: PointOnTree, b: PointOnTree, frac: float):
        """Point between a and b, which must lie on one common edge."""
        e = self.edge_between(a, b)
        oa = self._offset_on(a, e)
        ob = self._offset_on(b, e)
        return self.edge_point(e, oa + frac * (ob - oa))

    def edge_between(self, a: PointOnTree, b: PointOnTree) -> int:
        """The edge carrying both a and b (they must share one)."""
        if not a.at_vertex:
            return a.edge
        if not b.at_vertex:
            return b.edge
        try:
            return self._edge_of[(a.vertex, b.vertex)]
        except KeyError:
            raise ArgumentError(f"{a} and {b} are not on a common edge") from None

    def _offset_on(self, p: PointOnTree, e: int) -> float:
        u, v, L = self.edges[e]
        if p.at_vertex:
            if p.vertex == u:
                return 0.0
            if p.vertex == v:
                return L
            raise ArgumentError(f"{p} not on edge {e}")
        if p.edge != e:
            raise ArgumentError(f"{p} not on edge {e}")
        return p.offset

    def median(self, x1: PointOnTree, x2: PointOnTree, x3: PointOnTree):
        """The unique point lying on all three pairwise paths."""
        d12 = self.distance(x1, x2)
        d13 = self.distance(x1, x3)
        d23 = self.distance(x2, x3)
        t = 0.5 * (d12 + d13 - d23)
        return self.point_along(x1, x2, t)

    # ------------------------------------------------------------------ #
    # leaf-number machinery
    # ------------------------------------------------------------------ #

    def arm_number(self, v: int, e: int) -> int:
        """Smallest leaf number reachable from v through edge e.

        This is the arm number of edge e (or of any point on it) relative to
        the vertex v; it depends on v as well as e.
        """
        key = (v, e)
        if key in self._arm_cache:
            return self._arm_cache[key]
        if e not in self.incident_edges(v):
            raise ArgumentError(f"edge {e} is not incident to vertex {v}")
        start = self.other_end(e, v)
        best = None
        seen = {v, start}
        stack = [start]
        while stack:
            x = stack.pop()
            if self.degree(x) == 1:
                n = self.leaf_number[x]
                best = n if best is None else min(best, n)
            for _, y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        # a pendant edge's far side may be a single leaf; best is never None
        self._arm_cache[key] = best
        return best

    def arm_number_toward(self, v: int, p: PointOnTree) -> int:
        """Arm number, relative to v, of the component containing p (p != v)."""
        bps = self.geodesic(_vertex_pt(v), p)
        nxt = bps[1][0]
        e = self.edge_between(bps[0][0], nxt)
        return self.arm_number(v, e)

    # ------------------------------------------------------------------ #
    # star-specific coordinates
    # ------------------------------------------------------------------ #

    @cached_property
    def star_center(self):
        """Center vertex id if this tree is a star (else None)."""
        centers = [v for v in range(self.n_vertices) if self.degree(v) >= 3]
        if len(centers) != 1:
            return None
        c = centers[0]
        if all((u == c) != (v == c) for u, v, _ in self.edges):
            return c
        return None

    def _require_star(self) -> int:
        c = self.star_center
        if c is None:
            raise ShapeError("tree is not a star graph")
        return c

    @cached_property
    def _arm_edge(self):
        """Star only: map arm index (leaf number) -> edge id, and back."""
        c = self._require_star()
        by_arm = {}
        for e, leaf in self._adj[c]:
            by_arm[self.leaf_number[leaf]] = e
        return by_arm

    def arm_length(self, arm: int) -> float:
        return self.edges[self._arm_edge[arm]][2]

    def star_coord(self, p: PointOnTree):
        """(arm index or None for the center, depth from the center)."""
        c = self._require_star()
        p = self.check_point(p)
        if p.at_vertex:
            if p.vertex == c:
                return (None, 0.0)
            e, leaf = next((e, l) for e, l in self._adj[c] if l == p.vertex)
            return (self.leaf_number[leaf], self.edges[e][2])
        u, v, L = self.edges[p.edge]
        leaf = v if u == c else u
        depth = p.offset if u == c else L - p.offset
        return (self.leaf_number[leaf], depth)

    def from_star_coord(self, arm, depth: float) -> PointOnTree:
        c = self._require_star()
        if arm is None or depth <= TOL:
            if depth > TOL:
                raise ArgumentError("center point must have depth 0")
            return _vertex_pt(c)
        e = self._arm_edge[arm]
        u, _, L = self.edges[e]
        off = depth if u == c else L - depth
        return self.edge_point(e, off)

    def arm_point(self, arm: int, depth: float) -> PointOnTree:
        """Convenience: the point at ``depth`` on arm ``arm`` (0 = center)."""
        return self.from_star_coord(arm if depth > TOL else None, depth)
