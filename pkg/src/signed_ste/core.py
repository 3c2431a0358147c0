"""Signed graphs, signed matrices and structural predicates.

A signed graph is stored as a dense symmetric adjacency matrix with entries
in {-1, 0, +1} and zero diagonal. Vertices are 0-indexed.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np


class GraphError(ValueError):
    """Invalid signed graph input (bad edge, bad matrix)."""


def _frozen_int_array(entries, name):
    arr = np.array(entries, dtype=np.int64)
    if arr.size and not np.isin(arr, (-1, 0, 1)).all():
        raise GraphError(f"{name} entries must lie in {{-1, 0, 1}}")
    arr.setflags(write=False)
    return arr


class SignedMatrix:
    """Rectangular {0, +1, -1} matrix (weighing matrices, incidence matrices)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        arr = _frozen_int_array(entries, "SignedMatrix")
        if arr.ndim != 2:
            raise GraphError("SignedMatrix must be two-dimensional")
        self.entries = arr

    @property
    def shape(self):
        return self.entries.shape

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def T(self):
        return SignedMatrix(self.entries.T)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries.copy()
        return self.entries.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, SignedMatrix):
            return NotImplemented
        return self.shape == other.shape and bool((self.entries == other.entries).all())

    def __hash__(self):
        return hash((self.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"SignedMatrix({self.rows}x{self.cols})"


class SignedGraph:
    """Simple signed graph given by its adjacency matrix."""

    __slots__ = ("adj",)

    def __init__(self, adj):
        arr = _frozen_int_array(adj, "adjacency")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if arr.diagonal().any():
            raise GraphError("adjacency matrix must have zero diagonal (no loops)")
        if not (arr == arr.T).all():
            raise GraphError("adjacency matrix must be symmetric")
        self.adj = arr

    @property
    def n(self):
        return self.adj.shape[0]

    @property
    def ground(self):
        """Ordinary adjacency matrix of the underlying graph."""
        return np.abs(self.adj)

    def degrees(self):
        return self.ground.sum(axis=1)

    def edges(self):
        """Edges as (u, v, sign) with u < v, in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return [(int(u), int(v), int(self.adj[u, v])) for u, v in zip(us, vs)]

    @property
    def num_edges(self):
        return int(np.count_nonzero(self.adj)) // 2

    def neighbors(self, v):
        return [int(u) for u in np.flatnonzero(self.adj[v])]

    def induced(self, vertices):
        idx = list(vertices)
        return SignedGraph(self.adj[np.ix_(idx, idx)])

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.adj.copy()
        return self.adj.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.n == other.n and bool((self.adj == other.adj).all())

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"SignedGraph(n={self.n}, edges={self.num_edges})"


@dataclass(frozen=True)
class GroundPartitionInfo:
    components: tuple
    balanced: tuple

    @property
    def num_balanced(self):
        return sum(self.balanced)


def from_edge_list(n, edges, one_indexed=False):
    """Build a signed graph from ``(u, v, sign)`` triples.

    Raises GraphError on self-loops, out-of-range vertices, signs other
    than +-1 and repeated unordered pairs; the message names the pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    offset = 1 if one_indexed else 0
    adj = np.zeros((n, n), dtype=np.int64)
    for edge in edges:
        u, v, s = (int(x) for x in edge)
        u -= offset
        v -= offset
        pair = (u + offset, v + offset)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in edge {pair}")
        if u == v:
            raise GraphError(f"self-loop at edge {pair}")
        if s not in (1, -1):
            raise GraphError(f"sign must be +1 or -1 in edge {pair}, got {s}")
        if adj[u, v]:
            raise GraphError(f"duplicate edge {pair}")
        adj[u, v] = adj[v, u] = s
    return SignedGraph(adj)


def regularity(sigma):
    """Common degree k of the ground graph, or None if it is not regular."""
    if sigma.n == 0:
        return None
    deg = sigma.degrees()
    k = int(deg[0])
    return k if (deg == k).all() else None


def square(sigma):
    """Exact A^2 as int64.

    Entries of A^2 are bounded by n, so the float64 product (which uses
    BLAS, unlike integer matmul) is exact for any realistic n.
    """
    F = sigma.adj.astype(np.float64)
    return np.rint(F @ F).astype(np.int64)


def negate(sigma):
    return SignedGraph(-sigma.adj)


def switch(sigma, vertex_set):
    """Flip the sign of every edge with exactly one endpoint in vertex_set."""
    d = np.ones(sigma.n, dtype=np.int64)
    d[list(vertex_set)] = -1
    return SignedGraph(d[:, None] * sigma.adj * d[None, :])


def balanced_components(sigma):
    """Connected components of the ground and whether each one is balanced.

    A BFS assigns a +-1 potential p to every vertex; a component is balanced
    iff sign(uv) == p(u) * p(v) on all of its edges.
    """
    n = sigma.n
    potential = np.zeros(n, dtype=np.int64)
    components = []
    balanced = []
    for root in range(n):
        if potential[root]:
            continue
        potential[root] = 1
        comp = [root]
        ok = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(sigma.adj[u]):
                s = sigma.adj[u, v]
                if not potential[v]:
                    potential[v] = potential[u] * s
                    comp.append(int(v))
                    queue.append(v)
                elif potential[v] != potential[u] * s:
                    ok = False
        components.append(tuple(sorted(comp)))
        balanced.append(ok)
    return GroundPartitionInfo(tuple(components), tuple(balanced))


def is_connected(sigma):
    return len(balanced_components(sigma).components) <= 1


def is_bipartite_ground(sigma):
    color = -np.ones(sigma.n, dtype=np.int64)
    for root in range(sigma.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(sigma.adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def complete_positive(n):
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return SignedGraph(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))
