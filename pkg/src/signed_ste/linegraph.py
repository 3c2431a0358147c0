"""Incidence matrices and line graphs of signed graphs.

The incidence matrix uses the bidirected convention: for an edge uv with
u < v, H(u, c) = +1 and H(v, c) = -sign(uv). Then H H^T = D - A (the
signed Laplacian) and the line graph has adjacency 2I - H^T H. With this
convention a cycle keeps its sign in the line graph and the three edges
at a common vertex form a negative triangle.
"""

from dataclasses import dataclass

import numpy as np

from .core import (GraphError, SignedGraph, SignedMatrix, balanced_components,
                   complete_positive, negate, regularity)
from .jacobi import cluster, eigenvalues_float


@dataclass(frozen=True)
class IncidenceMatrix:
    H: SignedMatrix
    edges: tuple


def incidence(sigma):
    edges = sigma.edges()
    H = np.zeros((sigma.n, len(edges)), dtype=np.int64)
    for c, (u, v, s) in enumerate(edges):
        H[u, c] = 1
        H[v, c] = -s
    return IncidenceMatrix(SignedMatrix(H), tuple((u, v) for u, v, _ in edges))


def line_graph(sigma, column_signs=None):
    """Signed line graph with adjacency 2I - H^T H.

    ``column_signs`` optionally negates incidence columns; the result then
    differs only by switching.
    """
    H = incidence(sigma).H.entries
    if column_signs is not None:
        H = H * np.asarray(column_signs, dtype=np.int64)[None, :]
    m = H.shape[1]
    A = 2 * np.eye(m, dtype=np.int64) - H.T @ H
    if not np.isin(A, (-1, 0, 1)).all() or A.diagonal().any():
        raise GraphError("line graph entries fall outside {0, +-1}")
    return SignedGraph(A)


def neg_line_complete(n):
    """-Lambda(K_n^+): spectrum [(n-2)^(n-1), (-2)^(n(n-1)/2 - n + 1)]."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return negate(line_graph(complete_positive(n)))


def predicted_line_spectrum(sigma):
    """Line-graph eigenvalues predicted from the spectrum of a k-regular sigma.

    Every eigenvalue lambda < k maps to lambda - k + 2, and 2 appears with
    multiplicity m - n + b(sigma), b = number of balanced components.
    """
    k = regularity(sigma)
    if k is None:
        raise ValueError("line spectrum prediction needs a regular signed graph")
    n, m = sigma.n, sigma.num_edges
    b = balanced_components(sigma).num_balanced
    lam = eigenvalues_float(sigma.adj)
    interior = lam[: n - b]
    predicted = np.concatenate([interior - k + 2, np.full(m - n + b, 2.0)])
    return np.sort(predicted)


def verify_line_spectrum(sigma, tol=1e-6):
    predicted = predicted_line_spectrum(sigma)
    actual = eigenvalues_float(line_graph(sigma).adj) if sigma.num_edges else np.array([])
    ok = predicted.shape == actual.shape and bool(np.all(np.abs(predicted - actual) <= tol))
    return {
        "pass": ok,
        "k": regularity(sigma),
        "b": balanced_components(sigma).num_balanced,
        "b_negated": balanced_components(negate(sigma)).num_balanced,
        "predicted": cluster(predicted, tol),
        "actual": cluster(actual, tol),
    }
