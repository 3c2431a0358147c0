"""Exact star-set and star-complement verification.

Write A = [[A_X, B], [B^T, C]] for a vertex set X. X is a star set for mu
iff mu is not an eigenvalue of C and mu I - A_X = B (mu I - C)^{-1} B^T.
No inverse is formed: (mu I - C) Z = B^T is solved exactly and
mu I - A_X is compared with B Z. Scalars live in Q(sqrt(d)).
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .qext import QExt, matmul, pivot_columns, shifted, solve, transpose


class SingularBlockError(ValueError):
    pass


@dataclass(frozen=True)
class StarPartition:
    X: tuple
    Y: tuple
    A_X: np.ndarray
    A_Y: np.ndarray
    B: np.ndarray


def _as_qext(mu):
    return mu if isinstance(mu, QExt) else QExt(mu)


def partition(sigma, X, Y=None):
    X = tuple(sorted(set(X)))
    if Y is None:
        Y = tuple(v for v in range(sigma.n) if v not in set(X))
    else:
        Y = tuple(sorted(set(Y)))
    if set(X) & set(Y) or len(X) + len(Y) != sigma.n or not set(X) | set(Y) <= set(range(sigma.n)):
        raise ValueError("X and Y must partition the vertex set")
    A = sigma.adj
    return StarPartition(X, Y, A[np.ix_(X, X)], A[np.ix_(Y, Y)], A[np.ix_(X, Y)])


def _reconstructs(mu, A_X, B, C, label):
    """Check mu I - A_X == B (mu I - C)^{-1} B^T; raise if mu I - C is singular."""
    Bq = [[QExt(int(x)) for x in row] for row in B]
    try:
        Z = solve(shifted(mu, C), transpose(Bq))
    except ZeroDivisionError:
        raise SingularBlockError(
            f"{mu} is an eigenvalue of {label}: not a star set"
        ) from None
    return matmul(Bq, Z) == shifted(mu, A_X)


def is_star_set(sigma, X, mu):
    X = tuple(sorted(set(X)))
    if not X or len(X) >= sigma.n:
        raise ValueError("star set must be a nonempty proper subset of the vertices")
    p = partition(sigma, X)
    return _reconstructs(_as_qext(mu), p.A_X, p.B, p.A_Y, "the star complement")


def verify_partition(sigma, X, Y, lambda1, lambda2):
    """Both reconstruction identities for the split X | Y.

    X is checked as a star set for lambda1 (complement A_Y) and Y as a star
    set for lambda2 (complement A_X). When both hold, the spectrum is
    [lambda1^|X|, lambda2^|Y|].
    """
    p = partition(sigma, X, Y)
    l1, l2 = _as_qext(lambda1), _as_qext(lambda2)
    first = _reconstructs(l1, p.A_X, p.B, p.A_Y, "A_Y")
    second = _reconstructs(l2, p.A_Y, p.B.T, p.A_X, "A_X")
    return first and second


def find_star_set(sigma, mu, m, exhaustive=False):
    """A star set of size m for mu, lexicographically smallest, or None.

    The complement is a maximal set of independent columns of mu I - A
    chosen greedily from the highest vertex down; for a symmetric matrix
    its principal submatrix is nonsingular.
    """
    mu = _as_qext(mu)
    n = sigma.n
    rev = sigma.adj[::-1, ::-1]
    piv = pivot_columns(shifted(mu, rev))
    Y = {n - 1 - c for c in piv}
    X = tuple(v for v in range(n) if v not in Y)
    if len(X) == m and 0 < m < n and is_star_set(sigma, X, mu):
        return X
    if not exhaustive:
        return None
    for cand in combinations(range(n), m):
        try:
            if is_star_set(sigma, cand, mu):
                return cand
        except SingularBlockError:
            continue
    return None


def find_partition(sigma, lambda1, lambda2, m1):
    """First split (in lexicographic order of X, |X| = m1) passing verify_partition."""
    for X in combinations(range(sigma.n), m1):
        Y = tuple(v for v in range(sigma.n) if v not in X)
        try:
            if verify_partition(sigma, X, Y, lambda1, lambda2):
                return X, Y
        except SingularBlockError:
            continue
    return None
