"""Weight-4 semi-orthogonal weighing matrices and the 8-regular block graph.

Pattern matrices X, Y of order m/2 are circulant 0/1 matrices with two
ones per row and column. Each is expanded column-wise into F (m/2 x m),
then row-wise into R, and W = [F; R] is a weighing matrix of weight 4.
Stacking W1, W2 and W1^T W2 / 2 gives a signed 8-regular graph on 3m
vertices with spectrum [4^m, (-2)^(2m)].
"""

from dataclasses import dataclass
from itertools import product
from typing import Optional

import numpy as np

from .core import GraphError, SignedGraph, SignedMatrix
from .spectra import is_weighing


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PatternMatrix:
    entries: np.ndarray

    def __post_init__(self):
        e = np.array(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise PatternError("pattern must be square")
        if not np.isin(e, (0, 1)).all():
            raise PatternError("pattern entries must be 0/1")
        if not ((e.sum(axis=0) == 2).all() and (e.sum(axis=1) == 2).all()):
            raise PatternError("pattern needs exactly two ones per row and column")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def half(self):
        return self.entries.shape[0]

    def disjoint_from(self, other):
        return not (self.entries & other.entries).any()


@dataclass(frozen=True)
class WeighPair:
    W1: SignedMatrix
    W2: SignedMatrix

    @property
    def P(self):
        return self.W1.entries.T @ self.W2.entries


# X uses residues {0, -1} ("displayed"). The "formula" variant {0, 1}
# collides with Y's residue 1, so X and Y would share ones.
X_RESIDUES = "displayed"


def _circulant(half, residues):
    i = np.arange(half)
    diff = (i[None, :] - i[:, None]) % half
    return np.isin(diff, [r % half for r in residues]).astype(np.int64)


def _check_order(m):
    if m % 2 or m < 8:
        raise PatternError(f"pattern construction needs even m >= 8, got m={m}")


def pattern_x(m, residues=X_RESIDUES):
    """X(i, j) = 1 iff j - i = 0 or -1 (mod m/2).

    ``residues="formula"`` gives the {0, 1} variant for comparison.
    """
    _check_order(m)
    res = {"displayed": (0, -1), "formula": (0, 1)}[residues]
    return PatternMatrix(_circulant(m // 2, res))


def pattern_y(m):
    """Y(i, j) = 1 iff j - i = 1 or m/2 - 2 (mod m/2)."""
    _check_order(m)
    half = m // 2
    return PatternMatrix(_circulant(half, (1, half - 2)))


def expand_f(pattern):
    """Replace each 1 by [1, 1] (upper one in its column) or [1, -1] (lower)."""
    P = pattern.entries if isinstance(pattern, PatternMatrix) else np.asarray(pattern)
    rows, cols = P.shape
    F = np.zeros((rows, 2 * cols), dtype=np.int64)
    for j in range(cols):
        ones = np.flatnonzero(P[:, j])
        if len(ones) != 2:
            raise PatternError(f"column {j} has {len(ones)} ones, expected 2")
        i0, i1 = ones
        F[i0, 2 * j:2 * j + 2] = (1, 1)
        F[i1, 2 * j:2 * j + 2] = (1, -1)
    return SignedMatrix(F)


def expand_r(F):
    """Copy the two leftmost nonzeros of each row and negate the two rightmost."""
    F = np.asarray(F, dtype=np.int64)
    R = np.zeros_like(F)
    for i, row in enumerate(F):
        nz = np.flatnonzero(row)
        if len(nz) != 4:
            raise PatternError(f"row {i} has {len(nz)} nonzeros, expected 4")
        R[i, nz[:2]] = row[nz[:2]]
        R[i, nz[2:]] = -row[nz[2:]]
    return SignedMatrix(R)


def build_w(pattern):
    F = expand_f(pattern)
    R = expand_r(F)
    return SignedMatrix(np.vstack([F.entries, R.entries]))


def semi_orthogonal(W1, W2) -> Optional[np.ndarray]:
    """W1^T W2 / 2 if every entry of W1^T W2 is in {0, +-2}, else None."""
    a, b = np.asarray(W1, dtype=np.int64), np.asarray(W2, dtype=np.int64)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    P = a.T @ b
    if not np.isin(P, (0, 2, -2)).all():
        return None
    return P // 2


def block_pair(m, residues=X_RESIDUES):
    return WeighPair(build_w(pattern_x(m, residues)), build_w(pattern_y(m)))


def assemble_block(pair):
    """The 3m x 3m adjacency [[O, W1, W2], [W1^T, O, H], [W2^T, H^T, O]], H = W1^T W2 / 2."""
    W1, W2 = pair.W1.entries, pair.W2.entries
    m = W1.shape[0]
    for name, W in (("W1", W1), ("W2", W2)):
        if not is_weighing(W, 4):
            raise GraphError(f"{name} is not a weighing matrix of weight 4")
    P = W1.T @ W2
    bad = np.argwhere(~np.isin(P, (0, 2, -2)))
    if bad.size:
        i, j = bad[0]
        raise GraphError(
            f"W1^T W2 has entry {P[i, j]} at ({i}, {j}); W1^T W2 / 2 must have entries in {{0, +-1}}"
        )
    H = P // 2
    O = np.zeros((m, m), dtype=np.int64)
    A = np.block([[O, W1, W2], [W1.T, O, H], [W2.T, H.T, O]])
    return SignedGraph(A)


def block8(m, residues=X_RESIDUES):
    """8-regular graph on 3m vertices built from the generated pair of order m."""
    return assemble_block(block_pair(m, residues))


def _hadamard4():
    """All 4x4 +-1 matrices with orthogonal rows, in lexicographic row order."""
    rows = [np.array(r, dtype=np.int64) for r in product((1, -1), repeat=4)]
    found = []

    def extend(chosen):
        if len(chosen) == 4:
            found.append(np.array(chosen))
            return
        for r in rows:
            if all(int(r @ c) == 0 for c in chosen):
                extend(chosen + [r])

    extend([])
    return found


def search_m4_pairs(limit=None):
    """Pairs of order-4 weight-4 weighing matrices giving a 12-vertex STE.

    W1 ranges over normalized matrices (first row and column all +1),
    W2 over all 768 Hadamard matrices of order 4; ``limit`` bounds the
    number of candidate pairs examined. Output is sorted canonically.
    """
    all_h = _hadamard4()
    normalized = [H for H in all_h if (H[0] == 1).all() and (H[:, 0] == 1).all()]
    budget = float("inf") if limit is None else limit
    tried = 0
    pairs = []
    for W1 in normalized:
        for W2 in all_h:
            if tried >= budget:
                break
            tried += 1
            if semi_orthogonal(W1, W2) is not None:
                pairs.append(WeighPair(SignedMatrix(W1), SignedMatrix(W2)))
    pairs.sort(key=lambda p: (tuple(-p.W1.entries.ravel()), tuple(-p.W2.entries.ravel())))
    return pairs


def kronecker(A, alpha, B, beta):
    """A (x) B; both factors must be weighing matrices of the given weights."""
    a, b = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    if not is_weighing(a, alpha):
        raise ValueError(f"first factor is not a weighing matrix of weight {alpha}")
    if not is_weighing(b, beta):
        raise ValueError(f"second factor is not a weighing matrix of weight {beta}")
    return SignedMatrix(np.kron(a, b))
