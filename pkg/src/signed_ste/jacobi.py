"""Dense symmetric eigensolver by cyclic Jacobi rotations.

Each sweep visits every index pair once, grouped into n-1 rounds of
disjoint pairs (round-robin schedule). The rotations of one round commute,
so they are applied together with vectorized row updates.

Jacobi costs O(n^3) Python-level numpy work per sweep; above
JACOBI_MAX_N the float oracle hands over to LAPACK (numpy.linalg.eigvalsh).
"""

import numpy as np

OFFDIAG_TOL = 1e-12
MAX_SWEEPS = 60
JACOBI_MAX_N = 128


class ConvergenceError(RuntimeError):
    pass


def _round_robin(n):
    """Rounds of disjoint pairs covering every pair of range(n) exactly once."""
    players = list(range(n)) + ([None] if n % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a is not None and b is not None:
                pairs.append((min(a, b), max(a, b)))
        if pairs:
            p, q = zip(*pairs)
            rounds.append((np.array(p), np.array(q)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _check_symmetric(M):
    M = np.array(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(M, M.T):
        raise ValueError("matrix must be symmetric")
    return M


def _rotate_rows(M, p, q, c, s):
    rp, rq = M[p], M[q]
    M[p] = c[:, None] * rp - s[:, None] * rq
    M[q] = s[:, None] * rp + c[:, None] * rq


def jacobi_eigh(M, tol=OFFDIAG_TOL, max_sweeps=MAX_SWEEPS, vectors=False):
    """Eigen-decomposition of a symmetric matrix.

    Returns ascending eigenvalues, and with ``vectors=True`` also the
    accumulated orthogonal Q with Q^T M Q ~ diag(eigenvalues).
    Iterates until every off-diagonal magnitude is below ``tol``.
    """
    A = _check_symmetric(M)
    n = A.shape[0]
    Qt = np.eye(n) if vectors else None
    rounds = _round_robin(n)
    sweeps = 0
    while n > 1 and np.abs(A - np.diag(np.diag(A))).max() >= tol:
        if sweeps == max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p, q in rounds:
            apq = A[p, q]
            active = np.abs(apq) >= tol
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (A[q, q] - A[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # A <- J^T A J as two row passes: rows of A, then rows of (J^T A)^T = A J
            _rotate_rows(A, p, q, c, s)
            A = np.ascontiguousarray(A.T)
            _rotate_rows(A, p, q, c, s)
            A[p, q] = A[q, p] = 0.0
            if vectors:
                _rotate_rows(Qt, p, q, c, s)
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    if vectors:
        return w[order], Qt.T[:, order]
    return w[order]


def eigenvalues_float(M, tol=OFFDIAG_TOL, method="auto"):
    """Sorted (ascending) eigenvalues of a symmetric integer/rational matrix.

    method: "jacobi", "lapack", or "auto" (Jacobi up to JACOBI_MAX_N).
    """
    A = _check_symmetric(M)
    if method == "auto":
        method = "jacobi" if A.shape[0] <= JACOBI_MAX_N else "lapack"
    if method == "jacobi":
        return jacobi_eigh(A, tol=tol)
    if method == "lapack":
        return np.linalg.eigvalsh(A)
    raise ValueError(f"unknown eigensolver {method!r}")


def cluster(values, tol=1e-6):
    """Group sorted eigenvalues into [(mean value, multiplicity), ...]."""
    groups = []
    for x in values:
        if groups and abs(x - groups[-1][-1]) <= tol:
            groups[-1].append(x)
        else:
            groups.append([x])
    return [(float(np.mean(g)), len(g)) for g in groups]


def distinct_count(values, tol=1e-6):
    return len(cluster(values, tol))
