"""Exact two-eigenvalue verification, FSRSG parameters, weighing test,
multiplicities from the trace, and the Ramanujan bound check."""

from dataclasses import dataclass
from math import sqrt
from typing import Optional

import numpy as np

from .core import SignedGraph, regularity, square
from .jacobi import OFFDIAG_TOL, eigenvalues_float
from .qext import QExt, isqrt_exact

RAMANUJAN_SLACK = 1e-9


class NoSuchSTE(ValueError):
    """No two-eigenvalue graph of this order exists with these parameters."""


@dataclass(frozen=True)
class ExactSpectrum:
    """Spectrum [lambda1^m1, lambda2^m2] of A with A^2 = tA + kI.

    The eigenvalues are (t +- sqrt(b))/2 with b = t^2 + 4k, kept symbolic.
    """

    t: int
    k: int
    n: int
    m1: int
    m2: int

    @property
    def b(self):
        return self.t * self.t + 4 * self.k

    @property
    def rational(self):
        return isqrt_exact(self.b) is not None

    @property
    def lambda1(self):
        return QExt.quadratic_root(self.t, self.b, 1)

    @property
    def lambda2(self):
        return QExt.quadratic_root(self.t, self.b, -1)

    def as_dict(self):
        return {
            "t": self.t,
            "k": self.k,
            "lambda1": str(self.lambda1),
            "lambda2": str(self.lambda2),
            "m1": self.m1,
            "m2": self.m2,
        }

    def __str__(self):
        return f"[{self.lambda1}^{self.m1}, {self.lambda2}^{self.m2}]"


@dataclass(frozen=True)
class FsrsgParams:
    k: int
    t: Optional[int]
    rho: Optional[int]
    complete: bool = False


def exact_multiplicities(t, k, n):
    """Multiplicities (m1, m2) of (t +- sqrt(b))/2 forced by trace zero.

    m1 = n * (-lambda2) / (lambda1 - lambda2). Raises NoSuchSTE when the
    result is not a pair of positive integers.
    """
    b = t * t + 4 * k
    if t == 0:
        if n % 2:
            raise NoSuchSTE(f"no STE of order {n} with t=0: multiplicities must be equal")
        m1 = n // 2
    else:
        r = isqrt_exact(b)
        if r is None:
            raise NoSuchSTE(f"t={t}, k={k}: b={b} is not a perfect square")
        # lambda1 - lambda2 = r, -lambda2 = (r - t)/2
        num = n * (r - t)
        if num % (2 * r):
            raise NoSuchSTE(f"no STE of order {n} with t={t}, k={k}: non-integral multiplicity")
        m1 = num // (2 * r)
    m2 = n - m1
    if m1 <= 0 or m2 <= 0:
        raise NoSuchSTE(f"no STE of order {n} with t={t}, k={k}: multiplicities ({m1}, {m2})")
    return m1, m2


def verify_ste_exact(sigma: SignedGraph) -> Optional[ExactSpectrum]:
    """Return the exact spectrum if A^2 - tA - kI = 0 holds, else None."""
    k = regularity(sigma)
    if not k:
        return None
    A = sigma.adj
    A2 = square(sigma)
    u, v = next(zip(*np.nonzero(A)))
    t = int(A2[u, v] * A[u, v])
    if not np.array_equal(A2 - t * A, k * np.eye(sigma.n, dtype=np.int64)):
        return None
    try:
        m1, m2 = exact_multiplicities(t, k, sigma.n)
    except NoSuchSTE:
        return None
    return ExactSpectrum(t=t, k=k, n=sigma.n, m1=m1, m2=m2)


def fsrsg_parameters(sigma: SignedGraph) -> Optional[FsrsgParams]:
    """Recover (t, rho) with A^2 - tA - kI = rho * complement(A), if they exist.

    On a complete ground there are no non-edges and rho is vacuous; it is
    reported as 0 with ``complete=True``.
    """
    k = regularity(sigma)
    if k is None:
        return None
    A = sigma.adj
    A2 = square(sigma)
    n = sigma.n
    off = ~np.eye(n, dtype=bool)
    edge = A != 0
    on_edges = (A2 * A)[edge]
    t = None
    if on_edges.size:
        t = int(on_edges[0])
        if not (on_edges == t).all():
            return None
    non_edges = A2[off & ~edge]
    if non_edges.size == 0:
        return FsrsgParams(k=k, t=t, rho=0, complete=True)
    rho = int(non_edges[0])
    if not (non_edges == rho).all():
        return None
    return FsrsgParams(k=k, t=t, rho=rho)


def is_weighing(M, alpha) -> bool:
    """True iff M M^T = M^T M = alpha I exactly."""
    W = np.asarray(M, dtype=np.int64)
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise ValueError("weighing test needs a square matrix")
    target = alpha * np.eye(W.shape[0], dtype=np.int64)
    return bool(np.array_equal(W @ W.T, target) and np.array_equal(W.T @ W, target))


def ramanujan_check(sigma: SignedGraph, tol=OFFDIAG_TOL):
    k = regularity(sigma)
    if k is None:
        raise ValueError("Ramanujan check needs a regular signed graph")
    if k < 2:
        raise ValueError(f"Ramanujan check needs k >= 2, got k={k}")
    lam_max = float(eigenvalues_float(sigma.adj, tol=tol)[-1])
    bound = 2 * sqrt(k - 1)
    return {
        "k": k,
        "lambda_max": lam_max,
        "bound": bound,
        "pass": lam_max <= bound + RAMANUJAN_SLACK,
    }


def verification_report(sigma: SignedGraph, tol=OFFDIAG_TOL):
    """Structured report: regularity, exact STE parameters, rho, Ramanujan."""
    k = regularity(sigma)
    ste = verify_ste_exact(sigma)
    fs = fsrsg_parameters(sigma)
    ram = None
    if k is not None and k >= 2:
        ram = ramanujan_check(sigma, tol=tol)
    return {
        "regular": k,
        "ste": ste.as_dict() if ste else None,
        "rho": fs.rho if fs else None,
        "ramanujan": ram,
    }
