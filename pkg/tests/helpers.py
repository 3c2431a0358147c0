"""Random graph generators shared by the tests."""

import numpy as np

from signed_ste.core import SignedGraph, complete_positive, negate, switch
from signed_ste.doubling import chain
from signed_ste.io import fixture
from signed_ste.linegraph import neg_line_complete


def permute(sigma, perm):
    perm = np.asarray(perm)
    return SignedGraph(sigma.adj[np.ix_(perm, perm)])


def random_circulant_ground(n, rng):
    """A random regular ground: circulant with a random symmetric connection set."""
    while True:
        offsets = [d for d in range(1, n // 2 + 1) if rng.random() < 0.5]
        if offsets:
            break
    A = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for d in offsets:
            A[i, (i + d) % n] = A[(i + d) % n, i] = 1
    return A


def random_signing(ground, rng):
    upper = np.triu(ground, 1) * rng.choice((-1, 1), size=ground.shape)
    return upper + upper.T


def random_regular_signed(n, rng):
    sigma = SignedGraph(random_signing(random_circulant_ground(n, rng), rng))
    return permute(sigma, rng.permutation(n))


def random_signed(n, rng, density=0.5):
    """Not necessarily regular."""
    upper = np.triu(rng.random((n, n)) < density, 1) * rng.choice((-1, 1), size=(n, n))
    return SignedGraph(upper + upper.T)


def small_stes():
    """STEs on at most 10 vertices."""
    out = [complete_positive(n) for n in range(2, 8)]
    out += [negate(g) for g in out]
    out += [neg_line_complete(4), neg_line_complete(5), fixture("figure1"), fixture("figure3")]
    out += [chain("k2", k) for k in (2, 3)]
    return out


def disguise(sigma, rng):
    """Random switching followed by a random relabelling."""
    S = [v for v in range(sigma.n) if rng.random() < 0.5]
    return permute(switch(sigma, S), rng.permutation(sigma.n))
