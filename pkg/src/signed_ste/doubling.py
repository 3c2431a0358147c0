"""The doubling Ac(S) = [[A, I], [I, -A]] and chains of it.

If A^2 = kI then Ac^2 = (k+1)I, so a signed k-regular graph with
spectrum +-sqrt(k) doubles to a (k+1)-regular one with spectrum
+-sqrt(k+1).
"""

from dataclasses import dataclass

import numpy as np

from .core import GraphError, SignedGraph, complete_positive, regularity, square

MAX_CHAIN_ORDER = 2 ** 12


class PreconditionError(GraphError):
    pass


def check_square_identity(sigma, k=None):
    """Raise PreconditionError unless A^2 = kI (k defaults to the regularity)."""
    if k is None:
        k = regularity(sigma)
        if k is None:
            raise PreconditionError("graph is not regular")
    A2 = square(sigma)
    bad = np.argwhere(A2 != k * np.eye(sigma.n, dtype=np.int64))
    if bad.size:
        i, j = bad[0]
        raise PreconditionError(f"A^2 != {k}I: entry ({i}, {j}) is {A2[i, j]}")
    return k


def ac(sigma):
    check_square_identity(sigma)
    A = sigma.adj
    I = np.eye(sigma.n, dtype=np.int64)
    return SignedGraph(np.block([[A, I], [I, -A]]))


def pentagon_seed():
    """The pentagon seed, a signed K6 with A^2 = 5I: negative edges 23, 24, 35, 46, 56 (1-indexed)."""
    from .io import fixture

    sigma = fixture("figure3")
    check_square_identity(sigma, 5)
    return sigma


def k2_seed():
    return complete_positive(2)


@dataclass(frozen=True)
class ChainSpec:
    seed: str
    seed_graph: SignedGraph
    k: int

    @property
    def seed_valency(self):
        return regularity(self.seed_graph)

    @property
    def order(self):
        return self.seed_graph.n * 2 ** (self.k - self.seed_valency)


def chain_spec(seed, k):
    if isinstance(seed, SignedGraph):
        return ChainSpec("custom", seed, k)
    if seed == "k2":
        return ChainSpec("k2", k2_seed(), k)
    if seed == "pentagon":
        return ChainSpec("pentagon", pentagon_seed(), k)
    if seed.startswith("file:"):
        from .io import load_graph

        return ChainSpec(seed, load_graph(seed[len("file:"):]), k)
    raise ValueError(f"unknown seed {seed!r}")


def chain(seed, k, max_order=MAX_CHAIN_ORDER):
    """Apply ac to the seed until the valency reaches k."""
    spec = chain_spec(seed, k)
    k0 = check_square_identity(spec.seed_graph)
    if k < k0:
        raise ValueError(f"target k={k} is below the seed valency {k0}")
    if spec.order > max_order:
        raise ValueError(f"chain order {spec.order} exceeds the size guard {max_order}")
    sigma = spec.seed_graph
    for _ in range(k - k0):
        sigma = ac(sigma)
    return sigma
