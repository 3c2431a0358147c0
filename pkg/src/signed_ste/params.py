"""Admissible eigenvalue triples (t, lambda1, lambda2) for k-regular STEs."""

from dataclasses import dataclass

from .qext import QExt, isqrt_exact
from .spectra import NoSuchSTE, exact_multiplicities

TYPE1, TYPE2, TYPE3, OTHER = "Type1", "Type2", "Type3", "Other"


@dataclass(frozen=True)
class AdmissibleTriple:
    k: int
    t: int

    @property
    def b(self):
        return self.t * self.t + 4 * self.k

    @property
    def lambda1(self):
        return QExt.quadratic_root(self.t, self.b, 1)

    @property
    def lambda2(self):
        return QExt.quadratic_root(self.t, self.b, -1)

    @property
    def type_tag(self):
        return classify(self)

    def as_tuple(self):
        """(t, lambda1, lambda2) with exact entries."""
        return (self.t, self.lambda1, self.lambda2)

    def __str__(self):
        return f"({self.t}, {_fmt(self.lambda1)}, {_fmt(self.lambda2)})"


def _fmt(x):
    s = str(x)
    return s.replace("sqrt(", "√").replace(")", "") if "sqrt" in s else s


def is_admissible(k, t):
    if not (-k + 1 <= t <= k - 1):
        return False
    return t == 0 or isqrt_exact(t * t + 4 * k) is not None


def admissible_triples(k):
    """All admissible triples for valency k, by descending t."""
    if k < 1:
        raise ValueError(f"valency must be >= 1, got {k}")
    return [AdmissibleTriple(k, t) for t in range(k - 1, -k, -1) if is_admissible(k, t)]


def classify(triple):
    l1, l2, k = triple.lambda1, triple.lambda2, triple.k
    if l2 == -1 or l1 == 1:
        return TYPE1
    if k % 2 == 0 and ((l2 == -2 and l1 == k // 2) or (l1 == 2 and l2 == -(k // 2))):
        return TYPE2
    if triple.t == 0:
        return TYPE3
    return OTHER


def feasible_orders(triple, n_max):
    """Orders n <= n_max at which the trace forces positive integral multiplicities."""
    out = []
    for n in range(1, n_max + 1):
        try:
            exact_multiplicities(triple.t, triple.k, n)
        except NoSuchSTE:
            continue
        out.append(n)
    return out


# Reference table of admissible triples for k = 5..10. The k=8 entry
# (-2, -4, 2) is stored with its eigenvalues in descending order, (-2, 2, -4).
_TABLE1 = {
    5: [(4, 5, -1), (0, "√5", "-√5"), (-4, 1, -5)],
    6: [(5, 6, -1), (1, 3, -2), (0, "√6", "-√6"), (-1, 2, -3), (-5, 1, -6)],
    7: [(6, 7, -1), (0, "√7", "-√7"), (-6, 1, -7)],
    8: [(7, 8, -1), (2, 4, -2), (0, "√8", "-√8"), (-2, 2, -4), (-7, 1, -8)],
    9: [(8, 9, -1), (0, 3, -3), (-8, 1, -9)],
    10: [(9, 10, -1), (3, 5, -2), (0, "√10", "-√10"), (-3, 2, -5), (-9, 1, -10)],
}


def _parse_entry(x):
    if isinstance(x, int):
        return QExt(x)
    neg = x.startswith("-")
    r = QExt.sqrt(int(x.lstrip("-").lstrip("√")))
    return -r if neg else r


def table1():
    """Reference table of admissible parameters for k = 5..10.

    Returns {k: [(t, lambda1, lambda2), ...]} with exact QExt eigenvalues.
    """
    return {
        k: [(t, _parse_entry(a), _parse_entry(b)) for t, a, b in rows]
        for k, rows in _TABLE1.items()
    }
