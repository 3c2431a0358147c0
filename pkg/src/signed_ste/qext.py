"""Exact arithmetic in Q(sqrt(d)) and small exact linear algebra over it."""

from fractions import Fraction
from math import isqrt


def squarefree_split(b):
    """Write b >= 0 as s**2 * d with d square-free; returns (s, d). b == 0 gives (0, 1)."""
    if b < 0:
        raise ValueError(f"expected a non-negative integer, got {b}")
    if b == 0:
        return 0, 1
    s, d = 1, b
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            s *= p
        p += 1
    return s, d


class QExt:
    """Exact number a + b*sqrt(d) with rational a, b and square-free d >= 1.

    Rationals are the elements with b == 0; they mix freely with any d.
    Two irrational operands must share the same d.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        a, b = Fraction(a), Fraction(b)
        if d < 1 or squarefree_split(d)[0] != 1:
            raise ValueError(f"d must be a square-free positive integer, got {d}")
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 1
        self.a, self.b, self.d = a, b, d

    @classmethod
    def sqrt(cls, r):
        """sqrt(r) for a non-negative integer r."""
        s, d = squarefree_split(int(r))
        return cls(0, s, d)

    @classmethod
    def quadratic_root(cls, t, b, sign=1):
        """(t + sign*sqrt(b)) / 2, the roots of x^2 - t x - (b - t^2)/4."""
        s, d = squarefree_split(int(b))
        return cls(Fraction(t, 2), Fraction(sign * s, 2), d)

    def _coerce(self, other):
        if isinstance(other, QExt):
            if self.b and other.b and self.d != other.d:
                raise ValueError(f"cannot mix Q(sqrt{self.d}) and Q(sqrt{other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QExt(other)
        return NotImplemented

    def _field(self, other):
        return self.d if self.b else other.d

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QExt(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._field(other)
        return QExt(self.a * other.a + self.b * other.b * d,
                    self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def conjugate(self):
        return QExt(self.a, -self.b, self.d)

    def norm(self):
        """a^2 - d b^2, the product with the conjugate (a rational)."""
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        nrm = other.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in QExt")
        return self * other.conjugate() * QExt(1 / nrm)

    def __rtruediv__(self, other):
        return QExt(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QExt):
            return NotImplemented
        return self.a == other.a and self.b == other.b and (self.b == 0 or self.d == other.d)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def is_rational(self):
        return self.b == 0

    def is_integer(self):
        return self.b == 0 and self.a.denominator == 1

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        if self.b == 1:
            irr = root
        elif self.b == -1:
            irr = f"-{root}"
        else:
            irr = f"{self.b}*{root}"
        if self.a == 0:
            return irr
        sign = "+" if not irr.startswith("-") else ""
        return f"{self.a}{sign}{irr}"

    def __repr__(self):
        return f"QExt({self.a}, {self.b}, {self.d})"


def as_qext_matrix(M):
    return [[x if isinstance(x, QExt) else QExt(int(x)) for x in row] for row in M]


def shifted(mu, A):
    """mu*I - A as a list-of-lists QExt matrix."""
    n = len(A)
    return [[(mu if i == j else QExt(0)) - int(A[i][j]) for j in range(n)] for i in range(n)]


def _eliminate(M):
    """Reduced row echelon form in place; returns pivot column indices."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = QExt(1) / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def pivot_columns(M):
    return _eliminate([list(row) for row in M])


def rank(M):
    return len(pivot_columns(M))


def is_singular(M):
    return rank(M) < len(M)


def solve(M, RHS):
    """Solve M Z = RHS exactly for square M; raises ZeroDivisionError if M is singular."""
    n = len(M)
    k = len(RHS[0]) if RHS else 0
    aug = [list(M[i]) + list(RHS[i]) for i in range(n)]
    pivots = _eliminate(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [row[n:n + k] for row in aug]


def matmul(A, B):
    inner = len(B)
    cols = len(B[0]) if inner else 0
    out = []
    for row in A:
        nz = [(t, row[t]) for t in range(inner) if row[t]]
        out.append([sum((x * B[t][j] for t, x in nz), QExt(0)) for j in range(cols)])
    return out


def transpose(A):
    return [list(col) for col in zip(*A)]


def isqrt_exact(b):
    """Integer square root of b if b is a perfect square, else None."""
    if b < 0:
        return None
    r = isqrt(b)
    return r if r * r == b else None
