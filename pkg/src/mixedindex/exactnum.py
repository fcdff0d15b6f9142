"""Exact rational scalars and dense rational linear algebra.

Scalars are :class:`fractions.Fraction`; nothing in the algebraic core ever
touches a float.
"""

from fractions import Fraction

from .errors import DimensionMismatch, InputError, NotSymmetric

Rational = Fraction


def parse_rational(text):
    """Parse ``"a/b"`` or ``"a"`` (surrounding whitespace allowed)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"expected rational text, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational literal {text!r}") from exc


def format_rational(r):
    return str(Fraction(r))


class RationalMatrix:
    """Immutable dense matrix of Fractions stored row-major."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        self.nrows = len(rows)
        self.ncols = ncols
        self.entries = tuple(Fraction(v) for r in rows for v in r)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.ncols + j]

    def rows(self):
        return [list(self.entries[i * self.ncols:(i + 1) * self.ncols])
                for i in range(self.nrows)]

    tolist = rows

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def transpose(self):
        return RationalMatrix([[self[i, j] for i in range(self.nrows)]
                               for j in range(self.ncols)])

    T = property(transpose)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        a, b = self.rows(), other.rows()
        return RationalMatrix([[sum((a[i][k] * b[k][j] for k in range(self.ncols)), Fraction(0))
                                for j in range(other.ncols)]
                               for i in range(self.nrows)])

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def is_symmetric(self):
        if self.nrows != self.ncols:
            return False
        return all(self[i, j] == self[j, i]
                   for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.rows())
        return f"RationalMatrix([{body}])"


def _as_rows(m):
    if isinstance(m, RationalMatrix):
        return m.rows()
    return [[Fraction(v) for v in r] for r in m]


def rank(m):
    """Rank over Q by Gaussian elimination; pivot is the first nonzero entry."""
    a = _as_rows(m)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            if a[i][col] != 0:
                f = a[i][col] / a[r][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def determinant(m):
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("determinant of a non-square matrix")
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for i in range(col + 1, n):
            if a[i][col] != 0:
                f = a[i][col] / a[col][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def solve(m, b):
    """Solve ``m x = b`` exactly for a possibly non-square system.

    Returns one solution, or ``None`` when the system is inconsistent.
    The caller checks uniqueness through :func:`rank` when it matters.
    """
    a = _as_rows(m)
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    aug = [row + [Fraction(v)] for row, v in zip(a, b)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][col]
        aug[r] = [x / p for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(aug[i][ncols] != 0 for i in range(r, nrows)):
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = aug[i][ncols]
    return x


def inertia(m):
    """Return ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix.

    Symmetric congruence reduction: a nonzero diagonal pivot when one exists,
    otherwise a 2x2 block ``[[0, a], [a, 0]]`` which has one positive and one
    negative eigenvalue.
    """
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise NotSymmetric("inertia of a non-square matrix")
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(i + 1, n)):
        raise NotSymmetric("matrix is not symmetric")
    pos = neg = 0
    while a:
        size = len(a)
        k = next((i for i in range(size) if a[i][i] != 0), None)
        if k is not None:
            d = a[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in range(size) if i != k]
            a = [[a[i][j] - a[i][k] * a[k][j] / d for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(size) for j in range(i + 1, size)
                     if a[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        c = a[i0][j0]
        pos += 1
        neg += 1
        rest = [i for i in range(size) if i not in pair]
        # Schur complement against the block [[0, c], [c, 0]], whose inverse
        # is [[0, 1/c], [1/c, 0]].
        a = [[a[i][j] - (a[i][i0] * a[j0][j] + a[i][j0] * a[i0][j]) / c for j in rest]
             for i in rest]
    return pos, neg, n - pos - neg
