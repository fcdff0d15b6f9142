"""Sparse multivariate polynomials over Q under a local monomial order.

Monomials are plain tuples of exponents.  A :class:`LocalOrder` ranks them
degree-anticompatibly: smaller total degree is *larger*, and ties are broken
lexicographically along a configurable variable precedence.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InputError, NotSquare, ZeroPolynomial
from .exactnum import RationalMatrix, parse_rational


def mono_degree(a):
    return sum(a)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def unit_mono(nvars):
    return (0,) * nvars


def var_mono(nvars, i, power=1):
    e = [0] * nvars
    e[i] = power
    return tuple(e)


@dataclass(frozen=True)
class LocalOrder:
    """Degree-anticompatible lex order.

    ``perm`` lists variable indices from most to least significant for the lex
    tie-break, so ``perm=(0, 1, 2)`` means x > y > z.
    """

    perm: tuple
    kind: str = "degree-anticompatible-lex"

    def __post_init__(self):
        perm = tuple(self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise InputError(f"not a permutation: {perm!r}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def default(cls, nvars):
        return cls(tuple(range(nvars)))

    @classmethod
    def from_names(cls, ranked, names):
        """Order from a list of variable names, most significant first."""
        names = list(names)
        try:
            return cls(tuple(names.index(v) for v in ranked))
        except ValueError as exc:
            raise InputError(f"unknown variable in order {list(ranked)!r}") from exc

    @property
    def nvars(self):
        return len(self.perm)

    def key(self, a):
        """Sort key; a larger key means a larger monomial."""
        return (-sum(a),) + tuple(a[i] for i in self.perm)

    def describe(self, names):
        return " > ".join(names[i] for i in self.perm)


def compare(a, b, order):
    """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    if len(a) != len(b) or len(a) != order.nvars:
        raise DimensionMismatch("monomials live in different rings")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class Poly:
    """Immutable polynomial: a dict from exponent tuples to nonzero Fractions."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise DimensionMismatch(f"exponent {e} in {nvars}-variable ring")
                c = Fraction(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {unit_mono(nvars): c})

    @classmethod
    def variable(cls, nvars, i):
        return cls(nvars, {var_mono(nvars, i): 1})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        return cls(nvars, {tuple(exps): c})

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DimensionMismatch("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Poly._raw(self.nvars, {})
        return Poly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    def mul_term(self, mono, c):
        """Multiply by the single term ``c * X^mono``."""
        c = Fraction(c)
        if not c:
            return Poly._raw(self.nvars, {})
        return Poly._raw(self.nvars, {mono_mul(e, mono): c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def items(self):
        """Terms sorted by exponent tuple, for deterministic iteration."""
        return sorted(self.terms.items())

    def monomials(self):
        return sorted(self.terms)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self):
        return self.coefficient(unit_mono(self.nvars))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def order(self):
        """Lowest total degree of a term; -1 for the zero polynomial."""
        return min((sum(e) for e in self.terms), default=-1)

    def leading_term(self, order):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order):
        return self.leading_term(order)[0]

    def ecart(self, order):
        return self.degree() - sum(self.leading_monomial(order))

    def diff(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Poly._raw(self.nvars, out)

    def evaluate(self, point):
        """Exact evaluation at a point (any ring supporting + and *)."""
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def substitute(self, images, nvars=None):
        """Replace variable i by the polynomial ``images[i]``."""
        if len(images) != self.nvars:
            raise DimensionMismatch("one image per variable required")
        if nvars is None:
            nvars = images[0].nvars if images else 0
        cache = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = images[i] ** k
            return cache[(i, k)]

        result = Poly(nvars)
        for e, c in self.terms.items():
            t = Poly.constant(nvars, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            result = result + t
        return result

    def shift(self, offsets):
        """The polynomial ``X -> p(X + offsets)``."""
        n = self.nvars
        images = [Poly(n, {var_mono(n, i): 1, unit_mono(n): a}) for i, a in enumerate(offsets)]
        return self.substitute(images, n)

    def truncate(self, degree):
        """Drop every term of total degree >= ``degree``."""
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) < degree})

    def to_text(self, names):
        return format_poly(self, names)

    def __repr__(self):
        names = [f"x{i + 1}" for i in range(self.nvars)]
        return f"Poly({format_poly(self, names)!r})"


def leading_term(f, order):
    return f.leading_term(order)


# --- text form -------------------------------------------------------------

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_FACTOR = re.compile(rf"^(?:(?P<num>\d+(?:/\d+)?)|(?P<var>{_NAME})(?:\^(?P<pow>\d+))?)$")


def format_term(e, c, names):
    factors = [f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k]
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    if c == -1:
        return "-" + "*".join(factors)
    return f"{c}*" + "*".join(factors)


def format_poly(p, names, order=None):
    """Render as a sum of ``c*x^a*y^b`` terms, largest monomial first."""
    if not p.terms:
        return "0"
    if order is None:
        order = LocalOrder.default(p.nvars)
    terms = sorted(p.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
    out = ""
    for e, c in terms:
        s = format_term(e, c, names)
        if not out:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


def format_monomial(e, names):
    return format_term(e, Fraction(1), names)


def parse_poly(text, names):
    """Parse a sum of terms ``c*x1^a1*...``; no parentheses."""
    names = list(names)
    n = len(names)
    src = text.replace(" ", "").replace("**", "^")
    if not src:
        raise InputError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", src)
    if "".join(pieces) != src:
        raise InputError(f"cannot parse polynomial {text!r}")
    out = Poly(n)
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        if not body:
            raise InputError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        exps = [0] * n
        for factor in body.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise InputError(f"bad factor {factor!r} in {text!r}")
            if m.group("num"):
                coeff *= parse_rational(m.group("num"))
            else:
                var = m.group("var")
                if var not in names:
                    raise InputError(f"unknown variable {var!r} in {text!r}")
                exps[names.index(var)] += int(m.group("pow") or 1)
        out = out + Poly(n, {tuple(exps): coeff})
    return out


# --- systems ---------------------------------------------------------------

@dataclass(frozen=True)
class PolySystem:
    polys: tuple
    names: tuple

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise InputError(f"duplicate variable names {self.names!r}")
        for p in self.polys:
            if p.nvars != len(self.names):
                raise DimensionMismatch("polynomial arity differs from variable count")

    @property
    def nvars(self):
        return len(self.names)

    def __len__(self):
        return len(self.polys)

    def is_square(self):
        return len(self.polys) == len(self.names)

    def evaluate(self, point):
        return [p.evaluate(point) for p in self.polys]

    def to_text(self):
        lines = ["vars: " + ", ".join(self.names)]
        lines += [format_poly(p, self.names) for p in self.polys]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        """Parse ``vars: x, y`` followed by one polynomial per line.

        Blank lines and ``#`` comments are ignored.
        """
        names = None
        polys = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if names is None:
                if not line.startswith("vars:"):
                    raise InputError("system file must start with 'vars:'", f"line {lineno}")
                names = [v.strip() for v in line[5:].split(",") if v.strip()]
                continue
            try:
                polys.append(parse_poly(line, names))
            except InputError as exc:
                raise InputError(str(exc), f"line {lineno}") from None
        if names is None:
            raise InputError("missing 'vars:' line")
        return cls(tuple(polys), tuple(names))


def jacobian_matrix(system):
    """Symbolic Jacobian as nested lists of :class:`Poly`."""
    return [[p.diff(j) for j in range(system.nvars)] for p in system.polys]


def jacobian_at_zero(system):
    n = system.nvars
    rows = [[p.coefficient(var_mono(n, j)) for j in range(n)] for p in system.polys]
    return RationalMatrix(rows) if rows else RationalMatrix([])


def poly_determinant(matrix, nvars):
    """Laplace expansion along rows, memoised over the remaining column sets."""
    size = len(matrix)
    memo = {}

    def minor(row, cols):
        if row == size:
            return Poly.constant(nvars, 1)
        if cols in memo:
            return memo[cols]
        total = Poly(nvars)
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        memo[cols] = total
        return total

    return minor(0, tuple(range(size)))


def jacobian_determinant(system):
    if not system.is_square():
        raise NotSquare(f"{len(system.polys)} equations in {system.nvars} variables")
    return poly_determinant(jacobian_matrix(system), system.nvars)


def is_multiaffine(p, blocks):
    """Each monomial has degree at most one inside every variable block."""
    return all(sum(e[i] for i in block) <= 1 for e in p.terms for block in blocks)

