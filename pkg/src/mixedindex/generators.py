"""Test-instance factories: Horner disaggregation and planar degree maps."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InputError, NotARoot, ZeroScale
from .localpoly import Poly, PolySystem, unit_mono, var_mono


@dataclass(frozen=True)
class HornerSystem:
    coefficients: tuple  # alpha_0 .. alpha_d
    scales: tuple        # s_1 .. s_{d-1}
    offsets: tuple       # delta_1 .. delta_{d-1}
    root: Fraction
    c_star: tuple        # values of c_1 .. c_{d-1} at the root
    system: PolySystem

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def translated_polynomial(self):
        """``q(X + root)`` as a one-variable polynomial."""
        q = Poly(1, {(i,): a for i, a in enumerate(self.coefficients)})
        return q.shift([self.root])


def _coefficients(q):
    if isinstance(q, Poly):
        if q.nvars != 1:
            raise InputError("expected a polynomial in one variable")
        d = q.degree()
        return [q.coefficient((i,)) for i in range(d + 1)]
    coeffs = [Fraction(a) for a in q]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def horner_disaggregate(q, root, scales=None, offsets=None, names=None,
                        require_probabilities=False):
    """Multiaffine chain equivalent to ``q(x) = 0``, translated to the origin.

    With ``d = deg q`` the chain reads::

        0                     = a_0 + x (s_1 c_1 + d_1)
        s_i c_i + d_i         = a_i + x (s_{i+1} c_{i+1} + d_{i+1})
        s_{d-1} c_{d-1} + d_{d-1} = a_{d-1} + x a_d

    The first equation is emitted as its right-hand side; every later one as
    left-hand side minus right-hand side.  Eliminating the ``c`` variables
    then returns exactly ``q``, and the local degree keeps its sign whenever
    the product of the scales is positive.  Variables are ``x, c1..c_{d-1}``
    shifted so that ``(root, c*)`` sits at the origin.
    """
    alpha = _coefficients(q)
    d = len(alpha) - 1
    if d < 1:
        raise InputError("need a polynomial of degree at least 1")
    root = Fraction(root)
    value = sum(a * root ** i for i, a in enumerate(alpha))
    if value != 0:
        raise NotARoot(f"q({root}) = {value}")
    scales = [Fraction(1)] * (d - 1) if scales is None else [Fraction(s) for s in scales]
    offsets = [Fraction(0)] * (d - 1) if offsets is None else [Fraction(t) for t in offsets]
    if len(scales) != d - 1 or len(offsets) != d - 1:
        raise InputError(f"need {d - 1} scales and offsets")
    if any(s == 0 for s in scales):
        raise ZeroScale("all scales must be nonzero")

    # inner[i] = s_i c_i + d_i at the root, computed from the top of the chain
    inner = [Fraction(0)] * (d + 1)
    inner[d] = alpha[d]
    for i in range(d - 1, 0, -1):
        inner[i] = alpha[i] + root * inner[i + 1]
    c_star = [(inner[i] - offsets[i - 1]) / scales[i - 1] for i in range(1, d)]
    if require_probabilities:
        values = [root] + c_star
        if any(not 0 < v < 1 for v in values):
            raise InputError(f"root and c* are not all in (0, 1): {[str(v) for v in values]}")

    n = d
    X = Poly(n, {var_mono(n, 0): 1, unit_mono(n): root})

    def chain_var(i):
        # s_i c_i + d_i with c_i = C_i + c*_i; for i == d this is the constant a_d
        if i == d:
            return Poly.constant(n, alpha[d])
        s = scales[i - 1]
        return Poly(n, {var_mono(n, i): s, unit_mono(n): s * c_star[i - 1] + offsets[i - 1]})

    polys = [alpha[0] + X * chain_var(1)]
    for i in range(1, d):
        polys.append(chain_var(i) - (alpha[i] + X * chain_var(i + 1)))
    if names is None:
        names = ["x"] + [f"c{i}" for i in range(1, d)]
    system = PolySystem(tuple(polys), tuple(names))
    return HornerSystem(tuple(alpha), tuple(scales), tuple(offsets), root, tuple(c_star), system)


def eliminate_chain(hs):
    """Back-substitute the chain variables out of ``hs.system``.

    Works on the emitted polynomials only: each chain equation is solved for
    its own ``c`` variable, last equation first, and the results are fed into
    the first equation.  Returns a polynomial in the shifted ``x``.
    """
    polys = hs.system.polys
    n = hs.degree
    x = Poly(1, {(1,): 1})
    images = [x] + [Poly(1)] * (n - 1)
    for i in range(n - 1, 0, -1):
        f = polys[i]
        s = f.coefficient(var_mono(n, i))
        rest = f - Poly.monomial(n, var_mono(n, i), s)
        if any(e[i] for e in rest.terms):
            raise InputError(f"chain equation {i} is not linear in its own variable")
        images[i] = rest.substitute(images, 1).scale(-1 / s)
    return polys[0].substitute(images, 1)


def complex_power_parts(m, conjugate=False):
    """Real and imaginary parts of ``(x + i y)^m`` (or ``(x - i y)^m``)."""
    re, im = {}, {}
    sign_y = -1 if conjugate else 1
    for k in range(m + 1):
        # binom(m, k) x^(m-k) (i * sign_y * y)^k
        c = comb(m, k) * sign_y ** k
        e = (m - k, k)
        r = k % 4
        if r == 0:
            re[e] = c
        elif r == 1:
            im[e] = c
        elif r == 2:
            re[e] = -c
        else:
            im[e] = -c
    return Poly(2, re), Poly(2, im)


PLANAR_KINDS = ("power", "conjugatePower", "cusp")


def planar_realization(kind, m=1):
    """Two-variable real map: ``z^m``, ``conj(z)^m`` or ``(x^2, y)``."""
    if kind == "cusp":
        polys = (Poly(2, {(2, 0): 1}), Poly(2, {(0, 1): 1}))
    elif kind in ("power", "conjugatePower"):
        if m < 1:
            raise InputError("m must be at least 1")
        polys = complex_power_parts(m, conjugate=(kind == "conjugatePower"))
    else:
        raise InputError(f"unknown planar kind {kind!r}; expected one of {PLANAR_KINDS}")
    return PolySystem(polys, ("x", "y"))
