"""Standard bases in the localisation of Q[X] at the origin.

The division step is Mora's ecart-driven normal form; the basis is grown
Buchberger style with the product and chain criteria.  The quotient algebra
is described by its standard monomials, and residue classes are expressed
in that basis by full reduction modulo a power of the maximal ideal that is
known to lie in the ideal.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import IdealIsUnit, InfiniteDimensional
from .localpoly import (LocalOrder, Poly, mono_div, mono_divides, mono_lcm, mono_mul,
                        unit_mono, var_mono)


def monic(f, order):
    _, c = f.leading_term(order)
    return f if c == 1 else f.scale(1 / c)


def spoly(f, g, order):
    """S-polynomial ``(L/LT(f)) f - (L/LT(g)) g`` with ``L`` the lcm."""
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    lcm = mono_lcm(ef, eg)
    return f.mul_term(mono_div(lcm, ef), 1 / cf) - g.mul_term(mono_div(lcm, eg), 1 / cg)


def _reduce_step(h, g, order):
    """Cancel the leading term of ``h`` with a multiple of ``g``."""
    eh, ch = h.leading_term(order)
    eg, cg = g.leading_term(order)
    return h - g.mul_term(mono_div(eh, eg), ch / cg)


def mora_normal_form(f, G, order, noether=None):
    """Weak normal form of ``f`` with respect to ``G`` (Mora's algorithm).

    Returns ``r`` with ``u*f = sum(a_i g_i) + r`` for some unit ``u``; the
    leading monomial of a nonzero ``r`` is divisible by no leading monomial
    of ``G``.  ``r == 0`` certifies membership of ``f`` in the ideal of the
    local ring.  Among eligible reducers the one of minimal ecart wins, with
    ties going to the earliest in the list; intermediate remainders join the
    reducer list whenever the chosen reducer has larger ecart.

    ``noether`` is an optional degree ``D`` with ``m^D`` inside the ideal
    (for instance the corner of a finite local algebra).  Terms of degree
    ``D`` and above are then dropped as they appear, which keeps remainders
    small without changing whether the result is zero.
    """
    def cut(p):
        return p if noether is None else p.truncate(noether)

    h = cut(f)
    T = [(g, g.leading_monomial(order), g.ecart(order)) for g in G if not g.is_zero()]
    while not h.is_zero():
        lm = h.leading_monomial(order)
        best = None
        for g, eg, ecart in T:
            if mono_divides(eg, lm) and (best is None or ecart < best[2]):
                best = (g, eg, ecart)
        if best is None:
            break
        g, _, ecart = best
        h_ecart = h.ecart(order)
        if ecart > h_ecart:
            T.append((h, lm, h_ecart))
        h = cut(_reduce_step(h, g, order))
    return h


@dataclass(frozen=True)
class StandardBasis:
    generators: tuple
    order: LocalOrder
    source: tuple

    @property
    def nvars(self):
        return self.order.nvars

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.generators]

    def minimal_leading_monomials(self):
        """Minimal generators of the leading-term ideal, sorted by the order."""
        lms = sorted(set(self.leading_monomials()), key=self.order.key, reverse=True)
        out = []
        for m in sorted(lms, key=sum):
            if not any(mono_divides(k, m) for k in out):
                out.append(m)
        return sorted(out, key=self.order.key, reverse=True)

    def reduce(self, f):
        return mora_normal_form(f, self.generators, self.order)

    def contains(self, f):
        return self.reduce(f).is_zero()


def compute_standard_basis(gens, order=None):
    """Standard basis of the ideal generated by ``gens`` in the local ring."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    nvars = gens[0].nvars
    if order is None:
        order = LocalOrder.default(nvars)
    for i, g in enumerate(gens):
        if g.constant_term() != 0:
            raise IdealIsUnit(f"generator {i + 1} has nonzero constant term; "
                              "the ideal is the whole local ring")
    basis = [monic(g, order) for g in gens]
    lms = [g.leading_monomial(order) for g in basis]
    pairs = deque((i, j) for j in range(len(basis)) for i in range(j))
    done = set()
    while pairs:
        i, j = pairs.popleft()
        done.add((i, j))
        lcm = mono_lcm(lms[i], lms[j])
        if mono_mul(lms[i], lms[j]) == lcm:
            continue  # product criterion
        if any(k not in (i, j) and mono_divides(lms[k], lcm)
               and (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done
               for k in range(len(basis))):
            continue  # chain criterion
        h = mora_normal_form(spoly(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        h = monic(h, order)
        new = len(basis)
        basis.append(h)
        lms.append(h.leading_monomial(order))
        pairs.extend((k, new) for k in range(new))
    return StandardBasis(tuple(basis), order, tuple(gens))


@dataclass(frozen=True)
class LocalAlgebra:
    """Finite-dimensional quotient of the local ring by an ideal."""

    basis: StandardBasis
    standard_monomials: tuple
    corner: int = field(repr=False)

    @property
    def dimension(self):
        return len(self.standard_monomials)

    @property
    def order(self):
        return self.basis.order

    @property
    def nvars(self):
        return self.basis.nvars

    def index_of(self, mono):
        return self.standard_monomials.index(tuple(mono))

    def coordinates(self, f):
        return normal_form_coordinates(f, self)

    def contains(self, f):
        """Ideal membership by Mora reduction truncated at the corner."""
        return mora_normal_form(f, self.basis.generators, self.order, self.corner).is_zero()

    def product_coordinates(self, i, j):
        m = mono_mul(self.standard_monomials[i], self.standard_monomials[j])
        return self.coordinates(Poly.monomial(self.nvars, m))


def has_pure_powers(lms, nvars):
    """True when every variable has a pure power among ``lms``."""
    return all(any(m[i] > 0 and sum(m) == m[i] for m in lms) for i in range(nvars))


def build_local_algebra(basis, degree_cap=64):
    """Enumerate the standard monomials of a standard basis.

    Finite dimension is decided exactly by the pure-power criterion; the
    breadth-first enumeration from 1 is additionally bounded by
    ``degree_cap``.
    """
    n = basis.nvars
    lms = basis.minimal_leading_monomials()
    if not has_pure_powers(lms, n):
        missing = [i for i in range(n)
                   if not any(m[i] > 0 and sum(m) == m[i] for m in lms)]
        raise InfiniteDimensional(
            f"no pure power of variable(s) {missing} in the leading-term ideal; "
            "the quotient is infinite-dimensional")
    start = unit_mono(n)
    seen = {start}
    queue = deque([start])
    found = []
    while queue:
        m = queue.popleft()
        if any(mono_divides(k, m) for k in lms):
            continue
        if sum(m) > degree_cap:
            raise InfiniteDimensional(f"standard monomial of degree > {degree_cap}")
        found.append(m)
        for i in range(n):
            nxt = mono_mul(m, var_mono(n, i))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    found.sort(key=basis.order.key, reverse=True)
    corner = max(sum(m) for m in found) + 1
    return LocalAlgebra(basis, tuple(found), corner)


def normal_form_coordinates(f, algebra):
    """Coordinates of the class of ``f`` in the standard-monomial basis.

    Every monomial of degree ``algebra.corner`` lies in the leading-term
    ideal, so the corresponding power of the maximal ideal lies in the ideal
    itself and terms of that degree can be discarded.  What remains is a full
    reduction over finitely many monomials, which terminates and, unlike the
    weak normal form, introduces no unit factor.
    """
    order = algebra.order
    D = algebra.corner
    gens = [(g.truncate(D), g.leading_monomial(order)) for g in algebra.basis.generators]
    std = set(algebra.standard_monomials)
    h = f.truncate(D)
    while True:
        candidates = [e for e in h.terms if e not in std]
        if not candidates:
            break
        e = max(candidates, key=order.key)
        c = h.terms[e]
        for g, lm in gens:
            if mono_divides(lm, e):
                q = mono_div(e, lm)
                h = (h - g.mul_term(q, c / g.terms[lm])).truncate(D)
                break
        else:
            raise AssertionError(f"monomial {e} neither standard nor reducible")
    return [h.coefficient(m) for m in algebra.standard_monomials]


def coordinates_to_poly(coords, algebra):
    terms = {m: c for m, c in zip(algebra.standard_monomials, coords) if c}
    return Poly(algebra.nvars, terms)


def local_algebra_of(polys, order=None, degree_cap=64):
    """Convenience: standard basis and local algebra in one call."""
    return build_local_algebra(compute_standard_basis(polys, order), degree_cap)


def is_standard_basis(basis):
    """Check the defining conditions directly (used by tests)."""
    G = basis.generators
    order = basis.order
    if not all(mora_normal_form(f, G, order).is_zero() for f in basis.source):
        return False
    return all(mora_normal_form(spoly(G[i], G[j], order), G, order).is_zero()
               for j in range(len(G)) for i in range(j))

