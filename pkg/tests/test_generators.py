import random
from fractions import Fraction

import pytest
import sympy

from mixedindex.elindex import one_variable_degree, signed_degree
from mixedindex.errors import InputError, NotARoot, ZeroScale
from mixedindex.gamesys import classify_monogenic
from mixedindex.generators import (eliminate_chain, horner_disaggregate, planar_realization)
from mixedindex.localpoly import Poly, PolySystem, is_multiaffine
from mixedindex.standardbasis import local_algebra_of

F = Fraction


def translated_a3_a4(root=F(1, 3)):
    """``a^3 + a^4`` moved so that its triple root 0 sits at ``root``."""
    return Poly(1, {(3,): 1, (4,): 1}).shift([-root])


def test_linear_base_case():
    hs = horner_disaggregate([F(-1), F(2)], F(1, 2))
    assert hs.system.names == ("x",)
    assert hs.system.polys == (Poly(1, {(1,): 2}),)


def test_errors():
    with pytest.raises(NotARoot):
        horner_disaggregate([1, 1], 1)
    with pytest.raises(ZeroScale):
        horner_disaggregate([0, 0, 1], 0, scales=[0])
    with pytest.raises(InputError):
        horner_disaggregate([5], 0)


def test_translated_a3_a4():
    hs = horner_disaggregate(translated_a3_a4(), F(1, 3))
    r = signed_degree(hs.system)
    assert r.dimension == 3
    assert classify_monogenic(hs.system).rank_deficiency == 1
    assert r.signed_degree in (-1, 1)
    assert r.signed_degree == one_variable_degree(hs.translated_polynomial()) == 1


def _random_cubic(rng):
    root = F(rng.randint(-6, 6), rng.randint(1, 4))
    b = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]
    # (x - root) (b0 + b1 x + b2 x^2) with b2 != 0
    b[2] = b[2] or F(1)
    coeffs = [-root * b[0], b[0] - root * b[1], b[1] - root * b[2], b[2]]
    return coeffs, root


def test_back_substitution_recovers_polynomial():
    rng = random.Random(12)
    x = sympy.Symbol("x")
    for _ in range(15):
        coeffs, root = _random_cubic(rng)
        hs = horner_disaggregate(coeffs, root, scales=[1, 1], offsets=[1, 1])
        eliminated = eliminate_chain(hs)
        assert eliminated == hs.translated_polynomial()
        q = sum(sympy.Rational(c.numerator, c.denominator) * x ** i
                for i, c in enumerate(coeffs))
        expected = sympy.Poly(sympy.expand(q.subs(x, x + sympy.Rational(root.numerator,
                                                                        root.denominator))), x)
        assert {(k,): F(int(v.p), int(v.q)) for (k,), v in expected.terms()} == eliminated.terms


def test_chain_is_multiaffine_in_x_and_each_c():
    coeffs, root = _random_cubic(random.Random(3))
    hs = horner_disaggregate(coeffs, root)
    n = hs.system.nvars
    blocks = [(i,) for i in range(n)]
    assert all(is_multiaffine(p, blocks) for p in hs.system.polys)
    assert all(p.constant_term() == 0 for p in hs.system.polys)


@pytest.mark.parametrize("seed", range(6))
def test_dimension_and_degree_preserved(seed):
    rng = random.Random(seed)
    root = F(rng.randint(1, 4), 5)
    order = rng.randint(1, 4)
    extra = [F(rng.randint(1, 5)) for _ in range(rng.randint(0, 2))]
    w = Poly(1, {(1,): 1})
    p = w ** order
    for e in extra:
        p = p * (w + Poly.constant(1, e))  # extra roots away from zero
    q = p.shift([-root])
    hs = horner_disaggregate(q, root)
    r = signed_degree(hs.system)
    alg_1d = local_algebra_of([hs.translated_polynomial()])
    assert r.dimension == alg_1d.dimension == order
    assert r.signed_degree == one_variable_degree(hs.translated_polynomial())


def test_scale_signs_only_flip_the_sign():
    q = translated_a3_a4()
    base = signed_degree(horner_disaggregate(q, F(1, 3)).system).signed_degree
    for scales in ([1, 1, 1], [-1, 1, 1], [2, -3, 5], [-1, -1, 1]):
        hs = horner_disaggregate(q, F(1, 3), scales=scales, offsets=[1, -2, 3])
        sign = 1
        for s in scales:
            sign *= 1 if s > 0 else -1
        assert signed_degree(hs.system).signed_degree == sign * base


def test_require_probabilities():
    with pytest.raises(InputError):
        horner_disaggregate(translated_a3_a4(), F(1, 3), require_probabilities=True)


def test_planar_realizations():
    assert planar_realization("conjugatePower", 2) == PolySystem.from_text(
        "vars: x, y\nx^2 - y^2\n-2*x*y\n")
    assert planar_realization("power", 3) == PolySystem.from_text(
        "vars: x, y\nx^3 - 3*x*y^2\n3*x^2*y - y^3\n")
    assert planar_realization("cusp", 7) == PolySystem.from_text("vars: x, y\nx^2\ny\n")
    assert signed_degree(planar_realization("cusp")).signed_degree == 0
    with pytest.raises(InputError):
        planar_realization("power", 0)
    with pytest.raises(InputError):
        planar_realization("spiral")
