import itertools
import random
from fractions import Fraction

import pytest

from mixedindex import catalog
from mixedindex.elindex import signed_degree
from mixedindex.errors import NotEquilibrium, NotInteriorEquilibrium, ShapeMismatch
from mixedindex.gamesys import (EquilibriumStatus, Game, add_duplicate,
                                build_indifference_system, classify_monogenic,
                                eliminate_inferior_replies, inferior_replies, is_multiaffine,
                                verify_duplicate, verify_equilibrium)
from mixedindex.localpoly import PolySystem

H = Fraction(1, 2)


def test_verify_equilibrium_examples():
    g = catalog.three_player_game()
    assert verify_equilibrium(g, catalog.three_player_equilibrium()) is \
        EquilibriumStatus.INTERIOR
    pure = ((1, 0),) * 3
    assert verify_equilibrium(g, pure) is EquilibriumStatus.NOT_COMPLETELY_MIXED
    off = ((Fraction(1, 3), Fraction(2, 3)), (H, H), (H, H))
    assert verify_equilibrium(g, off) is EquilibriumStatus.NOT_EQUILIBRIUM
    with pytest.raises(ShapeMismatch):
        verify_equilibrium(g, ((H, H),) * 2)


def _proportional(p, q):
    ratios = {q.terms[e] / c for e, c in p.terms.items() if e in q.terms}
    return p.terms.keys() == q.terms.keys() and len(ratios) == 1


def test_three_player_system_matches_reference_equations():
    # with the second strategy as reference the variables are the
    # probabilities of a, which is the conventional naming
    gs = build_indifference_system(catalog.three_player_game(),
                                   catalog.three_player_equilibrium(),
                                   names=("x", "y", "z"), reference=(1, 1, 1))
    reference = PolySystem.from_text(
        "vars: x, y, z\nx - y + x*y\ny - z + y*z\nz - x + z*x\n").polys
    for p in gs.system.polys:
        assert sum(_proportional(p, q) for q in reference) == 1
    assert gs.kappa == 3
    assert classify_monogenic(gs).rank_deficiency == 1


def test_matching_pennies_system():
    gs = build_indifference_system(catalog.matching_pennies(),
                                   catalog.matching_pennies_equilibrium())
    mono = classify_monogenic(gs)
    assert (mono.rank, mono.is_monogenic, mono.rank_deficiency) == (2, True, 0)
    # index = sign det Jp(0), confirmed numerically by the oracle tests
    assert signed_degree(gs.system).signed_degree == 1


def test_not_monogenic_stub():
    from mixedindex.generators import planar_realization
    mono = classify_monogenic(planar_realization("conjugatePower", 2))
    assert not mono.is_monogenic and mono.rank == 0
    assert str(mono) == "notMonogenic(rank=0)"


def test_build_requires_interior():
    with pytest.raises(NotInteriorEquilibrium):
        build_indifference_system(catalog.outside_option_game(),
                                  catalog.outside_option_equilibrium())


def _random_game_with_mixed_equilibrium(rng):
    """2x2 game with a completely mixed equilibrium at a random interior point."""
    p, q = Fraction(rng.randint(1, 5), 6), Fraction(rng.randint(1, 5), 6)
    while True:
        a = [[Fraction(rng.randint(-5, 5)) for _ in range(2)] for _ in range(2)]
        b = [[Fraction(rng.randint(-5, 5)) for _ in range(2)] for _ in range(2)]
        # shift one payoff so each player is indifferent at the other's mix
        a[0][1] = ((1 - q) * a[1][1] + q * (a[1][0] - a[0][0])) / (1 - q)
        b[1][0] = ((1 - p) * b[1][1] + p * (b[0][1] - b[0][0])) / (1 - p)
        game = Game((2, 2), {(i, j): (a[i][j], b[i][j]) for i in range(2) for j in range(2)})
        prof = ((p, 1 - p), (q, 1 - q))
        if verify_equilibrium(game, prof) is EquilibriumStatus.INTERIOR:
            return game, prof


def test_system_vanishes_and_is_multiaffine():
    rng = random.Random(4)
    for _ in range(20):
        game, prof = _random_game_with_mixed_equilibrium(rng)
        gs = build_indifference_system(game, prof)
        assert gs.system.evaluate([0] * gs.kappa) == [0] * gs.kappa
        assert all(is_multiaffine(p, gs.blocks) for p in gs.system.polys)
        assert all(p.constant_term() == 0 for p in gs.system.polys)


def test_index_independent_of_reference_strategies():
    game = catalog.three_player_game()
    prof = catalog.three_player_equilibrium()
    seen = {signed_degree(build_indifference_system(game, prof, reference=r).system)
            .signed_degree for r in itertools.product(range(2), repeat=3)}
    assert seen == {0}
    game = catalog.matching_pennies()
    seen = {signed_degree(build_indifference_system(
        game, catalog.matching_pennies_equilibrium(), reference=r).system).signed_degree
        for r in itertools.product(range(2), repeat=2)}
    assert seen == {1}


def test_outside_option_reduction():
    game = catalog.outside_option_game()
    prof = catalog.outside_option_equilibrium()
    assert inferior_replies(game, prof) == [(0,), (), ()]
    reduced, rprof = eliminate_inferior_replies(game, prof)
    assert reduced == catalog.three_player_game()
    assert rprof == catalog.three_player_equilibrium()
    again = eliminate_inferior_replies(reduced, rprof)
    assert again[0] == reduced and again[1] == rprof
    assert verify_equilibrium(reduced, rprof) is EquilibriumStatus.INTERIOR


def test_reduction_keeps_completely_mixed_unchanged():
    g = catalog.three_player_game()
    prof = catalog.three_player_equilibrium()
    assert eliminate_inferior_replies(g, prof) == (g, prof)


def test_reduction_drops_dominated_unused_strategy():
    # row player's second strategy is strictly dominated and unused
    g = Game((2, 2), {(0, 0): (3, 1), (0, 1): (2, 0), (1, 0): (1, 0), (1, 1): (0, 1)})
    prof = ((1, 0), (1, 0))
    reduced, rprof = eliminate_inferior_replies(g, prof)
    assert reduced.strategy_counts == (1, 1)
    assert rprof == ((1,), (1,))
    with pytest.raises(NotEquilibrium):
        eliminate_inferior_replies(g, ((0, 1), (1, 0)))


def test_duplicate_strategies():
    g = catalog.three_player_game()
    aug = add_duplicate(g, 0, (H, H), "mix")
    assert aug.strategy_counts == (3, 2, 2)
    assert verify_duplicate(aug, 0, 2, (H, H))
    assert not verify_duplicate(aug, 0, 2, (1, 0))
    rng = random.Random(9)
    for _ in range(10):
        rand = Game.from_function((3, 2), lambda p: (rng.randint(-9, 9), rng.randint(-9, 9)))
        assert not verify_duplicate(rand, 0, 2, (H, H))
    with pytest.raises(ShapeMismatch):
        verify_duplicate(aug, 0, 2, (1,))
