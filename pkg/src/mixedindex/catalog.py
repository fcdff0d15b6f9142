"""Small worked instances used by the demos, the tests and the bundled data files."""

from fractions import Fraction

from .enabling import EnablingForm, corner_simplex
from .gamesys import Game
from .localpoly import Poly

HALF = Fraction(1, 2)


def three_player_game():
    """Three players with two strategies each; uniform play is an equilibrium.

    Rows are player 1, columns player 2, and the first (second) table is
    player 3's first (second) strategy.
    """
    first = {(0, 0): (1, 1, 1), (0, 1): (-5, 0, 3), (1, 0): (0, 3, -5), (1, 1): (0, 0, 1)}
    second = {(0, 0): (3, -5, 0), (0, 1): (1, 0, 0), (1, 0): (0, 1, 0), (1, 1): (0, 0, 0)}
    names = [["a", "b"], ["a", "b"], ["a", "b"]]
    return Game.from_function((2, 2, 2), lambda p: (first if p[2] == 0 else second)[p[:2]],
                              names)


def three_player_equilibrium():
    return ((HALF, HALF),) * 3


def outside_option_game():
    """``three_player_game`` with an extra first strategy Out for player 1.

    Out pays ``(-1, 2, 7)`` whatever the others do.
    """
    inner = three_player_game()

    def payoff(p):
        if p[0] == 0:
            return (-1, 2, 7)
        return inner.payoffs[(p[0] - 1,) + p[1:]]

    names = [["Out", "a", "b"], ["a", "b"], ["a", "b"]]
    return Game.from_function((3, 2, 2), payoff, names)


def outside_option_equilibrium():
    return ((Fraction(0), HALF, HALF), (HALF, HALF), (HALF, HALF))


def matching_pennies():
    payoff = {(0, 0): (1, -1), (0, 1): (-1, 1), (1, 0): (-1, 1), (1, 1): (1, -1)}
    return Game((2, 2), payoff, [["H", "T"], ["H", "T"]])


def matching_pennies_equilibrium():
    return ((HALF, HALF), (HALF, HALF))


ENABLING_NAMES = ("x", "y", "z", "w", "v")
ENABLING_POINT = ((HALF,), (Fraction(1, 3), Fraction(2, 3)), (Fraction(1, 4), Fraction(3, 4)))
ENABLING_EPS = Fraction(1, 20)


def enabling_payoffs():
    """Multiaffine payoffs on the enabling coordinates ``x; y, z; w, v``."""
    x, y, z, w, v = (Poly.variable(5, i) for i in range(5))
    one = Poly.constant(5, 1)
    V1 = x * y + (one - x) * (one - z)
    V2 = x * (y * w + (one - y) * (one - v)) + (one - x) * (z * w + ((one - z) * v).scale(Fraction(1, 3)))
    V3 = x * ((y * w).scale(2) + (one - y) * v) + (one - x) * (-(z * w) - ((one - z) * v).scale(2))
    return (V1, V2, V3)


def enabling_form(eps=ENABLING_EPS):
    simplices = tuple(tuple(tuple(v) for v in corner_simplex(c, eps))
                      for c in ENABLING_POINT)
    return EnablingForm(ENABLING_NAMES, ((0,), (1, 2), (3, 4)), enabling_payoffs(), simplices,
                        ENABLING_POINT)
