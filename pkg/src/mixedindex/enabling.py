"""Vertex games over simplices in enabling-strategy space.

Given multiaffine payoffs on each player's enabling-strategy space and a
simplex around the equilibrium point for each player, the vertices become
pure strategies and the equilibrium becomes its barycentric coordinates.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (DegenerateSimplex, EquilibriumCheckFailed, InputError, NotInHull,
                     ShapeMismatch)
from .exactnum import rank, solve
from .gamesys import EquilibriumStatus, Game, verify_equilibrium
from .localpoly import is_multiaffine


@dataclass(frozen=True)
class EnablingForm:
    """``names`` lists all coordinates; ``blocks[n]`` indexes player n's among them."""

    names: tuple
    blocks: tuple
    payoffs: tuple
    simplices: tuple
    point: tuple

    def __post_init__(self):
        N = len(self.blocks)
        if not (len(self.payoffs) == len(self.simplices) == len(self.point) == N):
            raise ShapeMismatch("payoffs, simplices and point need one entry per player")
        for n, block in enumerate(self.blocks):
            if len(self.point[n]) != len(block):
                raise ShapeMismatch(f"player {n + 1}: point has wrong dimension", f"point[{n}]")
            for j, v in enumerate(self.simplices[n]):
                if len(v) != len(block):
                    raise ShapeMismatch(f"player {n + 1}: vertex {j} has wrong dimension",
                                        f"simplices[{n}][{j}]")

    @property
    def n_players(self):
        return len(self.blocks)

    def coordinates(self, per_player):
        """Flatten per-player coordinate vectors into one point over ``names``."""
        out = [None] * len(self.names)
        for block, vec in zip(self.blocks, per_player):
            for i, v in zip(block, vec):
                out[i] = Fraction(v)
        return out


def barycentric(vertices, point):
    """Affine weights summing to one that reproduce ``point`` from ``vertices``."""
    vertices = [[Fraction(c) for c in v] for v in vertices]
    point = [Fraction(c) for c in point]
    if not vertices:
        raise DegenerateSimplex("empty vertex list")
    dim = len(point)
    if any(len(v) != dim for v in vertices):
        raise ShapeMismatch("vertex and point dimensions differ")
    k = len(vertices)
    rows = [[v[c] for v in vertices] for c in range(dim)] + [[Fraction(1)] * k]
    if rank(rows) < k:
        raise DegenerateSimplex("vertices are affinely dependent")
    w = solve(rows, point + [Fraction(1)])
    if w is None:
        raise NotInHull(f"point {point} is not in the affine hull of the vertices")
    return w


def build_vertex_game(ef):
    """Normal-form game on simplex vertices and the induced interior profile."""
    for n, block in enumerate(ef.blocks):
        if len(ef.simplices[n]) != len(block) + 1:
            raise DegenerateSimplex(
                f"player {n + 1}: need {len(block) + 1} vertices, got {len(ef.simplices[n])}",
                f"simplices[{n}]")
    for n, V in enumerate(ef.payoffs):
        if not is_multiaffine(V, ef.blocks):
            raise InputError(f"payoff of player {n + 1} is not multiaffine across players",
                             f"payoff_polys[{n}]")
    profile = []
    for n in range(ef.n_players):
        try:
            w = barycentric(ef.simplices[n], ef.point[n])
        except (DegenerateSimplex, NotInHull) as exc:
            exc.location = f"simplices[{n}]"
            raise
        if any(x <= 0 for x in w):
            raise NotInHull(f"player {n + 1}: equilibrium point is not interior to its simplex "
                            f"(weights {[str(x) for x in w]})", f"point[{n}]")
        profile.append(tuple(w))
    counts = [len(s) for s in ef.simplices]

    def payoff(vertex_profile):
        pt = ef.coordinates([ef.simplices[n][j] for n, j in enumerate(vertex_profile)])
        return tuple(V.evaluate(pt) for V in ef.payoffs)

    names = [[f"v{n + 1}_{j + 1}" for j in range(k)] for n, k in enumerate(counts)]
    game = Game.from_function(counts, payoff, names)
    status = verify_equilibrium(game, profile)
    if status is not EquilibriumStatus.INTERIOR:
        raise EquilibriumCheckFailed(
            f"barycentric profile is {status} in the vertex game; "
            "the simplices or the equilibrium point are wrong")
    return game, tuple(profile)


def corner_simplex(center, eps):
    """Simplex around ``center`` of dimension 1 or 2 used for desk examples.

    Dimension 1: ``{c - eps, c + eps}``.  Dimension 2:
    ``{(a - eps, b - eps), (a + eps, b - eps), (a, b + eps)}``.
    """
    center = [Fraction(c) for c in center]
    eps = Fraction(eps)
    if len(center) == 1:
        (c,) = center
        return [[c - eps], [c + eps]]
    if len(center) == 2:
        a, b = center
        return [[a - eps, b - eps], [a + eps, b - eps], [a, b + eps]]
    # general dimension: the standard simplex shifted and scaled around center
    d = len(center)
    verts = []
    for j in range(d + 1):
        v = [c - eps for c in center]
        if j < d:
            v[j] += (d + 1) * eps
        verts.append(v)
    return verts


def vertex_tuples(ef):
    return itertools.product(*(range(len(s)) for s in ef.simplices))
