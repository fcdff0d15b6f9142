"""Finite normal-form games and their translated indifference systems."""

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (InputError, InternalError, NotEquilibrium, NotInteriorEquilibrium,
                     ShapeMismatch)
from .exactnum import rank
from .localpoly import Poly, PolySystem, is_multiaffine, jacobian_at_zero, unit_mono, var_mono


class Game:
    """Payoff table of a finite game.

    ``strategy_counts[n]`` is the number of pure strategies of player ``n``;
    ``payoffs`` maps each pure profile (a tuple of strategy indices) to the
    tuple of payoffs of all players.
    """

    def __init__(self, strategy_counts, payoffs, strategy_names=None):
        self.strategy_counts = tuple(int(k) for k in strategy_counts)
        if len(self.strategy_counts) < 2:
            raise ShapeMismatch("a game needs at least two players")
        if any(k < 1 for k in self.strategy_counts):
            raise ShapeMismatch("every player needs a strategy")
        n = len(self.strategy_counts)
        table = {}
        for profile in self.profiles():
            try:
                vec = payoffs[profile]
            except KeyError:
                raise ShapeMismatch(f"missing payoff for profile {profile}") from None
            if len(vec) != n:
                raise ShapeMismatch(f"payoff vector of length {len(vec)} at {profile}")
            table[profile] = tuple(Fraction(v) for v in vec)
        self.payoffs = table
        if strategy_names is None:
            strategy_names = [[str(s) for s in range(k)] for k in self.strategy_counts]
        self.strategy_names = tuple(tuple(names) for names in strategy_names)

    @classmethod
    def from_function(cls, strategy_counts, fn, strategy_names=None):
        counts = tuple(strategy_counts)
        payoffs = {p: fn(p) for p in itertools.product(*(range(k) for k in counts))}
        return cls(counts, payoffs, strategy_names)

    @classmethod
    def from_nested(cls, strategy_counts, nested, strategy_names=None):
        """Build from nested lists indexed ``[s_1][s_2]...[s_N]`` -> payoff vector."""
        def lookup(profile):
            node = nested
            for s in profile:
                node = node[s]
            return node
        return cls.from_function(strategy_counts, lookup, strategy_names)

    def to_nested(self):
        def build(prefix):
            if len(prefix) == self.n_players:
                return list(self.payoffs[tuple(prefix)])
            return [build(prefix + [s]) for s in range(self.strategy_counts[len(prefix)])]
        return build([])

    @property
    def n_players(self):
        return len(self.strategy_counts)

    def profiles(self):
        return itertools.product(*(range(k) for k in self.strategy_counts))

    def payoff(self, player, profile):
        return self.payoffs[tuple(profile)][player]

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return self.strategy_counts == other.strategy_counts and self.payoffs == other.payoffs

    def __repr__(self):
        return f"Game(strategy_counts={self.strategy_counts})"


def normalize_profile(game, profile):
    """Validate a mixed profile and return it as a tuple of Fraction tuples."""
    if len(profile) != game.n_players:
        raise ShapeMismatch(f"profile has {len(profile)} players, game has {game.n_players}")
    out = []
    for n, (probs, k) in enumerate(zip(profile, game.strategy_counts)):
        if len(probs) != k:
            raise ShapeMismatch(f"player {n + 1}: {len(probs)} probabilities for {k} strategies")
        probs = tuple(Fraction(p) for p in probs)
        if any(p < 0 for p in probs) or sum(probs) != 1:
            raise InputError(f"player {n + 1}: not a probability vector {probs}")
        out.append(probs)
    return tuple(out)


def pure_payoff(game, player, strategy, profile):
    """Exact payoff of ``player`` using ``strategy`` against ``profile``."""
    others = [m for m in range(game.n_players) if m != player]
    total = Fraction(0)
    for combo in itertools.product(*(range(game.strategy_counts[m]) for m in others)):
        weight = Fraction(1)
        for m, s in zip(others, combo):
            weight *= profile[m][s]
            if not weight:
                break
        if weight:
            full = list(combo)
            full.insert(player, strategy)
            total += weight * game.payoff(player, full)
    return total


def reply_payoffs(game, player, profile):
    return [pure_payoff(game, player, s, profile) for s in range(game.strategy_counts[player])]


class EquilibriumStatus(enum.Enum):
    INTERIOR = "interiorEquilibrium"
    NOT_EQUILIBRIUM = "notEquilibrium"
    NOT_COMPLETELY_MIXED = "notCompletelyMixed"

    def __str__(self):
        return self.value


def is_nash(game, profile):
    for n in range(game.n_players):
        values = reply_payoffs(game, n, profile)
        best = max(values)
        if any(p > 0 and v < best for p, v in zip(profile[n], values)):
            return False
    return True


def verify_equilibrium(game, profile):
    profile = normalize_profile(game, profile)
    if not is_nash(game, profile):
        return EquilibriumStatus.NOT_EQUILIBRIUM
    if any(p == 0 for probs in profile for p in probs):
        return EquilibriumStatus.NOT_COMPLETELY_MIXED
    return EquilibriumStatus.INTERIOR


@dataclass(frozen=True)
class GameSystem:
    game: Game
    profile: tuple
    kappa: int
    system: PolySystem
    blocks: tuple
    reference: tuple
    variables: tuple  # (player, strategy) for each variable

    @property
    def names(self):
        return self.system.names


def default_variable_names(game, reference):
    names = []
    for n, k in enumerate(game.strategy_counts):
        names += [f"x{n + 1}_{s}" for s in range(k) if s != reference[n]]
    return names


def build_indifference_system(game, profile, names=None, reference=None):
    """Translated indifference system of an interior equilibrium.

    For player ``n`` with reference strategy ``r`` (default 0) and each other
    strategy ``i``, the equation is ``G_n(r, s_-n) - G_n(i, s_-n)`` in the
    mixed extension, with ``sigma_r`` eliminated through the simplex
    constraint and every remaining probability written as ``X + sigma*``.
    Equations and variables are both ordered player by player, strategies
    ascending.
    """
    profile = normalize_profile(game, profile)
    status = verify_equilibrium(game, profile)
    if status is not EquilibriumStatus.INTERIOR:
        raise NotInteriorEquilibrium(f"profile is {status}", "equilibrium")
    N = game.n_players
    if reference is None:
        reference = (0,) * N
    reference = tuple(reference)
    if len(reference) != N or any(not 0 <= r < k for r, k in zip(reference, game.strategy_counts)):
        raise ShapeMismatch(f"bad reference strategies {reference}")
    variables = [(n, s) for n in range(N) for s in range(game.strategy_counts[n])
                 if s != reference[n]]
    kappa = len(variables)
    if names is None:
        names = default_variable_names(game, reference)
    names = tuple(names)
    if len(names) != kappa:
        raise ShapeMismatch(f"{len(names)} variable names for {kappa} variables", "variables")

    index = {v: i for i, v in enumerate(variables)}
    prob = []
    for n in range(N):
        polys = []
        for s in range(game.strategy_counts[n]):
            if s == reference[n]:
                continue
            i = index[(n, s)]
            polys.append((s, Poly(kappa, {var_mono(kappa, i): 1, unit_mono(kappa): profile[n][s]})))
        row = dict(polys)
        row[reference[n]] = Poly.constant(kappa, 1) - sum((p for _, p in polys), Poly(kappa))
        prob.append(row)

    equations = []
    blocks = []
    for n in range(N):
        blocks.append(tuple(index[(n, s)] for s in range(game.strategy_counts[n])
                            if s != reference[n]))
        others = [m for m in range(N) if m != n]
        weights = {}
        for combo in itertools.product(*(range(game.strategy_counts[m]) for m in others)):
            w = Poly.constant(kappa, 1)
            for m, s in zip(others, combo):
                w = w * prob[m][s]
            weights[combo] = w
        r = reference[n]
        for i in range(game.strategy_counts[n]):
            if i == r:
                continue
            eq = Poly(kappa)
            for combo, w in weights.items():
                full_r = list(combo)
                full_r.insert(n, r)
                full_i = list(combo)
                full_i.insert(n, i)
                diff = game.payoff(n, full_r) - game.payoff(n, full_i)
                if diff:
                    eq = eq + w.scale(diff)
            equations.append(eq)
    system = PolySystem(tuple(equations), names)
    for eq in equations:
        if eq.constant_term() != 0:
            raise InternalError("indifference system has a constant term at an equilibrium")
        if not is_multiaffine(eq, blocks):
            raise InternalError("indifference system is not multiaffine")
    return GameSystem(game, profile, kappa, system, tuple(blocks), reference, tuple(variables))


@dataclass(frozen=True)
class MonogenicClass:
    rank: int
    kappa: int

    @property
    def is_monogenic(self):
        return self.rank >= self.kappa - 1

    @property
    def rank_deficiency(self):
        return self.kappa - self.rank

    def __str__(self):
        if self.is_monogenic:
            return f"monogenic(rankDeficiency={self.rank_deficiency})"
        return f"notMonogenic(rank={self.rank})"


def classify_monogenic(gs):
    """Compare the rank of the Jacobian at the root with ``kappa``.

    Accepts a :class:`GameSystem` or a bare square :class:`PolySystem`.
    """
    system = gs.system if isinstance(gs, GameSystem) else gs
    return MonogenicClass(rank(jacobian_at_zero(system)), system.nvars)


def inferior_replies(game, profile):
    """Per player, the unused strategies that earn strictly less than equilibrium."""
    profile = normalize_profile(game, profile)
    if not is_nash(game, profile):
        raise NotEquilibrium("profile is not an equilibrium", "equilibrium")
    out = []
    for n in range(game.n_players):
        values = reply_payoffs(game, n, profile)
        eq_value = sum(p * v for p, v in zip(profile[n], values))
        out.append(tuple(s for s, (p, v) in enumerate(zip(profile[n], values))
                         if p == 0 and v < eq_value))
    return out


def eliminate_inferior_replies(game, profile):
    """Drop every unused strictly inferior reply; returns ``(game, profile)``."""
    profile = normalize_profile(game, profile)
    removed = inferior_replies(game, profile)
    kept = [[s for s in range(k) if s not in removed[n]]
            for n, k in enumerate(game.strategy_counts)]
    counts = [len(k) for k in kept]
    payoffs = {}
    for new in itertools.product(*(range(c) for c in counts)):
        old = tuple(kept[n][s] for n, s in enumerate(new))
        payoffs[new] = game.payoffs[old]
    names = [[game.strategy_names[n][s] for s in kept[n]] for n in range(game.n_players)]
    reduced = Game(counts, payoffs, names)
    new_profile = tuple(tuple(profile[n][s] for s in kept[n]) for n in range(game.n_players))
    return reduced, new_profile


def verify_duplicate(game, player, strategy, mixture):
    """Whether ``strategy`` duplicates ``mixture`` over the player's other strategies.

    Every player's payoff must agree exactly against every opposing pure profile.
    """
    if not 0 <= player < game.n_players:
        raise ShapeMismatch(f"no player {player}")
    k = game.strategy_counts[player]
    if not 0 <= strategy < k:
        raise ShapeMismatch(f"player {player} has no strategy {strategy}")
    others = [s for s in range(k) if s != strategy]
    if len(mixture) != len(others):
        raise ShapeMismatch(f"mixture needs {len(others)} weights, got {len(mixture)}")
    mixture = [Fraction(w) for w in mixture]
    opp = [m for m in range(game.n_players) if m != player]
    for combo in itertools.product(*(range(game.strategy_counts[m]) for m in opp)):
        def profile_with(s):
            full = list(combo)
            full.insert(player, s)
            return tuple(full)
        for m in range(game.n_players):
            direct = game.payoff(m, profile_with(strategy))
            mixed = sum(w * game.payoff(m, profile_with(s)) for w, s in zip(mixture, others))
            if direct != mixed:
                return False
    return True


def add_duplicate(game, player, mixture, name=None):
    """Game with ``mixture`` (over all of the player's strategies) appended as a pure strategy."""
    k = game.strategy_counts[player]
    mixture = [Fraction(w) for w in mixture]
    if len(mixture) != k:
        raise ShapeMismatch(f"mixture needs {k} weights")
    counts = list(game.strategy_counts)
    counts[player] += 1

    def payoff(profile):
        s = profile[player]
        if s < k:
            return game.payoffs[tuple(profile)]
        vec = [Fraction(0)] * game.n_players
        for t, w in enumerate(mixture):
            full = list(profile)
            full[player] = t
            vec = [a + w * b for a, b in zip(vec, game.payoffs[tuple(full)])]
        return tuple(vec)

    names = [list(n) for n in game.strategy_names]
    names[player].append(name or "dup")
    return Game.from_function(counts, payoff, names)
