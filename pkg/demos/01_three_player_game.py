"""A three-player game whose mixed equilibrium has index zero.

Each player has two strategies and the uniform profile is an equilibrium.
We build the indifference system, look at its local algebra and read the
index off the Eisenbud-Levine form.
"""

from mixedindex import catalog
from mixedindex.gamesys import build_indifference_system, verify_equilibrium
from mixedindex.report import compute_index_report

game = catalog.three_player_game()
profile = catalog.three_player_equilibrium()
print("equilibrium check:", verify_equilibrium(game, profile).value)

# One unknown per player (the shift of the first strategy's probability);
# naming them x, y, z gives the familiar form of the equations.
gs = build_indifference_system(game, profile, names=("x", "y", "z"), reference=(1, 1, 1))
for p in gs.system.polys:
    print("  0 =", p.to_text(gs.system.names))

report = compute_index_report(gs, with_oracle=True)
print()
print(report.to_text())

# The Jacobian at the root has rank 2 of 3, so the pair is monogenic and an
# index of zero settles the question: this equilibrium is not payoff-robust.
