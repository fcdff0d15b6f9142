"""From an enabling form to a vertex game with index of absolute value one.

The payoffs are multiaffine in five coordinates split among three players.
Each player's block is enclosed in a small simplex around the equilibrium
point; the vertices become pure strategies of an ordinary normal-form game.
"""

from mixedindex import catalog
from mixedindex.enabling import build_vertex_game
from mixedindex.gamesys import build_indifference_system
from mixedindex.report import compute_index_report

form = catalog.enabling_form()
for player, simplex in enumerate(form.simplices):
    corners = ["(" + ", ".join(str(c) for c in v) + ")" for v in simplex]
    print(f"player {player + 1} simplex:", ", ".join(corners))

game, profile = build_vertex_game(form)
print("vertex profile:", "; ".join(", ".join(str(c) for c in mix) for mix in profile))

# Using the last vertex of players 2 and 3 as the reference strategy gives the
# system in the variables P, Q1, Q2, R, S.
gs = build_indifference_system(game, profile, reference=(0, 2, 2),
                               names=("P", "Q1", "Q2", "R", "S"))
for p in gs.system.polys:
    print("  0 =", p.to_text(gs.system.names))

report = compute_index_report(gs, with_oracle=True)
print()
print(report.to_text())
