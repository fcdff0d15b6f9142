import pytest

from mixedindex import catalog
from mixedindex.enabling import build_vertex_game
from mixedindex.errors import InternalError
from mixedindex.gamesys import build_indifference_system
from mixedindex.generators import planar_realization
from mixedindex.localpoly import LocalOrder, PolySystem
from mixedindex.report import (INDETERMINATE, NOT_PAYOFF_ROBUST, PAYOFF_ROBUST,
                               UNDEFINED_INDEX, compute_index_report, parity_shortcut,
                               parse_report, robustness_verdict)
from mixedindex.standardbasis import local_algebra_of


def three_player():
    return build_indifference_system(catalog.three_player_game(),
                                     catalog.three_player_equilibrium(), names=("x", "y", "z"))


def test_three_player_report():
    r = compute_index_report(three_player())
    assert (r.kappa, r.dimension, r.jacobian_rank, r.monogenic, r.rank_deficiency) == \
        (3, 2, 2, True, 1)
    assert r.standard_monomials == ("1", "z")
    assert (r.index, r.abs_index, r.i_max_dimension) == (0, 0, 1)
    assert r.robustness_verdict == NOT_PAYOFF_ROBUST
    assert r.parity_shortcut == "zero" and not r.parity_shortcut_used
    assert r.exit_status == 0


def test_enabling_report():
    game, profile = build_vertex_game(catalog.enabling_form())
    r = compute_index_report(build_indifference_system(game, profile))
    assert (r.kappa, r.dimension, r.i_max_dimension, r.abs_index) == (5, 1, 0, 1)
    assert r.robustness_verdict == PAYOFF_ROBUST
    assert r.parity_shortcut == "nonzero"


def test_matching_pennies_report():
    r = compute_index_report(build_indifference_system(
        catalog.matching_pennies(), catalog.matching_pennies_equilibrium()),
        with_oracle=True)
    assert (r.dimension, r.rank_deficiency, r.index) == (1, 0, 1)
    assert r.robustness_verdict == PAYOFF_ROBUST
    assert (r.oracle_estimate, r.oracle_confidence) == (1, "unanimous")
    assert not r.warnings


def test_parity_shortcut_cases():
    gs = three_player()
    assert parity_shortcut(local_algebra_of(gs.system.polys), True) == "zero"
    game, profile = build_vertex_game(catalog.enabling_form())
    alg5 = local_algebra_of(build_indifference_system(game, profile).system.polys)
    assert parity_shortcut(alg5, True) == "nonzero"
    conj = planar_realization("conjugatePower", 2)
    assert parity_shortcut(local_algebra_of(conj.polys), False) == "inapplicable"


def test_fast_mode_skips_signature_only_for_zero():
    r = compute_index_report(three_player(), fast=True)
    assert r.parity_shortcut_used and r.signature is None and r.index == 0
    game, profile = build_vertex_game(catalog.enabling_form())
    r = compute_index_report(build_indifference_system(game, profile), fast=True)
    assert not r.parity_shortcut_used and r.signature == r.index


def test_verdict_rules():
    assert robustness_verdict(1, False) == PAYOFF_ROBUST
    assert robustness_verdict(-2, False) == PAYOFF_ROBUST
    assert robustness_verdict(0, True) == NOT_PAYOFF_ROBUST
    assert robustness_verdict(0, False) == INDETERMINATE
    assert robustness_verdict(UNDEFINED_INDEX, True) == INDETERMINATE


def test_non_monogenic_zero_index_is_indeterminate():
    r = compute_index_report(planar_realization("cusp"))
    assert r.monogenic  # rank 1 of 2
    r = compute_index_report(PolySystem.from_text("vars: x, y\nx^2\ny^2\n"))
    assert not r.monogenic and r.index == 0 and r.dimension == 4
    assert r.robustness_verdict == INDETERMINATE and r.exit_status == 2


def test_infinite_dimensional_report():
    r = compute_index_report(PolySystem.from_text("vars: x, y\nx^3 + x*y^2\nx^2*y + y^3\n"))
    assert r.index == UNDEFINED_INDEX and r.dimension is None
    assert r.robustness_verdict == INDETERMINATE
    assert "InfiniteDimensional" in r.warnings[0]


def test_order_echoed_and_index_invariant():
    for perm in [(2, 0, 1), (1, 2, 0)]:
        r = compute_index_report(three_player(), order=LocalOrder(perm))
        assert r.index == 0
    r = compute_index_report(three_player(), order=(2, 0, 1))
    assert r.local_order == "z > x > y"


def test_text_is_stable_and_parseable():
    r = compute_index_report(three_player(), with_oracle=True)
    text = r.to_text()
    assert text == compute_index_report(three_player(), with_oracle=True).to_text()
    assert "time." not in text
    keys = [line.split(": ")[0] for line in text.splitlines()]
    assert keys[:3] == ["kappa", "variables", "localOrder"]
    doc = parse_report(text)
    assert doc["index"] == "0" and doc["standardMonomials"] == "{1, z}"
    assert "time.standardBasis" in r.to_text(include_timings=True)


def test_monogenic_bound_is_enforced(monkeypatch):
    import mixedindex.report as report
    from mixedindex.elindex import signed_degree

    def inflated(*args, **kwargs):
        res = signed_degree(*args, **kwargs)
        return type(res)(**{**res.__dict__, "signed_degree": 3})

    monkeypatch.setattr(report, "signed_degree", inflated)
    game, profile = build_vertex_game(catalog.enabling_form())
    with pytest.raises(InternalError):
        report.compute_index_report(build_indifference_system(game, profile))
