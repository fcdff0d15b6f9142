"""End-to-end index computation and the robustness verdicts.

``compute_index_report`` runs standard basis, local algebra, monogenic
classification, parity shortcut and signature for one instance, and checks
the consistency rules that tie them together before returning.
"""

import time
from dataclasses import dataclass, field

from .elindex import signed_degree
from .errors import InfiniteDimensional, InternalError, NotSquare
from .gamesys import GameSystem, classify_monogenic
from .localpoly import LocalOrder, format_monomial
from .oracle import OracleConfig, estimate_degree
from .standardbasis import build_local_algebra, compute_standard_basis

PAYOFF_ROBUST = "payoffRobust"
NOT_PAYOFF_ROBUST = "notPayoffRobust"
INDETERMINATE = "indeterminate"
UNDEFINED_INDEX = "undefined: infinite-dimensional"


@dataclass
class IndexReport:
    kappa: int
    variables: tuple
    local_order: str
    jacobian_rank: int
    monogenic: bool
    rank_deficiency: int
    dimension: object  # int, or None when infinite-dimensional
    standard_monomials: tuple
    i_max_dimension: object
    signature: object
    index: object  # int or UNDEFINED_INDEX
    abs_index: object
    parity_shortcut: str
    parity_shortcut_used: bool
    robustness_verdict: str
    oracle_estimate: object = None
    oracle_confidence: object = None
    warnings: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def exit_status(self):
        """0 for a decided verdict, 2 for an indeterminate one."""
        return 2 if self.robustness_verdict == INDETERMINATE else 0

    def fields(self, include_timings=False):
        """Ordered ``(key, value)`` pairs; the order never changes."""
        def show(v):
            return "n/a" if v is None else str(v)

        out = [
            ("kappa", str(self.kappa)),
            ("variables", ", ".join(self.variables)),
            ("localOrder", self.local_order),
            ("jacobianRank", str(self.jacobian_rank)),
            ("monogenic", "true" if self.monogenic else "false"),
            ("rankDeficiency", str(self.rank_deficiency)),
            ("dimension", show(self.dimension)),
            ("standardMonomials", "{" + ", ".join(self.standard_monomials) + "}"
             if self.dimension is not None else "n/a"),
            ("iMaxDimension", show(self.i_max_dimension)),
            ("signature", show(self.signature)),
            ("index", str(self.index)),
            ("absIndex", show(self.abs_index)),
            ("parityShortcut", self.parity_shortcut),
            ("parityShortcutUsed", "true" if self.parity_shortcut_used else "false"),
            ("robustnessVerdict", self.robustness_verdict),
        ]
        if self.oracle_estimate is not None:
            out.append(("oracleEstimate", str(self.oracle_estimate)))
            out.append(("oracleConfidence", self.oracle_confidence))
        for w in self.warnings:
            out.append(("warning", w))
        if include_timings:
            for k in sorted(self.timings):
                out.append((f"time.{k}", f"{self.timings[k]:.6f}"))
        return out

    def to_text(self, include_timings=False):
        return "".join(f"{k}: {v}\n" for k, v in self.fields(include_timings))


def parse_report(text):
    """Inverse of :meth:`IndexReport.to_text` as a plain dict (repeated keys become lists)."""
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, value = line.partition(": ")
        if key in out:
            prev = out[key]
            out[key] = (prev if isinstance(prev, list) else [prev]) + [value]
        else:
            out[key] = value
    return out


def parity_shortcut(algebra, monogenic):
    """Zero/nonzero from the parity of the dimension, for monogenic pairs only."""
    if not monogenic:
        return "inapplicable"
    return "zero" if algebra.dimension % 2 == 0 else "nonzero"


def robustness_verdict(index, monogenic):
    if not isinstance(index, int):
        return INDETERMINATE
    if index != 0:
        return PAYOFF_ROBUST
    return NOT_PAYOFF_ROBUST if monogenic else INDETERMINATE


def compute_index_report(source, order=None, fast=False, with_oracle=False, degree_cap=64,
                         oracle_config=None, phi_index=None):
    """Index report for a :class:`GameSystem` or a square :class:`PolySystem`.

    ``order`` is a :class:`LocalOrder` or a permutation tuple.  With ``fast``
    the signature is skipped whenever the parity shortcut already says the
    index is zero.
    """
    system = source.system if isinstance(source, GameSystem) else source
    if not system.is_square():
        raise NotSquare(f"{len(system.polys)} equations in {system.nvars} variables")
    n = system.nvars
    if order is None:
        order = LocalOrder.default(n)
    elif not isinstance(order, LocalOrder):
        order = LocalOrder(tuple(order))
    if order.nvars != n:
        raise NotSquare(f"order permutation has {order.nvars} entries for {n} variables")
    names = system.names
    timings = {}

    t0 = time.perf_counter()
    mono = classify_monogenic(system)
    basis = compute_standard_basis(system.polys, order)
    timings["standardBasis"] = time.perf_counter() - t0

    common = dict(kappa=n, variables=tuple(names), local_order=order.describe(names),
                  jacobian_rank=mono.rank, monogenic=mono.is_monogenic,
                  rank_deficiency=mono.rank_deficiency, timings=timings)
    try:
        t0 = time.perf_counter()
        algebra = build_local_algebra(basis, degree_cap)
        timings["localAlgebra"] = time.perf_counter() - t0
    except InfiniteDimensional as exc:
        return IndexReport(dimension=None, standard_monomials=(), i_max_dimension=None,
                           signature=None, index=UNDEFINED_INDEX, abs_index=None,
                           parity_shortcut="inapplicable", parity_shortcut_used=False,
                           robustness_verdict=INDETERMINATE,
                           warnings=[f"InfiniteDimensional: {exc}"], **common)

    parity = parity_shortcut(algebra, mono.is_monogenic)
    stdm = tuple(format_monomial(m, names) for m in algebra.standard_monomials)
    if fast and parity == "zero":
        index, signature, used = 0, None, True
    else:
        t0 = time.perf_counter()
        result = signed_degree(system, order, degree_cap, phi_index, algebra)
        timings["signature"] = time.perf_counter() - t0
        index, signature, used = result.signed_degree, result.signature, False
    abs_index = abs(index)
    i_max = (algebra.dimension - abs_index) // 2

    # consistency rules that must hold on every instance
    if algebra.dimension - 2 * i_max != abs_index:
        raise InternalError("dimension - 2 dim I_max differs from |index|")
    if mono.is_monogenic and abs_index > 1:
        raise InternalError(f"monogenic pair with index {index}")
    if parity != "inapplicable" and (parity == "zero") != (index == 0):
        raise InternalError(f"parity shortcut says {parity} but index is {index}")

    report = IndexReport(dimension=algebra.dimension, standard_monomials=stdm,
                         i_max_dimension=i_max, signature=signature, index=index,
                         abs_index=abs_index, parity_shortcut=parity,
                         parity_shortcut_used=used,
                         robustness_verdict=robustness_verdict(index, mono.is_monogenic),
                         **common)
    if with_oracle:
        t0 = time.perf_counter()
        est = estimate_degree(system, oracle_config or OracleConfig())
        timings["oracle"] = time.perf_counter() - t0
        report.oracle_estimate = est.estimate
        report.oracle_confidence = est.confidence
        if est.estimate != index:
            report.warnings.append(
                f"oracle disagrees: exact index {index}, numerical estimate {est.estimate}")
    return report
