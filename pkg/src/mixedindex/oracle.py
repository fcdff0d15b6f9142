"""Floating-point cross-check of a local degree.

Pick a few small targets ``t``, find every solution of ``p(x) = t`` in a
ball around the origin by damped Newton from a grid of starts, and add up
the signs of the Jacobian determinant at those solutions.  The result is
advisory only; the exact computation never defers to it.
"""

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import NotSquare
from .localpoly import jacobian_matrix


@dataclass(frozen=True)
class OracleConfig:
    isolation_radius: float = 0.1
    target_radius: float = 1e-6
    starts_per_axis: int = 8
    newton_tol: float = 1e-12
    max_iter: int = 100
    merge_radius: float = 1e-8
    target_samples: int = 7
    seed: int = 20250101
    max_halvings: int = 30

    def __post_init__(self):
        values = (self.isolation_radius, self.target_radius, self.starts_per_axis,
                  self.newton_tol, self.max_iter, self.merge_radius, self.target_samples)
        if any(v <= 0 for v in values):
            raise ValueError("oracle parameters must be positive")
        if self.target_radius >= self.isolation_radius:
            raise ValueError("target radius must be much smaller than the isolation radius")


@dataclass(frozen=True)
class OracleEstimate:
    estimate: int
    confidence: str  # unanimous | majority | inconclusive
    sums: tuple = field(default=())
    root_counts: tuple = field(default=())


class _Compiled:
    """Vectorised evaluation of a list of polynomials at many points."""

    def __init__(self, polys, nvars):
        self.nvars = nvars
        self.items = []
        for p in polys:
            terms = p.items()
            if terms:
                exps = np.array([e for e, _ in terms], dtype=np.int64)
                coeffs = np.array([float(c) for _, c in terms])
            else:
                exps = np.zeros((0, nvars), dtype=np.int64)
                coeffs = np.zeros(0)
            self.items.append((exps, coeffs))

    def __call__(self, X):
        # X: (batch, nvars) -> (batch, len(polys))
        out = np.empty((X.shape[0], len(self.items)))
        for k, (exps, coeffs) in enumerate(self.items):
            if not len(coeffs):
                out[:, k] = 0.0
                continue
            mons = np.prod(X[:, None, :] ** exps[None, :, :], axis=2)
            out[:, k] = mons @ coeffs
        return out


def _grid(n, radius, per_axis):
    axis = np.linspace(-radius, radius, per_axis)
    mesh = np.meshgrid(*([axis] * n), indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    return pts[np.linalg.norm(pts, axis=1) <= radius * (1 + 1e-12)]


def _newton(F, Jf, n, X, target, cfg):
    """Damped Newton on ``F(x) - target`` for a batch of starts."""
    def residual(Y):
        return F(Y) - target

    R = residual(X)
    norm = np.linalg.norm(R, axis=1)
    active = np.ones(len(X), dtype=bool)
    for _ in range(cfg.max_iter):
        active &= norm > cfg.newton_tol
        if not active.any():
            break
        idx = np.nonzero(active)[0]
        J = Jf(X[idx]).reshape(len(idx), n, n)
        try:
            step = np.linalg.solve(J, -R[idx][:, :, None])[:, :, 0]
        except np.linalg.LinAlgError:
            step = np.stack([np.linalg.lstsq(Jk, -rk, rcond=None)[0]
                             for Jk, rk in zip(J, R[idx])])
        t = np.ones(len(idx))
        cur = norm[idx]
        accepted = np.zeros(len(idx), dtype=bool)
        newX = X[idx].copy()
        newR = R[idx].copy()
        newnorm = cur.copy()
        for _ in range(cfg.max_halvings):
            todo = ~accepted
            if not todo.any():
                break
            cand = X[idx][todo] + t[todo, None] * step[todo]
            rc = residual(cand)
            nc = np.linalg.norm(rc, axis=1)
            ok = np.isfinite(nc) & (nc < cur[todo])
            sel = np.nonzero(todo)[0][ok]
            newX[sel] = cand[ok]
            newR[sel] = rc[ok]
            newnorm[sel] = nc[ok]
            accepted[sel] = True
            t[todo] *= 0.5
        stalled = ~accepted
        X[idx] = newX
        R[idx] = newR
        norm[idx] = newnorm
        active[idx[stalled]] = False
    return X, norm


def _merge(points, radius):
    dim = points.shape[1]
    kept = np.empty((0, dim))
    for p in points[np.lexsort(points.T[::-1])]:
        if not len(kept) or np.min(np.linalg.norm(kept - p, axis=1)) > radius:
            kept = np.vstack([kept, p])
    return kept


def estimate_degree(system, cfg=None):
    """Signed preimage count near the origin, voted over random targets."""
    if not system.is_square():
        raise NotSquare(f"{len(system.polys)} equations in {system.nvars} variables")
    cfg = cfg or OracleConfig()
    n = system.nvars
    F = _Compiled(system.polys, n)
    jac = jacobian_matrix(system)
    Jf = _Compiled([e for row in jac for e in row], n)
    rng = np.random.default_rng(cfg.seed)
    starts = _grid(n, cfg.isolation_radius, cfg.starts_per_axis)
    sums, counts = [], []
    for _ in range(cfg.target_samples):
        direction = rng.standard_normal(n)
        target = cfg.target_radius * direction / np.linalg.norm(direction)
        X, norm = _newton(F, Jf, n, starts.copy(), target, cfg)
        scale = max(cfg.newton_tol, 1e-9 * cfg.target_radius)
        good = (norm <= scale) & (np.linalg.norm(X, axis=1) < cfg.isolation_radius)
        roots = _merge(X[good], cfg.merge_radius)
        total = 0
        for r in roots:
            det = np.linalg.det(Jf(r[None, :]).reshape(n, n))
            total += int(np.sign(det))
        sums.append(total)
        counts.append(len(roots))
    tally = Counter(sums)
    best = max(tally.values())
    estimate = min(s for s, c in tally.items() if c == best)
    if best == len(sums):
        confidence = "unanimous"
    elif best * 2 > len(sums):
        confidence = "majority"
    else:
        confidence = "inconclusive"
    return OracleEstimate(estimate, confidence, tuple(sums), tuple(counts))
