"""Edge-disappearance curves and their analysis.

The central object is the curve e(beta): the skeleton edge count sampled over
an ascending beta grid.  Curves of random sets are summarised by a power
model c * beta**alpha fitted with damped Gauss-Newton; curves of regular
arrangements are summarised by their plateau (staircase) structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridMismatch, InsufficientData
from .generators import gen_random_disc
from .geometry import CLOSED
from .skeleton import PointSet, sweep

# Gauss-Newton controls: relative-step convergence tolerance, iteration cap,
# and the number of step halvings tried when a full step fails to descend.
GN_TOL = 1e-9
GN_MAX_ITER = 100
GN_MAX_HALVINGS = 30

_GRID_SNAP = 1e-9


def beta_grid(beta_min: float = 1.0, beta_max: float = 50.0, step: float = 0.1):
    """Ascending inclusive grid beta_min, beta_min+step, ..., beta_max."""
    if beta_min < 1.0:
        raise DomainError(f"beta_min must be >= 1, got {beta_min}")
    if step <= 0:
        raise DomainError(f"step must be > 0, got {step}")
    if beta_max < beta_min:
        raise DomainError("beta_max must be >= beta_min")
    count = int(math.floor((beta_max - beta_min) / step + _GRID_SNAP)) + 1
    return beta_min + step * np.arange(count)


@dataclass(frozen=True)
class Curve:
    """Sampled edge counts e(beta) over an ascending beta grid."""

    n: int
    betas: np.ndarray
    edges: np.ndarray
    label: str = ""

    def __post_init__(self):
        betas = np.asarray(self.betas, dtype=np.float64)
        edges = np.asarray(self.edges, dtype=np.int64)
        if betas.ndim != 1 or betas.shape != edges.shape or betas.size == 0:
            raise DomainError("curve needs matching, nonempty beta/edge arrays")
        if betas.size > 1 and not (np.diff(betas) > 0).all():
            raise DomainError("curve betas must be strictly ascending")
        if (np.diff(edges) > 0).any():
            raise DomainError("edge counts must be non-increasing in beta")
        betas.setflags(write=False)
        edges.setflags(write=False)
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "edges", edges)

    @property
    def samples(self) -> list[tuple[float, int]]:
        return [(float(b), int(e)) for b, e in zip(self.betas, self.edges)]

    def index_of(self, beta: float) -> int:
        hits = np.flatnonzero(np.abs(self.betas - beta) <= _GRID_SNAP)
        if hits.size == 0:
            raise GridMismatch(f"curve is not sampled at beta={beta}")
        return int(hits[0])


@dataclass(frozen=True)
class PowerFit:
    """Fitted coefficients of the model c * beta**alpha."""

    c: float
    alpha: float
    r: float
    iterations: int
    converged: bool
    excluded: int = 0

    def value(self, beta):
        return self.c * np.asarray(beta, dtype=float) ** self.alpha


@dataclass(frozen=True)
class StaircaseReport:
    """Constant runs of a curve and the edge-count drops between runs."""

    plateaus: list[tuple[float, float, int]]
    drop_sizes: list[int]


@dataclass(frozen=True)
class ScanRow:
    n: int
    c: float
    alpha: float
    r: float


def curve(
    ps: PointSet,
    beta_min: float = 1.0,
    beta_max: float = 50.0,
    step: float = 0.1,
    rule: str = CLOSED,
) -> Curve:
    """Edge count at every grid value, computed through one sweep."""
    grid = beta_grid(beta_min, beta_max, step)
    skeletons = sweep(ps, grid, rule)
    counts = np.array([len(s.edges) for s in skeletons], dtype=np.int64)
    return Curve(n=len(ps), betas=grid, edges=counts, label=ps.label)


def _pearson(observed: np.ndarray, fitted: np.ndarray) -> float:
    so = observed.std()
    sf = fitted.std()
    if so == 0.0 or sf == 0.0:
        # Degenerate spread; report perfect correlation only for exact match.
        return 1.0 if np.allclose(observed, fitted) else 0.0
    return float(np.corrcoef(observed, fitted)[0, 1])


def fit_power(curve: Curve, init: tuple[float, float] | None = None) -> PowerFit:
    """Least-squares fit of c * beta**alpha by damped Gauss-Newton.

    Samples with zero edges are excluded (the log model is undefined there);
    the count of exclusions is reported on the result.  The default initial
    guess is the log-log linear least-squares solution.  A singular Jacobian
    is not fatal: the best iterate is returned with converged=False.
    """
    pos = curve.edges > 0
    excluded = int((~pos).sum())
    b = curve.betas[pos].astype(float)
    e = curve.edges[pos].astype(float)
    if b.size < 3:
        raise InsufficientData(
            f"need >= 3 samples with positive edge counts, have {b.size}"
        )
    if init is None:
        design = np.column_stack((np.log(b), np.ones_like(b)))
        coef, *_ = np.linalg.lstsq(design, np.log(e), rcond=None)
        alpha, logc = float(coef[0]), float(coef[1])
        c = math.exp(logc)
    else:
        c, alpha = float(init[0]), float(init[1])
        if c <= 0:
            raise DomainError(f"initial c must be > 0, got {c}")

    def ssr(cc, aa):
        resid = e - cc * b**aa
        return float(resid @ resid)

    best = ssr(c, alpha)
    converged = False
    iterations = 0
    for iterations in range(1, GN_MAX_ITER + 1):
        f = c * b**alpha
        jac = np.column_stack((b**alpha, f * np.log(b)))
        rank = np.linalg.matrix_rank(jac)
        if rank < 2:
            break  # singular Jacobian; keep the best iterate
        delta, *_ = np.linalg.lstsq(jac, e - f, rcond=None)
        scale = 1.0
        accepted = False
        for _ in range(GN_MAX_HALVINGS + 1):
            c_new = c + scale * delta[0]
            a_new = alpha + scale * delta[1]
            if c_new > 0:
                trial = ssr(c_new, a_new)
                if trial < best:
                    c, alpha, best = c_new, a_new, trial
                    accepted = True
                    break
            scale /= 2.0
        if not accepted:
            # No descent direction left at this scale: treat as stationary.
            converged = True
            break
        rel = max(
            abs(scale * delta[0]) / max(abs(c), 1e-300),
            abs(scale * delta[1]) / max(abs(alpha), 1e-300),
        )
        if rel < GN_TOL:
            converged = True
            break
    r = _pearson(e, c * b**alpha)
    return PowerFit(
        c=float(c),
        alpha=float(alpha),
        r=r,
        iterations=iterations,
        converged=converged,
        excluded=excluded,
    )


def _constant_runs(edges: np.ndarray) -> list[tuple[int, int]]:
    """Maximal index runs [start, end] over which the edge count is constant."""
    runs = []
    start = 0
    for k in range(1, edges.size):
        if edges[k] != edges[start]:
            runs.append((start, k - 1))
            start = k
    runs.append((start, edges.size - 1))
    return runs


def staircase(curve: Curve, min_width: float = 0.4) -> StaircaseReport:
    """Plateaus of width >= min_width plus the drop at every run boundary."""
    runs = _constant_runs(curve.edges)
    plateaus = []
    for start, end in runs:
        width = float(curve.betas[end] - curve.betas[start])
        if width >= min_width - _GRID_SNAP:
            plateaus.append(
                (float(curve.betas[start]), float(curve.betas[end]), int(curve.edges[start]))
            )
    drops = [
        int(curve.edges[runs[k][0]] - curve.edges[runs[k + 1][0]])
        for k in range(len(runs) - 1)
    ]
    return StaircaseReport(plateaus=plateaus, drop_sizes=drops)


def _check_same_grid(a: Curve, b: Curve):
    if a.betas.shape != b.betas.shape or not np.all(
        np.abs(a.betas - b.betas) <= _GRID_SNAP
    ):
        raise GridMismatch("curves are sampled on different beta grids")


def _first_sign_change(betas: np.ndarray, diff: np.ndarray) -> float | None:
    signs = np.sign(diff)
    s0 = signs[0]
    flips = np.flatnonzero(signs != s0)
    if flips.size == 0:
        return None
    return float(betas[flips[0]])


def crossover(curve_a: Curve, curve_b: Curve) -> float | None:
    """Smallest grid beta where sign(e_a - e_b) differs from its sign at the
    grid start; None when the curves never cross."""
    _check_same_grid(curve_a, curve_b)
    diff = curve_a.edges.astype(np.int64) - curve_b.edges.astype(np.int64)
    return _first_sign_change(curve_a.betas, diff)


def edge_ratio(curve_a: Curve, curve_b: Curve, at_beta: float) -> float:
    """e_a(at_beta) / e_b(at_beta); +inf when the denominator is zero."""
    ia = curve_a.index_of(at_beta)
    ib = curve_b.index_of(at_beta)
    num = float(curve_a.edges[ia])
    den = float(curve_b.edges[ib])
    if den == 0.0:
        return math.inf
    return num / den


def _child_seed(seed: int, key: int) -> int:
    return int(np.random.SeedSequence([seed, key]).generate_state(1)[0])


def coefficient_scan(
    n_values,
    beta_min: float = 1.0,
    beta_max: float = 50.0,
    step: float = 0.1,
    seed: int = 0,
    rule: str = CLOSED,
) -> list[ScanRow]:
    """Generate random-disc sets, compute curves, fit: one row per n."""
    rows = []
    for n in n_values:
        ps = gen_random_disc(int(n), seed=_child_seed(seed, int(n)))
        cv = curve(ps, beta_min, beta_max, step, rule)
        fit = fit_power(cv)
        rows.append(ScanRow(n=int(n), c=fit.c, alpha=fit.alpha, r=fit.r))
    return rows
