"""Construction of beta-skeletons over planar point sets.

Two independent routes are provided.  ``build_oracle`` is the exhaustive
reference: every pair is tested against every other point with the banded
lune predicate evaluated directly at the requested beta.  ``build_fast``
restricts candidates (Delaunay edges under the closed rule) and decides each
candidate through its analytic blocking threshold from ``kernels``.  The two
must produce identical edge sets; the test suite enforces this.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import Delaunay, QhullError

from . import kernels
from .errors import DomainError, DuplicatePoints, EmptyGrid
from .geometry import CLOSED, EPS_REL, OPEN, _check_rule

Edge = tuple[int, int]

# Cap on elements of the (pairs x points) scratch arrays in the oracle.
_ORACLE_CHUNK_BUDGET = 2_000_000


@dataclass(frozen=True)
class PointSet:
    """Ordered collection of distinct planar points with stable indices."""

    points: np.ndarray
    label: str = ""
    seed: int | None = None

    def __post_init__(self):
        pts = np.ascontiguousarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise DomainError(f"points must be an (n, 2) array, got shape {pts.shape}")
        if not np.isfinite(pts).all():
            raise DomainError("point coordinates must be finite")
        _, inverse, counts = np.unique(
            pts, axis=0, return_inverse=True, return_counts=True
        )
        if (counts > 1).any():
            dup_groups = np.flatnonzero(counts > 1)
            offenders = np.flatnonzero(np.isin(inverse.ravel(), dup_groups))
            raise DuplicatePoints(
                f"point set contains coincident points at indices {offenders.tolist()}",
                indices=offenders.tolist(),
            )
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class Skeleton:
    """Edge set of the beta-skeleton at a single beta value."""

    beta: float
    edges: frozenset[Edge] = field(default_factory=frozenset)


def _check_build_args(ps: PointSet, beta: float, rule: str) -> float:
    _check_rule(rule)
    if len(ps) < 2:
        raise DomainError("need at least 2 points to build a skeleton")
    beta = float(beta)
    if not np.isfinite(beta) or beta < 1.0:
        raise DomainError(f"beta must be >= 1, got {beta}")
    return beta


def _all_pairs(n: int) -> np.ndarray:
    iu = np.triu_indices(n, k=1)
    return np.column_stack(iu).astype(np.int64)


def delaunay_edges(ps: PointSet) -> np.ndarray:
    """Unique Delaunay edges of the set, falling back to all pairs when the
    triangulation is unavailable (degenerate input) or dropped points."""
    n = len(ps)
    if n < 4:
        return _all_pairs(n)
    try:
        tri = Delaunay(ps.points)
    except QhullError:
        return _all_pairs(n)
    if tri.coplanar.size > 0:
        # Points omitted from the triangulation would leave candidate gaps.
        return _all_pairs(n)
    simplices = tri.simplices
    edges = np.concatenate(
        [simplices[:, [0, 1]], simplices[:, [1, 2]], simplices[:, [0, 2]]]
    )
    edges = np.sort(edges, axis=1)
    return np.unique(edges, axis=0).astype(np.int64)


def candidate_pairs(ps: PointSet, rule: str = CLOSED) -> np.ndarray:
    """Superset of possible skeleton edges for any beta >= 1.

    Closed rule: a closed-rule edge at beta=1 has a strictly empty closed
    diameter disc, so it belongs to every Delaunay triangulation; Delaunay
    edges are therefore a valid candidate filter.  Open rule: cocircular
    degeneracies admit open-rule edge sets no triangulation contains (both
    diagonals of a square at beta=1), so all pairs are used.
    """
    if rule == OPEN:
        return _all_pairs(len(ps))
    return delaunay_edges(ps)


def blocking_thresholds(ps: PointSet, rule: str = CLOSED):
    """Candidate pairs and the beta at which each becomes blocked."""
    pairs = candidate_pairs(ps, rule)
    death = kernels.pair_death_betas(ps.points, pairs, EPS_REL, rule == CLOSED)
    return pairs, death


def _alive_mask(death: np.ndarray, beta: float, rule: str) -> np.ndarray:
    if rule == CLOSED:
        return death > beta
    return death >= beta


def _edges_from_pairs(pairs: np.ndarray) -> frozenset[Edge]:
    return frozenset((int(i), int(j)) for i, j in pairs)


def build_fast(ps: PointSet, beta: float, rule: str = CLOSED) -> Skeleton:
    """Accelerated construction; contract: identical output to build_oracle."""
    beta = _check_build_args(ps, beta, rule)
    pairs, death = blocking_thresholds(ps, rule)
    alive = _alive_mask(death, beta, rule)
    return Skeleton(beta=beta, edges=_edges_from_pairs(pairs[alive]))


def sweep(ps: PointSet, betas, rule: str = CLOSED) -> list[Skeleton]:
    """Skeletons over an ascending beta grid, one per grid value.

    Exploits monotonicity: each pair has a single blocking threshold, so the
    whole sweep reduces to thresholding.  Every entry equals build_fast at
    that beta.
    """
    _check_rule(rule)
    grid = np.asarray(betas, dtype=np.float64)
    if grid.ndim != 1 or grid.size == 0:
        raise EmptyGrid("beta grid is empty")
    if grid[0] < 1.0:
        raise DomainError(f"beta grid must start at >= 1, got {grid[0]}")
    if grid.size > 1 and not (np.diff(grid) > 0).all():
        raise DomainError("beta grid must be strictly ascending")
    if len(ps) < 2:
        raise DomainError("need at least 2 points to build a skeleton")
    pairs, death = blocking_thresholds(ps, rule)
    out = []
    for beta in grid:
        alive = _alive_mask(death, beta, rule)
        out.append(Skeleton(beta=float(beta), edges=_edges_from_pairs(pairs[alive])))
    return out


def _oracle_blocked(pts: np.ndarray, pairs: np.ndarray, beta: float, rule: str):
    """Direct per-beta emptiness test of all pairs against all points."""
    n = pts.shape[0]
    m = pairs.shape[0]
    blocked = np.zeros(m, dtype=bool)
    h = beta / 2.0
    chunk = max(1, _ORACLE_CHUNK_BUDGET // max(n, 1))
    for lo in range(0, m, chunk):
        hi = min(lo + chunk, m)
        idx_i = pairs[lo:hi, 0]
        idx_j = pairs[lo:hi, 1]
        P = pts[idx_i]
        Q = pts[idx_j]
        C1 = P + h * (Q - P)
        C2 = Q + h * (P - Q)
        d = np.sqrt(((Q - P) ** 2).sum(axis=1))
        radius = h * d
        eps = EPS_REL * d
        if rule == CLOSED:
            lim2 = (radius + eps) ** 2
        else:
            lim2 = (radius - eps) ** 2
        D1 = ((pts[None, :, :] - C1[:, None, :]) ** 2).sum(axis=2)
        D2 = ((pts[None, :, :] - C2[:, None, :]) ** 2).sum(axis=2)
        if rule == CLOSED:
            inside = (D1 <= lim2[:, None]) & (D2 <= lim2[:, None])
        else:
            inside = (D1 < lim2[:, None]) & (D2 < lim2[:, None])
        k = hi - lo
        inside[np.arange(k), idx_i] = False
        inside[np.arange(k), idx_j] = False
        blocked[lo:hi] = inside.any(axis=1)
    return blocked


def build_oracle(ps: PointSet, beta: float, rule: str = CLOSED) -> Skeleton:
    """Exhaustive O(n^3) reference construction."""
    beta = _check_build_args(ps, beta, rule)
    pairs = _all_pairs(len(ps))
    blocked = _oracle_blocked(ps.points, pairs, beta, rule)
    return Skeleton(beta=beta, edges=_edges_from_pairs(pairs[~blocked]))


def gabriel_graph(ps: PointSet, rule: str = CLOSED) -> frozenset[Edge]:
    """Gabriel graph by direct diameter-disc tests (independent of the lune
    machinery; used as a cross-check for the beta=1 skeleton)."""
    _check_rule(rule)
    pts = ps.points
    n = len(ps)
    if n < 2:
        raise DomainError("need at least 2 points")
    pairs = _all_pairs(n)
    keep = []
    for i, j in pairs:
        p = pts[i]
        q = pts[j]
        mid = (p + q) / 2.0
        d = float(np.hypot(q[0] - p[0], q[1] - p[1]))
        eps = EPS_REL * d
        dist = np.sqrt(((pts - mid) ** 2).sum(axis=1))
        dist[i] = np.inf
        dist[j] = np.inf
        if rule == CLOSED:
            blocked = bool((dist <= d / 2.0 + eps).any())
        else:
            blocked = bool((dist < d / 2.0 - eps).any())
        if not blocked:
            keep.append((int(i), int(j)))
    return frozenset(keep)


def rng_graph(ps: PointSet, rule: str = CLOSED) -> frozenset[Edge]:
    """Relative neighbourhood graph by direct max-distance tests (independent
    cross-check for the beta=2 skeleton)."""
    _check_rule(rule)
    pts = ps.points
    n = len(ps)
    if n < 2:
        raise DomainError("need at least 2 points")
    pairs = _all_pairs(n)
    keep = []
    for i, j in pairs:
        p = pts[i]
        q = pts[j]
        d = float(np.hypot(q[0] - p[0], q[1] - p[1]))
        eps = EPS_REL * d
        dp = np.sqrt(((pts - p) ** 2).sum(axis=1))
        dq = np.sqrt(((pts - q) ** 2).sum(axis=1))
        far = np.maximum(dp, dq)
        far[i] = np.inf
        far[j] = np.inf
        if rule == CLOSED:
            blocked = bool((far <= d + eps).any())
        else:
            blocked = bool((far < d - eps).any())
        if not blocked:
            keep.append((int(i), int(j)))
    return frozenset(keep)
