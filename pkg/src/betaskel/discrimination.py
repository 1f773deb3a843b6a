"""Random-vs-structured verdicts from edge-disappearance curve shape.

A curve is compared against an ensemble of matched-n random baselines:
random sets start with more edges and shed them faster, so a structured set
shows a depressed start, a crossover, and a surplus of surviving edges by
beta = 10.  The thresholds that turn those trends into a verdict are
engineering choices, exposed as parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analysis import Curve, _first_sign_change, curve as compute_curve, fit_power
from .errors import DomainError, InsufficientBaseline
from .generators import gen_random_disc
from .geometry import CLOSED

RANDOM = "random"
STRUCTURED = "structured"
INCONCLUSIVE = "inconclusive"

_COVERAGE_BETA = 10.0
_MAX_STEP = 0.1 + 1e-9


@dataclass(frozen=True)
class CurveFeatures:
    """Shape features of one curve relative to its random baseline ensemble."""

    alpha: float
    c: float
    r: float
    ratio_at_10: float
    crossover_beta: float | None
    n: int
    baseline_alpha_mean: float
    baseline_alpha_std: float


@dataclass(frozen=True)
class Thresholds:
    """Decision thresholds for classify()."""

    structured_ratio: float = 1.5
    random_ratio: float = 1.15
    alpha_margin_sigmas: float = 2.0


@dataclass(frozen=True)
class Verdict:
    classification: str
    evidence: list[tuple[str, float, float, bool]]


def _check_coverage(cv: Curve):
    if cv.betas[0] > 1.0 + 1e-9 or cv.betas[-1] < _COVERAGE_BETA - 1e-9:
        raise DomainError(
            "classification needs beta coverage of [1, 10]; curve covers "
            f"[{cv.betas[0]:g}, {cv.betas[-1]:g}]"
        )
    if cv.betas.size > 1 and float(np.diff(cv.betas).max()) > _MAX_STEP:
        raise DomainError("classification needs a beta grid step of <= 0.1")


def extract_features(cv: Curve, baseline_seeds, rule: str = CLOSED) -> CurveFeatures:
    """Fit the curve and compare it against matched-n random baselines.

    The baseline ensemble (>= 5 seeds) is generated at the curve's n on the
    same beta grid; the reported ratio and crossover are taken against the
    ensemble mean curve.
    """
    _check_coverage(cv)
    seeds = list(baseline_seeds)
    if len(seeds) < 5:
        raise InsufficientBaseline(f"need >= 5 baseline seeds, got {len(seeds)}")
    if cv.n < 2:
        raise DomainError("curve must record the point count n of its set")
    base_edges = []
    base_alphas = []
    for seed in seeds:
        ps = gen_random_disc(cv.n, seed=seed)
        bc = compute_curve(
            ps,
            beta_min=float(cv.betas[0]),
            beta_max=float(cv.betas[-1]),
            step=float(cv.betas[1] - cv.betas[0]),
            rule=rule,
        )
        base_edges.append(bc.edges.astype(float))
        base_alphas.append(fit_power(bc).alpha)
    mean_edges = np.mean(base_edges, axis=0)
    fit = fit_power(cv)
    i10 = cv.index_of(_COVERAGE_BETA)
    denom = float(mean_edges[i10])
    ratio = math.inf if denom == 0.0 else float(cv.edges[i10]) / denom
    cross = _first_sign_change(cv.betas, cv.edges.astype(float) - mean_edges)
    return CurveFeatures(
        alpha=fit.alpha,
        c=fit.c,
        r=fit.r,
        ratio_at_10=ratio,
        crossover_beta=cross,
        n=cv.n,
        baseline_alpha_mean=float(np.mean(base_alphas)),
        baseline_alpha_std=float(np.std(base_alphas)),
    )


def classify(features: CurveFeatures, thresholds: Thresholds = Thresholds()) -> Verdict:
    """Deterministic verdict from the extracted features.

    Structured: surplus of edges at beta=10 and a decay exponent clearly
    above (less negative than) the baseline mean.  Random: no such surplus
    and an exponent within the baseline spread.  Anything else, including
    disagreeing criteria, is inconclusive.
    """
    margin = thresholds.alpha_margin_sigmas * features.baseline_alpha_std
    alpha_hi = features.baseline_alpha_mean + margin
    evidence = [
        (
            "ratio_at_10 >= structured_ratio",
            features.ratio_at_10,
            thresholds.structured_ratio,
            features.ratio_at_10 >= thresholds.structured_ratio,
        ),
        (
            "alpha > baseline_mean + margin",
            features.alpha,
            alpha_hi,
            features.alpha > alpha_hi,
        ),
        (
            "ratio_at_10 <= random_ratio",
            features.ratio_at_10,
            thresholds.random_ratio,
            features.ratio_at_10 <= thresholds.random_ratio,
        ),
        (
            "abs(alpha - baseline_mean) <= margin",
            features.alpha,
            margin,
            abs(features.alpha - features.baseline_alpha_mean) <= margin,
        ),
    ]
    if evidence[0][3] and evidence[1][3]:
        label = STRUCTURED
    elif evidence[2][3] and evidence[3][3]:
        label = RANDOM
    else:
        label = INCONCLUSIVE
    return Verdict(classification=label, evidence=evidence)
