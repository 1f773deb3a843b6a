"""Planar predicates for lune and slab neighbourhoods of a point pair.

A lune with parameter beta >= 1 is the intersection of two discs of radius
beta*|p-q|/2 whose centers are the affine combinations (1-beta/2)p + (beta/2)q
and (beta/2)p + (1-beta/2)q.  As beta grows the lune grows monotonically and
tends to the open slab between the two lines through p and q perpendicular to
the segment (p, q).

All predicates are pure and tolerance-aware: distance comparisons use a
relative epsilon scaled by |p-q|, and values falling inside that band are
classified as boundary points, which the active boundary rule then counts as
contained (CLOSED) or not (OPEN).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegeneratePair, DomainError

# Boundary handling for lune membership. Under CLOSED a point on the lune
# boundary counts as contained (it blocks an edge); under OPEN it does not.
CLOSED = "closed"
OPEN = "open"
RULES = (CLOSED, OPEN)

# Relative tolerance for membership comparisons, scaled by |p - q|. Well below
# geometric feature size for coordinates up to a few hundred units.
EPS_REL = 1e-9

Point = tuple[float, float]


def _as_point(p) -> Point:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError(f"point coordinates must be finite, got {p!r}")
    return (x, y)


def _check_rule(rule: str) -> str:
    if rule not in RULES:
        raise DomainError(f"boundary rule must be one of {RULES}, got {rule!r}")
    return rule


@dataclass(frozen=True)
class Lune:
    """Blocking neighbourhood of a point pair: intersection of two equal discs."""

    center1: Point
    center2: Point
    radius: float
    beta: float

    @property
    def span(self) -> float:
        """Separation |p - q| of the generating pair."""
        return 2.0 * self.radius / self.beta


@dataclass(frozen=True)
class Slab:
    """Open region strictly between the two lines through ``a`` and ``b``
    perpendicular to the segment (a, b); the large-beta limit of the lune."""

    a: Point
    b: Point

    def __post_init__(self):
        object.__setattr__(self, "a", _as_point(self.a))
        object.__setattr__(self, "b", _as_point(self.b))
        if self.a == self.b:
            raise DegeneratePair(f"slab endpoints coincide at {self.a}")


def make_lune(p, q, beta: float) -> Lune:
    """Build the lune of the pair (p, q) at the given beta.

    Raises DegeneratePair if p equals q and DomainError if beta < 1.
    """
    p = _as_point(p)
    q = _as_point(q)
    if p == q:
        raise DegeneratePair(f"lune endpoints coincide at {p}")
    beta = float(beta)
    if not math.isfinite(beta) or beta < 1.0:
        raise DomainError(f"beta must be >= 1, got {beta}")
    h = beta / 2.0
    c1 = (p[0] + h * (q[0] - p[0]), p[1] + h * (q[1] - p[1]))
    c2 = (q[0] + h * (p[0] - q[0]), q[1] + h * (p[1] - q[1]))
    radius = h * math.hypot(q[0] - p[0], q[1] - p[1])
    return Lune(center1=c1, center2=c2, radius=radius, beta=beta)


def lune_contains(lune: Lune, r, rule: str = CLOSED) -> bool:
    """True iff ``r`` lies in both discs of the lune under the boundary rule."""
    _check_rule(rule)
    rx, ry = float(r[0]), float(r[1])
    eps = EPS_REL * lune.span
    d1 = math.hypot(rx - lune.center1[0], ry - lune.center1[1])
    d2 = math.hypot(rx - lune.center2[0], ry - lune.center2[1])
    if rule == CLOSED:
        lim = lune.radius + eps
        return d1 <= lim and d2 <= lim
    lim = lune.radius - eps
    return d1 < lim and d2 < lim


def slab_contains(slab: Slab, r) -> bool:
    """True iff ``r`` lies strictly inside the open slab of (a, b).

    Strictness follows the same relative tolerance discipline as the lune
    predicate: the projection of r onto the segment direction, normalised to
    [0, 1], must clear both ends by EPS_REL.
    """
    rx, ry = float(r[0]), float(r[1])
    ax, ay = slab.a
    bx, by = slab.b
    vx, vy = bx - ax, by - ay
    d2 = vx * vx + vy * vy
    t = (rx - ax) * vx + (ry - ay) * vy
    return t > EPS_REL * d2 and t < d2 - EPS_REL * d2
