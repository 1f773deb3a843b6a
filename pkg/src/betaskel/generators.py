"""Deterministic point-set generators for every family used in the studies.

Each generator is a pure function of its parameters and seed: the same call
yields a bit-identical PointSet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, DuplicatePoints, PackingFailure
from .skeleton import PointSet

# Rejection-sampling failure cap: consecutive rejected candidates.
_MAX_CONSECUTIVE_REJECTIONS = 1_000_000
_REJECTION_BATCH = 4096

FAMILIES = (
    "random_disc",
    "rect_lattice",
    "hex_lattice",
    "defect_lattice",
    "spiral_web",
    "nested_circles",
)


def gen_random_disc(
    n: int,
    big_radius: float = 250.0,
    point_radius: float = 2.5,
    seed: int | None = None,
) -> PointSet:
    """Centers of n equal discs placed uniformly inside a larger disc.

    Discs may not overlap: pairwise center distance is at least
    2*point_radius.  Placement is rejection sampling with a cap of
    one million consecutive rejections.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if big_radius <= 0 or point_radius < 0:
        raise DomainError("big_radius must be > 0 and point_radius >= 0")
    rng = np.random.default_rng(seed)
    min_d2 = (2.0 * point_radius) ** 2
    accepted = np.empty((n, 2), dtype=np.float64)
    count = 0
    consecutive = 0
    while count < n:
        # Area-correct uniform sampling in the disc via radial inversion.
        u = rng.random(_REJECTION_BATCH)
        theta = rng.random(_REJECTION_BATCH) * (2.0 * math.pi)
        radius = big_radius * np.sqrt(u)
        cand = np.column_stack((radius * np.cos(theta), radius * np.sin(theta)))
        for c in cand:
            if count > 0:
                d2 = ((accepted[:count] - c) ** 2).sum(axis=1)
                if d2.min() < min_d2:
                    consecutive += 1
                    if consecutive >= _MAX_CONSECUTIVE_REJECTIONS:
                        raise PackingFailure(
                            f"placed {count}/{n} points after "
                            f"{consecutive} consecutive rejections"
                        )
                    continue
            accepted[count] = c
            count += 1
            consecutive = 0
            if count == n:
                break
    return PointSet(accepted, label=f"random_disc n={n}", seed=seed)


def gen_rect_lattice(rows: int, cols: int, spacing: float) -> PointSet:
    """Rectangular grid, row-major indexing: index = row*cols + col."""
    if rows < 2 or cols < 2:
        raise DomainError(f"need rows, cols >= 2, got {rows}x{cols}")
    if spacing <= 0:
        raise DomainError(f"spacing must be > 0, got {spacing}")
    r, c = np.meshgrid(np.arange(rows), np.arange(cols), indexing="ij")
    pts = np.column_stack((c.ravel() * spacing, r.ravel() * spacing)).astype(float)
    return PointSet(pts, label=f"rect_lattice {rows}x{cols}")


def gen_hex_lattice(rows: int, cols: int, spacing: float) -> PointSet:
    """Triangular packing: odd rows offset by spacing/2, row height
    spacing*sqrt(3)/2, so every nearest-neighbour distance equals spacing."""
    if rows < 2 or cols < 2:
        raise DomainError(f"need rows, cols >= 2, got {rows}x{cols}")
    if spacing <= 0:
        raise DomainError(f"spacing must be > 0, got {spacing}")
    r, c = np.meshgrid(np.arange(rows), np.arange(cols), indexing="ij")
    x = c.ravel() * spacing + (r.ravel() % 2) * (spacing / 2.0)
    y = r.ravel() * (spacing * math.sqrt(3.0) / 2.0)
    return PointSet(np.column_stack((x, y)), label=f"hex_lattice {rows}x{cols}")


def gen_defect_lattice(
    rows: int,
    cols: int,
    spacing: float,
    defect_row: int,
    defect_col: int,
    jitter: float,
    seed: int | None = None,
) -> PointSet:
    """Rectangular lattice with one node displaced off-grid.

    The displacement is drawn uniformly from [-jitter, jitter]^2 with both
    components forced nonzero, so the defective node's x differs from its
    column and its y from its row.
    """
    if not (0 <= defect_row < rows and 0 <= defect_col < cols):
        raise DomainError(
            f"defect ({defect_row}, {defect_col}) outside {rows}x{cols} lattice"
        )
    if not (0 < jitter < spacing / 2.0):
        raise DomainError(f"jitter must satisfy 0 < jitter < spacing/2, got {jitter}")
    base = gen_rect_lattice(rows, cols, spacing)
    pts = np.array(base.points)
    rng = np.random.default_rng(seed)
    while True:
        dx, dy = rng.uniform(-jitter, jitter, size=2)
        if dx != 0.0 and dy != 0.0:
            break
    pts[defect_row * cols + defect_col] += (dx, dy)
    return PointSet(
        pts,
        label=f"defect_lattice {rows}x{cols} defect=({defect_row},{defect_col})",
        seed=seed,
    )


def gen_spiral_web(
    turns: int = 2,
    points_per_turn: int = 40,
    rays: int = 8,
    points_per_ray: int = 5,
    pitch: float = 30.0,
) -> PointSet:
    """Archimedean spiral core with straight radial arms continuing outward.

    The spiral r = pitch*theta/(2*pi) is sampled at uniform angle steps from
    the origin out to ``turns`` full rotations; each of the ``rays`` arms then
    adds ``points_per_ray`` nodes, equally spaced by pitch/2, beyond the
    spiral's outer radius.
    """
    if turns < 1:
        raise DomainError(f"need turns >= 1, got {turns}")
    if rays < 3:
        raise DomainError(f"need rays >= 3, got {rays}")
    if points_per_turn < 3 or points_per_ray < 1:
        raise DomainError("need points_per_turn >= 3 and points_per_ray >= 1")
    if pitch <= 0:
        raise DomainError(f"pitch must be > 0, got {pitch}")
    steps = turns * points_per_turn
    theta = np.arange(steps + 1) * (2.0 * math.pi / points_per_turn)
    radius = pitch * theta / (2.0 * math.pi)
    spiral = np.column_stack((radius * np.cos(theta), radius * np.sin(theta)))
    outer = pitch * turns
    arm_step = pitch / 2.0
    arms = []
    for j in range(rays):
        phi = 2.0 * math.pi * j / rays
        for k in range(1, points_per_ray + 1):
            rr = outer + k * arm_step
            arms.append((rr * math.cos(phi), rr * math.sin(phi)))
    pts = np.vstack((spiral, np.array(arms)))
    return PointSet(pts, label=f"spiral_web turns={turns} rays={rays}")


def gen_nested_circles(
    circles: int = 6,
    per_circle: int = 40,
    radius_step: float = 20.0,
    center: tuple[float, float] = (0.0, 0.0),
    center_jitter: float = 0.0,
    point_jitter: float = 0.0,
    include_center_point: bool = True,
    seed: int | None = None,
) -> PointSet:
    """Concentric circles of equally spaced points, optionally jittered.

    Circle k (k = 1..circles) has radius k*radius_step and per_circle points
    at shared angular offsets.  center_jitter displaces each circle's own
    center uniformly in [-center_jitter, center_jitter]^2; point_jitter does
    the same per point.  With the defaults and an included center point,
    n = 6*40 + 1 = 241.
    """
    if circles < 1:
        raise DomainError(f"need circles >= 1, got {circles}")
    if per_circle < 3:
        raise DomainError(f"need per_circle >= 3, got {per_circle}")
    if radius_step <= 0:
        raise DomainError(f"radius_step must be > 0, got {radius_step}")
    if center_jitter < 0 or point_jitter < 0:
        raise DomainError("jitters must be >= 0")
    cx, cy = float(center[0]), float(center[1])
    angles = np.arange(per_circle) * (2.0 * math.pi / per_circle)
    rng = np.random.default_rng(seed)
    for _ in range(100):
        coords = []
        for k in range(1, circles + 1):
            ox, oy = cx, cy
            if center_jitter > 0:
                dx, dy = rng.uniform(-center_jitter, center_jitter, size=2)
                ox, oy = cx + dx, cy + dy
            ring = np.column_stack(
                (
                    ox + k * radius_step * np.cos(angles),
                    oy + k * radius_step * np.sin(angles),
                )
            )
            if point_jitter > 0:
                ring = ring + rng.uniform(
                    -point_jitter, point_jitter, size=ring.shape
                )
            coords.append(ring)
        pts = np.vstack(coords)
        if include_center_point:
            pts = np.vstack((pts, [[cx, cy]]))
        try:
            return PointSet(
                pts, label=f"nested_circles {circles}x{per_circle}", seed=seed
            )
        except DuplicatePoints:
            continue  # jitter collision; redraw from the running stream
    raise PackingFailure("could not draw a collision-free jittered arrangement")


@dataclass(frozen=True)
class GeneratorSpec:
    """Family name plus family-specific parameters; builds a PointSet."""

    family: str
    parameters: dict = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(
                f"unknown family {self.family!r}; expected one of {FAMILIES}"
            )

    def build(self) -> PointSet:
        kwargs = dict(self.parameters)
        if self.family == "random_disc":
            return gen_random_disc(seed=self.seed, **kwargs)
        if self.family == "rect_lattice":
            return gen_rect_lattice(**kwargs)
        if self.family == "hex_lattice":
            return gen_hex_lattice(**kwargs)
        if self.family == "defect_lattice":
            return gen_defect_lattice(seed=self.seed, **kwargs)
        if self.family == "spiral_web":
            return gen_spiral_web(**kwargs)
        return gen_nested_circles(seed=self.seed, **kwargs)
