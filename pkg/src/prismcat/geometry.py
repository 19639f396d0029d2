"""Planar realization of admissible prism labelings.

A one-cusped prism in upper half-space is bounded by five geodesic planes:
three vertical planes over lines (the red, green and blue faces, which meet at
the ideal vertex) and two hemispheres over circles (the back face, normalized
to the unit circle, and the top face).  Since two planes meet at the same
angle as their traces in the boundary plane, realizing a labeling reduces to
placing three lines and two circles so that all nine prescribed intersection
angles come out right.  This module builds the lines in closed form, solves
for the top circle, and measures angles between arbitrary line/circle pairs as
an independent verification oracle.

Conventions: the red line is x = 0 when a3 = 2 and x = -1/2 when a3 = 3; the
prism sits in x >= 0, below the green line and above the blue line.  Each line
carries the unit normal pointing to its prism side, so the dihedral angle
against a circle is measured with the sign of that normal.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .labelings import Labeling, is_admissible

logger = logging.getLogger(__name__)

# A freshly solved configuration must satisfy its defining constraints to this
# residual; angle verification of all nine edges gets a slightly looser gate.
CONSTRUCTION_TOL = 1e-10
ANGLE_TOL = 1e-9

# Faces meeting along each edge a1..a9, index-aligned with Labeling.  The pair
# (red, top) is absent: those are the only two faces without a common edge,
# and a valid realization keeps them strictly disjoint.
EDGE_FACES: tuple[tuple[str, str], ...] = (
    ("red", "green"),
    ("red", "blue"),
    ("red", "back"),
    ("green", "back"),
    ("green", "blue"),
    ("blue", "back"),
    ("green", "top"),
    ("blue", "top"),
    ("back", "top"),
)


class RealizationError(RuntimeError):
    """No valid top circle exists: degenerate or unrealizable input."""


@dataclass(frozen=True)
class PlanarLine:
    """A line in normal form n . p = d with unit normal (nx, ny).

    The normal points toward the prism side of the line, which fixes the sign
    convention for dihedral-angle measurement.  Vertical lines are exact
    (ny == 0), never large-slope approximations.
    """

    nx: float
    ny: float
    d: float

    def __post_init__(self) -> None:
        norm = math.hypot(self.nx, self.ny)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"line normal must have unit length, got {norm!r}")

    @classmethod
    def vertical(cls, x: float, prism_right: bool = True) -> "PlanarLine":
        """The line x = const, with the prism on the given side."""
        sign = 1.0 if prism_right else -1.0
        return cls(sign, 0.0, sign * x)

    @classmethod
    def from_slope_intercept(
        cls, slope: float, intercept: float, prism_above: bool
    ) -> "PlanarLine":
        """The line y = slope*x + intercept, with the prism above or below."""
        scale = 1.0 / math.hypot(slope, 1.0)
        sign = 1.0 if prism_above else -1.0
        return cls(-sign * slope * scale, sign * scale, sign * intercept * scale)

    @property
    def is_vertical(self) -> bool:
        return self.ny == 0.0

    def slope_intercept(self) -> tuple[float, float]:
        """(slope, intercept) form; raises for vertical lines."""
        if self.is_vertical:
            raise ValueError("a vertical line has no slope-intercept form")
        return (-self.nx / self.ny, self.d / self.ny)

    def signed_distance(self, x: float, y: float) -> float:
        """Distance from (x, y) to the line, positive on the prism side."""
        return self.nx * x + self.ny * y - self.d


@dataclass(frozen=True)
class PlanarCircle:
    """A circle with center (cx, cy) and radius r > 0."""

    cx: float
    cy: float
    r: float

    def __post_init__(self) -> None:
        if not self.r > 0:
            raise ValueError(f"circle radius must be positive, got {self.r!r}")


UNIT_CIRCLE = PlanarCircle(0.0, 0.0, 1.0)

PlanarObject = Union[PlanarLine, PlanarCircle]


@dataclass(frozen=True)
class PlanarConfig:
    """Three lines and two circles realizing a labeling.

    ``back`` is always the unit circle; ``a3_branch`` records which red-line
    convention applies (x = 0 for a3 = 2, x = -1/2 for a3 = 3).
    """

    red: PlanarLine
    green: PlanarLine
    blue: PlanarLine
    back: PlanarCircle
    top: PlanarCircle
    a3_branch: int

    def face(self, name: str) -> PlanarObject:
        return getattr(self, name)


def build_lines(labeling: Sequence[int]) -> tuple[PlanarLine, PlanarLine, PlanarLine]:
    """The red, green and blue lines of a labeling, in closed form.

    With theta1 = pi/a1 and theta2 = pi/a2, the green line is
    y = -cot(theta1) x + cos(pi/a4)/sin(theta1) and the blue line is
    y = cot(theta2) x - cos(pi/a6)/sin(theta2); both are independent of the
    red-line branch.  The red line is x = 0 (a3 = 2, orthogonal to the unit
    circle) or x = -1/2 (a3 = 3, meeting it at pi/3).
    """
    lab = Labeling(*labeling)
    if lab.a3 == 2:
        red = PlanarLine.vertical(0.0)
    elif lab.a3 == 3:
        red = PlanarLine.vertical(-0.5)
    else:
        raise ValueError(f"a3 must be 2 or 3, got {lab.a3}")
    theta1 = math.pi / lab.a1
    theta2 = math.pi / lab.a2
    y1 = math.cos(math.pi / lab.a4) / math.sin(theta1)
    y2 = -math.cos(math.pi / lab.a6) / math.sin(theta2)
    green = PlanarLine.from_slope_intercept(
        -math.cos(theta1) / math.sin(theta1), y1, prism_above=False
    )
    blue = PlanarLine.from_slope_intercept(
        math.cos(theta2) / math.sin(theta2), y2, prism_above=True
    )
    return red, green, blue


def line_circle_offset(r: float, theta: float) -> float:
    """Closest approach r*cos(theta) of a line meeting a radius-r circle at theta."""
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r!r}")
    if not 0 < theta <= math.pi / 2:
        raise ValueError(f"angle must lie in (0, pi/2], got {theta!r}")
    return r * math.cos(theta)


@dataclass(frozen=True)
class LinearConstraint:
    """A linear equation cx*x0 + cy*y0 + cr*r = rhs on a circle (x0, y0, r)."""

    cx: float
    cy: float
    cr: float
    rhs: float

    def residual(self, x0: float, y0: float, r: float) -> float:
        return self.cx * x0 + self.cy * y0 + self.cr * r - self.rhs


@dataclass(frozen=True)
class CocircleConstraint:
    """The unit-circle intersection equation x0^2 + y0^2 = 1 + r^2 + 2*cos_phi*r."""

    cos_phi: float

    def residual(self, x0: float, y0: float, r: float) -> float:
        return x0 * x0 + y0 * y0 - (1.0 + r * r + 2.0 * self.cos_phi * r)


def tangency_constraint(line: PlanarLine, phi: float) -> LinearConstraint:
    """Linear condition for a circle on the line's prism side to meet it at phi.

    The center must sit at distance r*cos(phi) from the line, on the prism
    side of its normal: n . (x0, y0) - r*cos(phi) = d.  This covers sloped and
    vertical lines uniformly; for the red line x = c it reads
    x0 - r*cos(phi) = c.
    """
    if not 0 < phi <= math.pi / 2:
        raise ValueError(f"angle must lie in (0, pi/2], got {phi!r}")
    return LinearConstraint(line.nx, line.ny, -math.cos(phi), line.d)


def cocircle_constraint(phi: float) -> CocircleConstraint:
    """Condition for a circle (x0, y0, r) to meet the unit circle at angle phi."""
    if not 0 < phi <= math.pi / 2:
        raise ValueError(f"angle must lie in (0, pi/2], got {phi!r}")
    return CocircleConstraint(math.cos(phi))


def _solve_quadratic(a: float, b: float, c: float) -> list[float]:
    """Real roots of a*x^2 + b*x + c = 0, computed with the stable split.

    The larger-magnitude root comes from u = -b - sign(b)*sqrt(disc), the
    other from c / (a * root), avoiding cancellation when b dominates.
    """
    if abs(a) < 1e-300:
        return [-c / b] if b != 0 else []
    disc = b * b - 4.0 * a * c
    if disc < 0:
        return []
    sq = math.sqrt(disc)
    u = -b - math.copysign(sq, b) if b != 0 else sq
    if u == 0:
        return [0.0]
    r1 = u / (2.0 * a)
    r2 = (2.0 * c) / u
    return [r1] if r1 == r2 else [r1, r2]


def measure_angle(obj1: PlanarObject, obj2: PlanarObject) -> Optional[float]:
    """Intersection angle of two lines/circles, or None when they are disjoint.

    Line/line uses the normals; line/circle and circle/circle measure the
    dihedral angle on the prism side -- the side a line's normal records, and
    the mutual exterior for two circles -- so a line through the far side of a
    circle, or a deeply overlapping circle pair, reads as an obtuse angle
    rather than its supplement.  Symmetric in its arguments, and independent
    of which intersection point is considered.
    """
    if isinstance(obj1, PlanarCircle) and isinstance(obj2, PlanarLine):
        obj1, obj2 = obj2, obj1
    if isinstance(obj1, PlanarLine) and isinstance(obj2, PlanarLine):
        dot = abs(obj1.nx * obj2.nx + obj1.ny * obj2.ny)
        return math.acos(min(dot, 1.0))
    if isinstance(obj1, PlanarLine) and isinstance(obj2, PlanarCircle):
        offset = obj1.signed_distance(obj2.cx, obj2.cy)
        if abs(offset) > obj2.r:
            return None
        return math.acos(max(-1.0, min(1.0, offset / obj2.r)))
    assert isinstance(obj1, PlanarCircle) and isinstance(obj2, PlanarCircle)
    d2 = (obj1.cx - obj2.cx) ** 2 + (obj1.cy - obj2.cy) ** 2
    cos_phi = (d2 - obj1.r**2 - obj2.r**2) / (2.0 * obj1.r * obj2.r)
    if abs(cos_phi) > 1.0:
        return None
    return math.acos(cos_phi)


@dataclass(frozen=True)
class EdgeCheck:
    """Measured dihedral angle along one edge versus its prescribed value."""

    edge: int  # zero-based index into the labeling
    name: str  # "a1".."a9"
    faces: tuple[str, str]
    expected: float
    measured: Optional[float]  # None when the two faces are disjoint

    @property
    def residual(self) -> float:
        if self.measured is None:
            return math.inf
        return abs(self.measured - self.expected)


@dataclass(frozen=True)
class ConfigReport:
    """Verification report for all nine edges of a configuration."""

    checks: tuple[EdgeCheck, ...]

    @property
    def max_residual(self) -> float:
        return max(check.residual for check in self.checks)

    @property
    def ok(self) -> bool:
        return self.max_residual <= ANGLE_TOL

    def failures(self) -> list[EdgeCheck]:
        return [c for c in self.checks if c.residual > ANGLE_TOL]


def verify_config(labeling: Sequence[int], config: PlanarConfig) -> ConfigReport:
    """Measure all nine edge angles of a configuration against pi/a_i.

    Uses the edge-to-face-pair table and the measurement oracle only -- none
    of the construction equations -- so it independently cross-checks
    realize().  A disjoint face pair is reported as an infinite residual on
    the named edge.
    """
    lab = Labeling(*labeling)
    checks = []
    for edge, (face1, face2) in enumerate(EDGE_FACES):
        measured = measure_angle(config.face(face1), config.face(face2))
        checks.append(
            EdgeCheck(
                edge=edge,
                name=f"a{edge + 1}",
                faces=(face1, face2),
                expected=math.pi / lab[edge],
                measured=measured,
            )
        )
    return ConfigReport(tuple(checks))


def realize(labeling: Sequence[int]) -> PlanarConfig:
    """Realize an admissible labeling as its planar line/circle configuration.

    Builds the three lines, then solves for the top circle: the green and blue
    tangency conditions (angles pi/a7, pi/a8) are linear in (x0, y0, r), so
    the center is an affine function of r; substituting into the unit-circle
    condition (angle pi/a9) leaves one quadratic in r.  Each positive root is
    accepted only if every edge angle verifies and the red line stays strictly
    clear of the top circle (red and top share no edge; tangency would mean a
    second ideal vertex).  Exactly one root survives in practice; if both ever
    did, the smaller circle is kept and a warning logged.

    Raises ValueError for an inadmissible labeling and RealizationError when
    no surviving root exists.
    """
    adm = is_admissible(labeling)
    if not adm:
        raise ValueError(adm.reason)
    lab = Labeling(*labeling)
    red, green, blue = build_lines(lab)

    green_tan = tangency_constraint(green, math.pi / lab.a7)
    blue_tan = tangency_constraint(blue, math.pi / lab.a8)
    cocircle = cocircle_constraint(math.pi / lab.a9)

    # Solve the two tangency conditions for the center as (x0, y0) = p + q*r.
    det = green_tan.cx * blue_tan.cy - green_tan.cy * blue_tan.cx
    if abs(det) < 1e-14:
        raise RealizationError("green and blue tangency conditions are parallel")
    px = (green_tan.rhs * blue_tan.cy - blue_tan.rhs * green_tan.cy) / det
    py = (green_tan.cx * blue_tan.rhs - blue_tan.cx * green_tan.rhs) / det
    qx = (-green_tan.cr * blue_tan.cy + blue_tan.cr * green_tan.cy) / det
    qy = (-green_tan.cx * blue_tan.cr + blue_tan.cx * green_tan.cr) / det

    # |p + q*r|^2 = 1 + r^2 + 2*cos_phi*r, as a quadratic in r.
    a = qx * qx + qy * qy - 1.0
    b = 2.0 * (px * qx + py * qy) - 2.0 * cocircle.cos_phi
    c = px * px + py * py - 1.0

    survivors: list[PlanarConfig] = []
    for r in _solve_quadratic(a, b, c):
        if not r > 0:
            continue
        x0 = px + qx * r
        y0 = py + qy * r
        residual = max(
            abs(green_tan.residual(x0, y0, r)),
            abs(blue_tan.residual(x0, y0, r)),
            abs(cocircle.residual(x0, y0, r)),
        )
        if residual > CONSTRUCTION_TOL:
            continue
        config = PlanarConfig(
            red=red,
            green=green,
            blue=blue,
            back=UNIT_CIRCLE,
            top=PlanarCircle(x0, y0, r),
            a3_branch=lab.a3,
        )
        if not verify_config(lab, config).ok:
            continue
        # Red and top must be strictly disjoint; tangency (within the
        # construction tolerance) is a degenerate second cusp.
        clearance = red.signed_distance(x0, y0) - r
        if clearance <= CONSTRUCTION_TOL:
            continue
        survivors.append(config)

    if not survivors:
        raise RealizationError(
            f"no valid top circle for {tuple(lab)}: the labeling is degenerate "
            "or not realizable with one cusp"
        )
    if len(survivors) > 1:
        logger.warning(
            "both quadratic roots verify for %s; keeping the smaller circle",
            tuple(lab),
        )
        survivors.sort(key=lambda cfg: cfg.top.r)
    return survivors[0]
