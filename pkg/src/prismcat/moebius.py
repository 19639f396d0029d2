"""Matrix generators for the orientation-preserving prism reflection group.

Doubling the prism across a face turns pairs of reflections into orientation-
preserving isometries; four such side pairings M1..M4 generate the whole
orientation-preserving subgroup.  Acting on the boundary plane as Moebius
transformations w -> (a*w + b)/(c*w + d), they are 2x2 complex matrices of
determinant 1, identified with their negatives (elements of PSL2(C)).

M1 pairs the two hemispherical faces created by doubling across the red face
(for a3 = 2 it is w -> -1/w, preserving the unit circle); M2 and M3 are
rotations by 2*pi/a1 and 2*pi/a2 about the points where the green and blue
lines cross the red line; M4 reflects the top circle across the red line.
Each labeling imposes nine relations -- every edge contributes an elliptic
word whose order is the edge label -- and this module verifies them
numerically, together with the trace identity |tr| = 2*cos(pi/n) that a
well-formed elliptic element of order n must satisfy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import PlanarCircle, PlanarConfig, verify_config
from .labelings import Labeling

# Determinant drift allowed on constructed generators, PSL2 distance allowed
# for relation words, and the looser gate for words with large exponents
# (powering an elliptic element loses precision with the exponent).
DET_TOL = 1e-10
RELATION_TOL = 1e-7
RELATION_TOL_LARGE = 1e-6
LARGE_EXPONENT = 100
TRACE_TOL = 1e-8


def relation_tolerance(exponent: int) -> float:
    """PSL2-distance threshold for a relation word of the given order."""
    return RELATION_TOL if exponent <= LARGE_EXPONENT else RELATION_TOL_LARGE


@dataclass(frozen=True)
class MoebiusMatrix:
    """A 2x2 complex matrix acting on the boundary plane, taken up to sign."""

    mat: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.mat, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        object.__setattr__(self, "mat", m)

    @classmethod
    def of(cls, a: complex, b: complex, c: complex, d: complex) -> "MoebiusMatrix":
        return cls(np.array([[a, b], [c, d]], dtype=complex))

    @classmethod
    def identity(cls) -> "MoebiusMatrix":
        return cls(np.eye(2, dtype=complex))

    @property
    def a(self) -> complex:
        return complex(self.mat[0, 0])

    @property
    def b(self) -> complex:
        return complex(self.mat[0, 1])

    @property
    def c(self) -> complex:
        return complex(self.mat[1, 0])

    @property
    def d(self) -> complex:
        return complex(self.mat[1, 1])

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> complex:
        return self.a + self.d

    def __matmul__(self, other: "MoebiusMatrix") -> "MoebiusMatrix":
        return MoebiusMatrix(self.mat @ other.mat)

    def inv(self) -> "MoebiusMatrix":
        det = self.det
        return MoebiusMatrix.of(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def pow(self, n: int) -> "MoebiusMatrix":
        """Matrix power by repeated squaring (n >= 0)."""
        if n < 0:
            raise ValueError("exponent must be non-negative")
        return MoebiusMatrix(np.linalg.matrix_power(self.mat, n))

    def apply(self, w: complex) -> complex:
        """The Moebius action w -> (a*w + b)/(c*w + d) at a finite point."""
        return (self.a * w + self.b) / (self.c * w + self.d)

    def _unit_det(self) -> np.ndarray:
        return self.mat / cmath.sqrt(self.det)

    def distance_to_identity(self) -> float:
        """Frobenius distance to +-I after normalizing the determinant to 1."""
        m = self._unit_det()
        eye = np.eye(2)
        return float(min(np.linalg.norm(m - eye), np.linalg.norm(m + eye)))

    def projectively_equal(self, other: "MoebiusMatrix", tol: float = 1e-9) -> bool:
        """Equality in PSL2: min(|M - N|, |M + N|) <= tol after normalization."""
        m = self._unit_det()
        n = other._unit_det()
        return float(min(np.linalg.norm(m - n), np.linalg.norm(m + n))) <= tol


def rotation_matrix(center: complex, theta: float, ccw: bool = True) -> MoebiusMatrix:
    """Elliptic rotation by 2*theta about a point of the boundary plane.

    Fixes ``center`` and infinity.  With ``ccw`` (the default) the action is
    w -> center + e^{2i theta} (w - center), counter-clockwise in the
    standard orientation of the plane; ``ccw=False`` turns the other way,
    with matrix [[e^{-i theta}, center*(e^{i theta} - e^{-i theta})],
    [0, e^{i theta}]].  Raising either to the n-th power with theta = pi/n
    gives the identity in PSL2.
    """
    if not 0 < theta < math.pi:
        raise ValueError(f"rotation half-angle must lie in (0, pi), got {theta!r}")
    if ccw:
        theta = -theta
    e_plus = cmath.exp(1j * theta)
    e_minus = cmath.exp(-1j * theta)
    return MoebiusMatrix.of(e_minus, center * (e_plus - e_minus), 0.0, e_plus)


@dataclass(frozen=True)
class GeneratorSet:
    """The four side-pairing matrices of a realized labeling.

    ``fixed1`` and ``fixed2`` are the rotation centers of m2 and m3: the
    points where the green and blue lines meet the red line.  ``top`` is the
    circle whose reflection m4 implements.
    """

    labeling: Labeling
    m1: MoebiusMatrix
    m2: MoebiusMatrix
    m3: MoebiusMatrix
    m4: MoebiusMatrix
    theta1: float
    theta2: float
    fixed1: complex
    fixed2: complex
    top: PlanarCircle

    def words(self) -> list[tuple[str, str, MoebiusMatrix, int]]:
        """The nine relation words as (edge, word, base matrix, exponent).

        Each base is elliptic of order equal to its edge label, so
        base**exponent is the identity in PSL2.
        """
        lab = self.labeling
        m1, m2, m3, m4 = self.m1, self.m2, self.m3, self.m4
        m3_inv = m3.inv()
        m4_inv = m4.inv()
        return [
            ("a1", "M2", m2, lab.a1),
            ("a2", "M3", m3, lab.a2),
            ("a3", "M1", m1, lab.a3),
            ("a4", "M2^-1 M1", m2.inv() @ m1, lab.a4),
            ("a5", "M3^-1 M2", m3_inv @ m2, lab.a5),
            ("a6", "M3^-1 M1", m3_inv @ m1, lab.a6),
            ("a7", "M4^-1 M2", m4_inv @ m2, lab.a7),
            ("a8", "M4^-1 M3", m4_inv @ m3, lab.a8),
            ("a9", "M4^-1 M1", m4_inv @ m1, lab.a9),
        ]


def _line_x_intersection(line, x: float) -> complex:
    """The point of a non-vertical line at the given x, as a complex number."""
    slope, intercept = line.slope_intercept()
    return complex(x, slope * x + intercept)


def build_generators(labeling: Sequence[int], config: PlanarConfig) -> GeneratorSet:
    """Construct M1..M4 from a verified configuration.

    Branches on the red line: for a3 = 2 (red at x = 0), M1 = [[0,-1],[1,0]]
    swaps the inside and outside of the unit circle, and the rotation centers
    lie on the imaginary axis.  For a3 = 3 (red at x = -1/2), M1 =
    [[-1,-1],[1,0]] pairs the unit sphere with the unit sphere centered at
    (-1, 0), and the centers are the green/blue intersections with x = -1/2.
    M2 and M3 rotate by 2*pi/a1 and 2*pi/a2 in opposite senses -- M2 turns
    the prism side toward the red line, M3 away from it -- and M4 maps the
    top circle to its mirror image across the red line.
    """
    lab = Labeling(*labeling)
    report = verify_config(lab, config)
    if not report.ok:
        raise ValueError(
            f"configuration does not verify for {tuple(lab)}: "
            f"max angle residual {report.max_residual:.3e}"
        )
    theta1 = math.pi / lab.a1
    theta2 = math.pi / lab.a2
    x, y, r = config.top.cx, config.top.cy, config.top.r

    if config.a3_branch == 2:
        m1 = MoebiusMatrix.of(0.0, -1.0, 1.0, 0.0)
        fixed1 = _line_x_intersection(config.green, 0.0)
        fixed2 = _line_x_intersection(config.blue, 0.0)
        m4 = MoebiusMatrix.of(
            (-x + y * 1j) / r,
            (x * x + y * y) / r - r,
            1.0 / r,
            (-x - y * 1j) / r,
        )
    elif config.a3_branch == 3:
        m1 = MoebiusMatrix.of(-1.0, -1.0, 1.0, 0.0)
        fixed1 = _line_x_intersection(config.green, -0.5)
        fixed2 = _line_x_intersection(config.blue, -0.5)
        w = (-(x + 1.0) + y * 1j) / r
        m4 = MoebiusMatrix.of(w, w * (-x - y * 1j) - r, 1.0 / r, (-x - y * 1j) / r)
    else:
        raise ValueError(f"a3 branch must be 2 or 3, got {config.a3_branch}")

    m2 = rotation_matrix(fixed1, theta1, ccw=False)
    m3 = rotation_matrix(fixed2, theta2, ccw=True)

    gens = GeneratorSet(
        labeling=lab,
        m1=m1,
        m2=m2,
        m3=m3,
        m4=m4,
        theta1=theta1,
        theta2=theta2,
        fixed1=fixed1,
        fixed2=fixed2,
        top=config.top,
    )
    for name, matrix in (("M1", m1), ("M2", m2), ("M3", m3), ("M4", m4)):
        drift = abs(matrix.det - 1.0)
        if drift > DET_TOL:
            raise ValueError(f"{name} determinant drifted by {drift:.3e}")
    return gens


@dataclass(frozen=True)
class RelationCheck:
    """PSL2 distance of one relation word (base^exponent) from the identity."""

    edge: str
    word: str
    exponent: int
    residual: float

    @property
    def ok(self) -> bool:
        return self.residual <= relation_tolerance(self.exponent)


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def max_residual(self) -> float:
        return max(check.residual for check in self.checks)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)


def verify_relations(gens: GeneratorSet) -> RelationReport:
    """Evaluate the nine relation words and their PSL2 distances to identity."""
    checks = []
    for edge, word, base, exponent in gens.words():
        residual = base.pow(exponent).distance_to_identity()
        checks.append(RelationCheck(edge, word, exponent, residual))
    return RelationReport(tuple(checks))


@dataclass(frozen=True)
class TraceCheck:
    """|trace| of a relation word's base against the elliptic value 2*cos(pi/n)."""

    edge: str
    word: str
    exponent: int
    trace_abs: float
    expected: float

    @property
    def residual(self) -> float:
        return abs(self.trace_abs - self.expected)

    @property
    def ok(self) -> bool:
        return self.residual <= TRACE_TOL


@dataclass(frozen=True)
class TraceReport:
    checks: tuple[TraceCheck, ...]

    @property
    def max_residual(self) -> float:
        return max(check.residual for check in self.checks)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)


def trace_check(gens: GeneratorSet) -> TraceReport:
    """Check each relation base is elliptic of the right order via its trace.

    An element of order n conjugate to a rotation by 2*pi/n has
    |trace| = 2*cos(pi/n) (after determinant normalization); this confirms
    the relation exponents without computing any powers.
    """
    checks = []
    for edge, word, base, exponent in gens.words():
        normalized_trace = base.trace / cmath.sqrt(base.det)
        checks.append(
            TraceCheck(
                edge=edge,
                word=word,
                exponent=exponent,
                trace_abs=abs(normalized_trace),
                expected=2.0 * math.cos(math.pi / exponent),
            )
        )
    return TraceReport(tuple(checks))
