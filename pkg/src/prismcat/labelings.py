"""Combinatorics of dihedral-angle labelings for one-cusped triangular prisms.

A labeling assigns an integer n >= 2 to each of the nine edges of a triangular
prism, encoding a dihedral angle of pi/n along that edge.  Edges a1, a2, a3 run
around the bottom triangle, a4, a5, a6 are the vertical edges, and a7, a8, a9
run around the top triangle; the single ideal vertex is the apex where a1, a2
and a5 meet.  This module classifies angle triples, decides which labelings are
admissible (realizable by a hyperbolic prism with exactly one ideal vertex),
and enumerates the complete catalog up to the prism's mirror symmetry: twelve
one-parameter families plus 78 standalone configurations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Optional, Sequence


class TriangleClass(Enum):
    """Type of the triangle with angles pi/p, pi/q, pi/r."""

    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


class Labeling(NamedTuple):
    """The nine edge labels (a1, ..., a9) of a triangular prism.

    Indexing is zero-based (``labeling[3]`` is a4); attribute access uses the
    one-based edge names (``labeling.a4``).
    """

    a1: int
    a2: int
    a3: int
    a4: int
    a5: int
    a6: int
    a7: int
    a8: int
    a9: int


class CuspType(Enum):
    """Angle multiset at the ideal vertex.

    The three values are the only multisets of integers >= 2 whose angle sum
    pi/p + pi/q + pi/r equals pi, i.e. the only Euclidean triples.
    """

    C236 = (2, 3, 6)
    C244 = (2, 4, 4)
    C333 = (3, 3, 3)

    @property
    def code(self) -> str:
        """Compact digit string, e.g. ``"236"``."""
        return "".join(str(v) for v in self.value)

    @classmethod
    def from_code(cls, code: str) -> "CuspType":
        for cusp in cls:
            if cusp.code == code:
                return cusp
        raise ValueError(f"unknown cusp type {code!r}; expected one of 236, 244, 333")

    @classmethod
    def of(cls, labeling: Labeling) -> "CuspType":
        """Cusp type of an admissible labeling, from its ideal-vertex triple."""
        ideal = tuple(sorted((labeling.a1, labeling.a2, labeling.a5)))
        for cusp in cls:
            if cusp.value == ideal:
                return cusp
        raise ValueError(f"ideal triple {ideal} is not Euclidean")


# The six vertices of the prism, as (edge indices, required triangle class).
# This table is the single source of truth for edge/vertex incidence; the
# geometry and moebius modules derive their face-pair conventions from it.
# Entry 0 is the ideal apex (a1, a2, a5), which must be Euclidean; the five
# finite vertices must be spherical.
VERTEX_TRIPLES: tuple[tuple[tuple[int, int, int], TriangleClass], ...] = (
    ((0, 1, 4), TriangleClass.EUCLIDEAN),
    ((0, 2, 3), TriangleClass.SPHERICAL),
    ((1, 2, 5), TriangleClass.SPHERICAL),
    ((4, 6, 7), TriangleClass.SPHERICAL),
    ((3, 6, 8), TriangleClass.SPHERICAL),
    ((5, 7, 8), TriangleClass.SPHERICAL),
)

# The prismatic 3-circuit: the three vertical edges, whose labels must form a
# hyperbolic triangle.  Not a vertex; checked separately in is_admissible.
PRISMATIC_CIRCUIT: tuple[int, int, int] = (3, 4, 5)

# Canonical presentation order of the cusp types.
CUSP_ORDER: tuple[CuspType, ...] = (CuspType.C236, CuspType.C244, CuspType.C333)

# Catalog size constants: cusp -> (families, standalone labelings).
EXPECTED_COUNTS: dict[CuspType, tuple[int, int]] = {
    CuspType.C236: (8, 32),
    CuspType.C244: (4, 24),
    CuspType.C333: (0, 22),
}


def classify_triangle(p: int, q: int, r: int) -> TriangleClass:
    """Classify the triangle with angles pi/p, pi/q, pi/r.

    The sign of 1/p + 1/q + 1/r - 1 decides: spherical if positive, Euclidean
    if zero, hyperbolic if negative.  The comparison is performed in exact
    integer arithmetic (q*r + p*r + p*q versus p*q*r), so the Euclidean
    boundary is never subject to floating-point rounding.
    """
    if min(p, q, r) < 2:
        raise ValueError(f"triangle labels must be >= 2, got {(p, q, r)}")
    lhs = q * r + p * r + p * q
    rhs = p * q * r
    if lhs > rhs:
        return TriangleClass.SPHERICAL
    if lhs == rhs:
        return TriangleClass.EUCLIDEAN
    return TriangleClass.HYPERBOLIC


def _validate(labeling: Sequence[int]) -> Labeling:
    if len(labeling) != 9:
        raise ValueError(f"a labeling has nine entries, got {len(labeling)}")
    if any(not isinstance(v, int) or v < 2 for v in labeling):
        raise ValueError(f"edge labels must be integers >= 2, got {tuple(labeling)}")
    return Labeling(*labeling)


def _edge_names(indices: Sequence[int]) -> str:
    return ", ".join(f"a{i + 1}" for i in indices)


def vertex_triples(
    labeling: Sequence[int],
) -> list[tuple[tuple[int, int, int], TriangleClass]]:
    """The six vertex incidences as (edge indices, required class) pairs.

    The incidence structure is combinatorial and identical for every
    labeling; the argument is validated but otherwise unused.
    """
    _validate(labeling)
    return list(VERTEX_TRIPLES)


@dataclass(frozen=True)
class Admissibility:
    """Outcome of the admissibility test.  Truthy iff admissible.

    On failure, ``reason`` says which condition broke and ``triple`` holds the
    offending edge indices (zero-based).
    """

    ok: bool
    reason: Optional[str] = None
    triple: Optional[tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def is_admissible(labeling: Sequence[int]) -> Admissibility:
    """Test whether a labeling is realizable by a one-cusped hyperbolic prism.

    Requires the ideal-vertex triple (a1, a2, a5) to be Euclidean, the five
    finite-vertex triples to be spherical, and the prismatic circuit
    (a4, a5, a6) to be hyperbolic.  The remaining realizability conditions of
    the general theory are automatic for this combinatorial type -- the prism
    has no prismatic 4-circuits, and with all angles at most pi/2, at most one
    vertical edge and at most one of a1, a2 can carry the label 2 -- so they
    are deliberately not checked.
    """
    lab = _validate(labeling)
    for indices, required in VERTEX_TRIPLES:
        values = tuple(lab[i] for i in indices)
        got = classify_triangle(*values)
        if got is not required:
            if required is TriangleClass.EUCLIDEAN:
                reason = (
                    f"ideal triple not Euclidean: ({_edge_names(indices)}) = "
                    f"{values} is {got.value}"
                )
            else:
                reason = (
                    f"vertex triple ({_edge_names(indices)}) = {values} is "
                    f"{got.value}, must be spherical"
                )
            return Admissibility(False, reason, indices)
    values = tuple(lab[i] for i in PRISMATIC_CIRCUIT)
    got = classify_triangle(*values)
    if got is not TriangleClass.HYPERBOLIC:
        return Admissibility(
            False,
            f"prismatic circuit ({_edge_names(PRISMATIC_CIRCUIT)}) = {values} "
            f"is {got.value}, must be hyperbolic",
            PRISMATIC_CIRCUIT,
        )
    return Admissibility(True)


# Mirror symmetry of the prism: exchanging a1/a2, a4/a6 and a7/a8 relabels the
# same prism viewed in a mirror.  _MATE_PERMUTATION[i] is the source index for
# output slot i.
_MATE_PERMUTATION = (1, 0, 2, 5, 4, 3, 7, 6, 8)


def symmetry_mate(labeling: Sequence[int]) -> Labeling:
    """The labeling of the mirror-image prism (swap a1/a2, a4/a6, a7/a8).

    An involution; admissibility is preserved because the vertex and circuit
    triples map onto each other under the swap.
    """
    lab = tuple(labeling)
    return Labeling(*(lab[i] for i in _MATE_PERMUTATION))


def canonicalize(labeling: Sequence[int]) -> Labeling:
    """Lexicographically smaller of a labeling and its mirror image.

    The catalog stores only canonical representatives; canonicalize is
    idempotent.
    """
    lab = Labeling(*labeling)
    mate = symmetry_mate(lab)
    return lab if tuple(lab) <= tuple(mate) else mate


@dataclass(frozen=True)
class CatalogItem:
    """One catalog row: a standalone labeling or a one-parameter family.

    ``slots`` holds the nine labels with ``None`` marking the free slot of a
    family.  For a family, every substitution of the free slot by an integer
    >= ``free_min`` is admissible; a standalone item has ``free_min = None``.
    """

    slots: tuple[Optional[int], ...]
    cusp: CuspType
    free_min: Optional[int] = None

    @property
    def family(self) -> bool:
        return self.free_min is not None

    @property
    def free_slot(self) -> Optional[int]:
        """Zero-based index of the free slot, or None for standalone items."""
        for i, v in enumerate(self.slots):
            if v is None:
                return i
        return None

    @property
    def labeling(self) -> Labeling:
        """The labeling of a standalone item (families have no single one)."""
        if self.family:
            raise ValueError("a family has no single labeling; use instantiate(n)")
        return Labeling(*self.slots)  # type: ignore[arg-type]

    def instantiate(self, n: int) -> Labeling:
        """The family member with the free slot set to n (n >= free_min)."""
        slot = self.free_slot
        if slot is None or self.free_min is None:
            raise ValueError("not a family; there is no free slot to fill")
        if n < self.free_min:
            raise ValueError(f"free slot takes values >= {self.free_min}, got {n}")
        values = list(self.slots)
        values[slot] = n
        return Labeling(*values)  # type: ignore[arg-type]

    def instances(self, max_n: int) -> Iterator[Labeling]:
        """Family members with free slot free_min..max_n (empty if standalone)."""
        if self.family:
            assert self.free_min is not None
            for n in range(self.free_min, max_n + 1):
                yield self.instantiate(n)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical catalog order: cusp, then labels with the free slot as 0."""
        return (
            CUSP_ORDER.index(self.cusp),
            tuple(0 if v is None else v for v in self.slots),
        )


_SPH = TriangleClass.SPHERICAL
_HYP = TriangleClass.HYPERBOLIC

# Probe value for free-slot detection; see enumerate_catalog.
PROBE = 20
# Finite scan bound before family folding.  Every bounded slot in the catalog
# stays <= 6, and the scan_bound=30 re-scan in the test suite asserts that no
# admissible labeling outside the folded catalog appears at larger labels.
SCAN_BOUND = 12


def scan_admissible(max_label: int) -> set[Labeling]:
    """All admissible labelings with labels <= max_label, up to mirror symmetry.

    Depth-first search over the nine slots.  The ideal apex is seeded from the
    three Euclidean triples, and each vertex condition prunes as soon as its
    last edge is assigned.  Spherical conditions are monotone (raising a label
    shrinks the angle sum), so a failed check ends the enclosing loop; the
    hyperbolic circuit condition is monotone the other way, so a failure there
    merely skips to the next value.
    """
    if max_label < 2:
        raise ValueError("max_label must be >= 2")
    found: set[Labeling] = set()
    rng = range(2, max_label + 1)
    cls = classify_triangle
    for cusp in CUSP_ORDER:
        for a1, a2, a5 in set(itertools.permutations(cusp.value)):
            for a3 in rng:
                # Cheapest completions use label 2; if even those overshoot
                # the spherical bound, larger a3 cannot recover.
                if cls(a1, a3, 2) is not _SPH or cls(a2, a3, 2) is not _SPH:
                    break
                for a4 in rng:
                    if cls(a1, a3, a4) is not _SPH:
                        break
                    for a6 in rng:
                        if cls(a2, a3, a6) is not _SPH:
                            break
                        if cls(a4, a5, a6) is not _HYP:
                            continue
                        for a7 in rng:
                            if cls(a5, a7, 2) is not _SPH or cls(a4, a7, 2) is not _SPH:
                                break
                            for a8 in rng:
                                if cls(a5, a7, a8) is not _SPH:
                                    break
                                if cls(a6, a8, 2) is not _SPH:
                                    break
                                for a9 in rng:
                                    if cls(a4, a7, a9) is not _SPH:
                                        break
                                    if cls(a6, a8, a9) is not _SPH:
                                        break
                                    found.add(
                                        canonicalize(
                                            Labeling(a1, a2, a3, a4, a5, a6, a7, a8, a9)
                                        )
                                    )
    return found


def _with_slot(lab: Labeling, slot: int, value: int) -> Labeling:
    values = list(lab)
    values[slot] = value
    return Labeling(*values)


def _slot_is_free(lab: Labeling, slot: int) -> bool:
    """True when the slot stays admissible at three consecutive probe values.

    Admissibility is then monotone in the slot: surviving the probes means the
    slot's spherical partners are all 2 (any larger partner would already fail
    at the probe), the slot cannot sit in the ideal triple (the Euclidean
    equality cannot hold at three consecutive values), and the hyperbolic
    circuit condition only improves as the slot grows.
    """
    return all(
        is_admissible(_with_slot(lab, slot, v)).ok for v in (PROBE, PROBE + 1, PROBE + 2)
    )


def enumerate_catalog() -> list[CatalogItem]:
    """The complete catalog of admissible labelings, in canonical order.

    Scans all labelings with labels <= 12, detects free slots by probing each
    slot at three consecutive large values, and folds family members into
    single items.  A family's lower bound is the larger of its admissibility
    threshold and one past the largest value the slot takes among same-cusp
    labelings that belong to no family pattern: above that point the free
    slot forces every other label, so family instances and standalone rows
    stay disjoint.

    Returns 12 families and 78 standalone items: 8 + 32 for cusp [2,3,6],
    4 + 24 for [2,4,4], 0 + 22 for [3,3,3].
    """
    scanned = scan_admissible(SCAN_BOUND)

    rays: set[tuple[tuple[Optional[int], ...], int]] = set()
    for lab in scanned:
        for slot in range(9):
            if _slot_is_free(lab, slot):
                pattern = lab[:slot] + (None,) + lab[slot + 1 :]
                rays.add((pattern, slot))

    def matches(lab: Labeling, pattern: tuple[Optional[int], ...], slot: int) -> bool:
        return all(lab[i] == pattern[i] for i in range(9) if i != slot)

    ray_members = {
        lab
        for lab in scanned
        if any(matches(lab, pattern, slot) for pattern, slot in rays)
    }
    core = scanned - ray_members

    # One past the largest value the free slot takes among core labelings of
    # the same cusp; above this, every admissible labeling matches a pattern.
    def fold_threshold(cusp: CuspType, slot: int) -> int:
        return 1 + max((lab[slot] for lab in core if CuspType.of(lab) is cusp), default=1)

    items: list[CatalogItem] = []
    family_members: set[Labeling] = set()
    for pattern, slot in sorted(rays, key=lambda ray: tuple(v or 0 for v in ray[0])):
        probe_lab = Labeling(*(v if v is not None else PROBE for v in pattern))
        cusp = CuspType.of(probe_lab)
        lo = next(
            v for v in range(2, PROBE) if is_admissible(_with_slot(probe_lab, slot, v))
        )
        free_min = max(lo, fold_threshold(cusp, slot))
        item = CatalogItem(slots=pattern, cusp=cusp, free_min=free_min)
        items.append(item)
        for n in range(free_min, SCAN_BOUND + 1):
            member = item.instantiate(n)
            assert member in scanned, f"family gap: {member} missing from scan"
            family_members.add(member)

    for lab in sorted(scanned - family_members):
        items.append(CatalogItem(slots=tuple(lab), cusp=CuspType.of(lab)))

    items.sort(key=CatalogItem.sort_key)
    return items


def catalog_counts(items: Sequence[CatalogItem]) -> dict[CuspType, tuple[int, int]]:
    """Per-cusp (families, standalone) counts of a catalog."""
    counts = {cusp: [0, 0] for cusp in CUSP_ORDER}
    for item in items:
        counts[item.cusp][0 if item.family else 1] += 1
    return {cusp: (fams, specs) for cusp, (fams, specs) in counts.items()}
