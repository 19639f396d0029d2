"""Catalog entries and their JSON persistence (schema ``prism-catalog/1``).

An entry bundles a labeling with everything the pipeline derives from it: the
planar configuration, the four generators, and the verification residuals.
Family rows carry only the pattern (free slot as ``null``) plus its lower
bound -- a one-parameter family has no single realization -- while expanded
family instances and standalone labelings carry the full payload.  Complex
numbers serialize as ``{"re": ..., "im": ...}`` pairs and floats rely on
shortest round-trip repr, so parsing a dump reproduces every double bit for
bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Optional, Sequence, Union

from . import geometry, moebius
from .geometry import PlanarCircle, PlanarConfig, PlanarLine, realize, verify_config
from .labelings import (
    CUSP_ORDER,
    CatalogItem,
    CuspType,
    Labeling,
    enumerate_catalog,
)
from .moebius import (
    GeneratorSet,
    MoebiusMatrix,
    build_generators,
    trace_check,
    verify_relations,
)

SCHEMA = "prism-catalog/1"
TOOL_NAME = "prismcat"

# Thresholds the pipeline was verified against, recorded in every dump.
TOLERANCES: dict[str, float] = {
    "construction": geometry.CONSTRUCTION_TOL,
    "angle": geometry.ANGLE_TOL,
    "relation": moebius.RELATION_TOL,
    "relation_large_power": moebius.RELATION_TOL_LARGE,
    "large_exponent": moebius.LARGE_EXPONENT,
    "trace": moebius.TRACE_TOL,
    "determinant": moebius.DET_TOL,
}

# Default free-slot values at which a family is spot-checked: the bound, its
# two nearest successors of interest, and a deliberately large power.
FAMILY_SAMPLE_OFFSETS = (0, 1, 10)
FAMILY_SAMPLE_LARGE = 500


@dataclass(frozen=True)
class Verification:
    """The nine angle, relation and trace residuals of a verified entry."""

    angles: tuple[float, ...]
    relations: tuple[float, ...]
    traces: tuple[float, ...]


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog record: a family pattern, a family instance, or a standalone.

    ``labeling`` holds nine labels with ``None`` in the free slot of a family
    pattern.  Instances keep their parent's ``free_slot``/``free_min`` and
    record the substituted value in ``family_n``.
    """

    labeling: tuple[Optional[int], ...]
    cusp: CuspType
    family: bool
    free_slot: Optional[int] = None
    free_min: Optional[int] = None
    family_n: Optional[int] = None
    config: Optional[PlanarConfig] = None
    generators: Optional[GeneratorSet] = None
    verification: Optional[Verification] = None

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (
            CUSP_ORDER.index(self.cusp),
            tuple(0 if v is None else v for v in self.labeling),
        )


def build_entry(labeling: Sequence[int], **metadata) -> CatalogEntry:
    """Run the full pipeline on one labeling and bundle the results."""
    lab = Labeling(*labeling)
    config = realize(lab)
    gens = build_generators(lab, config)
    verification = Verification(
        angles=tuple(check.residual for check in verify_config(lab, config).checks),
        relations=tuple(check.residual for check in verify_relations(gens).checks),
        traces=tuple(check.residual for check in trace_check(gens).checks),
    )
    return CatalogEntry(
        labeling=tuple(lab),
        cusp=CuspType.of(lab),
        family=False,
        config=config,
        generators=gens,
        verification=verification,
        **metadata,
    )


def build_catalog(
    items: Optional[Sequence[CatalogItem]] = None,
    max_n: Optional[int] = None,
    cusp: Optional[CuspType] = None,
) -> list[CatalogEntry]:
    """Catalog entries for the given items (default: the full enumeration).

    Family items become pattern rows; with ``max_n`` each family additionally
    expands into fully verified instances for free_min..max_n.  Standalone
    items always carry the full payload.
    """
    if items is None:
        items = enumerate_catalog()
    entries: list[CatalogEntry] = []
    for item in items:
        if cusp is not None and item.cusp is not cusp:
            continue
        if item.family:
            entries.append(
                CatalogEntry(
                    labeling=item.slots,
                    cusp=item.cusp,
                    family=True,
                    free_slot=item.free_slot,
                    free_min=item.free_min,
                )
            )
            if max_n is not None:
                for n in range(item.free_min, max_n + 1):
                    entries.append(
                        build_entry(
                            item.instantiate(n),
                            free_slot=item.free_slot,
                            free_min=item.free_min,
                            family_n=n,
                        )
                    )
        else:
            entries.append(build_entry(item.labeling))
    entries.sort(key=CatalogEntry.sort_key)
    return entries


# ---------------------------------------------------------------------------
# JSON encoding


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _complex_from(d: dict) -> complex:
    return complex(d["re"], d["im"])


def _matrix_json(m: MoebiusMatrix) -> list:
    return [[_complex_json(m.a), _complex_json(m.b)], [_complex_json(m.c), _complex_json(m.d)]]


def _matrix_from(rows: list) -> MoebiusMatrix:
    return MoebiusMatrix.of(
        _complex_from(rows[0][0]),
        _complex_from(rows[0][1]),
        _complex_from(rows[1][0]),
        _complex_from(rows[1][1]),
    )


def _line_json(line: PlanarLine) -> dict:
    return {"normal": [line.nx, line.ny], "offset": line.d}


def _line_from(d: dict) -> PlanarLine:
    return PlanarLine(d["normal"][0], d["normal"][1], d["offset"])


def _circle_json(circle: PlanarCircle) -> dict:
    return {"center": [circle.cx, circle.cy], "radius": circle.r}


def _circle_from(d: dict) -> PlanarCircle:
    return PlanarCircle(d["center"][0], d["center"][1], d["radius"])


def _config_json(config: PlanarConfig) -> dict:
    return {
        "a3_branch": config.a3_branch,
        "red": _line_json(config.red),
        "green": _line_json(config.green),
        "blue": _line_json(config.blue),
        "back": _circle_json(config.back),
        "top": _circle_json(config.top),
    }


def _config_from(d: dict) -> PlanarConfig:
    return PlanarConfig(
        red=_line_from(d["red"]),
        green=_line_from(d["green"]),
        blue=_line_from(d["blue"]),
        back=_circle_from(d["back"]),
        top=_circle_from(d["top"]),
        a3_branch=d["a3_branch"],
    )


def _generators_json(gens: GeneratorSet) -> dict:
    return {
        "m1": _matrix_json(gens.m1),
        "m2": _matrix_json(gens.m2),
        "m3": _matrix_json(gens.m3),
        "m4": _matrix_json(gens.m4),
        "theta1": gens.theta1,
        "theta2": gens.theta2,
        "fixed1": _complex_json(gens.fixed1),
        "fixed2": _complex_json(gens.fixed2),
    }


def _generators_from(d: dict, labeling: Labeling, top: PlanarCircle) -> GeneratorSet:
    return GeneratorSet(
        labeling=labeling,
        m1=_matrix_from(d["m1"]),
        m2=_matrix_from(d["m2"]),
        m3=_matrix_from(d["m3"]),
        m4=_matrix_from(d["m4"]),
        theta1=d["theta1"],
        theta2=d["theta2"],
        fixed1=_complex_from(d["fixed1"]),
        fixed2=_complex_from(d["fixed2"]),
        top=top,
    )


def entry_to_json(entry: CatalogEntry) -> dict:
    record: dict = {
        "labeling": list(entry.labeling),
        "cusp": entry.cusp.code,
        "family": entry.family,
        "free_slot": entry.free_slot,
        "free_min": entry.free_min,
        "family_n": entry.family_n,
        "config": _config_json(entry.config) if entry.config else None,
        "generators": _generators_json(entry.generators) if entry.generators else None,
        "verification": None,
    }
    if entry.verification:
        record["verification"] = {
            "angles": list(entry.verification.angles),
            "relations": list(entry.verification.relations),
            "traces": list(entry.verification.traces),
        }
    return record


def entry_from_json(record: dict) -> CatalogEntry:
    labeling = tuple(record["labeling"])
    config = _config_from(record["config"]) if record.get("config") else None
    generators = None
    if record.get("generators"):
        if config is None:
            raise ValueError("generators without a configuration")
        generators = _generators_from(
            record["generators"], Labeling(*labeling), config.top
        )
    verification = None
    if record.get("verification"):
        v = record["verification"]
        verification = Verification(
            angles=tuple(v["angles"]),
            relations=tuple(v["relations"]),
            traces=tuple(v["traces"]),
        )
    return CatalogEntry(
        labeling=labeling,
        cusp=CuspType.from_code(record["cusp"]),
        family=record["family"],
        free_slot=record.get("free_slot"),
        free_min=record.get("free_min"),
        family_n=record.get("family_n"),
        config=config,
        generators=generators,
        verification=verification,
    )


def catalog_to_json(entries: Iterable[CatalogEntry]) -> dict:
    from . import __version__

    return {
        "schema": SCHEMA,
        "provenance": {
            "tool": TOOL_NAME,
            "version": __version__,
            "tolerances": TOLERANCES,
        },
        "entries": [entry_to_json(entry) for entry in entries],
    }


def dumps_catalog(entries: Iterable[CatalogEntry]) -> str:
    return json.dumps(catalog_to_json(entries), indent=2) + "\n"


def dump_catalog(entries: Iterable[CatalogEntry], fp: Union[str, IO[str]]) -> None:
    text = dumps_catalog(entries)
    if isinstance(fp, str):
        with open(fp, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        fp.write(text)


def load_catalog(fp: Union[str, IO[str]]) -> list[CatalogEntry]:
    if isinstance(fp, str):
        with open(fp, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    else:
        payload = json.load(fp)
    if payload.get("schema") != SCHEMA:
        raise ValueError(
            f"unsupported catalog schema {payload.get('schema')!r}; expected {SCHEMA!r}"
        )
    return [entry_from_json(record) for record in payload["entries"]]


# ---------------------------------------------------------------------------
# Verification sweep


@dataclass(frozen=True)
class SweepReport:
    """Result of re-verifying a catalog file end to end."""

    entries_checked: int
    max_angle: float
    max_relation: float
    max_trace: float
    max_det_drift: float
    max_config_drift: float
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _family_samples(free_min: int, samples: Optional[Sequence[int]]) -> list[int]:
    if samples is None:
        values = [free_min + off for off in FAMILY_SAMPLE_OFFSETS]
        values.append(max(FAMILY_SAMPLE_LARGE, free_min))
    else:
        values = [n for n in samples if n >= free_min]
    return sorted(set(values))


def verify_catalog(
    entries: Sequence[CatalogEntry],
    samples: Optional[Sequence[int]] = None,
) -> SweepReport:
    """Re-realize and re-verify every entry of a catalog.

    Standalone and instance entries are checked four ways: the stored
    configuration must reproduce all nine edge angles, a fresh realization
    must agree with the stored circle (config drift), the stored generators
    must satisfy all nine relations and trace identities, and their
    determinants must still be 1.  Family pattern rows are spot-checked at
    the sampled free-slot values (default: free_min, +1, +10, and 500).
    """
    checked = 0
    max_angle = max_relation = max_trace = max_det = max_drift = 0.0
    failures: list[str] = []

    def check_full(lab: Labeling, tag: str, entry: Optional[CatalogEntry]) -> None:
        nonlocal checked, max_angle, max_relation, max_trace, max_det, max_drift
        checked += 1
        try:
            fresh = realize(lab)
        except (ValueError, geometry.RealizationError) as exc:
            failures.append(f"{tag}: realization failed: {exc}")
            return
        if entry is not None and entry.config is not None:
            stored = entry.config
            report = verify_config(lab, stored)
            max_angle = max(max_angle, report.max_residual)
            if not report.ok:
                bad = ", ".join(c.name for c in report.failures())
                failures.append(f"{tag}: stored configuration fails on {bad}")
            drift = max(
                abs(stored.top.cx - fresh.top.cx),
                abs(stored.top.cy - fresh.top.cy),
                abs(stored.top.r - fresh.top.r),
            )
            max_drift = max(max_drift, drift)
            if drift > geometry.ANGLE_TOL:
                failures.append(f"{tag}: stored circle drifts from recomputation by {drift:.3e}")
            gens = entry.generators
            if gens is None:
                failures.append(f"{tag}: entry has no generators")
                return
        else:
            report = verify_config(lab, fresh)
            max_angle = max(max_angle, report.max_residual)
            if not report.ok:
                failures.append(f"{tag}: realization fails angle verification")
            gens = build_generators(lab, fresh)
        for name, matrix in (("M1", gens.m1), ("M2", gens.m2), ("M3", gens.m3), ("M4", gens.m4)):
            drift = abs(matrix.det - 1.0)
            max_det = max(max_det, drift)
            if drift > moebius.DET_TOL:
                failures.append(f"{tag}: {name} determinant drifts by {drift:.3e}")
        relations = verify_relations(gens)
        max_relation = max(max_relation, relations.max_residual)
        if not relations.ok:
            bad = ", ".join(c.edge for c in relations.checks if not c.ok)
            failures.append(f"{tag}: relations fail on {bad}")
        traces = trace_check(gens)
        max_trace = max(max_trace, traces.max_residual)
        if not traces.ok:
            bad = ", ".join(c.edge for c in traces.checks if not c.ok)
            failures.append(f"{tag}: trace checks fail on {bad}")

    for entry in entries:
        label_text = " ".join("n" if v is None else str(v) for v in entry.labeling)
        if entry.family:
            assert entry.free_slot is not None and entry.free_min is not None
            for n in _family_samples(entry.free_min, samples):
                values = list(entry.labeling)
                values[entry.free_slot] = n
                check_full(Labeling(*values), f"[{label_text}] at n={n}", None)
        else:
            check_full(Labeling(*entry.labeling), f"[{label_text}]", entry)

    return SweepReport(
        entries_checked=checked,
        max_angle=max_angle,
        max_relation=max_relation,
        max_trace=max_trace,
        max_det_drift=max_det,
        max_config_drift=max_drift,
        failures=tuple(failures),
    )
