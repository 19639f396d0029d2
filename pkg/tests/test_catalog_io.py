"""Tests for catalog construction, JSON round-tripping and re-verification."""

import io
import json

import pytest

from prismcat import catalog as cat
from prismcat.labelings import CuspType, enumerate_catalog


@pytest.fixture(scope="module")
def full_entries():
    return cat.build_catalog()


def test_build_catalog_shape(full_entries):
    assert len(full_entries) == 90
    families = [e for e in full_entries if e.family]
    specifics = [e for e in full_entries if not e.family]
    assert len(families) == 12 and len(specifics) == 78
    for entry in families:
        assert entry.labeling.count(None) == 1
        assert entry.labeling[entry.free_slot] is None
        assert entry.free_min in (6, 7)
        assert entry.config is None and entry.generators is None
    for entry in specifics:
        assert None not in entry.labeling
        assert entry.family_n is None
        assert entry.config is not None
        assert entry.generators is not None
        assert len(entry.verification.angles) == 9
        assert len(entry.verification.relations) == 9
        assert len(entry.verification.traces) == 9


def test_build_catalog_cusp_filter():
    entries = cat.build_catalog(cusp=CuspType.C333)
    assert len(entries) == 22
    assert all(e.cusp is CuspType.C333 for e in entries)


def test_build_catalog_expands_families():
    items = [i for i in enumerate_catalog() if i.family][:2]
    entries = cat.build_catalog(items, max_n=8)
    patterns = [e for e in entries if e.family]
    instances = [e for e in entries if e.family_n is not None]
    assert len(patterns) == 2
    # free_min is 6 or 7, so 8 - free_min + 1 instances per family
    assert len(instances) == sum(8 - i.free_min + 1 for i in items)
    for inst in instances:
        assert inst.free_slot == 3
        assert inst.labeling[3] == inst.family_n
        assert inst.config is not None and inst.generators is not None


def test_entries_sorted_with_instances_interleaved():
    items = [i for i in enumerate_catalog() if i.family][:1]
    entries = cat.build_catalog(items, max_n=9)
    keys = [e.sort_key() for e in entries]
    assert keys == sorted(keys)
    # the pattern row (free slot counted as 0) precedes its instances
    assert entries[0].family


def test_json_round_trip_is_bit_exact(full_entries):
    text = cat.dumps_catalog(full_entries)
    loaded = cat.load_catalog(io.StringIO(text))
    assert cat.dumps_catalog(loaded) == text


def test_json_document_structure(full_entries):
    doc = json.loads(cat.dumps_catalog(full_entries[:3]))
    assert doc["schema"] == "prism-catalog/1"
    prov = doc["provenance"]
    assert prov["tool"] == "prismcat"
    assert set(prov["tolerances"]) == {
        "construction",
        "angle",
        "relation",
        "relation_large_power",
        "large_exponent",
        "trace",
        "determinant",
    }
    for record in doc["entries"]:
        assert set(record) == {
            "labeling",
            "cusp",
            "family",
            "free_slot",
            "free_min",
            "family_n",
            "config",
            "generators",
            "verification",
        }


def test_complex_numbers_encode_as_re_im_pairs(full_entries):
    specific = next(e for e in full_entries if not e.family)
    record = cat.entry_to_json(specific)
    m1 = record["generators"]["m1"]
    assert isinstance(m1, list) and len(m1) == 2
    for row in m1:
        for cell in row:
            assert set(cell) == {"re", "im"}
    assert set(record["generators"]["fixed1"]) == {"re", "im"}
    top = record["config"]["top"]
    assert set(top) == {"center", "radius"}
    assert len(top["center"]) == 2


def test_family_rows_serialize_with_null_slot(full_entries):
    family = next(e for e in full_entries if e.family)
    record = cat.entry_to_json(family)
    assert record["family"] is True
    assert record["labeling"].count(None) == 1
    assert record["free_slot"] == 3
    assert record["free_min"] in (6, 7)
    assert record["config"] is None
    assert record["generators"] is None
    assert record["verification"] is None


def test_load_rejects_unknown_schema(full_entries):
    doc = json.loads(cat.dumps_catalog(full_entries[:1]))
    doc["schema"] = "something-else/2"
    with pytest.raises(ValueError, match="schema"):
        cat.load_catalog(io.StringIO(json.dumps(doc)))


def test_dump_and_load_via_path(tmp_path, full_entries):
    path = str(tmp_path / "catalog.json")
    cat.dump_catalog(full_entries[:5], path)
    loaded = cat.load_catalog(path)
    assert len(loaded) == 5
    assert loaded[0] == full_entries[0]


# ---------------------------------------------------------------------------
# verify_catalog


def test_verify_catalog_passes_on_fresh_entries(full_entries):
    report = cat.verify_catalog(full_entries)
    assert report.ok
    # 78 specifics plus 12 families sampled at 4 values each
    assert report.entries_checked == 78 + 12 * 4
    assert report.max_angle <= 1e-9
    assert report.max_relation <= 1e-6
    assert report.max_trace <= 1e-8
    assert report.max_det_drift <= 1e-10
    assert report.max_config_drift <= 1e-9


def test_verify_catalog_sample_values_below_bound_are_skipped(full_entries):
    families = [e for e in full_entries if e.family]
    report = cat.verify_catalog(families, samples=[3, 8, 12])
    # every family bound is 6 or 7, so the 3 never applies
    assert report.entries_checked == 2 * len(families)
    assert report.ok


def test_verify_catalog_flags_corrupted_radius(full_entries):
    text = cat.dumps_catalog(full_entries)
    doc = json.loads(text)
    victim = next(r for r in doc["entries"] if not r["family"])
    victim["config"]["top"]["radius"] += 1e-3
    entries = cat.load_catalog(io.StringIO(json.dumps(doc)))
    report = cat.verify_catalog(entries)
    assert not report.ok
    label_text = " ".join(str(v) for v in victim["labeling"])
    assert any(label_text in failure for failure in report.failures)
    assert report.max_config_drift >= 1e-4


def test_verify_catalog_flags_tampered_generator(full_entries):
    text = cat.dumps_catalog(full_entries)
    doc = json.loads(text)
    victim = next(r for r in doc["entries"] if not r["family"])
    victim["generators"]["m2"][0][0]["re"] += 1e-4
    entries = cat.load_catalog(io.StringIO(json.dumps(doc)))
    report = cat.verify_catalog(entries)
    assert not report.ok
    label_text = " ".join(str(v) for v in victim["labeling"])
    assert any(
        label_text in failure and "relation" in failure
        for failure in report.failures
    )
