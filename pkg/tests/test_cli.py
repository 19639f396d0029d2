"""End-to-end tests of the command-line interface."""

import json

import pytest

from prismcat.cli import main

FIX1 = ["2", "6", "2", "7", "3", "2", "2", "3", "2"]


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_to_stdout(capsys):
    assert main(["enumerate"]) == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["schema"] == "prism-catalog/1"
    assert len(doc["entries"]) == 90
    assert "12 families, 78 specific" in captured.err
    assert "C236: 8 + 32" in captured.err
    assert "C244: 4 + 24" in captured.err
    assert "C333: 0 + 22" in captured.err


def test_enumerate_to_file(tmp_path, capsys):
    out = tmp_path / "catalog.json"
    assert main(["enumerate", "-o", str(out)]) == 0
    captured = capsys.readouterr()
    assert "12 families, 78 specific" in captured.out
    doc = json.loads(out.read_text())
    assert len(doc["entries"]) == 90


def test_enumerate_cusp_filter(capsys):
    assert main(["enumerate", "--cusp", "244"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["entries"]) == 28
    assert all(r["cusp"] == "244" for r in doc["entries"])


def test_enumerate_with_instances(capsys):
    assert main(["enumerate", "--cusp", "244", "--max-n", "8"]) == 0
    doc = json.loads(capsys.readouterr().out)
    patterns = [r for r in doc["entries"] if r["family"]]
    instances = [r for r in doc["entries"] if r["family_n"] is not None]
    assert len(patterns) == 4
    assert len(instances) == 4 * 3  # free_min 6, expanded to 6, 7, 8
    assert all(r["config"] is not None for r in instances)


def test_enumerate_rejects_bad_cusp():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--cusp", "777"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# realize


def test_realize_prints_configuration(capsys):
    assert main(["realize", *FIX1]) == 0
    out = capsys.readouterr().out
    assert "labeling: 2 6 2 7 3 2 2 3 2" in out
    assert "cusp: 236" in out
    assert "vertical line x = 0" in out
    # 15 significant digits
    assert "0.900968867902419" in out
    assert "0.450400326800139" in out
    assert "0.120852618138951" in out
    assert "circle center (0, 0) radius 1" in out


def test_realize_writes_svg_and_json(tmp_path, capsys):
    svg_path = tmp_path / "out.svg"
    json_path = tmp_path / "out.json"
    code = main(
        ["realize", *FIX1, "--svg", str(svg_path), "--json", str(json_path)]
    )
    assert code == 0
    capsys.readouterr()
    assert svg_path.read_text().startswith("<?xml")
    doc = json.loads(json_path.read_text())
    assert len(doc["entries"]) == 1
    assert doc["entries"][0]["labeling"] == [2, 6, 2, 7, 3, 2, 2, 3, 2]


def test_realize_inadmissible_is_a_domain_error(capsys):
    code = main(["realize", "2", "3", "2", "7", "5", "2", "2", "3", "2"])
    assert code == 2
    err = capsys.readouterr().err
    assert "ideal triple not Euclidean" in err


def test_realize_rejects_wrong_arity():
    with pytest.raises(SystemExit) as exc:
        main(["realize", "2", "6", "2"])
    assert exc.value.code == 2


def test_realize_rejects_labels_below_two(capsys):
    code = main(["realize", "2", "6", "2", "7", "3", "2", "2", "3", "1"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# matrices


def test_matrices_prints_generators_and_relations(capsys):
    assert main(["matrices", *FIX1]) == 0
    out = capsys.readouterr().out
    for name in ("M1", "M2", "M3", "M4"):
        assert f"{name} = [[" in out
    assert "relations:" in out
    assert "a4: (M2^-1 M1)^7" in out
    assert "traces:" in out
    assert out.count(" ok") >= 18  # nine relations and nine traces


def test_matrices_output_is_deterministic(capsys):
    main(["matrices", *FIX1])
    first = capsys.readouterr().out
    main(["matrices", *FIX1])
    second = capsys.readouterr().out
    assert first == second


def test_matrices_json(tmp_path, capsys):
    path = tmp_path / "entry.json"
    assert main(["matrices", *FIX1, "--json", str(path)]) == 0
    capsys.readouterr()
    doc = json.loads(path.read_text())
    gens = doc["entries"][0]["generators"]
    assert gens["m1"][0][1] == {"re": -1.0, "im": 0.0}


# ---------------------------------------------------------------------------
# verify


def make_catalog(tmp_path, capsys):
    path = tmp_path / "catalog.json"
    assert main(["enumerate", "-o", str(path)]) == 0
    capsys.readouterr()
    return path


def test_verify_passes_on_enumerated_catalog(tmp_path, capsys):
    path = make_catalog(tmp_path, capsys)
    assert main(["verify", str(path)]) == 0
    out = capsys.readouterr().out
    assert "checked 126 configurations" in out
    assert "max angle residual" in out
    assert out.strip().endswith("PASS")


def test_verify_with_samples(tmp_path, capsys):
    path = make_catalog(tmp_path, capsys)
    assert main(["verify", str(path), "--sample", "7", "12"]) == 0
    out = capsys.readouterr().out
    # free_min 6 and 7 families both admit n = 7 and n = 12
    assert "checked 102 configurations" in out


def test_verify_flags_corruption_and_names_entry(tmp_path, capsys):
    path = make_catalog(tmp_path, capsys)
    doc = json.loads(path.read_text())
    victim = next(r for r in doc["entries"] if not r["family"])
    victim["config"]["top"]["radius"] += 1e-3
    path.write_text(json.dumps(doc))
    assert main(["verify", str(path)]) == 1
    captured = capsys.readouterr()
    label_text = " ".join(str(v) for v in victim["labeling"])
    assert label_text in captured.err
    assert captured.out.strip().endswith("FAIL")


def test_verify_rejects_unknown_schema(tmp_path, capsys):
    path = make_catalog(tmp_path, capsys)
    doc = json.loads(path.read_text())
    doc["schema"] = "other/1"
    path.write_text(json.dumps(doc))
    assert main(["verify", str(path)]) == 2
    assert "schema" in capsys.readouterr().err


def test_verify_missing_file(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "nope.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_no_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
