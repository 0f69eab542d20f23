import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from hopfhom import cli
from hopfhom.specfile import read_spec, SchemaError, spec_hash

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("HOPFHOM_CACHE_DIR", str(d))
    return d


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def write(tmp_path, doc, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return p


def dims(rep):
    return [d["dim"] for d in rep["degrees"]]


# ---------------------------------------------------------------------------
# validate

@pytest.mark.parametrize("name", ["kZ2", "kZ3", "kS3", "fS3", "h4", "pair_groupoid", "sign_action",
                                  "dual_numbers", "kZ2_constants"])
def test_validate_shipped_specs(capsys, name):
    code, rep, _ = report(capsys, "validate", SPECS / (name + ".json"))
    assert code == 0
    assert all(c["verdict"] == "pass" for c in rep["checks"])


def test_validate_broken_associativity(capsys):
    code, rep, _ = report(capsys, "validate", SPECS / "broken_associativity.json")
    assert code == 1
    assert rep["checks"][0]["witness"] == {"axiom": "associativity", "indices": [1, 2, 2]}


def test_validate_broken_hopf_structure(capsys, tmp_path):
    doc = json.loads((SPECS / "kZ2_constants.json").read_text())
    doc["antipode"] = [[0, 0, 1], [1, 0, 1]]
    code, rep, _ = report(capsys, "validate", write(tmp_path, doc))
    assert code == 1
    assert any(c["verdict"] == "fail" for c in rep["checks"])


@pytest.mark.parametrize("doc,msg", [
    ({"kind": "lie_algebra"}, "kind"),
    ({"kind": "group_algebra"}, ""),
    ({"kind": "group_algebra", "group": "Q8"}, "group"),
    ({"kind": "structure_constants", "dim": 1, "mult": [[0, 0, 0, "2/4"]], "unit": [[0, 1]]}, "reduced"),
    ({"kind": "structure_constants", "dim": 1, "mult": [[0, 0, 0, 0.5]], "unit": [[0, 1]]}, ""),
    ({"kind": "structure_constants", "dim": 1, "mult": [[0, 0, 0, 1]], "unit": [[0, 1]],
      "comult": [[0, 0, 0, 1]]}, ""),
])
def test_schema_errors_exit_2(capsys, tmp_path, doc, msg):
    code, out, err = run(capsys, "validate", write(tmp_path, doc))
    assert code == 2 and out == ""
    assert "error" in err and msg in err


def test_unreadable_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "validate", p)[0] == 2


def test_invalid_group_table(capsys, tmp_path):
    code, rep, _ = report(capsys, "validate", write(tmp_path, {"kind": "group_algebra", "table": [[0, 1], [1, 1]]}))
    assert code == 1
    assert rep["checks"][0]["witness"] == {"axiom": "inverse", "indices": 1}


def test_invalid_groupoid(capsys, tmp_path):
    doc = json.loads((SPECS / "pair_groupoid.json").read_text())
    doc["composition"] = doc["composition"][:-1]
    assert run(capsys, "validate", write(tmp_path, doc))[0] == 1


def test_read_spec_and_hash():
    doc, H = read_spec(SPECS / "kZ2.json")
    assert H.dim == 2
    assert spec_hash(doc) == spec_hash(dict(reversed(list(doc.items()))))
    with pytest.raises(SchemaError):
        read_spec(SPECS / "missing.json")


# ---------------------------------------------------------------------------
# homology

def test_homology_kz2_kr(capsys):
    code, rep, _ = report(capsys, "homology", SPECS / "kZ2.json", "--theory", "hc",
                          "--construction", "kr", "--max-degree", 4)
    assert code == 0
    assert dims(rep) == [1, 0, 1, 0, 1]
    assert [d["n"] for d in rep["degrees"]] == [0, 1, 2, 3, 4]
    assert rep["parameters"]["delta"] == "eps" and rep["parameters"]["sigma"] == "1"
    assert rep["tool-version"] == "0.1.0"
    assert len(rep["content-hash"]) == 64


def test_homology_kz3_hp(capsys):
    code, rep, _ = report(capsys, "homology", SPECS / "kZ3.json", "--theory", "hp", "--construction", "cm")
    assert code == 0
    assert dims(rep) == [1, 0]
    assert rep["stabilized"] == {"even": True, "odd": True}
    assert [d["dim"] for d in rep["parameters"]["HC"]] == [1, 0, 1, 0, 1]


def test_homology_pair_groupoid(capsys):
    code, rep, _ = report(capsys, "homology", SPECS / "pair_groupoid.json", "--construction", "extended",
                          "--max-degree", 3)
    assert code == 0 and dims(rep) == [2, 0, 2, 0]


def test_homology_sign_character(capsys):
    code, rep, _ = report(capsys, "homology", SPECS / "kZ2.json", "--construction", "kr",
                          "--delta", "sign", "--max-degree", 3)
    assert code == 0 and dims(rep) == [0, 0, 0, 0]


def test_homology_smash_diagonal(capsys):
    code, rep, _ = report(capsys, "homology", SPECS / "sign_action.json", "--construction", "smash-diagonal",
                          "--max-degree", 3)
    assert code == 0 and dims(rep) == [2, 1, 2, 1]


def test_homology_errors(capsys):
    assert run(capsys, "homology", SPECS / "kZ2.json", "--construction", "kr", "--delta", "chi9")[0] == 2
    assert run(capsys, "homology", SPECS / "pair_groupoid.json", "--construction", "kr")[0] == 2
    assert run(capsys, "homology", SPECS / "h4.json", "--construction", "kr")[0] == 2
    assert run(capsys, "homology", SPECS / "kZ2.json", "--construction", "kr", "--max-degree", -1)[0] == 2


def test_homology_is_deterministic_and_cached(capsys, tmp_path, cache_dir):
    args = ("homology", SPECS / "kS3.json", "--construction", "cm", "--max-degree", 3)
    _, first, _ = run(capsys, *args, "--out", tmp_path / "a.json")
    assert any(cache_dir.rglob("*.json"))
    _, second, _ = run(capsys, *args, "--out", tmp_path / "b.json")
    _, third, _ = run(capsys, *args, "--no-cache")
    assert first == second == third
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
    assert first.endswith("}\n")


def test_poisoned_cache_is_recomputed(capsys, cache_dir, caplog):
    args = ("homology", SPECS / "kZ3.json", "--construction", "kr", "--max-degree", 3)
    _, clean, _ = run(capsys, *args)
    entries = sorted(cache_dir.rglob("*.json"))
    assert entries
    for p in entries:
        p.write_text('{"checksum": "0", "matrix": [1, 2, 3]}')
    with caplog.at_level("WARNING"):
        _, again, _ = run(capsys, *args)
    assert again == clean
    assert any("corrupt cache entry" in r.message for r in caplog.records)
    # the entries were rewritten and are now good
    with caplog.at_level("WARNING"):
        caplog.clear()
        run(capsys, *args)
    assert not caplog.records


def test_distinct_characters_use_distinct_keys(capsys, cache_dir):
    run(capsys, "homology", SPECS / "kZ2.json", "--construction", "kr", "--max-degree", 2)
    run(capsys, "homology", SPECS / "kZ2.json", "--construction", "kr", "--delta", "sign", "--max-degree", 2)
    scopes = {p.parent for p in cache_dir.rglob("*.json")}
    assert len(scopes) == 2
    assert cli.cache_scope("h", "kr", {"delta": [1, 1]}) != cli.cache_scope("h", "kr", {"delta": [1, -1]})


# ---------------------------------------------------------------------------
# check

def test_check_smash_iso(capsys):
    code, rep, _ = report(capsys, "check", "smash-diagonal-iso", SPECS / "sign_action.json")
    assert code == 0 and rep["checks"][0]["verdict"] == "pass"


def test_check_uq_homotopy(capsys):
    code, rep, _ = report(capsys, "check", "uq-homotopy", "--q", "2")
    assert code == 0 and rep["checks"][0]["verdict"] == "pass"


def test_check_kr_on_h4_fails_with_witness(capsys):
    code, rep, _ = report(capsys, "check", "kr-cyclic-module", SPECS / "h4.json")
    assert code == 1
    entry = rep["checks"][0]
    assert entry["verdict"] == "fail" and entry["witness"]


def test_check_kr_on_h4_involutive_pair(capsys):
    code, _, _ = report(capsys, "check", "kr-cyclic-module", SPECS / "h4.json", "--delta", "sign", "--sigma", "1",
                        "--max-degree", 3)
    assert code == 0


def test_check_inapplicable_is_skipped(capsys):
    code, rep, _ = report(capsys, "check", "haar-periodic", SPECS / "h4.json")
    assert code == 2 and rep["checks"][0]["verdict"] == "skipped"


def test_check_unknown(capsys):
    code, _, err = run(capsys, "check", "thm-9.9", SPECS / "kZ2.json")
    assert code == 2 and "unknown check" in err


@pytest.mark.parametrize("cid,spec", [
    ("cocommutative-decomposition", "kS3"), ("commutative-decomposition", "fZ2"),
    ("haar-periodic", "kZ3"), ("hc-parity", "pair_groupoid"), ("triple-kr-identification", "kZ2"),
    ("cotriple-cm-identification", "kZ2"), ("morita", "kZ2"), ("uq-resolution", None),
])
def test_check_passes(capsys, cid, spec):
    argv = ["check", cid] + ([SPECS / (spec + ".json")] if spec else [])
    code, rep, _ = report(capsys, *argv)
    assert code == 0, rep["checks"]


def test_check_verbatim_resolution_fails(capsys):
    code, rep, _ = report(capsys, "check", "uq-resolution", "--variant", "verbatim")
    assert code == 1


def test_list_checks(capsys):
    code, out, _ = run(capsys, "list-checks")
    assert code == 0
    ids = [line.split()[0] for line in out.splitlines()]
    assert ids == [c.id for c in cli.CHECKS]
    assert len(ids) == 26 and len(set(ids)) == 26


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "hopfhom.cli", "validate", str(SPECS / "kZ2.json")],
                       capture_output=True, text=True, env=dict(os.environ))
    assert r.returncode == 0
    assert json.loads(r.stdout)["checks"]
