import json
import os

import pytest

from exlie import cli, cache as sc_cache
from exlie.exceptional import epsilon_fixed
from exlie.scalars import qi


def test_triality_suite_exit_code(tmp_path, capsys):
    rc = cli.main(["--suite", "triality", "--cache-dir", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    report = json.loads(out)
    assert report["suite"] == "triality"
    assert report["summary"]["failed"] == 0
    for c in report["checks"]:
        assert set(c) == {"id", "anchor", "description", "expected",
                          "actual", "pass"}


def test_markdown_format(tmp_path, capsys):
    rc = cli.main(["--suite", "realforms", "--format", "markdown",
                   "--cache-dir", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("# exlie verification report")
    assert "## realforms" in out
    assert "| realforms.level-7 |" in out


def test_unknown_suite_rejected():
    with pytest.raises(SystemExit) as exc:
        cli.main(["--suite", "nonsense"])
    assert exc.value.code == 2


def test_report_determinism(tmp_path):
    cfg = cli.SuiteConfig("realforms", cache_dir=str(tmp_path), seed=3)
    r1, _, _ = cli.run_suite(cfg)
    r2, _, _ = cli.run_suite(cfg)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_structure_constant_cache_round_trip(tmp_path):
    basis = epsilon_fixed(4)
    doc = sc_cache.sc_to_document(basis)
    back = sc_cache.document_to_sc(doc)
    sc = basis.structure_constants()
    assert set(back) == set(sc)
    for i in back:
        assert set(back[i]) == set(sc[i])
        for j in back[i]:
            assert set(back[i][j]) == set(sc[i][j])
            for k in back[i][j]:
                assert back[i][j][k] == sc[i][j][k]
    # byte-exact file round trip
    p1 = sc_cache.save_structure_constants(str(tmp_path), basis)
    with open(p1) as fh:
        text1 = fh.read()
    assert sc_cache.load_structure_constants(str(tmp_path), basis)
    p2 = sc_cache.save_structure_constants(str(tmp_path), basis)
    with open(p2) as fh:
        text2 = fh.read()
    assert text1 == text2


def test_corrupt_cache_is_rebuilt(tmp_path, capsys):
    basis = epsilon_fixed(4)
    path = os.path.join(str(tmp_path), "sc_%s.json" % basis.label)
    with open(path, "w") as fh:
        fh.write("{not json")
    assert not sc_cache.load_structure_constants(str(tmp_path), basis)
    err = capsys.readouterr().err
    assert "ignoring corrupt cache" in err
    sc_cache.ensure_structure_constants(basis, str(tmp_path))
    assert sc_cache.load_structure_constants(str(tmp_path), basis)


def test_export_tables(tmp_path, capsys):
    rc = cli.main(["--suite", "roots-f4", "--cache-dir", str(tmp_path),
                   "--export"])
    assert rc == 0
    with open(os.path.join(str(tmp_path), "roots_21.json")) as fh:
        doc = json.load(fh)
    assert len(doc["roots"]) == 18
    assert doc["dynkin_type"] == "C3"
    for row in doc["roots"]:
        assert row["dictionary"] != "?"
    md = open(os.path.join(str(tmp_path), "roots_21.md")).read()
    assert md.count("|") > 18
