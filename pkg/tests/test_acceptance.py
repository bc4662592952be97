"""The acceptance gate: every verification criterion at tolerance zero.

One test per criterion; each prints a single PASS/FAIL line (visible with
``pytest -s`` or on failure).  The full suite report is computed once per
session and shared.
"""

import tempfile

import pytest

from exlie import cli


@pytest.fixture(scope="session")
def full_report():
    cache_dir = tempfile.mkdtemp(prefix="exlie-acceptance-")
    cfg = cli.SuiteConfig("all", cache_dir=cache_dir, seed=0, samples=5000)
    report, sections, elapsed = cli.run_suite(cfg)
    return report


def _criterion(report, number, name, id_prefixes):
    picked = [c for c in report["checks"]
              if any(c["id"].startswith(p) for p in id_prefixes)]
    assert picked, "no checks selected for criterion %d" % number
    ok = all(c["pass"] for c in picked)
    print("ACCEPTANCE %d (%s): %s  [%d checks]"
          % (number, name, "PASS" if ok else "FAIL", len(picked)))
    for c in picked:
        if not c["pass"]:
            print("  FAILED %s: expected %s, got %s"
                  % (c["id"], c["expected"], c["actual"]))
    assert ok


def test_criterion_1_dimensions(full_report):
    _criterion(full_report, 1, "dimensions", ["dims."])


def test_criterion_2_killing_constants(full_report):
    _criterion(full_report, 2, "killing constants",
               ["killing.trace", "killing.inner", "killing.constant",
                "killing.closed-vs-brute", "killing.restriction"])


def test_criterion_3_root_systems(full_report):
    _criterion(full_report, 3, "root systems",
               ["roots21.cartan", "roots21.rank", "roots21.count",
                "roots21.zero-block", "roots21.table", "roots21.display",
                "roots35.cartan", "roots35.rank", "roots35.count",
                "roots35.zero-block", "roots35.table",
                "roots66.cartan", "roots66.rank", "roots66.count",
                "roots66.zero-block", "roots66.table",
                "roots133.cartan", "roots133.rank", "roots133.count",
                "roots133.zero-block", "roots133.table",
                "roots133.vector-spots"])


def test_criterion_4_fundamental_systems(full_report):
    _criterion(full_report, 4, "fundamental systems",
               ["roots21.fundamental", "roots21.expansion-rows",
                "roots35.fundamental", "roots35.expansion-rows",
                "roots66.fundamental", "roots66.expansion-rows",
                "roots133.fundamental", "roots133.expansion-rows"])


def test_criterion_5_root_geometry(full_report):
    _criterion(full_report, 5, "root geometry",
               ["roots21.canonical", "roots21.inners", "roots21.type",
                "roots21.independent-type",
                "roots35.canonical", "roots35.inners", "roots35.type",
                "roots35.independent-type",
                "roots66.canonical", "roots66.inners", "roots66.type",
                "roots66.independent-type",
                "roots133.canonical", "roots133.inners", "roots133.type",
                "roots133.independent-type"])


def test_criterion_6_null_locus(full_report):
    _criterion(full_report, 6, "null locus", ["wspace."])


def test_criterion_7_triality(full_report):
    _criterion(full_report, 7, "triality displays",
               ["triality.display", "triality.zero"])


def test_criterion_8_property_suites(full_report):
    _criterion(full_report, 8, "property suites",
               ["cayley.", "triality.cyclic", "triality.span-closure",
                "killing.jacobi", "killing.ad-invariance",
                "roots21.jacobi", "roots35.jacobi"])


def test_everything_passed(full_report):
    s = full_report["summary"]
    print("ACCEPTANCE TOTAL: %d/%d checks passed"
          % (s["passed"], s["total"]))
    assert s["failed"] == 0
