import json
import os

import pytest

from hopfcheck.cli import (
    GBCache,
    cache_roundtrip,
    emit_report,
    report_json,
    report_markdown,
    run_config,
    validate_config,
)
from hopfcheck.errors import CacheCorrupt, ConfigInvalid, VersionMismatch
from hopfcheck.rewrite import system_cache_key


def small_config(**over):
    cfg = {
        "instance": {"kind": "GLq", "q": "2"},
        "degree_bound": 6,
        "checks": ["invariants", "nakayama", "resolution", "cohomology"],
    }
    cfg.update(over)
    return cfg


def test_validate_rejects_unknown_keys():
    with pytest.raises(ConfigInvalid):
        validate_config(small_config(bogus=1))
    with pytest.raises(ConfigInvalid):
        validate_config(small_config(checks=["hopf", "nope"]))
    cfg = small_config()
    cfg["instance"] = {"kind": "GLq", "q": "2", "extra": 1}
    with pytest.raises(ConfigInvalid):
        validate_config(cfg)


def test_validate_requires_seed_for_random():
    with pytest.raises(ConfigInvalid):
        validate_config({"instance": {"kind": "GAB", "n": 3},
                         "degree_bound": 6, "checks": ["hopf"]})


def test_validate_check_applicability():
    with pytest.raises(ConfigInvalid):
        validate_config(small_config(checks=["galois"]))


def test_run_small_config_passes():
    rep, code = run_config(small_config())
    assert code == 0
    assert all(c["status"] == "pass" for c in rep["checks"])
    coh = next(c for c in rep["checks"] if c["name"] == "cohomology")
    assert coh["details"]["H_b"] == [1, 1, 0, 1, 1]


def test_empty_checks_exit_zero():
    rep, code = run_config(small_config(checks=[]))
    assert code == 0
    assert rep["checks"] == []


def test_q1_genericity_fails_and_cohomology_skipped():
    cfg = small_config(checks=["invariants", "cohomology"])
    cfg["instance"] = {"kind": "GLq", "q": "1"}
    rep, code = run_config(cfg)
    assert code == 1
    inv = next(c for c in rep["checks"] if c["name"] == "invariants")
    assert inv["status"] == "fail"
    coh = next(c for c in rep["checks"] if c["name"] == "cohomology")
    assert coh["status"] == "uncertified"
    assert any("skipped" in w for w in coh["witnesses"])


def test_low_degree_bound_is_uncertified():
    cfg = small_config(degree_bound=2, checks=["resolution"])
    rep, code = run_config(cfg)
    assert code == 2
    res = rep["checks"][0]
    assert res["status"] == "uncertified"


def test_reports_deterministic():
    cfg = small_config(checks=["invariants", "nakayama"])
    rep1, _ = run_config(cfg)
    rep2, _ = run_config(cfg)
    body1 = json.dumps({k: v for k, v in rep1.items() if k != "timings"},
                       sort_keys=True)
    body2 = json.dumps({k: v for k, v in rep2.items() if k != "timings"},
                       sort_keys=True)
    assert body1 == body2


def test_markdown_report_contents():
    rep, _ = run_config(small_config())
    md = report_markdown(rep)
    assert "H_b: 1,1,0,1,1" in md
    assert "Nakayama automorphism" in md
    assert "| invariants | pass |" in md


def test_exit_code_contract_synthetic():
    import itertools
    from hopfcheck.cli import exit_code_of

    assert exit_code_of([]) == 0
    for n in (1, 2, 3):
        for combo in itertools.product(["pass", "fail", "uncertified"], repeat=n):
            got = exit_code_of(list(combo))
            if "fail" in combo:
                assert got == 1
            elif "uncertified" in combo:
                assert got == 2
            else:
                assert got == 0


def test_cache_roundtrip(tmp_path, slq6):
    rs2 = cache_roundtrip(slq6.rs, str(tmp_path))
    assert rs2.certified_degree == slq6.rs.certified_degree


def test_cache_tamper_detected(tmp_path, slq6):
    cache = GBCache(str(tmp_path))
    key = system_cache_key([r.poly() for r in slq6.rs.rules], slq6.rs.order,
                           slq6.rs.certified_degree)
    path = cache.store(key, slq6.rs)
    with open(path) as fh:
        blob = json.load(fh)
    blob["payload"]["rules"][0]["tail"][0]["coeff"] = "9/1"
    with open(path, "w") as fh:
        json.dump(blob, fh)
    with pytest.raises(CacheCorrupt):
        cache.load(key)


def test_cache_version_mismatch(tmp_path, slq6):
    cache = GBCache(str(tmp_path))
    key = system_cache_key([r.poly() for r in slq6.rs.rules], slq6.rs.order,
                           slq6.rs.certified_degree)
    path = cache.store(key, slq6.rs)
    with open(path) as fh:
        blob = json.load(fh)
    blob["version"] = 0
    with open(path, "w") as fh:
        json.dump(blob, fh)
    with pytest.raises(VersionMismatch):
        cache.load(key)


def test_cached_run_matches_fresh(tmp_path):
    cfg = small_config(checks=["invariants", "resolution"],
                       cache_dir=str(tmp_path))
    rep1, code1 = run_config(cfg)
    assert code1 == 0
    assert os.listdir(tmp_path)  # the GB landed in the cache
    rep2, code2 = run_config(cfg)
    assert code2 == 0
    body1 = json.dumps({k: v for k, v in rep1.items() if k != "timings"}, sort_keys=True)
    body2 = json.dumps({k: v for k, v in rep2.items() if k != "timings"}, sort_keys=True)
    assert body1 == body2


def test_emit_report_file(tmp_path):
    rep, _ = run_config(small_config(checks=["invariants"]))
    out = tmp_path / "report.json"
    emit_report(rep, "json", str(out))
    blob = json.loads(out.read_text())
    assert "report" in blob and "timings" in blob
    md = emit_report(rep, "markdown")
    assert md.startswith("# verification report")


def test_cli_entry_point(tmp_path):
    from hopfcheck.cli import main
    cfg = small_config(checks=["invariants", "nakayama"],
                       report_path=str(tmp_path / "out.json"))
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    code = main(["run", str(cfg_path), "--md", str(tmp_path / "out.md")])
    assert code == 0
    assert (tmp_path / "out.json").exists()
    assert "Nakayama" in (tmp_path / "out.md").read_text()
    code = main(["report", str(tmp_path / "out.json"), "--md"])
    assert code == 0
    # gb prebuild populates the cache from the env override
    import os
    os.environ["HOPFCHECK_CACHE"] = str(tmp_path / "cache")
    try:
        code = main(["gb", str(cfg_path)])
    finally:
        del os.environ["HOPFCHECK_CACHE"]
    assert code == 0
    assert os.listdir(tmp_path / "cache")
