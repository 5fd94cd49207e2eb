"""Config-driven verification runs, persistent GB caches, and reports.

A run executes the requested checks in dependency order against one
instance.  Reports are deterministic for a fixed config and seed: all
timing data is quarantined in a separate section so the rest of the JSON
is byte-identical across runs.
"""

import argparse
import hashlib
import json
import os
import sys
import time

from .cohomology import bialgebra_cohomology, gs_dimension_report
from .complexes import (
    build_glq_complexes,
    build_twist_chainmap,
    build_left_resolution,
    build_slq_resolution,
    build_yd_resolution,
    dualize_resolution,
    gamma_identity_suite,
    laurent_cone,
    probe_exactness,
)
from .errors import (
    CacheCorrupt,
    ConfigInvalid,
    ExceedsCertifiedDegree,
    HopfcheckError,
    NeedsFieldExtension,
    UnexpectedHomDimension,
    UnitCollapse,
    VersionMismatch,
)
from .foundation import Mat, frac, frac_str, genericity_check, matrix_invariants
from .hopf import (
    a_q_matrix,
    antipode_squared_sovereign,
    build_gab,
    build_gabcd,
    build_slq,
    build_slq_laurent,
    cogroupoid_suite,
    commutation_check,
    glq_slq_laurent_iso,
    nakayama_G,
    nakayama_galois,
    seeded_pair,
    verify_hopf_axioms,
)
from .rewrite import RewriteSystem, system_cache_key

CHECK_ORDER = [
    "invariants", "hopf", "nakayama", "cogroupoid", "galois",
    "resolution", "gamma", "dual", "twist",
    "slq", "cone", "glq_iso", "probe", "cohomology",
]

_INSTANCE_KEYS = {"kind", "A", "B", "C", "D", "q", "n", "conjugator"}
_PROBE_KEYS = {"N", "slack", "laurent_window"}
_TOP_KEYS = {"instance", "degree_bound", "probe", "checks", "cache_dir",
             "report_path", "seed"}


class GBCache:
    """Content-addressed store of completed rewrite systems."""

    def __init__(self, directory):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, key):
        return os.path.join(self.directory, f"gb-{key}.json")

    def load(self, key):
        path = self._path(key)
        if not os.path.exists(path):
            return None
        with open(path) as fh:
            blob = json.load(fh)
        if blob.get("version") != RewriteSystem.FORMAT_VERSION:
            raise VersionMismatch(f"cache format {blob.get('version')}")
        payload = json.dumps(blob["payload"], sort_keys=True, separators=(",", ":"))
        digest = hashlib.sha256(payload.encode()).hexdigest()
        if digest != blob.get("hash"):
            raise CacheCorrupt(path)
        return RewriteSystem.from_dict(blob["payload"])

    def store(self, key, rs):
        payload = rs.to_dict()
        blob = {
            "version": RewriteSystem.FORMAT_VERSION,
            "key": key,
            "hash": hashlib.sha256(
                json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
            ).hexdigest(),
            "payload": payload,
        }
        path = self._path(key)
        with open(path, "w") as fh:
            json.dump(blob, fh, sort_keys=True, indent=1)
        return path


def cache_roundtrip(rs, directory, probes=None, seed=7):
    """Store and reload a system; verify normal forms agree on seeded probes."""
    import random

    from .foundation import NCPoly

    cache = GBCache(directory)
    key = system_cache_key([r.poly() for r in rs.rules], rs.order,
                           rs.certified_degree)
    cache.store(key, rs)
    rs2 = cache.load(key)
    rng = random.Random(seed)
    ngens = len(rs.order.weights)
    if probes is None:
        probes = []
        for _ in range(100):
            p = NCPoly.zero()
            for _ in range(3):
                length = rng.randint(0, 4)
                w = tuple(rng.randrange(ngens) for _ in range(length))
                if rs.order.weight(w) <= rs.certified_degree:
                    p = p + NCPoly.term(w, rng.randint(-3, 3))
            probes.append(p)
    for p in probes:
        if rs.normal_form(p) != rs2.normal_form(p):
            raise CacheCorrupt("roundtrip normal forms differ")
    return rs2


# ---------------------------------------------------------------------------
# configuration


def validate_config(cfg):
    if not isinstance(cfg, dict):
        raise ConfigInvalid("config must be an object")
    unknown = set(cfg) - _TOP_KEYS
    if unknown:
        raise ConfigInvalid(f"unknown config keys: {sorted(unknown)}")
    for req in ("instance", "degree_bound", "checks"):
        if req not in cfg:
            raise ConfigInvalid(f"missing config key: {req}")
    inst = cfg["instance"]
    if not isinstance(inst, dict) or "kind" not in inst:
        raise ConfigInvalid("instance must be an object with a kind")
    unknown = set(inst) - _INSTANCE_KEYS
    if unknown:
        raise ConfigInvalid(f"unknown instance keys: {sorted(unknown)}")
    kind = inst["kind"]
    if kind not in ("GLq", "GAB", "GABCD"):
        raise ConfigInvalid(f"unsupported instance kind: {kind}")
    if kind == "GLq" and "q" not in inst:
        raise ConfigInvalid("GLq instance needs q")
    if kind == "GAB" and "A" not in inst and "seed" not in cfg:
        raise ConfigInvalid("seed is mandatory for seeded random matrices")
    if not isinstance(cfg["degree_bound"], int) or cfg["degree_bound"] < 2:
        raise ConfigInvalid("degree_bound must be an integer >= 2")
    checks = cfg["checks"]
    bad = [c for c in checks if c not in CHECK_ORDER]
    if bad:
        raise ConfigInvalid(f"unknown checks: {bad}")
    probe = cfg.get("probe", {})
    unknown = set(probe) - _PROBE_KEYS
    if unknown:
        raise ConfigInvalid(f"unknown probe keys: {sorted(unknown)}")
    needs_cd = {"galois", "cogroupoid"} & set(checks)
    if needs_cd and kind != "GABCD" and "conjugator" not in inst and "C" not in inst:
        raise ConfigInvalid(f"{sorted(needs_cd)} need (C,D) or a conjugator")
    needs_q = {"slq", "cone", "glq_iso"} & set(checks)
    if needs_q and kind != "GLq":
        raise ConfigInvalid(f"{sorted(needs_q)} require a GLq instance")
    return cfg


def _instance_matrices(cfg):
    inst = cfg["instance"]
    kind = inst["kind"]
    out = {"kind": kind, "q": frac(inst["q"]) if "q" in inst else None}
    if kind == "GLq":
        A = a_q_matrix(out["q"])
        B = A.inverse()
    elif "A" in inst:
        A, B = Mat(inst["A"]), Mat(inst["B"])
    else:
        A, B = seeded_pair(cfg["seed"], inst.get("n", 3))
    out["A"], out["B"] = A, B
    if kind == "GABCD":
        out["C"], out["D"] = Mat(inst["C"]), Mat(inst["D"])
    elif "conjugator" in inst:
        F = Mat(inst["conjugator"])
        out["C"] = F.transpose() * A * F
        out["D"] = F.inverse() * B * F.transpose().inverse()
    elif "C" in inst:
        out["C"], out["D"] = Mat(inst["C"]), Mat(inst["D"])
    return out


# ---------------------------------------------------------------------------
# the individual checks


def _fails_to_witnesses(failures):
    return [str(f) for f in failures[:5]]


def _run_checks(cfg, cache):
    mats = _instance_matrices(cfg)
    bound = cfg["degree_bound"]
    probe_cfg = cfg.get("probe", {})
    N = probe_cfg.get("N", 6)
    slack = probe_cfg.get("slack", 2)
    window = probe_cfg.get("laurent_window", 2)
    ctx = {}
    results = []
    requested = [c for c in CHECK_ORDER if c in cfg["checks"]]

    def get_alg():
        if "alg" not in ctx:
            ctx["alg"] = build_gab(mats["A"], mats["B"], bound, cache=cache)
        return ctx["alg"]

    def get_resolution():
        if "resolution" not in ctx:
            ctx["resolution"] = build_yd_resolution(get_alg())
        return ctx["resolution"]

    def get_slql():
        if "slql" not in ctx:
            ctx["slql"] = build_slq_laurent(mats["q"], bound, cache=cache)
        return ctx["slql"]

    def run(name):
        extras = {}
        witnesses = []
        if name == "invariants":
            inv = matrix_invariants(mats["A"], mats["B"])
            extras["lambda"] = frac_str(inv["lambda"])
            extras["trace"] = frac_str(inv["trace"])
            if mats["q"] is not None and inv["lambda"] == 1:
                try:
                    gen = genericity_check(mats["A"], mats["B"], mats["q"])
                    extras["generic"] = gen["generic"]
                    extras["roots"] = [frac_str(r) for r in gen["roots"]]
                    ctx["generic"] = gen["generic"]
                    if not gen["generic"]:
                        witnesses.append(f"non-generic roots {extras['roots']}")
                        return "fail", witnesses, extras
                except NeedsFieldExtension as e:
                    extras["generic"] = None
                    witnesses.append(f"irrational roots: {e}")
            return "pass", witnesses, extras
        if name == "hopf":
            alg = get_alg()
            reps = [verify_hopf_axioms(alg), antipode_squared_sovereign(alg),
                    commutation_check(alg)]
            bad = [r for r in reps if not r["ok"]]
            if bad:
                return "fail", _fails_to_witnesses(bad[0]["failures"]), extras
            return "pass", witnesses, extras
        if name == "nakayama":
            nk = nakayama_G(get_alg())
            extras["mu"] = {get_alg().names[g]: nk["mu"].images[g].pretty()
                            for g in range(get_alg().ngens())}
            extras["xi"] = [frac_str(v) for v in nk["xi"].values]
            extras["inner_power"] = nk["inner_power"]
            if not nk["report"]["ok"]:
                return "fail", _fails_to_witnesses(nk["report"]["failures"]), extras
            return "pass", witnesses, extras
        if name == "cogroupoid":
            rep = cogroupoid_suite(
                [(mats["A"], mats["B"]), (mats["C"], mats["D"])], bound)
            extras["checks"] = rep["checks"]
            if not rep["ok"]:
                return "fail", _fails_to_witnesses(rep["failures"]), extras
            return "pass", witnesses, extras
        if name == "galois":
            gal = build_gabcd(mats["A"], mats["B"], mats["C"], mats["D"],
                              bound, cache=cache)
            gal_op = build_gabcd(mats["C"], mats["D"], mats["A"], mats["B"],
                                 bound, cache=cache)
            try:
                extras["nonzero_up_to"] = gal.rs.nonzero_witness()["nonzero_up_to"]
            except UnitCollapse:
                return "fail", ["algebra collapsed (UnitCollapse)"], extras
            ng = nakayama_galois(gal, gal_op)
            extras["warnings"] = ng["report"]["warnings"]
            if not ng["report"]["ok"]:
                return "fail", _fails_to_witnesses(ng["report"]["failures"]), extras
            return "pass", witnesses, extras
        if name == "resolution":
            rep = get_resolution().is_complex()
            if not rep["ok"]:
                return "fail", _fails_to_witnesses(rep["failures"]), extras
            return "pass", witnesses, extras
        if name == "gamma":
            rep = gamma_identity_suite(get_alg())
            extras["identities"] = rep["identities"]
            if not rep["ok"]:
                return "fail", _fails_to_witnesses(rep["failures"]), extras
            return "pass", witnesses, extras
        if name == "dual":
            ctx["dual"] = dualize_resolution(get_alg())
            rep = ctx["dual"].is_complex()
            if not rep["ok"]:
                return "fail", _fails_to_witnesses(rep["failures"]), extras
            return "pass", witnesses, extras
        if name == "twist":
            dual = ctx.get("dual") or dualize_resolution(get_alg())
            tw = build_twist_chainmap(get_alg(), dual,
                                      build_left_resolution(get_alg()))
            if not tw["report"]["ok"]:
                return "fail", _fails_to_witnesses(tw["report"]["failures"]), extras
            return "pass", witnesses, extras
        if name == "slq":
            slq = build_slq(mats["q"], bound, cache=cache)
            reps = [verify_hopf_axioms(slq), build_slq_resolution(slq).is_complex()]
            bad = [r for r in reps if not r["ok"]]
            if bad:
                return "fail", _fails_to_witnesses(bad[0]["failures"]), extras
            return "pass", witnesses, extras
        if name == "cone":
            lc = laurent_cone(get_slql())
            rep = lc["cone"].is_complex()
            if not lc["report"]["ok"] or not rep["ok"]:
                return "fail", _fails_to_witnesses(rep["failures"]), extras
            pr = probe_exactness(lc["cone"], N=min(N, 5), slack=slack,
                                 window=window)
            extras["probe"] = pr["positions"]
            if not pr["ok"]:
                return "fail", ["cone probe lift failure"], extras
            return "pass", witnesses, extras
        if name == "glq_iso":
            rep = glq_slq_laurent_iso(get_alg(), get_slql())["report"]
            if not rep["ok"]:
                return "fail", _fails_to_witnesses(rep["failures"]), extras
            return "pass", witnesses, extras
        if name == "probe":
            pr = probe_exactness(get_resolution(), N=N, slack=slack, window=window)
            extras["positions"] = pr["positions"]
            extras["lift_window"] = pr["lift_window"]
            if not pr["ok"]:
                return "fail", ["lift failure; see positions"], extras
            return "pass", witnesses, extras
        if name == "cohomology":
            if ctx.get("generic") is False:
                return "uncertified", ["skipped: genericity failed"], extras
            coh = bialgebra_cohomology(get_alg(), get_resolution())
            gs = gs_dimension_report(get_alg(), coh)
            extras["H_b"] = coh["dims"]
            extras["ranks"] = coh["ranks"]
            extras["gs"] = {"upper": gs["upper"], "lower": gs["lower"],
                            "verdict": gs["verdict"]}
            want = [1, 1, 0, 1, 1]
            if coh["dims"] != want:
                return "fail", [f"H_b dims {coh['dims']} != {want}"], extras
            return "pass", witnesses, extras
        raise ConfigInvalid(f"unknown check {name}")

    timings = {}
    for name in requested:
        t0 = time.monotonic()
        try:
            status, witnesses, extras = run(name)
        except ExceedsCertifiedDegree as e:
            status, witnesses, extras = "uncertified", [str(e)], {}
        except UnexpectedHomDimension as e:
            status, witnesses, extras = "fail", [str(e)], {}
        except UnitCollapse as e:
            status, witnesses, extras = "fail", [f"UnitCollapse: {e}"], {}
        timings[name] = round(time.monotonic() - t0, 3)
        entry = {"name": name, "status": status, "witnesses": witnesses,
                 "certified_degree": bound}
        if extras:
            entry["details"] = extras
        results.append(entry)
    return results, timings


def exit_code_of(statuses):
    """0 iff all pass; any failure dominates; else uncertified."""
    if "fail" in statuses:
        return 1
    if "uncertified" in statuses:
        return 2
    return 0


def run_config(cfg_or_path):
    """Execute a config; returns (report, exit_code)."""
    if isinstance(cfg_or_path, str):
        with open(cfg_or_path) as fh:
            cfg = json.load(fh)
    else:
        cfg = cfg_or_path
    cfg = validate_config(cfg)
    cache_dir = os.environ.get("HOPFCHECK_CACHE") or cfg.get("cache_dir")
    cache = GBCache(cache_dir) if cache_dir else None
    checks, timings = _run_checks(cfg, cache)
    statuses = [c["status"] for c in checks]
    code = exit_code_of(statuses)
    report = {
        "config": cfg,
        "checks": checks,
        "summary": {
            "pass": statuses.count("pass"),
            "fail": statuses.count("fail"),
            "uncertified": statuses.count("uncertified"),
            "exit_code": code,
        },
        "timings": timings,
    }
    return report, code


def report_json(report):
    """Deterministic JSON, timings quarantined at the end."""
    body = {k: v for k, v in report.items() if k != "timings"}
    blob = {"report": body, "timings": report.get("timings", {})}
    return json.dumps(blob, sort_keys=True, indent=1) + "\n"


def report_markdown(report):
    lines = ["# verification report", ""]
    lines.append("| check | status | notes |")
    lines.append("|---|---|---|")
    for c in report["checks"]:
        note = "; ".join(c["witnesses"]) if c["witnesses"] else ""
        lines.append(f"| {c['name']} | {c['status']} | {note} |")
    for c in report["checks"]:
        d = c.get("details", {})
        if "H_b" in d:
            lines.append("")
            lines.append("## bialgebra cohomology")
            lines.append("| n | 0 | 1 | 2 | 3 | 4 |")
            lines.append("|---|---|---|---|---|---|")
            lines.append("| H_b | " + " | ".join(str(x) for x in d["H_b"]) + " |")
            lines.append("")
            lines.append(f"H_b: {','.join(str(x) for x in d['H_b'])}")
            gs = d.get("gs")
            if gs:
                lines.append(f"cd_GS: upper={gs['upper']} lower={gs['lower']}"
                             f" -> {gs['verdict']}")
        if "mu" in d:
            lines.append("")
            lines.append("## Nakayama automorphism")
            lines.append("| generator | mu |")
            lines.append("|---|---|")
            for g, img in d["mu"].items():
                lines.append(f"| {g} | {img} |")
    lines.append("")
    return "\n".join(lines)


def emit_report(report, fmt="json", path=None):
    text = report_json(report) if fmt == "json" else report_markdown(report)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def main(argv=None):
    ap = argparse.ArgumentParser(prog="verify",
                                 description="symbolic verification suites")
    sub = ap.add_subparsers(dest="cmd", required=True)
    runp = sub.add_parser("run", help="run the checks of a config")
    runp.add_argument("config")
    runp.add_argument("--report", help="write the JSON report here")
    runp.add_argument("--md", help="write a markdown report here")
    gbp = sub.add_parser("gb", help="prebuild the Groebner cache of a config")
    gbp.add_argument("config")
    repp = sub.add_parser("report", help="render a stored JSON report")
    repp.add_argument("report_file")
    repp.add_argument("--md", action="store_true")
    args = ap.parse_args(argv)

    if args.cmd == "run":
        report, code = run_config(args.config)
        with open(args.config) as fh:
            cfg = json.load(fh)
        target = args.report or cfg.get("report_path")
        if target:
            emit_report(report, "json", target)
        if args.md:
            emit_report(report, "markdown", args.md)
        sys.stdout.write(report_markdown(report))
        return code
    if args.cmd == "gb":
        with open(args.config) as fh:
            cfg = json.load(fh)
        cfg = validate_config(cfg)
        cache_dir = os.environ.get("HOPFCHECK_CACHE") or cfg.get("cache_dir")
        if not cache_dir:
            raise ConfigInvalid("gb prebuild needs cache_dir or HOPFCHECK_CACHE")
        cache = GBCache(cache_dir)
        mats = _instance_matrices(cfg)
        alg = build_gab(mats["A"], mats["B"], cfg["degree_bound"], cache=cache)
        sys.stdout.write(f"cached {alg.name}: {len(alg.rs.rules)} rules\n")
        return 0
    if args.cmd == "report":
        with open(args.report_file) as fh:
            blob = json.load(fh)
        report = blob["report"]
        report["timings"] = blob.get("timings", {})
        sys.stdout.write(report_markdown(report) if args.md
                         else report_json(report))
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
