"""Sampling, the resumable runner, tables, structure laws and the CLI."""

import json
import os
import signal
import subprocess
import sys
import time
from collections import Counter

import numpy as np
import pytest

from oscschubert.combinat import SchubertProblemSpec
from oscschubert.exper import (
    RECORD_KEYS,
    ExperimentConfig,
    FrequencyTable,
    InstanceRecord,
    check_structures,
    derive_seed,
    read_records,
    read_sidecar,
    render,
    run_experiment,
    sample_instance,
    table_from_csv,
    table_from_json,
    tabulate,
)
from oscschubert.exper.cli import main
from oscschubert.schubert import INF, OsculationPoint, OsculationType, osculation_type

G24 = "GR(2,4): 1^4"
G36 = "GR(3,6): 2.1^2, 1^3"


def cfg(tmp_path, problem=G24, per_type=3, name="log.jsonl", **kw):
    return ExperimentConfig(problem=problem, instances_per_type=per_type, output_path=str(tmp_path / name), **kw)


# -- sampling ------------------------------------------------------------------------


@pytest.mark.parametrize("problem", [G24, G36, "GR(2,5): 1^6"])
def test_sampled_instances_have_the_requested_type(problem):
    prob = SchubertProblemSpec.parse(problem)
    for otype in OsculationType.all_for(prob):
        for index in range(5):
            rng = np.random.default_rng(derive_seed(7, otype, index))
            inst = sample_instance(prob, otype, rng)
            assert osculation_type(inst) == otype
            pts = inst.points
            assert len(set(pts)) == len(pts)
            assert all(p.conjugate() in pts for p in pts)
            assert [lam for lam, _ in inst.assignment] == list(prob.expanded())


def test_sampling_anchors_and_range():
    prob = SchubertProblemSpec.parse(G36)
    otype = OsculationType.of(prob, (2, 3))
    inst = sample_instance(prob, otype, np.random.default_rng(1), point_range=4)
    anchored = [(lam, t) for lam, t in inst.assignment if t in (INF, OsculationPoint.of(0))]
    assert sorted(lam.size for lam, _ in anchored) == [3, 3]  # both go to the (2,1) conditions
    for _, t in inst.assignment:
        if not t.is_infinite:
            assert abs(t.value.re) <= 4 and abs(t.value.im) <= 4
            assert (2 * t.value.re).denominator == 1  # integers or halves


def test_sampling_rejects_bad_parity():
    prob = SchubertProblemSpec.parse(G24)
    with pytest.raises(ValueError):
        OsculationType.of(prob, (3,))
    bogus = OsculationType(((prob.partitions[0], 3),))
    with pytest.raises(ValueError):
        sample_instance(prob, bogus, np.random.default_rng(0))


def test_derived_seeds():
    prob = SchubertProblemSpec.parse(G24)
    t4, t2 = OsculationType.of(prob, (4,)), OsculationType.of(prob, (2,))
    seeds = {derive_seed(0, t, i, a) for t in (t4, t2) for i in range(20) for a in range(3)}
    assert len(seeds) == 120  # all distinct
    assert derive_seed(0, t4, 3) == derive_seed(0, t4, 3)
    assert derive_seed(0, t4, 3) != derive_seed(1, t4, 3)
    assert all(0 <= s < 2**64 for s in seeds)


# -- records -------------------------------------------------------------------------


def test_record_roundtrip_and_key_check():
    rec = InstanceRecord(G24, 2, 4, 0, 12345, (4,), ("inf", "0", "1", "-1"), 2, 2, True, None, "inf(1)+zero(1)")
    line = rec.to_json()
    assert list(json.loads(line)) == list(RECORD_KEYS)
    assert InstanceRecord.from_json(line) == rec
    d = json.loads(line)
    d["extra"] = 1
    with pytest.raises(ValueError):
        InstanceRecord.from_json(json.dumps(d))
    assert rec.instance().points == tuple(OsculationPoint.of(p) for p in ("inf", "0", "1", "-1"))


def test_record_parity_validation():
    with pytest.raises(ValueError):
        InstanceRecord(G24, 2, 4, 0, 1, (4,), ("inf", "0", "1", "-1"), 1, 2, True, None, "")


# -- runner --------------------------------------------------------------------------


def test_run_is_deterministic_and_complete(tmp_path):
    recs = run_experiment(cfg(tmp_path))
    assert Counter(tuple(r.osculation_type) for r in recs) == {(4,): 3, (2,): 3, (0,): 3}
    assert [(tuple(r.osculation_type), r.instance_index) for r in recs] == [
        (t, i) for t in [(4,), (2,), (0,)] for i in range(3)
    ]
    assert all(r.transversal and r.elapsed_ms is None for r in recs)
    run_experiment(cfg(tmp_path, name="again.jsonl"))
    assert (tmp_path / "log.jsonl").read_bytes() == (tmp_path / "again.jsonl").read_bytes()


def test_records_rebuild_their_instances(tmp_path):
    for rec in run_experiment(cfg(tmp_path, problem=G36, per_type=1)):
        assert osculation_type(rec.instance()).as_tuple() == tuple(rec.osculation_type)


def test_workers_give_identical_logs(tmp_path):
    run_experiment(cfg(tmp_path, name="one.jsonl"))
    run_experiment(cfg(tmp_path, name="two.jsonl", workers=2))
    assert (tmp_path / "one.jsonl").read_bytes() == (tmp_path / "two.jsonl").read_bytes()


def test_resume_after_stop(tmp_path):
    full = cfg(tmp_path, name="full.jsonl")
    run_experiment(full)
    part = cfg(tmp_path, name="part.jsonl")
    run_experiment(part, stop_after=4)
    assert len(read_records(part.output_path)) == 4
    run_experiment(part)
    assert (tmp_path / "part.jsonl").read_bytes() == (tmp_path / "full.jsonl").read_bytes()


def test_resume_repairs_truncated_line(tmp_path):
    full = cfg(tmp_path, name="full.jsonl")
    run_experiment(full)
    data = (tmp_path / "full.jsonl").read_bytes()
    lines = data.split(b"\n")
    cut = b"\n".join(lines[:5]) + b"\n" + lines[5][:20]  # half-written sixth record
    (tmp_path / "cut.jsonl").write_bytes(cut)
    assert len(read_records(tmp_path / "cut.jsonl")) == 5
    run_experiment(cfg(tmp_path, name="cut.jsonl"))
    assert (tmp_path / "cut.jsonl").read_bytes() == data


def test_resume_after_kill(tmp_path):
    # a real interruption: kill the CLI mid-run, then resume and compare
    args = ["run", "--problem", G36, "--per-type", "4", "--seed", "3"]
    env = dict(os.environ, PYTHONHASHSEED="0")
    ref = tmp_path / "ref.jsonl"
    assert main(args + ["--output", str(ref)]) == 0
    killed = tmp_path / "killed.jsonl"
    proc = subprocess.Popen(
        [sys.executable, "-m", "oscschubert"] + args + ["--output", str(killed)],
        env=env, stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL,
    )
    deadline = time.time() + 60
    while time.time() < deadline and (not killed.exists() or killed.stat().st_size == 0):
        time.sleep(0.02)
    proc.send_signal(signal.SIGKILL)
    proc.wait()
    before = len(read_records(killed))
    assert main(args + ["--output", str(killed)]) == 0
    assert killed.read_bytes() == ref.read_bytes()
    assert before <= len(read_records(ref))


def test_resume_refuses_other_problem(tmp_path):
    run_experiment(cfg(tmp_path))
    with pytest.raises(ValueError):
        run_experiment(cfg(tmp_path, problem="GR(2,5): 1^6"))


def test_sidecar_records_resource_errors(tmp_path):
    from oscschubert.groebner import Budgets

    c = cfg(tmp_path, problem=G36, per_type=1, budgets=Budgets(max_pairs=1), types=((0, 1),))
    recs = run_experiment(c)
    assert recs == []
    side = read_sidecar(c.output_path)
    assert side and all(e["kind"] == "error" for e in side)


def test_config_file(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"problem": G24, "instances_per_type": 2, "master_seed": 5, "output_path": str(tmp_path / "x.jsonl")}))
    c = ExperimentConfig.from_file(path)
    assert c.instances_per_type == 2 and c.master_seed == 5
    path.write_text(json.dumps({"problem": G24, "instances_per_type": 2, "bogus": 1}))
    with pytest.raises(ValueError):
        ExperimentConfig.from_file(path)


# -- tables ----------------------------------------------------------------------------


def test_table_formats_roundtrip(tmp_path):
    recs = run_experiment(cfg(tmp_path, per_type=5))
    table = tabulate(recs)
    assert table.num_complex == 2 and table.total((4,)) == 5
    assert table_from_json(render(table, "json")) == table
    assert table_from_csv(render(table, "csv")) == table
    via = table_from_json(render(table_from_csv(render(table, "csv")), "json"))
    assert via == table
    text = render(table, "text")
    assert text.splitlines()[0] == f"{G24} = 2"
    assert "Number of real solutions" in text and "Total" in text


def test_empty_table():
    t = tabulate([])
    assert t.is_empty
    assert render(t, "text") == "(empty table)\n"
    assert table_from_json(render(t, "json")) == t
    with pytest.raises(ValueError):
        check_structures(t, G24)


def test_table_rejects_mixed_problems():
    a = {"problem": G24, "num_complex": 2, "transversal": True, "osculation_type": [4], "num_real": 2}
    b = dict(a, problem="GR(2,5): 1^6", num_complex=5)
    with pytest.raises(ValueError):
        tabulate([a, b])


# -- structure laws --------------------------------------------------------------------


def _table(problem, N, rows):
    return FrequencyTable(problem, N, {t: Counter(c) for t, c in rows.items()})


def test_structures_pass_on_real_data(tmp_path):
    report = check_structures(tabulate(run_experiment(cfg(tmp_path, problem=G36, per_type=2))), G36)
    assert report.ok, report.to_text()
    names = {l.name for l in report.laws}
    assert {"complex count", "parity", "MTV (all-real row)"} <= names


def test_structures_flag_violations():
    rep = check_structures(_table(G24, 2, {(4,): {0: 1, 2: 3}, (2,): {0: 2}}), G24)
    assert [l.name for l in rep.violations] == ["MTV (all-real row)"]
    rep = check_structures(_table(G24, 3, {(2,): {2: 1}}), G24)
    assert "complex count" in [l.name for l in rep.violations]


def test_sign_imbalance_law_and_mod4():
    # 3.3.3, 1^7 in Gr(4,8): every count is >= 0 and = 20 mod 4
    prob = "GR(4,8): 3.3.3, 1^7"
    good = _table(prob, 20, {(1, 7): {20: 3}, (1, 1): {0: 2, 4: 1, 8: 1}})
    assert check_structures(good, prob).ok
    bad = _table(prob, 20, {(1, 7): {20: 3}, (1, 1): {2: 1}})
    assert "mod 4 congruence" in [l.name for l in check_structures(bad, prob).violations]
    prob2 = "GR(3,6): 3.1.1, 1^4"  # complement 1.1... sigma lower bound applies
    rep = check_structures(_table(prob2, 2, {(1, 4): {2: 1}, (1, 0): {0: 1}}), prob2)
    law = next(l for l in rep.laws if l.name == "sign-imbalance lower bound")
    assert law.applicable


# -- CLI ---------------------------------------------------------------------------------


def test_cli_predict(capsys):
    assert main(["predict", "GR(4,8): 3.3.3, 1^7"]) == 0
    out = capsys.readouterr().out
    assert "complex solutions: 20" in out and "hook family" in out


def test_cli_solve(capsys):
    assert main(["solve", G24, "--points", "inf,0,1,-1", "--json", "--wronskian"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["num_real"] == 2 and out["transversal"] and out["wronskian_orders_ok"]


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", G24, "--points", "inf,0,1"],
        ["solve", G24, "--points", "inf,0,1,i"],
        ["solve", "GR(2,4): 1^3", "--points", "0,1,2"],
        ["bogus-verb"],
        ["run"],
        ["table", "/nonexistent/dir/log.jsonl"],
        ["verify-identity", "--k", "1", "--n", "4"],
    ],
)
def test_cli_usage_errors_exit_1(argv, capsys):
    assert main(argv) == 1


def test_cli_resource_error_exits_2():
    assert main(["solve", G36, "--points", "inf,0,1,2,3", "--max-pairs", "1"]) == 2


def test_cli_table_and_check(tmp_path, capsys):
    log = tmp_path / "log.jsonl"
    assert main(["run", "--problem", G24, "--per-type", "3", "--output", str(log)]) == 0
    assert main(["table", str(log), "--format", "csv"]) == 0
    assert main(["check", str(log)]) == 0
    # a log violating the all-real law makes check exit 3
    bad = tmp_path / "bad.jsonl"
    rec = InstanceRecord(G24, 2, 4, 0, 1, (4,), ("inf", "0", "1", "-1"), 0, 2, True, None, "")
    bad.write_text(rec.to_json() + "\n")
    assert main(["check", str(bad)]) == 3
    assert main(["check", str(tmp_path / "missing.jsonl")]) == 1


def test_cli_verify_identity():
    assert main(["verify-identity", "--k", "3", "--n", "6"]) == 0


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "oscschubert", "predict", G24], capture_output=True, text=True)
    assert out.returncode == 0 and "complex solutions: 2" in out.stdout
