import csv
import io
import json
import os
import subprocess
import sys

import pytest

PKG_ENV = None


def run_cli(args, cache_dir, check=True):
    env = dict(os.environ, HEXAMAGIC_CACHE=cache_dir)
    proc = subprocess.run(
        [sys.executable, "-m", "hexamagic.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )
    if check and proc.returncode != 0:
        raise AssertionError(f"exit {proc.returncode}:\n{proc.stderr}")
    return proc


@pytest.fixture(scope="module")
def cli_cache(tmp_path_factory, pipeline, cache_dir):
    # warm the shared cache once through the pipeline fixtures, then let
    # the CLI reuse it
    pipeline.pentagrams
    pipeline.wa_full
    pipeline.orbit_records
    pipeline.complement_names
    pipeline.edge_entanglement
    return cache_dir


def manifest_of(proc):
    return json.loads(proc.stderr.strip().splitlines()[-1])


def test_space_counts(cli_cache):
    proc = run_cli(["space", "--counts"], cli_cache)
    out = json.loads(proc.stdout)
    assert out == {
        "points": 63,
        "lines": 315,
        "fano": 135,
        "edges": 945,
        "edge_signs": {"plus": 621, "minus": 324},
    }


def test_table1(cli_cache):
    proc = run_cli(["table1"], cli_cache)
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    assert len(rows) == 25
    assert sum(int(r["copies"]) for r in rows) == 16_383
    byname = {r["type"]: r for r in rows}
    assert byname["V6"]["complement_name"] == "dyck"
    assert byname["V6"]["copies"] == "63"
    assert byname["V4"]["stabilizer_order"] == "336"


def test_table2(cli_cache):
    proc = run_cli(["table2"], cli_cache)
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    trivial = rows[-1]
    assert trivial["hyperplane"] == "trivial"
    assert trivial["count"] == "12096"
    assert trivial["split"] == "108+4104+7884"
    v3 = next(r for r in rows if r["hyperplane"] == "V3")
    assert v3["count"] == "336"
    assert v3["split"] == "2+84+250"
    assert v3["cps_times_count"] == "12096"


def test_table3_row_filter(cli_cache):
    proc = run_cli(["table3", "--hyperplane", "V4"], cli_cache)
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    assert len(rows) == 1
    assert rows[0]["count"] == "336"
    assert rows[0]["cps_times_count"] == "12096"


def test_table4_trivial(cli_cache):
    proc = run_cli(["table4", "--hyperplane", "trivial"], cli_cache)
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    strings = {r["type"]: r["string"] for r in rows}
    assert strings["1"] == "[-,-,-,54,-,54]"
    assert strings["2"] == "[-,810,972,1836,324,162]"
    assert strings["3"] == "[648,2862,2916,1134,324,-]"


def test_table5_exits_zero(cli_cache):
    proc = run_cli(["table5", "--criterion", "A"], cli_cache)
    assert proc.returncode == 0
    assert "criterion-dependent" in proc.stderr
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    assert {r["hyperplane"] for r in rows} == {"V22", "V10", "V9", "V5", "V4"}


def test_groups_orders(cli_cache):
    proc = run_cli(["groups", "--orders"], cli_cache)
    out = json.loads(proc.stdout)
    assert out == {"sp62": 1_451_520, "g2_2": 12_096, "sym35_structure": 40_320}


def test_shannon(cli_cache):
    proc = run_cli(["--format", "json", "shannon"], cli_cache)
    rows = json.loads(proc.stdout)
    c5 = next(r for r in rows if r["graph"] == "pentagon-C5")
    assert (c5["alpha"], c5["alpha_strong_square"]) == (2, 5)


def test_appendix_check(cli_cache):
    proc = run_cli(["appendix-check", "--samples", "4", "--seed", "3"], cli_cache)
    out = json.loads(proc.stdout)
    assert out["w_found"] is False
    assert out["line_pairs"] == 315


def test_wa_summary(cli_cache):
    proc = run_cli(["wa", "--full"], cli_cache)
    out = json.loads(proc.stdout)
    assert out["total"] == 40_320
    assert out["conjecture_agreement"] is True
    assert out["untyped_nine_negative"] == 18


def test_pentagrams_summary(cli_cache):
    proc = run_cli(["pentagrams"], cli_cache)
    out = json.loads(proc.stdout)
    assert out["total"] == 12_096
    assert out["by_type"] == {"1": 108, "2": 4104, "3": 7884}


def test_exit_code_usage_error(cli_cache):
    proc = run_cli(["no-such-command"], cli_cache, check=False)
    assert proc.returncode == 2
    proc = run_cli(["export", "pentagrams"], cli_cache, check=False)
    assert proc.returncode == 2


def test_exit_code_io_error(cli_cache):
    proc = run_cli(
        ["export", "pentagrams", "/nonexistent-dir/out.json"], cli_cache, check=False
    )
    assert proc.returncode == 3


def test_export_round_trip(cli_cache, tmp_path):
    path = str(tmp_path / "pents.json")
    proc = run_cli(["export", "pentagrams", path], cli_cache)
    with open(path) as f:
        payload = json.load(f)
    assert payload["format"] == "hexamagic_pentagrams_v1"
    assert len(payload["configs"]) == 12_096
    first = payload["configs"][0]
    assert len(first["edges"]) == 5
    assert all(len(e["labels"]) == 4 and e["sign"] in (1, -1) for e in first["edges"])

    path2 = str(tmp_path / "hyps.json")
    run_cli(["export", "hyperplanes", path2], cli_cache)
    with open(path2) as f:
        hyps = json.load(f)
    assert len(hyps["configs"]) == 16_383
    assert len({c["orbit"] for c in hyps["configs"]}) == 25


def test_determinism_same_seed_same_output(cli_cache):
    a = run_cli(["table4", "--hyperplane", "V12"], cli_cache)
    b = run_cli(["table4", "--hyperplane", "V12"], cli_cache)
    assert a.stdout == b.stdout
    assert manifest_of(a)["result_sha256"] == manifest_of(b)["result_sha256"]


def test_copy_seed_changes_copy_reproducibly(cli_cache):
    a = run_cli(["table4", "--hyperplane", "V22", "--copy-seed", "1"], cli_cache)
    b = run_cli(["table4", "--hyperplane", "V22", "--copy-seed", "1"], cli_cache)
    assert a.stdout == b.stdout


def test_cache_hits_reported(cli_cache):
    proc = run_cli(["pentagrams"], cli_cache)
    m = manifest_of(proc)
    assert m["cache_hits"] >= 1


def test_corrupted_cache_detected(tmp_path, cli_cache):
    import shutil

    bad_cache = str(tmp_path / "cache")
    shutil.copytree(cli_cache, bad_cache)
    target = os.path.join(bad_cache, "pentagrams.json")
    with open(target) as f:
        obj = json.load(f)
    obj["payload"]["edges"][0] = [0, 1, 2, 3, 4]
    with open(target, "w") as f:
        json.dump(obj, f)
    proc = run_cli(["pentagrams"], bad_cache)
    assert "checksum mismatch" in proc.stderr
    out = json.loads(proc.stdout)
    assert out["total"] == 12_096


def test_csv_streams_clean(cli_cache):
    proc = run_cli(["table1"], cli_cache)
    reader = csv.reader(io.StringIO(proc.stdout))
    widths = {len(row) for row in reader}
    assert len(widths) == 1  # no diagnostics interleaved into the CSV


def test_export_wa(cli_cache, tmp_path):
    path = str(tmp_path / "wa.json")
    run_cli(["export", "wa", path], cli_cache)
    with open(path) as f:
        payload = json.load(f)
    assert payload["format"] == "hexamagic_wa_v1"
    assert len(payload["configs"]) == 40_320
    first = payload["configs"][0]
    assert len(first["lines"]) == 12
    assert all(len(l["labels"]) == 3 for l in first["lines"])


def test_verify_all_caches_and_speeds_up(cli_cache):
    cold = run_cli(["verify-all"], cli_cache, check=False)
    assert cold.returncode == 0
    warm = run_cli(["verify-all"], cli_cache, check=False)
    assert warm.returncode == 0
    assert "(cached)" in warm.stdout
    assert "(cached)" not in cold.stdout or manifest_of(cold)["cache_hits"] > 0
    ratio = manifest_of(cold)["wall_time_s"] / max(manifest_of(warm)["wall_time_s"], 1e-3)
    assert ratio >= 10


def test_wa_restricted_renders_signed_lines(cli_cache):
    proc = run_cli(["wa", "--hyperplane", "V22"], cli_cache)
    out = json.loads(proc.stdout)
    assert out["total"] == 7
    assert len(out["configs"]) == 7
    first = out["configs"][0]["lines"]
    assert len(first) == 12
    assert all(l[0] in "+-" for l in first)


def test_threads_byte_identical(cli_cache):
    a = run_cli(["wa", "--full", "--threads", "1", "--no-cache"], cli_cache)
    b = run_cli(["wa", "--full", "--threads", "2", "--no-cache"], cli_cache)
    assert a.stdout == b.stdout


def test_verify_all_cache_invalidated_by_artifact_change(cli_cache, tmp_path):
    import shutil

    mutated = str(tmp_path / "cache")
    shutil.copytree(cli_cache, mutated)
    run_cli(["verify-all"], mutated, check=False)
    # touch an artifact: the replay digest must miss and the suite rerun
    target = os.path.join(mutated, "edge_entanglement.json")
    with open(target) as f:
        obj = json.load(f)
    with open(target, "w") as f:
        json.dump(obj, f, indent=1)
    proc = run_cli(["verify-all"], mutated, check=False)
    assert proc.returncode == 0
    assert "(cached)" not in proc.stdout
