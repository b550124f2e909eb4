import csv
import io
import json
import subprocess
import sys

import pytest

from twobridge_tqft.cache import CACHE_ENV_VAR, SCHEMA_VERSION, ArtifactCache, resolve_cache_dir
from twobridge_tqft.cli import main
from twobridge_tqft.frobenius import use_disk_cache


@pytest.fixture(autouse=True)
def _no_disk_cache():
    yield
    use_disk_cache(None)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_riley(capsys):
    code, out, _ = run(capsys, "riley", "--p", "5", "--q", "3")
    data = json.loads(out)
    assert code == 0
    assert data["riley"] == ["1/1", "0/1", "-1/1", "0/1", "1/1"]
    assert data["eps"] == [1, -1, -1, 1] and data["ell"] == 3 and data["ell_prime"] == 3


def test_signature(capsys):
    code, out, _ = run(capsys, "signature", "--p", "3", "--q", "1", "--g", "4")
    assert code == 0 and json.loads(out)["sigma"] == 16
    code, out, _ = run(capsys, "signature", "--p", "7", "--q", "3", "--g", "0", "--colors", "2,2")
    assert code == 0 and json.loads(out) == {"p": 7, "q": 3, "g": 0, "colors": [2, 2], "sigma": -1}


def test_invsum_sum2_column_is_zero(capsys):
    code, out, _ = run(capsys, "invsum", "--pmax", "25")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows
    assert list(rows[0]) == ["p", "q", "sum1", "sum2", "expected1"]
    assert all(r["sum2"] == "0" for r in rows)
    assert all(r["sum1"] == r["expected1"] for r in rows)


def test_invsum_with_q1_emits_rationals(capsys):
    code, out, _ = run(capsys, "invsum", "--pmax", "7", "--include-q1")
    rows = {(r["p"], r["q"]): r for r in csv.DictReader(io.StringIO(out))}
    assert code == 0
    assert rows[("3", "1")]["sum1"] == "-1/2" and rows[("7", "1")]["expected1"] == "-5/2"


def test_frobenius_and_torsion(capsys):
    code, out, _ = run(capsys, "frobenius", "--p", "5", "--q", "3")
    data = json.loads(out)
    assert data["omega"] == ["2/1", "0/1", "2/1"] and data["eta_diagonal"] == [1, 1, -1, -1]
    for rep in ("1", "2"):
        code, out, _ = run(capsys, "torsion", "--p", "7", "--q", "3", "--rep", rep, "--formula", "raw")
        data = json.loads(out)
        assert code == 0 and data["match"] and data["formula"] == "raw"


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, "signature", "--p", "9", "--q", "3", "--g", "2")
    assert code == 2 and json.loads(err)["status"] == "invalid_input"
    with pytest.raises(SystemExit) as info:
        main(["riley", "--p", "5"])
    assert info.value.code == 2


def test_qlemma_and_asymptotic(capsys):
    code, out, _ = run(capsys, "qlemma", "--a", "3", "--b", "2", "--c", "4", "--d", "3")
    data = json.loads(out)
    assert code == 0 and data["ok"] and all(data["clauses"].values())
    code, out, _ = run(capsys, "asymptotic", "--a", "3", "--b", "2", "--c", "4", "--d", "3", "--nmax", "15")
    data = json.loads(out)
    assert code == 0 and data["alpha"] == [1, 1, 1] and data["conditionH"]
    assert data["limit_traces"]["4"] == 1345
    assert [r["n"] for r in data["ratio_rows"]] == [11, 13, 15]
    code, out, _ = run(capsys, "asymptotic", "--a", "3", "--b", "2", "--c", "4", "--d", "3", "--nmax", "13",
                       "--format", "csv")
    assert out.splitlines()[0] == "n,p,q,sigma,dim,ratio,limit,error"


def test_condition_sweep(capsys):
    code, out, _ = run(capsys, "conditionH-sweep", "--dmax", "10")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and all(r["ok"] == "true" for r in rows)
    assert rows[0] == {"b": "0", "d": "1", "a": "1", "c": "2", "ok": "true"}


def test_verify_reports(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--pmax", "13")
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0 and data["first_counterexample"] is None
    code, out, _ = run(capsys, "verify", "--suite", "sums", "--pmax", "15")
    assert code == 0 and json.loads(out)["passed"] == json.loads(out)["total"]


def test_verify_asymptotics_reports_reference_mismatch(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "asymptotics")
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0
    assert data["limit_traces"] == {"2": 1, "3": 1, "4": 1345, "5": 1793, "6": 2241}
    assert data["reference_table_mismatches"] == {"5": {"computed": 1793, "reference": 1762}}


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["invsum", "--pmax", "19", "--output", str(a)]) == 0
    assert main(["invsum", "--pmax", "19", "--output", str(b), "--threads", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cache_hit_equals_cold_run(tmp_path, capsys):
    cold = run(capsys, "frobenius", "--p", "23", "--q", "9")[1]
    warm1 = run(capsys, "frobenius", "--p", "23", "--q", "9", "--cache-dir", str(tmp_path))[1]
    assert (tmp_path / "23_9.json").exists()
    use_disk_cache(None)
    warm2 = run(capsys, "frobenius", "--p", "23", "--q", "9", "--cache-dir", str(tmp_path))[1]
    assert cold == warm1 == warm2
    record = json.loads((tmp_path / "23_9.json").read_text())
    assert record["schema"] == SCHEMA_VERSION and record["key"] == "23_9"


def test_cache_rejects_stale_schema(tmp_path):
    cache = ArtifactCache(tmp_path)
    cache.algebra(7, 3)
    path = tmp_path / "7_3.json"
    record = json.loads(path.read_text())
    record["schema"] = SCHEMA_VERSION + 1
    record["omega"] = ["5/1"]
    path.write_text(json.dumps(record))
    assert cache.load(7, 3) is None
    assert cache.algebra(7, 3).omega.to_json() == ["0/1", "0/1", "-6/1", "0/1", "-2/1"]


def test_cache_dir_resolution(monkeypatch, tmp_path):
    monkeypatch.delenv(CACHE_ENV_VAR, raising=False)
    assert resolve_cache_dir(None) is None
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    assert resolve_cache_dir(None) == tmp_path
    assert resolve_cache_dir("/elsewhere").as_posix() == "/elsewhere"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twobridge_tqft", "riley", "--p", "3", "--q", "1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["riley"] == ["1/1", "0/1", "1/1"]
