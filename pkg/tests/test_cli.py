from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from cylpart.cli import main
from cylpart.partitions import Profile, enumerate_cylindric


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_map_golden():
    code, out, _ = run(["map", "--profile", "1,1"], "[[7,4,4,3],[6,5,4]]")
    assert code == 0
    obj = json.loads(out)
    assert (obj["mu"], obj["beta"]) == ([5, 5, 4, 3, 3, 3, 2], [7, 1])


def test_map_trace():
    code, out, _ = run(["map", "--trace"], '{"profile":[1,1],"rows":[[7,4,4,3],[6,5,4]]}')
    assert code == 0
    assert [s["j"] for s in json.loads(out)["trace"]] == [4, 1]


def test_unmap_golden():
    code, out, _ = run(["unmap"], '{"mu":[6,5,5,3,1],"beta":[9,7,3]}')
    assert code == 0
    assert json.loads(out)["rows"] == [[8, 8, 2, 2, 1], [9, 5, 3, 1]]


def test_series_text_and_json():
    assert run(["series", "--name", "f11", "--order", "4"])[1].strip() == "[1,2,3,6,10]"
    code, out, _ = run(["series", "--name", "borodin", "--profile", "2,0", "--order", "1", "--format", "json"])
    assert code == 0 and json.loads(out) == ["1", "1"]
    assert run(["series", "--name", "oc", "--variant", "closed", "--order", "2"])[1].strip() == "[1,1,1]"


def test_series_order_from_environment(monkeypatch):
    monkeypatch.setenv("CYLPART_ORDER", "3")
    assert run(["series", "--name", "f11"])[1].strip() == "[1,2,3,6]"


def test_series_needs_order(monkeypatch):
    monkeypatch.delenv("CYLPART_ORDER", raising=False)
    code, _, err = run(["series", "--name", "f11"])
    assert code == 2 and err.startswith("error: UsageError:")


def test_enumerate_and_count():
    code, out, _ = run(["enumerate", "--profile", "1,1", "--weight", "2", "--format", "json"])
    assert code == 0
    assert [json.loads(line)["rows"] for line in out.splitlines()] == [[[], [2]], [[1], [1]], [[2], []]]
    assert run(["count", "--profile", "1,1", "--max-weight", "4"])[1].strip() == "[1,2,3,6,10]"
    code, out, _ = run(["count", "--profile", "1,1", "--max-weight", "1", "--refined", "--format", "json"])
    assert [json.loads(line) for line in out.splitlines()] == [{"m": 0, "n": 0, "count": 1}, {"m": 1, "n": 1, "count": 2}]


def test_verify_exit_codes():
    code, out, _ = run(["verify", "--check", "oc-forms", "--order", "50"])
    assert code == 0 and out.startswith("PASS oc-forms")
    code, _, _ = run(["verify", "--check", "nope"])
    assert code == 2


def test_invalid_inputs_exit_2():
    code, _, err = run(["map"], "[[1,1],[]]")
    assert code == 2 and "CyclicInequalityViolated" in err
    assert len(err.strip().splitlines()) == 1
    code, _, err = run(["unmap"], '{"mu":[1],"beta":[3,3]}')
    assert code == 2 and "BetaNotDistinctOdd" in err
    code, _, err = run(["map"], "not json")
    assert code == 2
    code, _, _ = run(["enumerate", "--profile", "1,-1", "--weight", "2"])
    assert code == 2
    code, _, err = run(["map", "--profile", "2,0", "--flavor", "odd"], "[[1],[]]")
    assert code == 2


def test_not_in_image_exit_3():
    code, out, _ = run(["map", "--flavor", "odd"], "[[1],[]]\n[[],[1]]\n")
    assert code == 3
    first, second = (json.loads(line) for line in out.splitlines())
    assert first["error"] == "NotInImage"
    assert second["mu"] == [1] and second["flavor"] == "doubled-odd"


@pytest.mark.parametrize("profile,flavor", [("1,1", None), ("2,0", None), ("1,1", "odd")])
def test_map_unmap_identity_on_corpus(profile, flavor):
    prof = Profile.parse(profile)
    corpus = [lam for n in range(9) for lam in enumerate_cylindric(prof, n, "odd" if flavor else "none")]
    lines = "\n".join(lam.dumps() for lam in corpus)
    extra = ["--flavor", flavor] if flavor else []
    code, mapped, _ = run(["map", "--profile", profile, *extra], lines)
    kept = [(lam, line) for lam, line in zip(corpus, mapped.splitlines()) if "error" not in line]
    assert code in (0, 3)
    code, unmapped, _ = run(["unmap", "--profile", profile, *extra], "\n".join(line for _, line in kept))
    assert code == 0
    assert [json.loads(line) for line in unmapped.splitlines()] == [lam.to_json() for lam, _ in kept]


def test_json_output_is_stable():
    argv = ["enumerate", "--profile", "1,2,0", "--weight", "6", "--format", "json"]
    assert run(argv) == run(argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cylpart", "series", "--name", "f11", "--order", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "[1,2,3,6,10]"
