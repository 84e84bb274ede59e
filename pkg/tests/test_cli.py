import json
import subprocess
import sys

import pytest

from perminvariants.cli import CliConfig, main, run
from perminvariants.series import RationalFunction, expand_series


def report_json(**kw):
    out, status = run(CliConfig(format="json", **kw))
    assert status == 0, out
    return json.loads(out)


def test_c4_json():
    data = report_json(n=4, generators=["(1 2 3 4)"], characteristics=[0, 2], depth=6)
    per = data["per_char"]
    assert {p: v["quasi_gorenstein"] for p, v in per.items()} == {"0": False, "2": True}
    assert {p: v["splits"] for p, v in per.items()} == {"0": True, "2": False}
    assert per["2"]["a_invariant"] == -4
    assert per["2"]["canonical"] == {"base": "invariant-ring", "shift": -4}
    assert data["index_G_over_N"] == 4 and data["order"] == 4


def test_counterexample_group():
    data = report_json(n=6, generators=["(1 2)(3 4)(5 6)"], characteristics=[2])
    assert data["per_char"]["2"]["splits"] is False


def test_trivial_group_json():
    data = report_json(n=3, generators=[], characteristics=[0])
    assert data["hilb_invariants"] == {"num": [1], "den": [1, -3, 3, -1]}
    per = data["per_char"]["0"]
    assert per["a_invariant"] == -3 and per["quasi_gorenstein"] and per["splits"]


def test_schema_keys():
    data = report_json(n=3, generators=["(1 2)"], characteristics=[0, 3], depth=3)
    for key in (
        "n", "order", "transpositions", "partition", "index_G_over_N", "hilb_invariants",
        "hilb_sign_semiinvariants", "per_char", "uniformly_split", "generated_by_transpositions",
    ):
        assert key in data
    for entry in data["per_char"].values():
        for key in ("a_invariant", "quasi_gorenstein", "splits", "canonical", "cohomology_window"):
            assert key in entry
        w = entry["cohomology_window"]
        assert len(w["dims"]) == w["hi"] - w["lo"] + 1


def test_deterministic():
    cfg = dict(n=4, generators=["(1 2 3 4)", "(1 3)"], characteristics=[3, 0, 2], depth=5)
    assert run(CliConfig(format="json", **cfg)) == run(CliConfig(format="json", **cfg))


def test_round_trip_reasserts_invariants():
    data = report_json(n=4, generators=["(1 2 3 4)", "(1 3)"], characteristics=[0, 2, 3], depth=8)
    n, c = data["n"], len(data["transpositions"])
    hilb = RationalFunction.from_integer_arrays(data["hilb_invariants"]["num"], data["hilb_invariants"]["den"])
    assert data["hilb_degree"] == len(data["hilb_invariants"]["num"]) - len(data["hilb_invariants"]["den"])
    assert data["uniformly_split"] == (data["index_G_over_N"] == 1) == data["generated_by_transpositions"]
    for p, entry in data["per_char"].items():
        w, v = entry["cohomology_window"], entry["invariants_of_cohomology_window"]
        t = c if p == "2" else 0
        assert (w["lo"], w["hi"], w["dims"]) == (v["lo"] - t, v["hi"] - t, v["dims"])
        if p == "2":
            assert entry["quasi_gorenstein"] and entry["a_invariant"] == -(c + n)
            assert v["dims"][::-1] == expand_series(hilb, data["depth"])
        else:
            assert entry["quasi_gorenstein"] == (entry["a_invariant"] == -(c + n))
        assert entry["splits"] == (p == "0" or data["index_G_over_N"] % int(p) != 0)


@pytest.mark.parametrize(
    "cfg, status",
    [
        (dict(n=3, generators=["(1 4)"]), 2),
        (dict(n=3, generators=["(1 2"]), 2),
        (dict(n=3, generators=[], characteristics=[4]), 2),
        (dict(n=3, generators=[], depth=-1), 2),
        (dict(n=5, generators=["(1 2)", "(1 2 3 4 5)"], max_order=50), 3),
        (dict(n=4, generators=["(1 2)"], max_monomials=5), 3),
    ],
)
def test_exit_codes(cfg, status):
    assert run(CliConfig(**cfg))[1] == status


def test_consistency_failure_exit(monkeypatch):
    from perminvariants import decisions
    from perminvariants.errors import ConsistencyError

    def boom(*a, **k):
        raise ConsistencyError("forced")

    monkeypatch.setattr(decisions, "quasi_gorenstein", boom)
    assert run(CliConfig(n=2, generators=["(1 2)"]))[1] == 4


def test_main_argv(capsys):
    assert main(["--n", "4", "--gens", "(1 2 3 4);(1 3)", "--chars", "0,2,2", "--format", "json", "--depth", "4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert sorted(data["per_char"]) == ["0", "2"]
    assert data["order"] == 8


def test_text_format(capsys):
    assert main(["--n", "2", "--gens", "(1 2)", "--chars", "0,2"]) == 0
    out = capsys.readouterr().out
    assert "characteristic 0" in out and "characteristic 2" in out
    assert "a-invariant -3" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "perminvariants", "--n", "3", "--gens", "(1 2 5)"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2 and "out of range" in proc.stderr
