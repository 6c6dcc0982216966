import json

import pytest

from ratcat import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sweep_zeta(capsys):
    code, out, _ = run(capsys, "sweep", "zeta", "--n", "5", "--m", "3",
                       "--d", "1", "--path", "hhvhvvvv")
    assert code == 0
    assert out.strip() == "hvhvhvvv"


def test_count_fuss(capsys):
    code, out, _ = run(capsys, "count", "fuss", "--N", "2", "--k", "2")
    assert code == 0 and out.strip() == "3"


def test_count_bizley(capsys):
    code, out, _ = run(capsys, "count", "bizley", "--n", "1", "--m", "1", "--d", "3")
    assert code == 0 and out.strip() == "5"


def test_paths_enumerate_json_roundtrip(capsys):
    code, out, _ = run(capsys, "paths", "enumerate", "--n", "2", "--m", "1",
                       "--d", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [p["steps"] for p in payload] == ["hhvvvv", "hvhvvv", "hvvhvv"]
    assert all(p["n"] == 2 and p["m"] == 1 and p["d"] == 2 for p in payload)


def test_paths_count_only(capsys):
    code, out, _ = run(capsys, "paths", "enumerate", "--n", "1", "--m", "1",
                       "--d", "4", "--count-only")
    assert code == 0 and out.strip() == "14"


def test_stats_json(capsys):
    code, out, _ = run(capsys, "stats", "--n", "3", "--m", "2", "--d", "3",
                       "--path", "hvhvvhhhvhvvvvv", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["area"] == 7
    assert payload["dinv"] == payload["dinv_armleg"] == 7
    assert payload["step_ranks"][:3] == [-2, 1, -1]


def test_invset_info_json(capsys):
    code, out, _ = run(capsys, "invset", "info", "--n", "5", "--m", "3",
                       "--generators", "0,7", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["generators"] == [0, 3, 6, 7, 9]
    assert payload["cogenerators"] == [-3, 2, 4]
    assert payload["gap"] == 3
    assert payload["g_image"] == "hvhvhvvv"
    assert payload["core"] == [2, 1, 1]
    assert [e["value"] for e in payload["skeleton"]] == [-3, 0, 2, 3, 4, 6, 7, 9]


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3", "--m", "2", "--d", "4",
                       "--path", "hvhvvhhhvhvvhhvvvvvv", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["min_gap"] == 14
    assert payload["graph"]["source"] == 0
    assert len(payload["graph"]["labels"]) == 4


def test_color_json(capsys):
    code, out, _ = run(capsys, "color", "--n", "1", "--m", "1", "--d", "2",
                       "--path", "hhvv", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["colors"] == [0, 1, 1, 0]
    assert [c["steps"] for c in payload["components"]] == ["hv", "hv"]


def test_series_and_poly(capsys):
    code, out, _ = run(capsys, "series", "C", "--n", "1", "--m", "1",
                       "--d", "2", "--cutoff", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["q_cutoff"] == 4
    assert {"q": 0, "t": 1, "c": 1} in payload["terms"]
    code, out, _ = run(capsys, "poly", "catalan", "--n", "3", "--m", "2")
    assert code == 0 and out.strip() == "q + t"
    code, out, _ = run(capsys, "series", "F", "--size", "2", "--cutoff", "3",
                       "--restricted")
    assert code == 0 and "t" in out


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "golden-zeta")
    assert code == 0
    assert out.count("PASS") == 2


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "sweep", "zeta", "--n", "5", "--m", "3",
                       "--d", "1", "--path", "vvvvvhhh")
    assert code == 1
    assert "error" in err


def test_non_coprime_rejected(capsys):
    code, _, err = run(capsys, "paths", "enumerate", "--n", "2", "--m", "4",
                       "--d", "1")
    assert code == 1 and "coprime" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["paths", "enumerate"])
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    first = run(capsys, "classify", "--n", "3", "--m", "2", "--d", "2",
                "--path", "hvhvvhhvvv", "--format", "json")
    second = run(capsys, "classify", "--n", "3", "--m", "2", "--d", "2",
                 "--path", "hvhvvhhvvv", "--format", "json")
    assert first == second
