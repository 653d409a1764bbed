"""Command-line driver: subcommands, output formats, exit codes."""

import json

import pytest

from kacdepth.cli import main


@pytest.fixture()
def kron_file(tmp_path):
    path = tmp_path / "kronecker2.json"
    path.write_text('{"vertices": 2, "arrows": [[0, 1], [0, 1]]}')
    return str(path)


@pytest.fixture()
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text('{"vertices": 2, "arrows": [[0, 1]]}')
    return str(path)


def test_kac_text(kron_file, capsys):
    assert main(["kac", "--quiver", kron_file, "--alpha", "2"]) == 0
    out = capsys.readouterr().out
    assert "q^2+2q+1" in out
    assert "routes agree      = True" in out


def test_kac_json_schema(kron_file, capsys):
    assert main(["kac", "--quiver", kron_file, "--alpha", "2", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == "kacdepth/1"
    assert report["polynomial"] == "q^2+2q+1"
    assert len(report["census"]) == 4
    assert report["ok"] is True
    # polynomial serialization: [exponent, numerator, denominator] triples
    assert report["polynomial_triples"] == [[0, "1", "1"], [1, "2", "1"], [2, "1", "1"]]


def test_asymptotic(kron_file, capsys):
    assert main(["asymptotic", "--quiver", kron_file]) == 0
    out = capsys.readouterr().out
    assert "A_Q = (q+1)/(q-1)" in out
    assert "B_mu = 1+q^-1" in out


def test_verify_exp_identity(a2_file, capsys):
    code = main(
        [
            "verify",
            "exp-identity",
            "--quiver",
            a2_file,
            "--p",
            "2",
            "--alpha",
            "2",
            "--bound",
            "1,1",
        ]
    )
    assert code == 0
    assert "ok" in capsys.readouterr().out


def test_verify_generic_fiber(a2_file, capsys):
    code = main(
        [
            "verify",
            "generic-fiber",
            "--quiver",
            a2_file,
            "--p",
            "3",
            "--alpha",
            "1",
            "--lam",
            "1,-1",
        ]
    )
    assert code == 0


def test_verify_thm41(kron_file):
    assert main(["verify", "thm41", "--quiver", kron_file]) == 0


def test_shelling(kron_file, capsys):
    assert main(["shelling", "--quiver", kron_file, "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["facets"] == 2
    assert report["ok"] is True


def test_rank_table(capsys):
    assert main(["rank-table", "--g", "1", "--alpha", "3"]) == 0
    out = capsys.readouterr().out
    assert "A_{1,3,3} = q^7+q^6+3q^5+2q^4+2q^3" in out


def test_e_series(kron_file):
    assert main(
        ["e-series", "--quiver", kron_file, "--alpha", "2", "--mode", "zero-fiber", "--order", "10"]
    ) == 0


def test_oracle_orbit_count(kron_file, capsys):
    assert main(["oracle", "orbit-count", "--quiver", kron_file, "--p", "2,3", "--alpha", "2"]) == 0
    out = capsys.readouterr().out
    assert "orbits=9" in out and "orbits=16" in out


def test_oracle_moment_fiber(a2_file, capsys):
    assert main(
        ["oracle", "moment-fiber", "--quiver", a2_file, "--p", "3", "--alpha", "1", "--lam", "1,-1"]
    ) == 0
    assert "fiber size 2" in capsys.readouterr().out


def test_kac_disconnected_reports_components(tmp_path, capsys):
    path = tmp_path / "disc.json"
    path.write_text('{"vertices": 3, "arrows": [[0, 1], [2, 2]]}')
    assert main(["kac", "--quiver", str(path), "--alpha", "2", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["polynomial"] == "0"
    assert report["component_product"] == "2q^2"
    assert [c["polynomial"] for c in report["components"]] == ["2", "q^2"]


def test_malformed_quiver_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": "two"}')
    assert main(["kac", "--quiver", str(bad)]) == 2
    missing = tmp_path / "missing.json"
    assert main(["kac", "--quiver", str(missing)]) == 2


def test_guard_exits_3(kron_file):
    assert main(
        ["oracle", "orbit-count", "--quiver", kron_file, "--p", "2", "--alpha", "2", "--guard", "3"]
    ) == 3


def test_identity_failure_exits_1(kron_file, monkeypatch, capsys):
    # exit code 1 is reserved for mathematical mismatches in the report
    import kacdepth.cli as cli_mod

    def failing_handler(args):
        return {"ok": False, "text": ["forced diff"]}

    monkeypatch.setattr(cli_mod, "_cmd_kac", failing_handler)
    assert main(["kac", "--quiver", kron_file]) == 1
    assert "forced diff" in capsys.readouterr().out


def test_deterministic_output(kron_file, capsys):
    main(["kac", "--quiver", kron_file, "--alpha", "3", "--format", "json", "--seed", "5"])
    first = capsys.readouterr().out
    main(["kac", "--quiver", kron_file, "--alpha", "3", "--format", "json", "--seed", "5"])
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["seed"] == 5
