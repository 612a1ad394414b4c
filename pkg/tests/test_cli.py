import io
import json

import pytest

from graver_certs.main import main


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound(capsys) -> None:
    assert _run(capsys, "bound", "--t", "4", "--r", "6") == (0, "274\n", "")


def test_example_piped_into_verify(capsys, monkeypatch) -> None:
    code, out, _ = _run(capsys, "example", "--name", "seed3x4")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, report, _ = _run(capsys, "verify", "-")
    assert code == 0
    assert report == "valid: true\ncertified bound: 27\n"


def test_example_4_4_written_to_file(capsys, tmp_path) -> None:
    target = tmp_path / "example.json"
    code, out, _ = _run(capsys, "example", "--name", "example4x4", "--out", str(target))
    assert (code, out) == (0, "")
    assert json.loads(target.read_text(encoding="utf-8"))["claimed_bound"] == 68
    code, report, _ = _run(capsys, "verify", str(target))
    assert code == 0
    assert "certified bound: 68" in report


def test_certificate_for_seed_shape(capsys) -> None:
    code, out, _ = _run(capsys, "certificate", "--t", "3", "--r", "4")
    assert code == 0
    assert json.loads(out)["coefficients"] == [7, 2, 3, 3, 5, 6, 1]


def test_generated_certificates_verify_to_the_bound(capsys, monkeypatch) -> None:
    for t in range(4, 7):
        for r in range(t, 9):
            _, bound, _ = _run(capsys, "bound", "--t", str(t), "--r", str(r))
            code, document, _ = _run(capsys, "certificate", "--t", str(t), "--r", str(r))
            assert code == 0
            monkeypatch.setattr("sys.stdin", io.StringIO(document))
            code, report, _ = _run(capsys, "verify", "-")
            assert code == 0, (t, r)
            assert report == f"valid: true\ncertified bound: {bound.strip()}\n"


def test_verify_tampered_certificate(capsys, tmp_path) -> None:
    _, out, _ = _run(capsys, "example", "--name", "seed3x4")
    document = json.loads(out)
    document["coefficients"][5] = 5
    document["claimed_bound"] = 26
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    code, report, _ = _run(capsys, "verify", str(path))
    assert code == 1
    assert report.startswith("valid: false\n")
    assert "relation-sum nonzero" in report


def test_verify_fixture(capsys, fixture_path) -> None:
    code, report, _ = _run(capsys, "verify", fixture_path("k22_pair.json"))
    assert code == 0
    assert "certified bound: 2" in report


def test_verify_malformed_certificate(capsys, fixture_path) -> None:
    code, out, err = _run(capsys, "verify", fixture_path("float_entry.json"))
    assert (code, out) == (2, "")
    assert "circuits.0.0.0" in err


def test_graver_by_completion_and_oracle(capsys, fixture_path) -> None:
    code, out, _ = _run(capsys, "graver", "--matrix", fixture_path("ones_1x3.txt"))
    assert code == 0
    assert out.splitlines() == ["-1 0 1", "-1 1 0", "0 -1 1", "0 1 -1", "1 -1 0", "1 0 -1"]
    code, out, _ = _run(capsys, "graver", "--matrix", fixture_path("one_two.txt"), "--oracle", "3")
    assert (code, out) == (0, "-2 1\n2 -1\n")


def test_graver_reports_matrix_line(capsys, fixture_path) -> None:
    code, _, err = _run(capsys, "graver", "--matrix", fixture_path("bad_row.txt"))
    assert code == 2
    assert "line 3" in err


def test_complexity(capsys, fixture_path) -> None:
    assert _run(capsys, "complexity", "--matrix", fixture_path("ones_1x3.txt")) == (0, "3\n", "")


def test_complexity_resource_limit(capsys, fixture_path) -> None:
    code, out, err = _run(
        capsys, "complexity", "--matrix", fixture_path("big_ones.txt"), "--max-elems", "10"
    )
    assert (code, out) == (3, "")
    assert "max_elements" in err


def test_circuits(capsys) -> None:
    code, out, _ = _run(capsys, "circuits", "--t", "2", "--r", "2")
    assert code == 0
    assert out.splitlines() == [
        "# 2 signed circuits of K_2x2",
        "(v1,u1,v2,u2)\t1 -1 / -1 1",
        "(v1,u2,v2,u1)\t-1 1 / 1 -1",
    ]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bound", "--t", "four", "--r", "6"],
        ["bound", "--t", "2", "--r", "5"],
        ["example", "--name", "seed5x5"],
        ["graver", "--matrix", "/nonexistent/matrix.txt"],
        ["graver", "--matrix", "-", "--oracle", "0"],
        ["certificate", "--t", "5", "--r", "4"],
    ],
)
def test_usage_errors_exit_two(capsys, argv) -> None:
    code, out, err = _run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_help_exits_zero(capsys) -> None:
    code, out, _ = _run(capsys, "--help")
    assert code == 0
    assert "verify" in out


def test_verbose_logs_to_stderr(capsys) -> None:
    code, _, err = _run(capsys, "--verbose", "certificate", "--t", "4", "--r", "4")
    assert code == 0
    assert "lift_t" in err
