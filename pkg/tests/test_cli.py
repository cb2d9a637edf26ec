import json
import subprocess
import sys

import pytest

from orlicz_morrey.cli import main

SQUARE = '{"family": "power", "p": 2, "s": 1}'


@pytest.fixture
def seq_file(tmp_path):
    path = tmp_path / "seq.json"
    path.write_text(json.dumps({"offset": 0, "values": [3, 0, 4]}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def test_norm(capsys, seq_file):
    code, doc, _ = run(capsys, "norm", seq_file, "--Phi", SQUARE)
    assert code == 0
    assert doc["norm"] == pytest.approx(5.0)
    assert set(doc) == {"norm", "witness", "iterations", "residual"}


def test_window_norm_and_modular(capsys, seq_file):
    code, doc, _ = run(capsys, "window-norm", seq_file, "--Phi", SQUARE, "--m", "1", "--N", "1")
    assert code == 0 and doc["norm"] == pytest.approx(5.0)
    code, doc, _ = run(capsys, "modular", seq_file, "--Phi", SQUARE, "--m", "1", "--N", "1", "--b", "5")
    assert code == 0 and doc["modular"] == pytest.approx(1.0)


def test_s_flag_overrides(capsys, seq_file):
    code, _, err = run(capsys, "norm", seq_file, "--Phi", '{"family": "power", "p": 2}', "--s", "1.5")
    assert code == 2
    assert "s out of (0,1]" in err


def test_inadmissible_spec_rejected(capsys, seq_file):
    code, _, err = run(capsys, "norm", seq_file, "--Phi", '{"family": "power", "p": 0.5, "s": 1}')
    assert code == 2 and err


def test_spec_files_and_out(capsys, tmp_path, seq_file):
    spec = tmp_path / "phi.json"
    spec.write_text(SQUARE)
    out = tmp_path / "out.json"
    assert main(["norm", seq_file, "--Phi", str(spec), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["norm"] == pytest.approx(5.0)


@pytest.mark.parametrize(
    "argv",
    [
        ["norm", "missing.json", "--Phi", SQUARE],
        ["norm", "{not json", "--Phi", SQUARE],
        ["norm", '{"offset": 0}', "--Phi", SQUARE],
        ["norm", '{"offset": 0, "values": [1]}'],
        ["modular", '{"offset": 0, "values": [1]}', "--Phi", SQUARE, "--m", "0", "--N", "-1", "--b", "1"],
        ["example", "nope"],
        ["verify", '{"checks": ["nope"]}'],
    ],
)
def test_input_errors(capsys, argv):
    assert main(argv) == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["modular", "x.json", "--m", "0"])
    assert exc.value.code == 2


def test_validate(capsys):
    code, doc, _ = run(capsys, "validate", '{"family": "power", "p": 0.5, "s": 1}')
    assert code == 1 and doc["valid"] is False
    assert doc["Phi"]["violations"]
    code, doc, _ = run(capsys, "validate", '{"family": "power", "p": 0.5, "s": 0.5}')
    assert code == 0 and doc["valid"] is True
    code, doc, _ = run(capsys, "validate", '{"family": "power", "theta": 2}')
    assert code == 1 and doc["phi"]["violations"][0]["property"] == "ratio_nonincreasing"
    code, doc, _ = run(capsys, "validate", "--phi", '{"family": "identity"}', "--Phi", SQUARE)
    assert code == 0 and set(doc) == {"Phi", "phi", "valid"}


def test_verify(capsys):
    code, doc, _ = run(capsys, "verify", '{"checks": ["homogeneity"], "trials": 3}', "--seed", "9")
    assert code == 0
    assert doc["seed"] == 9 and doc["trial_counts"] == {"homogeneity": 3}


def test_example_geometric(capsys):
    code, doc, _ = run(capsys, "example", "geometric", "--D", "2", "--p", "1", "--L", "30")
    assert code == 0
    assert doc["closed_form"] == pytest.approx(1.5)
    assert abs(doc["difference"]) < 1e-6


def test_module_entry_point(seq_file):
    proc = subprocess.run(
        [sys.executable, "-m", "orlicz_morrey", "norm", seq_file, "--Phi", SQUARE],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["norm"] == pytest.approx(5.0)
