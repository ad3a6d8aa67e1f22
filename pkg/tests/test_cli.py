import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from spine.cli import main

GOLDEN = Path(__file__).parent / "golden"
COMMANDS = json.loads((GOLDEN / "commands.json").read_text())
MALFORMED = json.loads((GOLDEN / "malformed.json").read_text())


def resolve(argv):
    return [a.replace("{data}", str(GOLDEN / "data")) for a in argv]


def run_subprocess(argv, hashseed, stdin=None):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    return subprocess.run(
        [sys.executable, "-m", "spine", *resolve(argv)],
        capture_output=True,
        text=True,
        env=env,
        input=stdin,
        timeout=60,
    )


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_golden_output_in_process(name):
    out, err = io.StringIO(), io.StringIO()
    assert main(resolve(COMMANDS[name]), out, err) == 0, err.getvalue()
    assert out.getvalue() == (GOLDEN / "expected" / f"{name}.out").read_text()


@pytest.mark.parametrize("hashseed", [0, 12345])
def test_golden_output_is_stable_across_hash_seeds(hashseed):
    for name, argv in sorted(COMMANDS.items()):
        proc = run_subprocess(argv, hashseed)
        assert proc.returncode == 0, (name, proc.stderr)
        assert proc.stdout == (GOLDEN / "expected" / f"{name}.out").read_text(), name


@pytest.mark.parametrize("case", MALFORMED, ids=lambda c: " ".join(c["argv"])[:40] or "<empty>")
def test_malformed_input_exit_codes(case, capsys):
    out, err = io.StringIO(), io.StringIO()
    code = main(resolve(case["argv"]), out, err)
    assert code == case["code"]
    assert out.getvalue() == ""
    assert "error" in err.getvalue() + capsys.readouterr().err


def test_syntax_error_reports_position():
    err = io.StringIO()
    assert main(["join", "R^2", "span[[1,0]", "span[]"], io.StringIO(), err) == 2
    assert "line 1, column 11" in err.getvalue()


def test_element_from_stdin_and_inline():
    doc = (GOLDEN / "data" / "r2_element.json").read_text()
    proc = run_subprocess(["char-eval", "R^2", "(L=span[], v=[0,0])", "-"], 0, stdin=doc)
    assert proc.returncode == 0
    assert proc.stdout == "exact=2 re=2 im=0\n"
    out = io.StringIO()
    assert main(["char-eval", "R^2", "(L=full, v=[0,0])", doc], out, io.StringIO()) == 0
    assert out.getvalue() == "exact=3+i re=3 im=1\n"


def test_pullback_output_feeds_back_in(tmp_path):
    out = io.StringIO()
    assert main(["idempotent", "Z", "--expr", "2Z"], out) == 0
    path = tmp_path / "q.json"
    path.write_text(out.getvalue())
    res = io.StringIO()
    assert main(["char-eval", "Z", "(g=ap, v=4)", str(path)], res) == 0
    assert res.getvalue().startswith("exact=1 ")
    res = io.StringIO()
    assert main(["char-eval", "Z", "(g=ap, v=3)", str(path)], res) == 0
    assert res.getvalue().startswith("exact=0 ")
