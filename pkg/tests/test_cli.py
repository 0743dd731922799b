import json
import subprocess
import sys

import pytest

from peterson.cli import main, parse_generator_monomial
from peterson.errors import DomainError, ParseError


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_fixed_points_text(capsys):
    code, out, _ = run(capsys, "fixed-points", 4)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert any(line.split()[:2] == ["{1,2}", "3214"] and "(1,2)" in line for line in lines)
    assert any(line.split()[:2] == ["{1,3}", "2143"] and "(1,3)" in line for line in lines)


def test_fixed_points_rank_one(capsys):
    code, out, _ = run(capsys, "fixed-points", 1, "--format", "json")
    assert code == 0
    assert json.loads(out)["fixed_points"] == [{"subset": [], "w": "1", "v_word": []}]


@pytest.mark.parametrize("expr, expected", [
    ("p1^3", "t^2*p{1} + 3*t*p{1,2} + p{1,2,3}"),
    ("p1^0", "p{}"),
    ("1", "p{}"),
])
def test_expand_text(capsys, expr, expected):
    code, out, _ = run(capsys, "expand", 4, expr)
    assert code == 0
    assert out.strip() == expected


def test_expand_giambelli_coefficient(capsys):
    code, out, _ = run(capsys, "expand", 4, "p1*p2*p3", "--format", "json")
    assert code == 0
    terms = {tuple(x["subset"]): x["coeff"] for x in json.loads(out)["terms"]}
    assert terms[(1, 2, 3)] == "6"


@pytest.mark.parametrize("expr", ["p1*t", "p1^", "q1", "p1**p2", ""])
def test_expand_parse_errors(capsys, expr):
    code, _, err = run(capsys, "expand", 4, expr)
    assert code == 2
    assert "error" in err


def test_monomial_parser():
    assert parse_generator_monomial(5, "p1^2*p3") == [1, 1, 3]
    assert parse_generator_monomial(5, " p2 * p2 ") == [2, 2]
    with pytest.raises(ParseError) as exc:
        parse_generator_monomial(5, "p1*t")
    assert exc.value.pos == 3
    with pytest.raises(DomainError):
        parse_generator_monomial(5, "p5")


def test_monk_and_restrict(capsys):
    code, out, _ = run(capsys, "monk", 4, 1, "{1,2}")
    assert code == 0 and out.strip() == "p1 * p{1,2} = 2*t*p{1,2} + p{1,2,3}"
    code, out, _ = run(capsys, "restrict", 4, "{1}", "{1,2,3}")
    assert code == 0 and out.strip() == "p{1}(w{1,2,3}) = 3*t"


def test_giambelli(capsys):
    code, out, _ = run(capsys, "giambelli", 4, "{1,2,3}")
    assert code == 0
    assert "1/6*p1*p2*p3" in out and "verified" in out


def test_localize(capsys):
    code, out, _ = run(capsys, "localize", 2, "{1}", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 2, "values": [{"subset": [], "value": "0"},
                                                  {"subset": [1], "value": "t"}]}


def test_presentation(capsys):
    code, out, _ = run(capsys, "presentation", 4, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["generators"]) == 12
    assert data["flags"] == {"n": 4, "quadratic_conjecture": "true"}
    code, out, _ = run(capsys, "presentation", 4, "--quadratic-only")
    assert code == 0
    assert len(out.strip().splitlines()) == 4


@pytest.mark.parametrize("suite, n", [
    ("golden-n4", 4), ("monk-oracle", 6), ("stirling", 8), ("giambelli", 5),
    ("vanishing", 6), ("stability", 5), ("quadratic", 4), ("restriction", 6),
])
def test_verify_suites_pass(capsys, suite, n):
    code, out, _ = run(capsys, "verify", n, "--suite", suite, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert data["failures"] == []


def test_verify_details(capsys):
    _, out, _ = run(capsys, "verify", 4, "--suite", "golden-n4", "--format", "json")
    assert json.loads(out)["details"]["matched"] == 12
    _, out, _ = run(capsys, "verify", 6, "--suite", "monk-oracle", "--format", "json")
    assert json.loads(out)["total"] == 160


def test_verify_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "verify", 5, "--suite", "monk-oracle", "--format", "json")
    _, parallel, _ = run(capsys, "verify", 5, "--suite", "monk-oracle", "--jobs", 2,
                         "--format", "json")
    a, b = json.loads(serial), json.loads(parallel)
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "monk", 4, 1, "{1,x}")[0] == 2
    assert run(capsys, "monk", 0, 1, "{}")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "verify", 7, "--suite", "quadratic")[0] == 3
    assert run(capsys, "localize", 13, "{1}")[0] == 3
    assert run(capsys, "localize", 13, "{1}", "--cap", 13)[0] == 0
    assert run(capsys, "verify", 5, "--suite", "golden-n4")[0] == 2
    monkeypatch.setenv("PETERSON_MAX_PAIRS", "2")
    assert run(capsys, "presentation", 5)[0] == 3


@pytest.mark.parametrize("argv", [
    ["fixed-points", 3],
    ["monk", 5, 2, "{1,2}"],
    ["giambelli", 5, "{1,2,4}"],
    ["expand", 5, "p1^2*p3"],
    ["restrict", 5, "{2}", "{1,2,3}"],
    ["localize", 4, "p1*p2"],
    ["presentation", 3],
    ["verify", 4, "--suite", "stirling"],
])
def test_json_byte_roundtrip(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "peterson", "expand", "4", "p1^2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "t*p{1} + p{1,2}"
