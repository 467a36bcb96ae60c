import json
import shutil
import subprocess

import pytest

from sstableaux.cli import parse_sequence, run
from sstableaux.core import Partition
from sstableaux.errors import ParseError
from sstableaux.tableau import Tableau

RUNNING = ["--mu", "4,4,1,1", "--a", "1,3,2,2,2"]


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def normalize(line):
    return " ".join(line.split())


class TestParse:
    def test_partition(self):
        mu = parse_sequence("4,4,1,1", partition=True)
        assert mu == (4, 4, 1, 1) and isinstance(mu, Partition)

    def test_composition(self):
        assert parse_sequence("1,3,2,2,2") == (1, 3, 2, 2, 2)

    def test_empty(self):
        assert parse_sequence("") == ()

    @pytest.mark.parametrize("text", ["4,x", "4,,1", "4, 1", "0,1", "-2", "1.5"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_sequence(text)

    def test_non_monotone_partition(self):
        with pytest.raises(ParseError):
            parse_sequence("4,5,1", partition=True)
        assert parse_sequence("4,5,1") == (4, 5, 1)


def test_greatest_text(capsys):
    code, out, _ = call(capsys, "greatest", *RUNNING)
    assert code == 0
    assert out.splitlines() == ["1 2 2 2", "3 3 4 5", "4", "5"]


def test_check(capsys):
    code, out, _ = call(capsys, "check", "--mu", "5,3", "--a", "2,6")
    assert code == 1
    assert out.strip() == "empty (mu does not dominate lambda(a)=6,2)"
    code, out, _ = call(capsys, "check", *RUNNING, "--json")
    assert code == 0 and json.loads(out) == {"nonempty": True, "lambda": [3, 2, 2, 2, 1]}


def test_kostka(capsys):
    assert call(capsys, "kostka", "--mu", "2,1", "--a", "1,1,1") == (0, "2\n", "")
    assert call(capsys, "kostka", "--mu", "1,1", "--a", "2")[0:2] == (0, "0\n")


def test_removable(capsys):
    code, out, _ = call(capsys, "removable", *RUNNING, "--json")
    assert code == 0 and json.loads(out) == {"R": [2, 4], "l": 2, "s": 2}


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "--mu", "2,1", "--a", "1,1,1")
    assert code == 0 and out == "1 2\n3\n\n1 3\n2\n"
    code, out, _ = call(capsys, "enumerate", "--mu", "5,3", "--a", "2,6", "--json")
    assert code == 1 and json.loads(out) == []


@pytest.mark.parametrize("command", ["greatest", "least", "fill"])
def test_json_round_trip(capsys, command):
    code, out, _ = call(capsys, command, *RUNNING, "--json")
    assert code == 0
    tab = Tableau.from_json(out)
    assert json.loads(tab.to_json()) == json.loads(out)


def test_enumerate_json_round_trip(capsys):
    _, out, _ = call(capsys, "enumerate", *RUNNING, "--json")
    items = json.loads(out)
    assert len(items) == 7
    for item in items:
        assert Tableau.from_dict(item).to_dict() == item


GREATEST_TABLE = """\
(4,4,1,1) & (1,3,2,2,2) & (4,3,1) & T(2,4)=T(4,1)=5
(4,3,1) & (1,3,2,2) & (4,2) & T(2,3)=T(3,1)=4
(4,2) & (1,3,2) & (4) & T(2,1)=T(2,2)=3
(4) & (1,3) & (1) & T(1,2)=T(1,3)=T(1,4)=2
(1) & (1) & & T(1,1)=1"""

FILL_TABLE = """\
(4,4,1,1) & (1,3,2,2,2) & (4,3,1) & U(2,4)=U(4,1)=5
(4,3,1) & (1,3,2,2) & (3,3) & U(1,4)=U(3,1)=4
(3,3) & (1,3,2) & (3,1) & U(2,2)=U(2,3)=3
(3,1) & (1,3) & (1) & U(1,2)=U(1,3)=U(2,1)=2
(1) & (1) & & U(1,1)=1"""

LEAST_TABLE = """\
(4,4,1,1) & (1,3,2,2,2) & 10 & 1 & 5 & 2 & S(2,4)=5
(4,3,1,1) & (1,3,2,2,1) & 9 & 2 & 5 & 2 & S(2,3)=5
(4,2,1,1) & (1,3,2,2) & 8 & 1 & 4 & 1 & S(1,4)=4
(3,2,1,1) & (1,3,2,1) & 7 & 1 & 4 & 4 & S(4,1)=4
(3,2,1) & (1,3,2) & 6 & 1 & 3 & 2 & S(2,2)=3
(3,1,1) & (1,3,1) & 5 & 2 & 3 & 3 & S(3,1)=3
(3,1) & (1,3) & 4 & 1 & 2 & 1 & S(1,3)=2
(2,1) & (1,2) & 3 & 1 & 2 & 1 & S(1,2)=2
(1,1) & (1,1) & 2 & 1 & 2 & 2 & S(2,1)=2
(1) & (1) & 1 & 1 & & & S(1,1)=1"""


def table_rows(out):
    lines = out.split("\n\n")[0].splitlines()[2:]
    return [[normalize(c) for c in line.split("|")] for line in lines]


def expected_rows(table):
    return [[normalize(c) for c in line.split("&")] for line in table.splitlines()]


@pytest.mark.parametrize(
    "command, table", [("greatest", GREATEST_TABLE), ("fill", FILL_TABLE), ("least", LEAST_TABLE)]
)
def test_trace_tables(capsys, command, table):
    code, out, _ = call(capsys, command, *RUNNING, "--trace")
    assert code == 0
    assert table_rows(out) == expected_rows(table)


def test_trace_json(capsys):
    _, out, _ = call(capsys, "least", *RUNNING, "--trace", "--json")
    payload = json.loads(out)
    assert payload["tableau"]["rows"] == [[1, 2, 2, 4], [2, 3, 5, 5], [3], [4]]
    assert len(payload["trace"]) == 10
    assert payload["trace"][3] == {
        "step": 4, "nu": [3, 2, 1, 1], "b": [1, 3, 2, 1], "l": 4, "l_prime": 1, "m": 7, "h": 4,
        "assignments": [[4, 1, 4]],
    }


def test_floor_least(capsys):
    code, out, _ = call(capsys, "floor-least", "--mu", "3,2,1", "--a", "2,2,2", "--r", "2")
    assert code == 0
    code, _, err = call(capsys, "floor-least", *RUNNING, "--r", "4")
    assert code == 2 and "InvalidFloor" in err
    code, _, err = call(capsys, "floor-least", *RUNNING)
    assert code == 2


def test_poset(capsys):
    code, out, _ = call(capsys, "poset", *RUNNING)
    assert code == 0
    assert "total_order: False" in out and "size: 7" in out
    code, out, _ = call(capsys, "poset", "--mu", "4,4,1,1", "--a", "1,2,2,2,3", "--dot")
    assert code == 0
    assert "// total_order: True" in out
    body = [l for l in out.splitlines() if not l.startswith("//")]
    assert body[0] == "digraph stab {" and body[-1] == "}"
    code, out, _ = call(capsys, "poset", *RUNNING, "--json", "--dot")
    payload = json.loads(out)
    assert payload["least"] == "1224|2355|3|4" and payload["dot"].startswith("digraph")


@pytest.mark.parametrize(
    "argv, code, fragment",
    [
        (["greatest", "--mu", "4,5,1", "--a", "10"], 2, "ParseError"),
        (["greatest", "--mu", "4,x", "--a", "4"], 2, "ParseError"),
        (["greatest", "--mu", "3", "--a", "1,1"], 2, "SumMismatch"),
        (["greatest", "--mu", "5,3", "--a", "2,6"], 1, "NotDominating"),
        (["kostka", "--mu", "21", "--a", "21"], 2, "CapExceeded"),
        (["greatest", "--mu", "2"], 2, "UsageError"),
        (["greatest", *RUNNING, "--dot"], 2, "UsageError"),
        (["frobnicate"], 2, ""),
    ],
)
def test_exit_codes(capsys, argv, code, fragment):
    got, _, err = call(capsys, *argv)
    assert got == code
    assert fragment in err
    if fragment:
        assert len(err.strip().splitlines()) == 1


def test_cap_flag(capsys):
    assert call(capsys, "kostka", "--mu", "21", "--a", "21", "--cap", "21")[:2] == (0, "1\n")


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--max-n", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12 and all(l.startswith("[PASS]") for l in lines)


@pytest.mark.skipif(shutil.which("tableaux") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["tableaux", "greatest", *RUNNING], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 2 2 2\n3 3 4 5\n4\n5\n"
