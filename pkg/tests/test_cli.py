import io
import json
import subprocess
import sys

import numpy as np
import pytest

from caianiello import threshold_net as tn
from caianiello.cli import format_trace, parse_range, run_command
from caianiello.verify import EIGHT_NEURON_CYCLE


def call(*argv):
    out = io.StringIO()
    code = run_command(list(argv), out)
    return code, out.getvalue()


def normalise(text):
    return [line.split() for line in text.strip().splitlines()]


def test_parse_range():
    assert parse_range("3..5") == [3, 4, 5]
    assert parse_range("7") == [7]


def test_format_trace_table_layout():
    net, x0 = tn.build_theorem1_net(3)
    text = format_trace(tn.run(net, x0, 8), "table2")
    lines = normalise(text)
    assert lines[0] == ["Neurones", "8", "7", "6", "5", "4", "3", "2", "1"]
    assert lines[1] == ["Temps"]
    for t, (got, want) in enumerate(zip(lines[2:], EIGHT_NEURON_CYCLE)):
        assert got == [str(t), *want.split()]
    assert len(lines) == 11


@pytest.mark.parametrize("style", ["table2", "csv", "json"])
def test_format_trace_empty(style):
    lines = format_trace([], style, 8).strip().splitlines()
    assert len(lines) == (2 if style == "table2" else 1)


def test_format_trace_csv():
    net, x0 = tn.build_theorem1_net(3)
    lines = format_trace(tn.run(net, x0, 8), "csv").strip().splitlines()
    assert lines[0] == "x8,x7,x6,x5,x4,x3,x2,x1"
    assert len(lines) == 10
    assert [l.replace(",", " ") for l in lines[1:]] == list(EIGHT_NEURON_CYCLE)


def test_format_trace_json():
    lines = format_trace([np.array([0, 1, 1])], "json").strip().splitlines()
    assert json.loads(lines[0]) == {"neurons": [3, 2, 1]}
    assert json.loads(lines[1]) == {"t": 0, "state": [1, 1, 0]}
    with pytest.raises(ValueError):
        format_trace([], "xml")


def test_verify_table2():
    code, text = call("verify", "table2")
    assert code == 0
    assert text.strip().endswith("table2: PASS")


def test_verify_theorem1_lines():
    code, text = call("verify", "theorem1", "--n", "3..8")
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 6
    assert all(l.endswith(f"L=2^{n} PASS") for n, l in zip(range(3, 9), lines))


def test_verify_corollary_line():
    code, text = call("verify", "corollary1", "--n", "3", "--k", "3")
    assert code == 0
    assert "cycle=1536 expected=k·2^{nk}=1536 PASS" in text


def test_verify_json_lines():
    code, text = call("verify", "lemmas", "--n", "3..4", "--json")
    assert code == 0
    records = [json.loads(l) for l in text.strip().splitlines()]
    assert all(r["pass"] for r in records)
    assert {"check", "params", "expected", "observed", "claim"} <= set(records[0])


def test_verify_prop1():
    code, _ = call("verify", "prop1", "--n", "3..6")
    assert code == 0


def test_exit_status_reflects_failures():
    # the default campaign contains instances whose memory-net transient is
    # shorter than k*T, so the scaling check fails and the exit status is 1
    code, text = call("verify", "prop2", "--instances", "100", "--json")
    records = [json.loads(l) for l in text.strip().splitlines()]
    assert code == (0 if all(r["pass"] for r in records) else 1)
    assert any(not r["pass"] for r in records)
    assert all(r["pass"] for r in records if r["check"] == "epoch-alignment")


def test_json_is_deterministic():
    a = call("verify", "prop2", "--instances", "5", "--json", "--seed", "3")
    b = call("verify", "prop2", "--instances", "5", "--json", "--seed", "3")
    assert a == b


def test_bs_commands():
    assert call("bs", "value", "1T0") == (0, "2\n")
    code, text = call("bs", "incr", "((0,0)(1,1)(1,1))")
    assert code == 0
    assert text.split()[0] == "((0,0)(0,0)(0,0)(1,0))"
    assert call("bs", "parse", "bad")[0] == 2


def test_useq_and_vseq():
    code, text = call("useq", "--n", "3", "--count", "9")
    lines = text.strip().splitlines()
    assert lines[3].split("\t")[1] == "((1,0)(0,1)(1,0))"
    assert lines[8].split("\t")[1] == lines[0].split("\t")[1]
    code, text = call("vseq", "--n", "3", "--count", "9", "--style", "csv")
    assert [l.replace(",", " ") for l in text.strip().splitlines()[1:]] == list(EIGHT_NEURON_CYCLE)


def test_mcp_run_from_file(tmp_path):
    net, x0 = tn.build_theorem1_net(3)
    path = tmp_path / "net.json"
    tn.save_net(path, net, x0)
    code, text = call("mcp", "run", "--net", str(path), "--steps", "8", "--style", "csv")
    assert code == 0
    assert len(text.strip().splitlines()) == 10
    code, text = call("mcp", "run", "--theorem1", "5", "--orbit")
    assert json.loads(text) == {"transient": 0, "cycle": 32, "steps": 32, "state_bits": 12}


def test_caianiello_run(tmp_path):
    code, text = call("caianiello", "run", "--n", "3", "--k", "2", "--orbit")
    assert json.loads(text)["cycle"] == 128
    params = tmp_path / "p.json"
    params.write_text(json.dumps(dict(zip(
        ["a1", "a2", "a3", "theta1", "b1", "b2", "b3", "theta2"], [-1, -1, 1, 1, 2, 2, -2, 2]),
        x0=[int(c) for c in "11000111011100"])))
    code, text = call("caianiello", "run", "--n", "3", "--k", "2", "--params", str(params), "--orbit")
    assert code == 0 and json.loads(text)["transient"] == 3
    code, text = call("align", "--n", "3", "--k", "2", "--params", str(params), "--horizon", "10")
    assert code == 0 and "PASS" in text


def test_usage_errors():
    assert call("caianiello", "run", "--n", "2", "--k", "2")[0] == 2
    assert call("mcp", "run", "--net", "/nonexistent.json")[0] == 2
    with pytest.raises(SystemExit) as info:
        call("verify", "everything")
    assert info.value.code != 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "caianiello", "verify", "table2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
