import json
import subprocess
import sys

from sepgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_classify_json(capsys):
    code, out = run(capsys, "classify", "3a+2b=2a+4b", "--json")
    assert code == 0
    data = json.loads(out.out)
    assert data["schema_version"] == 1
    assert data["verdict"]["reduced_purely_infinite_simple"] == "Yes"
    assert data["verdict"]["full_rfd"] is True


def test_classify_trace_branch(capsys):
    code, out = run(capsys, "classify", "a+b=a+b", "--json")
    data = json.loads(out.out)
    assert data["verdict"]["trace"] == ["1/4", "1/4", "1/2"]
    assert data["verdict"]["reduced_unique_trace"] == "Unknown"


def test_classify_m_one(capsys):
    code, out = run(capsys, "classify", "a=2a")
    assert code == 0 and "M_2(C*(F))" in out.out


def test_parse_error_exit_code(capsys):
    code, out = run(capsys, "classify", "3a+2b")
    assert code == 2 and "position" in out.err


def test_monoid_queries(capsys):
    code, out = run(capsys, "monoid", "3a+2b=2a+4b", "eq", "a", "2b", "--json")
    data = json.loads(out.out)
    assert code == 0 and data["verdict"]["status"] == "NotEquivalent"
    assert data["verdict"]["certificate"]["kind"] == "finite-class-enumeration"
    code, out = run(capsys, "monoid", "2a=5a", "k0", "--json")
    assert json.loads(out.out)["k0"]["description"] == "Z/3"
    code, out = run(capsys, "monoid", "3a+2b=2a+4b", "finite")
    assert "True" in out.out
    code, out = run(capsys, "monoid", "3a+2b=2a+4b", "eq", "a")
    assert code == 2


def test_verify_suites(capsys):
    code, out = run(capsys, "verify", "freeprod", "--seed", "7", "--samples", "60")
    assert code == 0 and "PASS" in out.out
    code, out = run(capsys, "verify", "groupalg", "--bound", "3", "--samples", "40")
    assert code == 0
    code, out = run(capsys, "verify", "cuntz", "--n", "3", "--m", "2", "--bound", "3", "--json")
    assert code == 0 and json.loads(out.out)["passed"]
    code, out = run(capsys, "verify", "traces", "--samples", "50")
    assert code == 0
    code, out = run(capsys, "verify", "monoid", "--samples", "30")
    assert code == 0


def test_json_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        run(capsys, "verify", "freeprod", "--samples", "40", "--seed", "3", "--json")
    for _ in range(2):
        main(["verify", "monoid", "--samples", "30", "--json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sepgraph", "classify", "2a=5a", "--json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["verdict"]["reduced_purely_infinite_simple"] == "Yes"
