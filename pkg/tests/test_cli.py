import json

import pytest

from palcount.cli import count, main, table_rows


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--family", "fib", "--n", "29")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "query,family,n,result,elapsed,method"
    assert row.startswith("A,fib,29,98,") and row.endswith(",recursion")


def test_count_json_large(capsys):
    code, out, _ = run(capsys, "count", "--family", "trib", "--n", str(10 ** 18), "--format", "json")
    rec = json.loads(out)[0]
    assert code == 0
    assert rec["result"] == "41131759604589418774" and rec["method"] == "closed-form"


@pytest.mark.parametrize("method", ["closed", "recursion", "oracle"])
def test_methods_agree(method):
    assert count("trib", 24, method).result == "61"
    assert count("fib", 5000, method).result == count("fib", 5000, "closed").result


def test_oracle_bound(capsys):
    code, _, err = run(capsys, "count", "--n", "100", "--method", "oracle", "--oracle-max", "50")
    assert code == 2 and "oracle-max" in err


def test_bad_integer(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "1e5"])
    assert exc.value.code == 2


def test_table(capsys):
    rows = table_rows("trib", 15, 24)
    assert sum(int(r["b"]) for r in rows) == 30 and rows[-1]["B"] == "61"
    code, out, _ = run(capsys, "table", "--lo", "20", "--hi", "29", "--format", "json")
    assert code == 0 and json.loads(out)[-1] == {"n": "29", "a": "5", "A": "98"}
    code, _, _ = run(capsys, "table", "--lo", "9", "--hi", "3")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--family", "trib", "--n-max", "500", "--p-max", "200")
    assert code == 0
    assert "fail" not in out and "phi-positions,trib,skip" in out


def test_verify_reports_failure(capsys, monkeypatch):
    from palcount import checks
    monkeypatch.setitem(checks.SUITES, "richness", lambda f, n, p: ["n=1"])
    code, out, _ = run(capsys, "verify", "--suite", "richness", "--n-max", "10")
    assert code == 1 and "fail" in out


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "100", "1000000000", "--oracle-max", "1000", "--repeat", "1")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 1 + 3 + 1
    assert len({line.split(",")[3] for line in lines[1:4]}) == 1


def test_structure(capsys):
    code, out, _ = run(capsys, "structure", "--m", "4", "--depth", "1")
    assert code == 0 and out == "<K4,1>[20,32] -> <K2,3>[20,24]\n<K4,1>[20,32] -> <K3,2>[25,32]\n"
    code, out, _ = run(capsys, "structure", "--family", "trib", "--m", "4", "--format", "json")
    assert json.loads(out)["m"] == 4
    code, _, _ = run(capsys, "structure", "--m", "-5")
    assert code == 2
