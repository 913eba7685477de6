import json

import pytest

from quatcodes.cli import main

from .conftest import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_prime(capsys):
    assert run(capsys, "prime", "--p", "7")[:2] == (0, "pi = 2+1w  (norm 7)\n")
    assert run(capsys, "prime", "--p", "13")[:2] == (0, "pi = 1+2w  (norm 13)\n")
    code, out, err = run(capsys, "prime", "--p", "5")
    assert code == 1 and "no H(K1) representation" in err


def test_table_matches_fixture(capsys):
    code, out, _ = run(capsys, "table", "--pi", "2,1", "--power", "2", "--alpha", "1,-1w", "--limit", "24")
    assert code == 0
    assert out == (FIXTURES / "power_table.tsv").read_text()
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["0"] == "1" and rows["10"] == "-3" and rows["13"] == "0+2w"


def test_table_bad_candidate(capsys):
    code, _, err = run(capsys, "table", "--pi", "2,1", "--alpha", "-1+1w")
    assert code == 1 and "order 21" in err


def test_build(tmp_path, capsys):
    c = tmp_path / "c.json"
    assert run(capsys, "build", "--pi", "2,1", "--power", "2", "--alpha", "1,-1w", "--out", str(c))[0] == 0
    assert '"length":21' in c.read_text()
    d = tmp_path / "d.json"
    assert run(capsys, "build-crt", "--pi1", "2,1", "--pi2", "1,2", "--target", "2", "--out", str(d))[0] == 0
    assert json.loads(d.read_text())["length"] == 12
    assert '"length":12' in d.read_text()
    code, out, _ = run(capsys, "build", "--pi", "2,1")
    assert code == 0 and json.loads(out)["root"] == [3, 0]
    assert run(capsys, "build", "--pi", "0,1", "--power", "2")[0] == 1


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as err:
        main(["table"])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["build", "--pi", "nonsense"])
    assert err.value.code == 1
    assert run(capsys, "encode", "--code", "/nonexistent.json", "--msg", "1")[0] == 1


@pytest.fixture
def code_file(tmp_path, capsys):
    path = tmp_path / "c.json"
    main(["build", "--pi", "2,1", "--alpha", "1-1w", "--out", str(path)])
    capsys.readouterr()
    return str(path)


def test_encode_corrupt_decode(code_file, capsys):
    code, out, _ = run(capsys, "encode", "--code", code_file, "--msg", "1")
    assert out.strip() == "-1+1w,1" + ",0" * 19
    code, word, _ = run(capsys, "encode", "--code", code_file, "--msg", "3,1-1w,0,5")
    word = word.strip()
    code, bad, err = run(capsys, "corrupt", "--code", code_file, "--word", word, "--pos", "5", "--sign", "+1")
    assert code == 0 and "injected +1 @ 5" in err
    code, out, _ = run(capsys, "decode", "--code", code_file, "--word", bad.strip())
    assert code == 0
    assert out.splitlines() == ["corrected: yes  error: +1 @ 5", f"word: {word}"]
    code, out, _ = run(capsys, "decode", "--code", code_file, "--word", word)
    assert code == 0 and out.splitlines()[0] == "clean"
    code, out, _ = run(capsys, "corrupt", "--code", code_file, "--word", word, "--pos", "0", "--sign", "-1")
    code, out, _ = run(capsys, "decode", "--code", code_file, "--word", out.strip())
    assert out.splitlines()[0] == "corrected: yes  error: -1 @ 0"


def test_decode_uncorrectable_exit_2(code_file, capsys):
    code, out, _ = run(capsys, "decode", "--code", code_file, "--word", "7")
    assert code == 2 and out.startswith("corrected: no")


def test_word_too_long(code_file, capsys):
    assert run(capsys, "encode", "--code", code_file, "--msg", ",".join(["1"] * 21))[0] == 1


def test_seeded_corrupt_is_deterministic(code_file, capsys):
    outs = {run(capsys, "corrupt", "--code", code_file, "--word", "0", "--seed", "7")[1:] for _ in range(2)}
    assert len(outs) == 1
    other = run(capsys, "corrupt", "--code", code_file, "--word", "0", "--seed", "8")[1:]
    code, out, _ = run(capsys, "decode", "--code", code_file, "--word", other[0].strip())
    assert code == 0 and out.startswith("corrected: yes")


def test_verify_small_and_deterministic(capsys):
    code, out1, _ = run(capsys, "verify", "--trials", "10")
    assert code == 0
    assert "decode round-trip: 473/473" in out1
    assert out1.rstrip().endswith("result: PASS")
    _, out2, _ = run(capsys, "verify", "--trials", "10")
    assert out1 == out2


def test_verify_default_run(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "decode round-trip: 8643/8643" in out


def test_verify_crt_code(tmp_path, capsys):
    d = tmp_path / "d.json"
    main(["build-crt", "--pi1", "2,1", "--pi2", "1,2", "--target", "2", "--out", str(d)])
    code, out, _ = run(capsys, "verify", "--code", str(d), "--trials", "5")
    assert code == 0 and "decode round-trip: 150/150" in out


def test_verify_tampered_code_exit_3(code_file, tmp_path, capsys):
    text = open(code_file).read().replace('"root":[1,-1]', '"root":[2,0]')
    bad = tmp_path / "bad.json"
    bad.write_text(text)
    code, out, _ = run(capsys, "verify", "--code", str(bad), "--trials", "2")
    assert code == 3
    assert "root annihilation: 0/1" in out and "result: FAIL" in out
