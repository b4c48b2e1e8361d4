import json

from klrchar.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_json(capsys):
    code, out, err = run_cli(capsys, "roots", "--type", "G", "--rank", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 6
    assert doc["type"] == "G2"
    assert err.strip()


def test_lyndon_e6(capsys):
    code, out, _ = run_cli(capsys, "lyndon", "--type", "E", "--rank", "6")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["words"]) == 36
    assert doc["words"][0]["word"] == "1"


def test_orders_word_literal(capsys):
    code, out, _ = run_cli(capsys, "orders", "--type", "A", "--rank", "2",
                           "--order", "121")
    assert code == 0
    doc = json.loads(out)
    assert doc["roots"] == [[1, 0], [1, 1], [0, 1]]


def test_invalid_word_fails(capsys):
    code, out, _ = run_cli(capsys, "orders", "--type", "A", "--rank", "2",
                           "--order", "112")
    assert code == 1
    assert "error" in json.loads(out)


def test_kp_command(capsys):
    code, out, _ = run_cli(capsys, "kp", "--type", "A", "--rank", "2",
                           "--alpha", "1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 2


def test_canonical_g2_json(capsys):
    code, out, _ = run_cli(capsys, "canonical", "--type", "G", "--rank", "2",
                           "--order", "lyndon")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["entries"]) == 18


def test_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "canonical", "--type", "G", "--rank", "2")
    _, out2, _ = run_cli(capsys, "canonical", "--type", "G", "--rank", "2")
    assert out1 == out2
    _, out3, _ = run_cli(capsys, "pbw-char", "--type", "B", "--rank", "3")
    _, out4, _ = run_cli(capsys, "pbw-char", "--type", "B", "--rank", "3")
    assert out3 == out4


def test_gram_willcex(capsys):
    code, out, _ = run_cli(capsys, "gram", "--type", "A", "--rank", "5",
                           "--willcex", "--mod", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["rank_char0"] == 3
    assert doc["rank_mod"]["2"] == 2
    assert doc["word"] == "4534234523123412"
    assert doc["degree"] == 0


def test_gram_generic(capsys):
    code, out, _ = run_cli(capsys, "gram", "--type", "A", "--rank", "2",
                           "--parts", "0,1;1,0", "--word", "21", "--mod", "2,3")
    assert code == 0
    doc = json.loads(out)
    assert doc["matrix"] == [[1]]
    assert doc["rank_mod"] == {"2": 1, "3": 1}


def test_resolve_a3(capsys):
    code, out, _ = run_cli(capsys, "resolve", "--type", "A", "--rank", "3",
                           "--alpha", "1,1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["differential_squares_to_zero"] is True
    assert doc["euler_matches_standard_character"] is True
    assert doc["terms"][2]["summands"] == [{"shift": 2, "word": "321"}]


def test_resolve_rejects_non_mult_free(capsys):
    code, out, _ = run_cli(capsys, "resolve", "--type", "G", "--rank", "2",
                           "--alpha", "2,1")
    assert code == 1
    assert "error" in json.loads(out)


def test_dim_check(capsys):
    code, out, _ = run_cli(capsys, "dim-check", "--type", "A", "--rank", "2",
                           "--alpha", "1,1", "--truncate", "8")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_match"] is True


def test_bad_rank(capsys):
    code, out, _ = run_cli(capsys, "roots", "--type", "D", "--rank", "2")
    assert code == 1
    assert "error" in json.loads(out)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "roots.json"
    code, out, _ = run_cli(capsys, "roots", "--type", "A", "--rank", "2",
                           "--out", str(target))
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["count"] == 3


def test_cache_dir(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "canonical", "--type", "G", "--rank", "2",
                         "--cache-dir", str(tmp_path))
    assert code == 0
    assert list(tmp_path.glob("canonical-*.json"))


def test_config_file_flags_win(tmp_path, capsys):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"type": "G", "rank": 2}))
    code, out, _ = run_cli(capsys, "roots", "--config", str(conf))
    assert code == 0
    assert json.loads(out)["type"] == "G2"
    # explicit flag beats the config value
    code, out, _ = run_cli(capsys, "roots", "--config", str(conf),
                           "--type", "B", "--rank", "3")
    assert json.loads(out)["type"] == "B3"
