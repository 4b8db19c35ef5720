import json

import pytest

from pulso.cli import main
from util import tweet_dict, write_jsonl

CORPUS = [
    tweet_dict(1, "Macri gana! Cambiemos.", location="CABA"),
    tweet_dict(2, "CambiemosConMacri ya", location="caba"),
    tweet_dict(3, "Scioli y la CaravanaNaranja", location="Rosario"),
    tweet_dict(4, "I like Macri", lang="en"),
    "linea rota",
]


@pytest.fixture(scope="module")
def corpus_path(tmp_path_factory):
    return write_jsonl(tmp_path_factory.mktemp("cli") / "corpus.jsonl", CORPUS)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRun:
    def test_full_run(self, corpus_path, tmp_path, capsys):
        out_dir = tmp_path / "out"
        code, out, err = run_cli(
            capsys,
            "run",
            "--corpus",
            str(corpus_path),
            "--out",
            str(out_dir),
            "--lang",
            "es",
        )
        assert code == 0, err
        report = json.loads(out)
        assert report["lines_read"] == 5
        assert report["malformed"] == 1
        assert report["filtered_out"] == 1
        assert report["considered"] == 3
        assert report["agreement_count"] == 1
        assert report["shares"]["n_macri"] == 2
        assert len(report["outputs"]) == 4
        for name in (
            "aggregate.csv",
            "shares.json",
            "province_table.csv",
            "correlation.json",
        ):
            assert (out_dir / name).is_file()

    def test_keyword_filter(self, tmp_path, capsys):
        corpus = write_jsonl(
            tmp_path / "corpus.jsonl",
            [tweet_dict(1, "hoy es el Balotaje"), tweet_dict(2, "lindo dia")],
        )
        code, out, _ = run_cli(
            capsys,
            "run",
            "--corpus",
            str(corpus),
            "--out",
            str(tmp_path / "out"),
            "--keyword",
            "balotaje",
        )
        assert code == 0
        report = json.loads(out)
        assert report["considered"] == 1
        assert report["filtered_out"] == 1

    def test_window_flags(self, tmp_path, capsys):
        corpus = write_jsonl(
            tmp_path / "corpus.jsonl",
            [
                tweet_dict(1, "Macri", created="2015-11-20T10:00:00-03:00"),
                tweet_dict(2, "Macri", created="2015-11-23T10:00:00-03:00"),
            ],
        )
        code, out, _ = run_cli(
            capsys,
            "run",
            "--corpus",
            str(corpus),
            "--out",
            str(tmp_path / "out"),
            "--to",
            "2015-11-22T17:59:59-03:00",
        )
        assert code == 0
        assert json.loads(out)["considered"] == 1

    def test_empty_corpus_exit_2(self, tmp_path, capsys):
        corpus = write_jsonl(tmp_path / "corpus.jsonl", [tweet_dict(1, "hi", lang="en")])
        code, _, err = run_cli(
            capsys,
            "run",
            "--corpus",
            str(corpus),
            "--out",
            str(tmp_path / "out"),
            "--lang",
            "es",
        )
        assert code == 2
        assert "no records survived" in err

    def test_missing_corpus_exit_1(self, tmp_path, capsys):
        code, _, err = run_cli(
            capsys,
            "run",
            "--corpus",
            str(tmp_path / "nope.jsonl"),
            "--out",
            str(tmp_path / "out"),
        )
        assert code == 1
        assert "pulso:" in err

    def test_bad_timestamp_exit_1(self, corpus_path, tmp_path, capsys):
        code, _, err = run_cli(
            capsys,
            "run",
            "--corpus",
            str(corpus_path),
            "--out",
            str(tmp_path / "out"),
            "--to",
            "ayer",
        )
        assert code == 1
        assert "bad timestamp" in err

    def test_threads_env_applies(self, corpus_path, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("PULSO_THREADS", "2")
        code, out, _ = run_cli(
            capsys,
            "run",
            "--corpus",
            str(corpus_path),
            "--out",
            str(tmp_path / "out"),
            "--lang",
            "es",
        )
        assert code == 0
        assert json.loads(out)["considered"] == 3

    def test_threads_env_invalid_exit_1(self, corpus_path, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("PULSO_THREADS", "dos")
        code, _, err = run_cli(
            capsys,
            "run",
            "--corpus",
            str(corpus_path),
            "--out",
            str(tmp_path / "out"),
        )
        assert code == 1
        assert "PULSO_THREADS" in err


class TestUsageErrors:
    def test_missing_required_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["run"])
        assert info.value.code == 1

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 1


class TestLexiconCommands:
    def test_validate_bundled(self, capsys):
        code, out, _ = run_cli(capsys, "lexicon", "validate")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "ok"
        assert payload["attributes"] == 2
        assert payload["synonyms"] == 5

    def test_validate_broken_dictionary_exit_1(self, tmp_path, capsys):
        (tmp_path / "white_list.txt").write_text("macri\n", encoding="utf-8")
        (tmp_path / "normalization.tsv").write_text("scioli\tFPV\n", encoding="utf-8")
        (tmp_path / "pos_words.txt").write_text("", encoding="utf-8")
        (tmp_path / "neg_words.txt").write_text("", encoding="utf-8")
        code, _, err = run_cli(capsys, "lexicon", "validate", "--lexicon", str(tmp_path))
        assert code == 1
        assert "pulso:" in err

    def test_suggest(self, tmp_path, capsys):
        corpus = write_jsonl(
            tmp_path / "corpus.jsonl",
            [tweet_dict(1, "voto voto urna"), tweet_dict(2, "voto")],
        )
        code, out, _ = run_cli(
            capsys, "lexicon", "suggest", "--corpus", str(corpus), "--top", "1"
        )
        assert code == 0
        assert out.splitlines() == ["voto\t3"]


class TestLocationsCommand:
    def test_unmatched(self, tmp_path, capsys):
        corpus = write_jsonl(
            tmp_path / "corpus.jsonl",
            [
                tweet_dict(1, "hola", location="Narnia"),
                tweet_dict(2, "hola", location="Narnia"),
                tweet_dict(3, "hola", location="CABA"),
            ],
        )
        code, out, _ = run_cli(capsys, "locations", "unmatched", "--corpus", str(corpus))
        assert code == 0
        assert out.splitlines() == ["Narnia\t2"]


class TestCorrelateAndReport:
    @pytest.fixture()
    def aggregate_path(self, corpus_path, tmp_path, capsys):
        out_dir = tmp_path / "run_out"
        code, _, _ = run_cli(
            capsys,
            "run",
            "--corpus",
            str(corpus_path),
            "--out",
            str(out_dir),
            "--lang",
            "es",
        )
        assert code == 0
        return out_dir / "aggregate.csv"

    def test_correlate(self, aggregate_path, capsys):
        code, out, _ = run_cli(capsys, "correlate", "--aggregate", str(aggregate_path))
        assert code == 0
        payload = json.loads(out)
        assert [entry["candidate"] for entry in payload] == ["Macri", "Scioli"]
        assert all(entry["n"] == 24 for entry in payload)

    def test_correlate_percent(self, aggregate_path, capsys):
        code, out, _ = run_cli(
            capsys, "correlate", "--aggregate", str(aggregate_path), "--percent"
        )
        assert code == 0
        payload = json.loads(out)
        # only the two provinces with tweets have defined shares
        assert all(entry["error"] is not None for entry in payload)

    def test_correlate_missing_aggregate_exit_1(self, tmp_path, capsys):
        code, _, err = run_cli(
            capsys, "correlate", "--aggregate", str(tmp_path / "nope.csv")
        )
        assert code == 1
        assert "pulso:" in err

    def test_report(self, aggregate_path, tmp_path, capsys):
        out_dir = tmp_path / "report_out"
        code, out, _ = run_cli(
            capsys, "report", "--aggregate", str(aggregate_path), "--out", str(out_dir)
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["agreement_count"] == 1
        assert payload["shares"]["n_macri"] == 2
        assert len(payload["outputs"]) == 3
        for name in ("shares.json", "province_table.csv", "correlation.json"):
            assert (out_dir / name).is_file()

    def test_report_matches_run_outputs(self, aggregate_path, tmp_path, capsys):
        out_dir = tmp_path / "derived"
        code, _, _ = run_cli(
            capsys, "report", "--aggregate", str(aggregate_path), "--out", str(out_dir)
        )
        assert code == 0
        run_dir = aggregate_path.parent
        for name in ("shares.json", "province_table.csv", "correlation.json"):
            assert (out_dir / name).read_bytes() == (run_dir / name).read_bytes()
