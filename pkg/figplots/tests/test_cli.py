import pytest

from figplots.cli import build_parser, main

HEADER = (
    "iteration,covered_R,covered_P_next,pareto_individuals_R,"
    "pareto_individuals_P_next,f1_size,full_coverage"
)


def write_log(tmp_path, name="run.csv"):
    path = tmp_path / name
    path.write_text(HEADER + "\n0,1,1,2,2,3,0\n1,2,2,3,3,4,0\n")
    return path


def test_coverage_run_writes_the_file(tmp_path, capsys):
    log = write_log(tmp_path)
    out = tmp_path / "c.svg"
    code = main(
        ["--kind", "coverage", "--in", str(log), "--m-ref", "25", "--out", str(out)]
    )
    assert code == 0
    assert out.exists()
    assert f"wrote {out}" in capsys.readouterr().out


def test_compare_token_maps_to_variant_comparison(tmp_path):
    logs = [write_log(tmp_path, f"v{i}.csv") for i in range(2)]
    out = tmp_path / "cmp.png"
    code = main(
        ["--kind", "compare", "--in", str(logs[0]), str(logs[1]),
         "--m-ref", "49", "--out", str(out)]
    )
    assert code == 0
    assert out.exists()


def test_f1_pareto_needs_n_ref(tmp_path, capsys):
    log = write_log(tmp_path)
    code = main(
        ["--kind", "f1-pareto", "--in", str(log), "--out", str(tmp_path / "o.svg")]
    )
    assert code == 2
    assert "population size" in capsys.readouterr().err


def test_coverage_without_m_ref_is_a_usage_error(tmp_path, capsys):
    log = write_log(tmp_path)
    code = main(["--kind", "coverage", "--in", str(log), "--out", str(tmp_path / "o.svg")])
    assert code == 2
    assert "front size" in capsys.readouterr().err


def test_unknown_kind_is_rejected_by_argparse(tmp_path, capsys):
    code = main(
        ["--kind", "pie", "--in", "x.csv", "--m-ref", "2", "--out", "o.svg"]
    )
    assert code == 2
    assert "--kind" in capsys.readouterr().err


def test_label_count_mismatch(tmp_path, capsys):
    log = write_log(tmp_path)
    code = main(
        ["--kind", "coverage", "--in", str(log), "--m-ref", "25",
         "--label", "a", "b", "--out", str(tmp_path / "o.svg")]
    )
    assert code == 2
    assert "labels" in capsys.readouterr().err


def test_bad_csv_is_a_data_error(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("iteration,covered_R\n0\n")
    code = main(
        ["--kind", "compare", "--in", str(bad), "--m-ref", "25",
         "--out", str(tmp_path / "o.svg")]
    )
    assert code == 1
    assert "expected 2 fields" in capsys.readouterr().err
    assert not (tmp_path / "o.svg").exists()


def test_missing_input_file_is_a_data_error(tmp_path, capsys):
    code = main(
        ["--kind", "coverage", "--in", str(tmp_path / "nope.csv"),
         "--m-ref", "25", "--out", str(tmp_path / "o.svg")]
    )
    assert code == 1
    assert "nope.csv" in capsys.readouterr().err


def test_labels_reach_the_legend(tmp_path):
    log = write_log(tmp_path)
    out = tmp_path / "o.svg"
    code = main(
        ["--kind", "compare", "--in", str(log), "--m-ref", "25",
         "--label", "standard mutation", "--out", str(out)]
    )
    assert code == 0
    assert "standard mutation" in out.read_text()


def test_parser_requires_kind_in_and_out(capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
    assert "required" in capsys.readouterr().err
