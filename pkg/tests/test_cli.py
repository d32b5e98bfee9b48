import numpy as np
import pytest

from nsga2lab.benchmarks import ProblemSpec
from nsga2lab.cli import (
    ConfigError,
    main,
    parse_config,
    resolve_population_size,
)
from nsga2lab.experiment import read_records_csv


def run_main(args):
    return main([str(a) for a in args])


class TestResolvePopulationSize:
    def test_absolute(self):
        spec = ProblemSpec(n=40, m=4)
        assert resolve_population_size(84, spec) == 84
        assert resolve_population_size("84", spec) == 84

    def test_front_size_multiples(self):
        spec = ProblemSpec(n=40, m=4)
        assert spec.front_size == 441
        assert resolve_population_size("4M", spec) == 1764
        assert resolve_population_size("2m", spec) == 882
        assert resolve_population_size("8M", spec) == 3528

    def test_rejects_garbage(self):
        spec = ProblemSpec(n=40, m=4)
        with pytest.raises(ConfigError):
            resolve_population_size("xM", spec)
        with pytest.raises(ConfigError):
            resolve_population_size("4.5M", spec)
        with pytest.raises(ConfigError):
            resolve_population_size("many", spec)
        with pytest.raises(ConfigError):
            resolve_population_size("0", spec)
        with pytest.raises(ConfigError):
            resolve_population_size(-3, spec)


class TestParseConfig:
    def test_defaults(self):
        batch = parse_config([])
        assert batch.config.problem == ProblemSpec(n=40, m=4)
        assert batch.config.population_size == 1764  # 4M at n=40
        assert batch.config.iterations == 1000
        assert batch.config.variation.selection == "fair"
        assert batch.config.variation.mutation == "standard_bit"
        assert not batch.config.variation.crossover_enabled
        assert batch.replicates == 5
        assert batch.threads == 1

    def test_flags_override_defaults(self):
        batch = parse_config(
            [
                "--m", "2", "--n", "20", "--pop", "84",
                "--iterations", "50", "--selection", "random",
                "--mutation", "onebit", "--seed", "9",
                "--replicates", "2", "--threads", "3",
                "--out", "somewhere", "--early-stop",
            ]
        )
        assert batch.config.problem == ProblemSpec(n=20, m=2)
        assert batch.config.population_size == 84
        assert batch.config.variation.mutation == "one_bit"
        assert batch.config.variation.selection == "random"
        assert batch.config.early_stop
        assert batch.config.seed == 9
        assert batch.replicates == 2
        assert batch.threads == 3
        assert str(batch.out_dir) == "somewhere"

    def test_crossover_flags(self):
        batch = parse_config(
            ["--selection", "random", "--crossover", "--crossover-prob", "0.25"]
        )
        assert batch.config.variation.crossover_enabled
        assert batch.config.variation.crossover_probability == 0.25

    def test_invalid_geometry_raises_config_error(self):
        with pytest.raises(ConfigError, match="m must be even"):
            parse_config(["--m", "3", "--n", "40"])
        with pytest.raises(ConfigError):
            parse_config(["--m", "6", "--n", "10"])
        # m/2 = 2 divides 10: accepted.
        parse_config(["--m", "4", "--n", "10", "--pop", "8"])

    def test_crossover_with_fair_selection_rejected(self):
        with pytest.raises(ConfigError):
            parse_config(["--crossover"])  # default selection is fair


class TestConfigFile:
    def test_file_values_used(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "# small control instance\n"
            "m = 2\n"
            "n = 20\n"
            "pop = 84\n"
            "iterations = 40\n"
            "selection = random\n"
            "early-stop = true\n"
            "\n"
        )
        batch = parse_config(["--config", str(cfg)])
        assert batch.config.problem == ProblemSpec(n=20, m=2)
        assert batch.config.population_size == 84
        assert batch.config.iterations == 40
        assert batch.config.variation.selection == "random"
        assert batch.config.early_stop

    def test_flags_beat_file(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("n = 20\nm = 2\npop = 84\niterations = 40\n")
        batch = parse_config(["--config", str(cfg), "--iterations", "7"])
        assert batch.config.iterations == 7
        assert batch.config.population_size == 84

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("popsize = 84\n")
        with pytest.raises(ConfigError, match="unknown option"):
            parse_config(["--config", str(cfg)])

    def test_bad_boolean_rejected(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("early-stop = maybe\n")
        with pytest.raises(ConfigError, match="boolean"):
            parse_config(["--config", str(cfg)])

    def test_missing_file_rejected(self):
        with pytest.raises(ConfigError):
            parse_config(["--config", "/does/not/exist.cfg"])

    def test_line_without_equals_rejected(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("just some words\n")
        with pytest.raises(ConfigError):
            parse_config(["--config", str(cfg)])


class TestMain:
    def test_configuration_errors_exit_2(self, capsys):
        assert run_main(["--m", 3, "--n", 40]) == 2
        assert "m must be even" in capsys.readouterr().err

    def test_unknown_flag_exits_2(self, capsys):
        assert run_main(["--frobnicate"]) == 2

    def test_invalid_choice_exits_2(self, capsys):
        assert run_main(["--selection", "roulette"]) == 2

    def test_runtime_errors_exit_1(self, tmp_path, capsys):
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        code = run_main(
            ["--m", 4, "--n", 8, "--pop", 8, "--iterations", 1,
             "--out", blocker / "sub"]
        )
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_small_run_end_to_end(self, tmp_path, capsys):
        out = tmp_path / "results"
        code = run_main(
            ["--m", 4, "--n", 8, "--pop", 10, "--iterations", 5,
             "--seed", 3, "--replicates", 2, "--out", out]
        )
        assert code == 0
        text = capsys.readouterr().out
        assert "front size 25" in text
        assert "2 replicate file(s)" in text
        names = sorted(p.name for p in out.iterdir())
        assert names == ["aggregate.csv", "replicate_000.csv", "replicate_001.csv"]
        records = read_records_csv(out / "replicate_000.csv")
        assert [r.iteration for r in records] == [0, 1, 2, 3, 4, 5]

    def test_threads_do_not_change_outputs(self, tmp_path):
        base = ["--m", 4, "--n", 8, "--pop", 10, "--iterations", 4,
                "--seed", 1, "--replicates", 3]
        assert run_main(base + ["--out", tmp_path / "a", "--threads", 1]) == 0
        assert run_main(base + ["--out", tmp_path / "b", "--threads", 3]) == 0
        for name in ["replicate_000.csv", "replicate_001.csv", "replicate_002.csv",
                     "aggregate.csv"]:
            assert (tmp_path / "a" / name).read_bytes() == (
                tmp_path / "b" / name
            ).read_bytes()

    def test_early_stop_shortens_the_log(self, tmp_path):
        out = tmp_path / "es"
        code = run_main(
            ["--m", 2, "--n", 20, "--pop", 84, "--iterations", 1600,
             "--seed", 11, "--replicates", 1, "--early-stop", "--out", out]
        )
        assert code == 0
        records = read_records_csv(out / "replicate_000.csv")
        assert records[-1].full_coverage
        assert len(records) < 1601

    def test_zero_iterations_gives_single_row(self, tmp_path):
        out = tmp_path / "zero"
        code = run_main(
            ["--m", 4, "--n", 8, "--pop", 6, "--iterations", 0,
             "--replicates", 1, "--out", out]
        )
        assert code == 0
        lines = (out / "replicate_000.csv").read_text().splitlines()
        assert len(lines) == 2
