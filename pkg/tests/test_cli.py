import json

from click.testing import CliRunner

from uarg.cli import main

EX1_IAF_TEXT = "arg(a).\n?arg(b).\n?arg(c).\natt(b,a).\natt(c,a).\n"


def run(*argv, **kwargs):
    return CliRunner().invoke(main, list(argv), **kwargs)


class TestCompletionsCommand:
    def test_fixture_example1_count(self):
        result = run("completions", "fixture:example1", "--count")
        assert result.exit_code == 0
        assert result.output.strip() == "4"

    def test_fixture_example4_count(self):
        result = run("completions", "fixture:example4", "--count")
        assert result.output.strip() == "4"

    def test_fixture_example5_count(self):
        result = run("completions", "fixture:example5", "--count")
        assert result.output.strip() == "2"

    def test_fixture_thm5_count(self):
        # imply([a,b],[c]) excludes exactly the {a,b} subset: 7 of 8 remain
        result = run("completions", "fixture:thm5_imp", "--count")
        assert result.output.strip() == "7"

    def test_file_input_document_output(self, tmp_path):
        path = tmp_path / "ex1.iaf"
        path.write_text(EX1_IAF_TEXT, encoding="utf-8")
        result = run("completions", str(path), "--kind", "arg-iaf")
        assert result.exit_code == 0
        assert result.output.count("---") == 4
        assert "att(b,a)." in result.output

    def test_determinism(self):
        first = run("completions", "fixture:example4")
        second = run("completions", "fixture:example4")
        assert first.output == second.output

    def test_parse_error_exit_code(self, tmp_path):
        path = tmp_path / "broken.iaf"
        path.write_text("arg(a\n", encoding="utf-8")
        result = run("completions", str(path), "--kind", "arg-iaf")
        assert result.exit_code == 2

    def test_bound_exit_code(self, tmp_path):
        path = tmp_path / "wide.iaf"
        path.write_text("".join(f"?arg(u{i}).\n" for i in range(8)),
                        encoding="utf-8")
        result = run("--max-uncertain", "4", "completions", str(path),
                     "--kind", "arg-iaf")
        assert result.exit_code == 3


class TestTranslateCommand:
    def test_verify_example1_to_rul(self):
        result = run("translate", "fixture:example1", "--from", "arg-iaf",
                     "--to", "rul-isaf", "--verify")
        assert result.exit_code == 0, result.output

    def test_verify_thm3_to_imp(self):
        result = run("translate", "fixture:thm3_rul", "--from", "rul-isaf",
                     "--to", "imp-arg-iaf", "--verify")
        assert result.exit_code == 0, result.output

    def test_unsupported_direction(self):
        result = run("translate", "fixture:example1", "--from", "arg-iaf",
                     "--to", "imp-arg-iaf")
        assert result.exit_code == 2

    def test_emits_framework_and_witness(self):
        result = run("translate", "fixture:example1", "--from", "arg-iaf",
                     "--to", "prem-isaf")
        assert "=== witness ===" in result.output
        witness_part = result.output.split("=== witness ===\n")[1]
        payload = json.loads(witness_part)
        assert ["a", "p_a"] in payload["map"]

    def test_output_files(self, tmp_path):
        fw = tmp_path / "target.json"
        wt = tmp_path / "witness.json"
        result = run("translate", "fixture:example5", "--from", "prem-isaf",
                     "--to", "rul-isaf", "--verify",
                     "--out-framework", str(fw), "--out-witness", str(wt))
        assert result.exit_code == 0, result.output
        assert json.loads(fw.read_text())["rules"]
        assert json.loads(wt.read_text())["map"]


class TestEquivCommand:
    def test_equivalent_sets(self, tmp_path):
        left = tmp_path / "left.afs"
        right = tmp_path / "right.afs"
        left.write_text("arg(a).\n---\narg(a).\narg(b).\natt(a,b).\n---\n",
                        encoding="utf-8")
        right.write_text("arg(x).\n---\narg(x).\narg(y).\natt(x,y).\n---\n",
                         encoding="utf-8")
        result = run("equiv", str(left), str(right))
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["verdict"] == "equivalent"
        assert payload["witness"]["map"]

    def test_not_equivalent_exit_one(self, tmp_path):
        left = tmp_path / "left.afs"
        right = tmp_path / "right.afs"
        left.write_text("arg(a).\narg(b).\natt(a,b).\n---\n"
                        "arg(a).\narg(b).\natt(b,a).\n---\n",
                        encoding="utf-8")
        right.write_text("arg(a).\narg(b).\natt(a,b).\n---\n"
                         "arg(c).\narg(d).\natt(d,c).\n---\n",
                         encoding="utf-8")
        result = run("equiv", str(left), str(right))
        assert result.exit_code == 1
        assert json.loads(result.output)["verdict"] == "not_equivalent"

    def test_directory_input(self, tmp_path):
        left = tmp_path / "left"
        left.mkdir()
        (left / "one.apx").write_text("arg(a).\n", encoding="utf-8")
        right = tmp_path / "right.afs"
        right.write_text("arg(b).\n---\n", encoding="utf-8")
        result = run("equiv", str(left), str(right))
        assert result.exit_code == 0

    def test_identity_only_flag(self, tmp_path):
        left = tmp_path / "left.afs"
        right = tmp_path / "right.afs"
        left.write_text("arg(a).\n---\n", encoding="utf-8")
        right.write_text("arg(b).\n---\n", encoding="utf-8")
        assert run("equiv", str(left), str(right)).exit_code == 0
        assert run("equiv", "--identity-only", str(left),
                   str(right)).exit_code == 1


class TestSemanticsCommand:
    def test_grounded_singleton(self, tmp_path):
        path = tmp_path / "one.apx"
        path.write_text("arg(a).\n", encoding="utf-8")
        result = run("semantics", str(path), "--sigma", "grounded")
        assert json.loads(result.output) == {
            "semantics": "grounded", "extensions": [["a"]]}

    def test_stable_on_empty(self, tmp_path):
        path = tmp_path / "empty.apx"
        path.write_text("", encoding="utf-8")
        result = run("semantics", str(path), "--sigma", "stable")
        assert json.loads(result.output) == {
            "semantics": "stable", "extensions": [[]]}


class TestSynthDepsCommand:
    def test_synthesize_from_target(self, tmp_path):
        iaf = tmp_path / "base.iaf"
        iaf.write_text(EX1_IAF_TEXT, encoding="utf-8")
        target = tmp_path / "target.afs"
        target.write_text("arg(a).\narg(b).\natt(b,a).\n---\n"
                          "arg(a).\narg(c).\natt(c,a).\n---\n",
                          encoding="utf-8")
        result = run("synth-deps", str(iaf), str(target))
        assert result.exit_code == 0
        assert "nand([b,c])." in result.output
        assert "or([b,c])." in result.output

    def test_target_not_subset(self, tmp_path):
        iaf = tmp_path / "base.iaf"
        iaf.write_text(EX1_IAF_TEXT, encoding="utf-8")
        target = tmp_path / "target.afs"
        target.write_text("arg(zz).\n---\n", encoding="utf-8")
        assert run("synth-deps", str(iaf), str(target)).exit_code == 2


class TestExportDot:
    def test_dashed_uncertain_nodes(self):
        result = run("export-dot", "fixture:example1")
        assert result.exit_code == 0
        assert result.output.count("[style=dashed]") == 2
        assert '"b" -> "a";' in result.output

    def test_plain_af(self, tmp_path):
        path = tmp_path / "af.apx"
        path.write_text("arg(a).\narg(b).\natt(a,b).\n", encoding="utf-8")
        result = run("export-dot", str(path), "--kind", "af")
        assert "style=dashed" not in result.output


class TestFixturesCommands:
    def test_list_contains_registry(self):
        result = run("fixtures", "list")
        for name in ("example1", "example4", "thm10_rul",
                     "remark_weak_equiv"):
            assert name in result.output

    def test_emit_iaf(self):
        result = run("fixtures", "emit", "example1")
        assert result.output == EX1_IAF_TEXT

    def test_emit_pair(self):
        result = run("fixtures", "emit", "remark_weak_equiv")
        assert "%% left" in result.output and "%% right" in result.output

    def test_emitted_documents_reload(self, tmp_path):
        out = tmp_path / "ex4.json"
        assert run("fixtures", "emit", "example4",
                   "--out", str(out)).exit_code == 0
        result = run("completions", str(out), "--kind", "rul-isaf", "--count")
        assert result.output.strip() == "4"


class TestConfigLayers:
    def test_config_file(self, tmp_path):
        cfg = tmp_path / "uarg.cfg"
        cfg.write_text("max_uncertain = 1\n", encoding="utf-8")
        result = run("--config", str(cfg), "completions", "fixture:example1",
                     "--count")
        assert result.exit_code == 3

    def test_env_overrides_config(self, tmp_path, monkeypatch):
        cfg = tmp_path / "uarg.cfg"
        cfg.write_text("max_uncertain = 1\n", encoding="utf-8")
        monkeypatch.setenv("UARG_MAX_UNCERTAIN", "10")
        result = run("--config", str(cfg), "completions", "fixture:example1",
                     "--count")
        assert result.exit_code == 0

    def test_flag_overrides_env(self, monkeypatch):
        monkeypatch.setenv("UARG_MAX_UNCERTAIN", "10")
        result = run("--max-uncertain", "1", "completions", "fixture:example1",
                     "--count")
        assert result.exit_code == 3
