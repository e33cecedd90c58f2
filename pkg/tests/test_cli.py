from datetime import datetime, timezone
from pathlib import Path

import pytest

from aitrace.cli import ScanConfig, main, parse_args, run_scan
from conftest import set_mtime
import docgen


def write_docx(directory, name, paragraphs, mtime="2024-03-01T00:00:00"):
    target = directory / name
    target.write_bytes(docgen.make_docx(paragraphs))
    set_mtime(target, mtime)
    return target


def config_for(tmp_path, inputs, **overrides):
    defaults = dict(
        inputs=[str(p) for p in inputs],
        out_dir=tmp_path / "out",
        formats=frozenset({"csv", "xlsx"}),
        jobs=2,
        no_color=True,
    )
    defaults.update(overrides)
    return ScanConfig(**defaults)


# -- argument parsing ---------------------------------------------------------

def test_parse_args_defaults():
    config = parse_args(["essays/", "--recursive"])
    assert config.inputs == ["essays/"]
    assert config.recursive is True
    assert config.naive_match is False
    assert config.threshold_date == datetime(2022, 11, 22, tzinfo=timezone.utc)
    assert config.formats == frozenset({"terminal", "csv", "xlsx"})
    assert config.jobs >= 1
    assert config.out_dir == Path(".")

def test_parse_args_threshold_override():
    config = parse_args(["--threshold-date", "2023-06-01", "f.docx"])
    assert config.threshold_date == datetime(2023, 6, 1, tzinfo=timezone.utc)

def test_parse_args_formats_subset():
    config = parse_args(["--formats", "csv", "f.docx"])
    assert config.formats == frozenset({"csv"})

def test_parse_args_formats_multiple():
    config = parse_args(["--formats", "csv,terminal", "f.docx"])
    assert config.formats == frozenset({"csv", "terminal"})

@pytest.mark.parametrize(
    "argv",
    [
        ["--unknown-flag", "f.docx"],
        ["--formats", "pdf", "f.docx"],
        ["--formats", "", "f.docx"],
        ["--jobs", "0", "f.docx"],
        ["--threshold-date", "yesterday", "f.docx"],
        [],
    ],
)
def test_parse_args_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as err:
        parse_args(argv)
    assert err.value.code == 2


# -- run_scan exit codes --------------------------------------------------------

def test_all_green_corpus_exits_zero(tmp_path, capsys):
    docs = tmp_path / "docs"
    docs.mkdir()
    for index in range(3):
        write_docx(docs, f"essay_{index}.docx", [f"Draft {index} uses “curly” quotes only."])
    code = run_scan(config_for(tmp_path, [docs], recursive=True))
    assert code == 0
    out_files = sorted(p.name for p in (tmp_path / "out").iterdir())
    assert len(out_files) == 2
    assert out_files[0].startswith("ai_detection_results-") and out_files[0].endswith(".csv")
    assert out_files[1].endswith(".xlsx")

def test_mixed_encoding_without_mention_exits_one(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "mixed.docx", ['Pasted "clip" into a “typed” draft.'])
    assert run_scan(config_for(tmp_path, [docs], recursive=True)) == 1

def test_only_unscannable_file_exits_three(tmp_path, capsys):
    docs = tmp_path / "docs"
    docs.mkdir()
    target = docs / "notes.txt"
    target.write_text("plain notes")
    code = run_scan(config_for(tmp_path, [target], formats=frozenset({"terminal", "csv"})))
    assert code == 3
    captured = capsys.readouterr()
    assert "ERROR" in captured.out
    assert "UnsupportedExtension" in captured.out

def test_unwritable_out_dir_exits_three(tmp_path, capsys):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "fine.docx", ["Typed “normally”."])
    blocker = tmp_path / "blocked"
    blocker.write_text("a file where out-dir should go")
    code = run_scan(config_for(tmp_path, [docs], recursive=True, out_dir=blocker))
    assert code == 3

def test_empty_input_set_exits_zero(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    code = run_scan(
        config_for(tmp_path, [empty], recursive=True, formats=frozenset({"terminal"}))
    )
    assert code == 0
    assert "0 scanned" in capsys.readouterr().out

def test_gate_error_rows_do_not_force_exit_three_when_others_scan(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "good.docx", ["All “curly” text."])
    (docs / "junk.txt").write_text("x")
    assert run_scan(config_for(tmp_path, [docs], recursive=True)) == 0


# -- report contents through the CLI ----------------------------------------------

def read_report_csv(out_dir):
    path = next(p for p in out_dir.iterdir() if p.suffix == ".csv")
    return path.read_bytes().decode("utf-8")

def test_terminal_summary_not_colored_when_not_a_tty(tmp_path, capsys):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "red.docx", ['Mixed "straight" and “curly”.'])
    run_scan(config_for(tmp_path, [docs], recursive=True,
                        formats=frozenset({"terminal"}), no_color=False))
    assert "\x1b[" not in capsys.readouterr().out

def test_no_color_env_is_honored(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "red.docx", ['Mixed "straight" and “typed”.'])
    run_scan(config_for(tmp_path, [docs], recursive=True,
                        formats=frozenset({"terminal"}), no_color=False))
    assert "\x1b[" not in capsys.readouterr().out

def test_custom_tools_file_adds_columns(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "essay.docx", ["HouseBot edited this “draft” with \"care\"."])
    tools = tmp_path / "tools.conf"
    tools.write_text("HouseBot = word:house bot\n", encoding="utf-8")
    code = run_scan(config_for(tmp_path, [docs], recursive=True,
                               formats=frozenset({"csv"}), tools_file=tools))
    assert code == 0  # mention acknowledges the mixed encoding
    content = read_report_csv(tmp_path / "out")
    header = content.splitlines()[0]
    assert header == "File Name,AI Traces,HouseBot Mentioned,Verdict,Warnings"
    assert "Yes" in content.splitlines()[1]

def test_bad_tools_file_is_usage_error(tmp_path, capsys):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "essay.docx", ["text"])
    tools = tmp_path / "tools.conf"
    tools.write_text("broken line\n", encoding="utf-8")
    assert run_scan(config_for(tmp_path, [docs], recursive=True, tools_file=tools)) == 2

def test_naive_match_flag_changes_verdict(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "essay.docx",
               ['A metaphor with "straight" and “curly” quotes.'])
    assert run_scan(config_for(tmp_path, [docs], recursive=True)) == 1
    assert run_scan(config_for(tmp_path, [docs], recursive=True, naive_match=True)) == 0

def test_threshold_date_config_is_applied(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "essay.docx", ['Mixed "x" and “y”.'], mtime="2023-01-15T00:00:00")
    late = datetime(2023, 6, 1, tzinfo=timezone.utc)
    code = run_scan(config_for(tmp_path, [docs], recursive=True, threshold_date=late,
                               formats=frozenset({"csv"})))
    assert code == 3  # the only file errored (PreChatGPTDate against override)
    assert "PreChatGPTDate" in read_report_csv(tmp_path / "out")

def test_jobs_one_and_many_produce_identical_reports(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    for index in range(12):
        quotes = '"straight"' if index % 3 == 0 else "“curly”"
        write_docx(docs, f"essay_{index:02d}.docx", [f"Draft {index} with {quotes} marks."])
    run_scan(config_for(tmp_path, [docs], recursive=True, jobs=1, out_dir=tmp_path / "one"))
    run_scan(config_for(tmp_path, [docs], recursive=True, jobs=8, out_dir=tmp_path / "many"))
    one_csv = next((tmp_path / "one").glob("*.csv")).read_bytes()
    many_csv = next((tmp_path / "many").glob("*.csv")).read_bytes()
    assert one_csv == many_csv
    one_xlsx = next((tmp_path / "one").glob("*.xlsx")).read_bytes()
    many_xlsx = next((tmp_path / "many").glob("*.xlsx")).read_bytes()
    assert one_xlsx == many_xlsx

def test_main_wires_everything(tmp_path, capsys):
    docs = tmp_path / "docs"
    docs.mkdir()
    write_docx(docs, "fine.docx", ["Typed “properly” throughout."])
    code = main([str(docs), "--recursive", "--formats", "terminal", "--no-color"])
    assert code == 0
    assert "1 scanned, 0 red, 1 green" in capsys.readouterr().out
