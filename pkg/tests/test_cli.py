import subprocess
import sys

import pytest

from dycknums.cli import main, read_cache_entry, write_cache_entry
from dycknums.errors import CacheCorrupt


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_level(capsys):
    code, out, _ = run(capsys, "gen", "--level", "6")
    assert code == 0
    assert out.strip() == "39 43 45 47 51 53 55 59 61 63"


def test_gen_count(capsys):
    code, out, _ = run(capsys, "gen", "--count", "5")
    assert code == 0
    assert out.strip() == "0 1 3 5 7"


def test_gen_core(capsys):
    code, out, _ = run(capsys, "gen", "--core", "8")
    assert code == 0
    assert out.strip() == "143 151 155 157 159"


def test_gen_records_format(capsys):
    code, out, _ = run(capsys, "gen", "--level", "4", "--format", "records")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "kind\tn\tindex\tterm"
    assert lines[1] == "level\t4\t1\t11"
    assert lines[-1] == "level\t4\t3\t15"


def test_gen_check_against_scan(capsys):
    code, _, err = run(capsys, "gen", "--level", "8", "--check")
    assert code == 0
    assert "matches the scan oracle" in err
    code, _, err = run(capsys, "gen", "--core", "10", "--check")
    assert code == 0
    assert "matches the scan oracle" in err


def test_gen_cache_round_trip(tmp_path, capsys):
    cache = str(tmp_path)
    code, first, _ = run(capsys, "gen", "--level", "6", "--cache-dir", cache)
    assert code == 0
    assert (tmp_path / "level_6.txt").is_file()
    header = (tmp_path / "level_6.txt").read_text().splitlines()[0]
    assert header == "# level 6 10"
    code, cached, _ = run(capsys, "gen", "--level", "6", "--cache-dir", cache)
    assert code == 0 and cached == first
    code, fresh, _ = run(capsys, "gen", "--level", "6", "--cache-dir", cache, "--no-cache")
    assert code == 0 and fresh == first
    assert read_cache_entry(cache, "level", 6) == tuple(
        int(v) for v in first.split()
    )


def test_cache_entry_io(tmp_path):
    write_cache_entry(str(tmp_path), "core", 8, (143, 151, 155, 157, 159))
    assert read_cache_entry(str(tmp_path), "core", 8) == (143, 151, 155, 157, 159)
    assert read_cache_entry(str(tmp_path), "core", 10) is None
    path = tmp_path / "core_8.txt"
    path.write_text("# core 8 4\n143\n151\n155\n157\n159\n")
    with pytest.raises(CacheCorrupt):
        read_cache_entry(str(tmp_path), "core", 8)


def test_corrupt_cache_exits_nonzero(tmp_path, capsys):
    (tmp_path / "level_6.txt").write_text("# level 6 3\n39\n")
    code, _, err = run(capsys, "gen", "--level", "6", "--cache-dir", str(tmp_path))
    assert code == 1
    assert "error:" in err


@pytest.mark.parametrize(
    "op,term,expected",
    [("pred", "39", "31"), ("succ", "511", "543"), ("classify", "543", "Root"),
     ("level-of", "39", "6")],
)
def test_query_examples(capsys, op, term, expected):
    code, out, _ = run(capsys, "query", op, term)
    assert code == 0
    assert out.strip() == expected


def test_query_domain_errors(capsys):
    code, _, err = run(capsys, "query", "pred", "0")
    assert code == 1 and "undefined" in err
    code, _, err = run(capsys, "query", "succ", "9")
    assert code == 1 and "not a term" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["query", "pred", "-4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_decompose_core(capsys):
    code, out, _ = run(capsys, "decompose", "--core", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "(543) ⊕ μ8(607)^2 ⊕ π6(639)"
    assert len(lines) == 5  # four subsegments plus the combined form
    code, out, _ = run(capsys, "decompose", "--core", "6")
    assert code == 0 and out.strip() == "(39)"
    code, out, _ = run(capsys, "decompose", "--core", "12")
    assert code == 0
    assert "μ10(2303)" in out and "μ10(2431)" in out


def test_decompose_level(capsys):
    code, out, _ = run(capsys, "decompose", "--level", "8")
    assert code == 0
    assert out.strip() == "μ8(159) ⊕ π6(255)^3"


def test_verify_appendix(capsys):
    code, out, _ = run(capsys, "verify", "appendix")
    assert code == 0
    assert "PASS appendix n=500" in out


def test_verify_conj16_count(capsys):
    code, out, _ = run(capsys, "verify", "conj16", "--max-n", "20")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7
    assert all(line.startswith("PASS conj16") for line in lines)


def test_verify_eq1_records(capsys):
    code, out, _ = run(capsys, "verify", "eq1", "--max-n", "9", "--format", "records")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("name\tn\tpassed")
    assert [l.split("\t")[:3] for l in lines[1:]] == [
        ["eq1", "5", "1"], ["eq1", "7", "1"], ["eq1", "9", "1"],
    ]


def test_verify_sizes(capsys):
    code, out, _ = run(capsys, "verify", "sizes")
    assert code == 0
    assert "PASS prop10" in out and "PASS core-sizes" in out


def test_verify_oeis_single(capsys):
    code, out, _ = run(capsys, "verify", "oeis", "A002054", "--offline")
    assert code == 0
    assert "PASS oeis:A002054 n=40" in out


def test_verify_oeis_corrupted_cache_fails(tmp_path, capsys):
    (tmp_path / "b002054.txt").write_text("1 1\n2 5\n3 22\n" + "\n".join(
        f"{k} 0" for k in range(4, 25)
    ) + "\n")
    code, out, _ = run(
        capsys, "verify", "oeis", "A002054", "--offline", "--oeis-cache", str(tmp_path)
    )
    assert code == 1
    assert "FAIL oeis:A002054" in out and "index 3" in out


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "12", "--offline")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)
    assert any("appendix" in line for line in lines)
    assert any("oeis:A036991" in line for line in lines)


def test_console_script_entry():
    result = subprocess.run(
        [sys.executable, "-m", "dycknums.cli", "gen", "--level", "6"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "39 43 45 47 51 53 55 59 61 63"


def test_cache_dir_env_variable(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("DYCKNUMS_CACHE_DIR", str(tmp_path))
    code, out, _ = run(capsys, "gen", "--level", "5")
    assert code == 0
    assert (tmp_path / "level_5.txt").is_file()
    monkeypatch.setenv("DYCKNUMS_CACHE_DIR", str(tmp_path / "nowhere"))
    code, out2, _ = run(capsys, "gen", "--level", "5", "--no-cache")
    assert code == 0 and out2 == out
    assert not (tmp_path / "nowhere").exists()
