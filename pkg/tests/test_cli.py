import subprocess
import sys

from setorbits.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_order_single_group_prints_bare_value(capsys):
    code, out, _ = run_cli(capsys, "order", "M24")
    assert code == 0
    assert out == "244823040\n"


def test_order_multiple_groups_prints_named_rows(capsys):
    code, out, _ = run_cli(capsys, "order", "M11", "M12")
    assert code == 0
    assert out == "M11 7920\nM12 95040\n"


def test_set_orbits(capsys):
    code, out, _ = run_cli(capsys, "set-orbits", "S8")
    assert (code, out) == (0, "9\n")
    code, out, _ = run_cli(capsys, "set-orbits", "S3", "S4")
    assert (code, out) == (0, "S3 4\nS4 5\n")
    code, out, _ = run_cli(capsys, "set-orbits", "PGL(2,13)")
    assert (code, out) == (0, "35\n")


def test_cycle_index_rows_sorted_by_type(capsys):
    code, out, _ = run_cli(capsys, "cycle-index", "C4")
    assert code == 0
    assert out == ("degree 4 order 4 classes 3\n"
                   "term 1,1,1,1 1\n"
                   "term 2,2 1\n"
                   "term 4 2\n")


def test_multiset_orbits_normalizes_part_order(capsys):
    code, out, _ = run_cli(capsys, "multiset-orbits", "M12", "6,2,2,1,1")
    assert (code, out) == (0, "3\n")
    code, out, _ = run_cli(capsys, "multiset-orbits", "M12", "1,2,6,1,2")
    assert (code, out) == (0, "3\n")


def test_wreath_prints_the_agreed_count(capsys):
    code, out, _ = run_cli(capsys, "wreath", "--base-s", "3", "--top", "S3")
    assert (code, out) == (0, "10\n")


def test_limit_with_explicit_seed(capsys):
    code, out, _ = run_cli(capsys, "limit", "--k", "2",
                           "--s0", "2015969622039961", "--digits", "21")
    assert code == 0
    assert out == "[0.171222480865478579814, 0.171222480865478579815]\n"


def test_unknown_group_fails_cleanly(capsys):
    code, _, err = run_cli(capsys, "order", "M25")
    assert code == 2
    assert "error:" in err


def test_invalid_partition_fails_cleanly(capsys):
    code, _, err = run_cli(capsys, "multiset-orbits", "M12", "0,12")
    assert code == 2
    assert "error:" in err


def test_invalid_worker_count_fails_cleanly(capsys):
    code, _, err = run_cli(capsys, "set-orbits", "M11", "--workers", "0")
    assert code == 2
    assert "error:" in err


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "orders.txt"
    code, out, _ = run_cli(capsys, "order", "M24", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "244823040\n"


def test_worker_counts_produce_identical_bytes():
    """Census merging is associative and ordered, so the report must not
    depend on how the top transversal was sliced."""
    runs = [subprocess.run([sys.executable, "-m", "setorbits.cli",
                            "cycle-index", "M22", "--workers", str(w)],
                           capture_output=True, timeout=300)
            for w in (1, 2)]
    assert all(r.returncode == 0 for r in runs)
    assert runs[0].stdout == runs[1].stdout
    assert runs[0].stdout.startswith(b"degree 22 order 443520")
