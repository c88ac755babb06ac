import csv

from clusterlab.checks import run_full_suite
from clusterlab.intmat import IntMatrix
from clusterlab.report import write_report

A2 = IntMatrix([[0, 1], [-1, 0]])
B2 = IntMatrix([[0, 1], [-2, 0]])


def test_writes_json_csv_and_figures(tmp_path):
    atlas, rep = run_full_suite(A2, 12)
    written = write_report(rep, tmp_path, atlas)
    names = {p.relative_to(tmp_path).as_posix() for p in written}
    assert names == {
        "report.json",
        "report.csv",
        "figures/exchange_quiver.png",
        "figures/layer_growth.png",
        "figures/check_status.png",
        "figures/distinct_counts.png",
    }
    for p in written:
        assert p.exists() and p.stat().st_size > 0


def test_csv_rows_match_checks(tmp_path):
    atlas, rep = run_full_suite(B2, 8)
    write_report(rep, tmp_path, atlas)
    with open(tmp_path / "report.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["check", "status", "seeds_covered", "witness_path", "note"]
    assert [r[0] for r in rows[1:]] == [c.check for c in rep.results]
    assert all(r[1] == "PASS" for r in rows[1:])


def test_output_is_deterministic(tmp_path):
    atlas, rep = run_full_suite(A2, 12)
    d1, d2 = tmp_path / "one", tmp_path / "two"
    write_report(rep, d1, atlas)
    write_report(rep, d2, atlas)
    for rel in ("report.json", "report.csv", "figures/layer_growth.png",
                "figures/exchange_quiver.png"):
        assert (d1 / rel).read_bytes() == (d2 / rel).read_bytes()


def test_atlas_optional(tmp_path):
    _, rep = run_full_suite(A2, 4)
    written = write_report(rep, tmp_path)
    assert not (tmp_path / "figures" / "distinct_counts.png").exists()
    assert (tmp_path / "figures" / "check_status.png").exists()
    assert len(written) == 5
