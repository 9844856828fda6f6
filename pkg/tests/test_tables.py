import io
import json

import pytest

from petersen_alpha import ConsistencyError
from petersen_alpha.tables import (
    TableCell,
    cache_append,
    cache_load,
    check_conjecture,
    conjecture_case,
    generate_table,
    table_cells,
    write_table_csv,
)


def test_table_cells_range():
    cells = table_cells(7)
    assert cells == [(5, 1), (5, 2), (6, 1), (6, 2), (7, 1), (7, 2), (7, 3)]
    with pytest.raises(ValueError):
        table_cells(4)


def test_generate_small_table():
    cells = generate_table(5, budget_secs=None)
    assert [(c.n, c.k, c.alpha) for c in cells] == [(5, 1, 4), (5, 2, 4)]


def test_generate_table_includes_7_3():
    cells = {(c.n, c.k): c.alpha for c in generate_table(7, budget_secs=None)}
    assert cells[(7, 3)] == 5


def test_csv_schema_and_determinism():
    cells = generate_table(8, budget_secs=None)
    out1, out2 = io.StringIO(), io.StringIO()
    write_table_csv(cells, out1)
    write_table_csv(generate_table(8, budget_secs=None), out2)
    text = out1.getvalue()
    assert text == out2.getvalue()
    lines = text.split("\n")
    assert lines[0] == "n,k,alpha,method"
    assert lines[-1] == ""  # single trailing LF
    assert all(line == line.rstrip() for line in lines)
    assert lines[1] == "5,1,4,closed-form"


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "cache.jsonl"
    cell = TableCell(13, 4, 11, "window-dp", 7)
    cache_append(path, cell)
    loaded = cache_load(path)
    assert loaded[(13, 4)] == cell


def test_cache_empty_and_missing(tmp_path):
    path = tmp_path / "cache.jsonl"
    assert cache_load(path) == {}
    path.write_text("")
    assert cache_load(path) == {}


def test_cache_skips_malformed_lines(tmp_path, caplog):
    path = tmp_path / "cache.jsonl"
    path.write_text(
        'not json\n'
        '{"n": 5, "k": 2, "alpha": 4, "method": "closed-form", "elapsed_ms": 0}\n'
        '{"n": 6, "k": 1}\n'
    )
    with caplog.at_level("WARNING"):
        loaded = cache_load(path)
    assert set(loaded) == {(5, 2)}
    assert sum("malformed" in r.message for r in caplog.records) == 2


def test_cache_conflict_is_hard_error(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache_append(path, TableCell(13, 4, 11, "window-dp", 7))
    cache_append(path, TableCell(13, 4, 12, "branch-reduce", 9))
    with pytest.raises(ConsistencyError):
        cache_load(path)


def test_cache_last_write_wins_on_consistent_duplicates(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache_append(path, TableCell(13, 4, 11, "window-dp", 7))
    cache_append(path, TableCell(13, 4, 11, "branch-reduce", 9))
    loaded = cache_load(path)
    assert loaded[(13, 4)].method == "branch-reduce"


def test_warm_cache_reused(tmp_path):
    path = tmp_path / "cache.jsonl"
    first = generate_table(7, cache_path=path, budget_secs=None)
    # warm rerun must produce identical rows and not recompute
    second = generate_table(7, cache_path=path, budget_secs=None)
    assert first == second
    # cache contains every cell exactly once
    assert len(cache_load(path)) == len(first)


def test_timeout_cells_are_explicit(tmp_path):
    path = tmp_path / "cache.jsonl"
    cells = generate_table(13, cache_path=path, budget_secs=1e-9)
    timed_out = [c for c in cells if c.method == "timeout"]
    assert timed_out, "expected at least one budget-exceeded cell"
    assert all(c.alpha is None for c in timed_out)
    # timeouts never enter the cache
    assert all(c.method != "timeout" for c in cache_load(path).values())
    out = io.StringIO()
    write_table_csv(cells, out)
    row = next(line for line in out.getvalue().split("\n") if line.endswith(",timeout"))
    n, k, alpha_field, method = row.split(",")
    assert alpha_field == ""


def test_conjecture_case_tags():
    assert conjecture_case(30, 4) == "small-k"
    assert conjecture_case(30, 7) == "bipartite"
    assert conjecture_case(31, 7) == "odd-odd"   # 2n = 62 >= 40
    assert conjecture_case(30, 8) == "even-even"
    assert conjecture_case(31, 8) == "odd-even"  # 31 > 24
    assert conjecture_case(19, 9) == "table-only"


def test_conjecture_small_range():
    report = check_conjecture(12, budget_secs=None)
    assert report.all_hold
    assert len(report.cells) == len(table_cells(12))
    for c in report.cells:
        assert c.holds == (c.alpha >= 4 * c.n // 5)
        assert c.beta == 2 * c.n - c.alpha
        assert c.beta_holds == (c.beta <= c.n + -(c.n // -5))
        assert c.holds == c.beta_holds  # the two forms are the same inequality


def test_conjecture_accepts_precomputed_alphas(reference_alpha):
    report = check_conjecture(20, alphas=reference_alpha)
    assert report.all_hold
    counts = report.case_counts()
    assert counts.get("table-only", 0) + sum(
        v for key, v in counts.items() if key != "table-only"
    ) == len(report.cells)


def test_conjecture_missing_alpha_is_error():
    with pytest.raises(ConsistencyError):
        check_conjecture(10, alphas={})


def test_cell_json_line_stable():
    line = TableCell(5, 2, 4, "closed-form", 0).to_json_line()
    assert json.loads(line) == {"n": 5, "k": 2, "alpha": 4, "method": "closed-form", "elapsed_ms": 0}
