import csv
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def reference_alpha() -> dict[tuple[int, int], int]:
    """Known independence numbers for every (n,k) with 5 <= n <= 77."""
    out: dict[tuple[int, int], int] = {}
    with (DATA_DIR / "reference_alpha.csv").open() as f:
        for row in csv.DictReader(f):
            out[(int(row["n"]), int(row["k"]))] = int(row["alpha"])
    assert len(out) == 1442
    return out
