"""The checked-in golden corpus and the diff used by ``cases --verify``.

``data/golden.tsv`` holds one row per case with the values asserted in the
source (transcribed by hand, regenerated by ``tools/make_golden.py``).  A
``*`` cell is not asserted.  The trailing ``source`` column says where each
row comes from and is not compared.
"""
from __future__ import annotations

import csv
import io
from importlib import resources

from .serialize import CASE_COLUMNS

GOLDEN_COLUMNS = CASE_COLUMNS + ["source"]


def load_golden(text: str | None = None) -> list[dict]:
    if text is None:
        text = resources.files("bdslie").joinpath("data/golden.tsv").read_text(encoding="utf-8")
    reader = csv.DictReader(io.StringIO(text), delimiter="\t")
    if reader.fieldnames != GOLDEN_COLUMNS:
        raise ValueError(f"golden header {reader.fieldnames} != {GOLDEN_COLUMNS}")
    return list(reader)


def _matches(col: str, want: str, got: str, search_bound: int | None) -> bool:
    if want == "*" or want == got:
        return True
    # a degree beyond the scan bound cannot be seen; "none" is then consistent
    if col == "inv_degree" and got == "none" and search_bound is not None and want.isdigit():
        return int(want) > search_bound
    return False


def verify_rows(golden: list[dict], computed: dict[str, list], search_bound: int | None) -> list[tuple]:
    """Differences as ``(case_id, column, expected, computed)``.

    ``computed`` maps case ids to rows in ``CASE_COLUMNS`` order.  Golden rows
    without a computed counterpart are skipped (they lie above the requested
    rank); computed rows missing from the corpus are reported.
    """
    diffs = []
    seen = set()
    for row in golden:
        cid = row["case_id"]
        got = computed.get(cid)
        if got is None:
            continue
        seen.add(cid)
        for col, value in zip(CASE_COLUMNS, got):
            want, have = row[col], str(value)
            if not _matches(col, want, have, search_bound):
                diffs.append((cid, col, want, have))
    for cid in computed:
        if cid not in seen:
            diffs.append((cid, "*", "missing from corpus", "computed"))
    return diffs
