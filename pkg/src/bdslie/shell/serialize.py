"""Wire formats.

TSV output is tab separated, LF terminated, UTF-8, with a fixed header row.
JSON output is a single object ``{"schema": ..., "kind": ..., "data": ...}``
where ``schema`` is :data:`SCHEMA_VERSION`.  Rational numbers travel as
strings (``"29/2"``), integers as JSON numbers.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from ..bdscore import BdsCase, make_case
from ..lattice import SimpleType, format_types

SCHEMA_VERSION = "bdslie/1"

CASE_COLUMNS = ["case_id", "g_type", "nu", "k1_type", "k2_type", "l_type",
                "dim_u1", "dim_u2", "s", "deg_tau1", "self_dual", "bilinear", "inv_degree"]


def scalar(x):
    """JSON-friendly exact scalar."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def parse_scalar(x):
    if isinstance(x, str):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    return x


def labels(ws: Sequence) -> list:
    return [scalar(x) for x in ws]


def label_text(ws: Sequence) -> str:
    return ",".join(str(scalar(x)) for x in ws) or "-"


def parse_labels(text: str) -> tuple:
    text = text.strip()
    if text in ("", "-"):
        return ()
    return tuple(parse_scalar(x.strip()) for x in text.split(","))


def envelope(kind: str, data) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, "kind": kind, "data": data},
                      indent=2, ensure_ascii=False) + "\n"


def read_envelope(text: str, kind: str | None = None):
    obj = json.loads(text)
    if obj.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {obj.get('schema')!r}")
    if kind is not None and obj.get("kind") != kind:
        raise ValueError(f"expected kind {kind!r}, got {obj.get('kind')!r}")
    return obj["data"]


def tsv(header: Sequence[str], rows: Iterable[Sequence], comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append("\t".join(header))
    for r in rows:
        lines.append("\t".join(_cell(x) for x in r))
    return "\n".join(lines) + "\n"


def _cell(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if x is None:
        return "none"
    if isinstance(x, (list, tuple)):
        return label_text(x)
    return str(scalar(x))


# ---------------------------------------------------------------------------
# cases


def case_descriptor(case: BdsCase) -> dict:
    """Flat JSON object describing a case."""
    return {
        "id": case.id,
        "family": case.family,
        "rank": case.rank,
        "nu": case.nu,
        "p": case.p,
        "g_type": str(case.g),
        "k1_type": format_types(case.k1_type),
        "k2_type": format_types(case.k2_type),
        "l_type": format_types(case.l_type),
        "dim_u1": case.dim_u1,
        "dim_u2": case.dim_u2,
        "s": case.s,
        "deg_tau1": case.deg_tau1,
        "tau1_hw": labels(case.tau1_hw),
        "tau2_hw": labels(case.tau2_hw),
    }


def case_from_descriptor(obj: dict) -> BdsCase:
    """Rebuild a case and check every stored field against the recomputation."""
    case = make_case(SimpleType(obj["family"], int(obj["rank"])), int(obj["nu"]), obj["id"])
    fresh = case_descriptor(case)
    diff = sorted(k for k in fresh if fresh[k] != obj.get(k))
    if diff:
        raise ValueError(f"descriptor fields disagree with the recomputed case: {diff}")
    return case


def case_row(case: BdsCase, report=None) -> list:
    """One atlas row in :data:`CASE_COLUMNS` order; invariant columns need ``report``."""
    row = [case.id, str(case.g), case.nu, format_types(case.k1_type), format_types(case.k2_type),
           format_types(case.l_type), case.dim_u1, case.dim_u2, case.s, case.deg_tau1]
    if report is None:
        return row + ["*", "*", "*"]
    inv = "none" if report.invariant_degree is None else str(report.invariant_degree)
    return row + ["yes" if report.self_dual else "no", report.bilinear, inv]
