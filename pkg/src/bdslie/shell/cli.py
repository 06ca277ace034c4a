"""Command line interface (``bdslie`` / ``python3 -m bdslie``)."""
from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from ..bdscore import HermitianCaseExcluded, NotBorelDeSiebenthal, UnknownCase, enumerate_cases, get_case
from ..charkernel import NotDominant, OrbitCharacter, alt_power, sym_power, tensor, weyl_dim
from ..invariants import DEFAULT_SEARCH_BOUND, relative_invariant_report
from ..lattice import InvalidType, SimpleType, build_root_datum, semisimple_datum
from ..spectrum import (InsufficientNegativity, LowestKTypeMismatch, VanishingViolation, bound_forms,
                        ktype_spectrum, negativity, sufficient_k_min)
from . import serialize as ser
from .cache import cache_root, default_cache
from .golden import load_golden, verify_rows

EXIT_OK, EXIT_MISMATCH, EXIT_NEGATIVITY, EXIT_BAD_INPUT = 0, 2, 3, 4

# rows whose relative invariant sits in degree 7 or 8
SLOW_ROWS = frozenset({"E7,A7", "E8,D8"})
SLOW_FREE_BOUND = 6

ENV_HELP = """\
environment:
  BDSLIE_CACHE_DIR   cache directory (default $XDG_CACHE_HOME/bdslie or ~/.cache/bdslie)
  BDSLIE_NO_CACHE    set to 1 to bypass the on-disk cache
  BDSLIE_WORKERS     worker threads for per-case work (default: CPU count, capped at 8)

exit codes: 0 ok, 2 verification mismatch, 3 insufficient negativity, 4 bad input
"""


class BadInput(Exception):
    pass


def workers() -> int:
    raw = os.environ.get("BDSLIE_WORKERS")
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise BadInput(f"BDSLIE_WORKERS must be an integer, got {raw!r}")
        if n < 1:
            raise BadInput("BDSLIE_WORKERS must be at least 1")
        return n
    return min(8, os.cpu_count() or 1)


def _pmap(fn, items):
    items = list(items)
    n = workers()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _case(text):
    try:
        return get_case(text)
    except (UnknownCase, HermitianCaseExcluded, NotBorelDeSiebenthal, InvalidType, ValueError) as exc:
        raise BadInput(f"unknown case {text!r} ({exc})")


def _datum(text):
    """Simple (``G2``) or semisimple (``A1A1``, ``A1xB2``) type."""
    compact = re.sub(r"[\sx+*]", "", text)
    if not re.fullmatch(r"([A-Ga-g]\d+)+", compact):
        raise BadInput(f"bad type {text!r}")
    types = re.findall(r"[A-Ga-g]\d+", compact)
    try:
        if len(types) == 1:
            return build_root_datum(SimpleType.parse(types[0]))
        return semisimple_datum(types)
    except (InvalidType, ValueError) as exc:
        raise BadInput(f"bad type {text!r} ({exc})")


def _labels(text, n, what="weight"):
    try:
        w = ser.parse_labels(text)
    except (ValueError, ZeroDivisionError):
        raise BadInput(f"cannot parse {what} {text!r}")
    if len(w) != n:
        raise BadInput(f"{what} {text!r} needs {n} labels")
    return w


def _gamma0(case, text):
    """Accept all labels (nu label 0) or only the labels off nu."""
    g = case.grading
    n = g.datum.rank
    if text is None:
        return (0,) * n
    w = ser.parse_labels(text)
    if len(w) == n - 1:
        w = w[:g.i] + (0,) + w[g.i:]
    if len(w) != n:
        raise BadInput(f"gamma0 needs {n} labels (or {n - 1} without the nu label)")
    if w[g.i] != 0:
        raise BadInput("gamma0 must have zero label at nu")
    if any(Fraction(x).denominator != 1 or x < 0 for x in w):
        raise BadInput("gamma0 labels must be non-negative integers")
    return w


def _emit(text):
    sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verbs


def cmd_cases(args) -> int:
    if args.max_rank < 4:
        raise BadInput("--max-rank must be at least 4")
    cases = enumerate_cases(args.max_rank)
    bound = args.max_degree
    reports = _pmap(lambda c: relative_invariant_report(c, bound, check_closed_form=False), cases)
    rows = [ser.case_row(c, r) for c, r in zip(cases, reports)]
    status = EXIT_OK
    diffs = []
    if args.verify:
        diffs = verify_rows(load_golden(), {r[0]: r for r in rows}, bound)
        status = EXIT_MISMATCH if diffs else EXIT_OK
    if args.format == "json":
        data = {"columns": ser.CASE_COLUMNS, "search_bound": bound, "rows": rows}
        if args.verify:
            data["mismatches"] = [dict(zip(("case_id", "column", "expected", "computed"), d)) for d in diffs]
        _emit(ser.envelope("cases", data))
    else:
        _emit(ser.tsv(ser.CASE_COLUMNS, rows))
        if args.verify:
            for d in diffs:
                sys.stderr.write("MISMATCH\t" + "\t".join(map(str, d)) + "\n")
    if args.verify:
        checked = len(rows)
        sys.stderr.write(f"verify: {checked} cases, {len(diffs)} mismatching cells\n")
    return status


def cmd_case(args) -> int:
    case = _case(args.case_id)
    desc = ser.case_descriptor(case)
    if args.format == "json":
        _emit(ser.envelope("case", desc))
    else:
        _emit(ser.tsv(["field", "value"], desc.items()))
    return EXIT_OK


def cmd_invariants(args) -> int:
    case = _case(args.case_id)
    bound = args.max_degree
    notes = []
    if case.id in SLOW_ROWS and bound > SLOW_FREE_BOUND and not args.allow_slow:
        raise BadInput(f"{case.id} needs a degree-{bound} scan; rerun with --allow-slow")
    if bound < 2:
        raise BadInput("--max-degree must be at least 2")
    rep = relative_invariant_report(case, bound, check_closed_form=False)
    status = EXIT_OK
    closed = rep.closed_form_degree
    if case.family in "BCD":
        expected = closed if closed is not None and closed <= bound else None
        if expected != rep.invariant_degree:
            status = EXIT_MISMATCH
            notes.append(f"closed form gives {closed}, scan gives {rep.invariant_degree}")
    inv = rep.verdict if rep.invariant_degree is None else str(rep.invariant_degree)
    header = ["case_id", "deg_tau1", "self_dual", "bilinear", "relative_invariant",
              "search_bound", "multiplicity", "closed_form"]
    row = [case.id, rep.deg_tau1, rep.self_dual, rep.bilinear, inv, bound,
           rep.invariant_multiplicity, "-" if case.is_exceptional else closed]
    if args.format == "json":
        data = dict(zip(header, [ser.scalar(x) for x in row]))
        data["invariant_degree"] = rep.invariant_degree
        data["notes"] = list(rep.notes) + notes
        _emit(ser.envelope("invariants", data))
    else:
        _emit(ser.tsv(header, [row], comments=notes))
    for n in notes:
        sys.stderr.write(f"MISMATCH: {case.id}: {n}\n")
    return status


SPECTRUM_COLUMNS = ["m", "k1_labels", "k2_labels", "central_label", "multiplicity", "dim", "degree"]


def _spectrum_payload(case, gamma0, k, m_max, force):
    t = ktype_spectrum(case, gamma0, k, m_max, force=force)
    rows = [[r.m, ser.label_text(r.hw_k1), ser.label_text(r.hw_k2), str(ser.scalar(r.central)),
             r.multiplicity, r.dim, r.cohomology_degree] for r in t.rows]
    return {
        "case_id": case.id,
        "gamma0": ser.labels(gamma0),
        "k": k,
        "m_max": m_max,
        "s": t.s,
        "forced": t.forced,
        "warnings": list(t.warnings),
        "columns": SPECTRUM_COLUMNS,
        "rows": rows,
        "lowest": None if t.lowest is None else [ser.label_text(t.lowest.hw_k1),
                                                 ser.label_text(t.lowest.hw_k2), t.lowest.dim],
    }


def cmd_spectrum(args) -> int:
    case = _case(args.case_id)
    gamma0 = _gamma0(case, args.gamma0)
    if args.m_max < 0:
        raise BadInput("--m-max must be non-negative")
    k = args.k if args.k is not None else sufficient_k_min(case.grading, gamma0)
    rep = negativity(case.grading, tuple(-k if j == case.grading.i else x for j, x in enumerate(gamma0)))
    if not rep.sufficient and not args.force:
        sys.stderr.write(
            f"error: gamma0 - {k} nu* is not sufficiently negative: t = {-k} must lie below "
            f"t_bound_mu = {rep.t_bound_mu} and t_bound_nu = {rep.t_bound_nu} "
            f"(smallest sufficient k is {sufficient_k_min(case.grading, gamma0)}); "
            "pass --force to compute anyway\n")
        return EXIT_NEGATIVITY
    cache = default_cache()
    cargs = {"nu": case.nu, "gamma0": ser.labels(gamma0), "k": k, "m_max": args.m_max, "force": args.force}
    data = cache.memo(case.grading.datum.fingerprint, "spectrum", cargs,
                      lambda: _spectrum_payload(case, gamma0, k, args.m_max, args.force))
    if args.format == "json":
        _emit(ser.envelope("spectrum", data))
    else:
        comments = [f"WARNING: {w}" for w in data["warnings"]]
        comments.append(f"case {data['case_id']} gamma0 {ser.label_text(gamma0)} k {k} s {data['s']}")
        _emit(ser.tsv(data["columns"], data["rows"], comments))
    for w in data["warnings"]:
        sys.stderr.write(f"WARNING: {w}\n")
    return EXIT_OK


def _affine_text(form) -> str:
    parts = []
    for c, j in zip(form.coefficients, form.nodes):
        if c:
            parts.append((Fraction(c), f"n{j}"))
    parts.append((Fraction(form.constant), ""))
    out = ""
    for c, var in parts:
        if c == 0 and var:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = var if var and mag == 1 else (f"{mag}*{var}" if var else str(mag))
        out += f" {sign} {body}" if out else (f"-{body}" if c < 0 else body)
    return out or "0"


def cmd_check_negativity(args) -> int:
    case = _case(args.case_id)
    g = case.grading
    forms = bound_forms(g)
    if args.gamma is None:
        names = ["t_bound_mu", "t_bound_nu", "k_bound_mu", "k_bound_mu_compact"]
        rows = [[name, _affine_text(forms[name]), ser.scalar(Fraction(forms[name].constant))] for name in names]
        if args.format == "json":
            data = {"case_id": case.id, "nu": case.nu,
                    "bounds": {r[0]: {"expression": r[1], "constant": r[2],
                                      "coefficients": dict(zip((f"n{j}" for j in forms[r[0]].nodes),
                                                               ser.labels(forms[r[0]].coefficients)))}
                               for r in rows}}
            _emit(ser.envelope("negativity-bounds", data))
        else:
            _emit(ser.tsv(["bound", "expression", "constant"], rows,
                          comments=[f"case {case.id}: gamma = gamma0 + t nu*, n_j = labels of gamma0"]))
        return EXIT_OK
    gamma = _labels(args.gamma, g.datum.rank, "gamma")
    try:
        rep = negativity(g, gamma)
    except ValueError as exc:
        raise BadInput(str(exc))
    fields = ["gamma", "gamma0", "t", "t_bound_mu", "t_bound_nu", "k_bound_mu", "k_bound_mu_compact",
              "sufficient", "scan_sufficient", "k_negative"]
    values = [getattr(rep, f) for f in fields]
    if args.format == "json":
        data = {f: (ser.labels(v) if isinstance(v, tuple) else ser.scalar(v)) for f, v in zip(fields, values)}
        data["case_id"] = case.id
        _emit(ser.envelope("negativity", data))
    else:
        _emit(ser.tsv(["field", "value"], zip(fields, values)))
    return EXIT_OK if rep.agrees else EXIT_MISMATCH


def _character_rows(d, c: OrbitCharacter):
    return [[ser.label_text(w), m, weyl_dim(d, w)] for w, m in c.items]


def _character_output(kind, d, meta, rows, fmt):
    if fmt == "json":
        data = dict(meta)
        data["columns"] = ["highest_weight", "multiplicity", "dim"]
        data["rows"] = rows
        data["total_dim"] = sum(m * dim for _, m, dim in rows)
        _emit(ser.envelope(kind, data))
    else:
        _emit(ser.tsv(["highest_weight", "multiplicity", "dim"], rows))


def cmd_tensor(args) -> int:
    d = _datum(args.type)
    a = _labels(args.hw1, d.rank)
    b = _labels(args.hw2, d.rank)
    try:
        ca, cb = OrbitCharacter.irreducible(d, a), OrbitCharacter.irreducible(d, b)
    except NotDominant as exc:
        raise BadInput(str(exc))
    cache = default_cache()
    rows = cache.memo(d.fingerprint, "tensor", [ser.labels(a), ser.labels(b)],
                      lambda: _character_rows(d, tensor(d, ca, cb)))
    meta = {"type": args.type, "hw1": ser.labels(a), "hw2": ser.labels(b)}
    _character_output("tensor", d, meta, rows, args.format)
    return EXIT_OK


def cmd_sym(args) -> int:
    d = _datum(args.type)
    hw = _labels(args.hw, d.rank)
    if args.m < 0:
        raise BadInput("power must be non-negative")
    try:
        c = OrbitCharacter.irreducible(d, hw)
    except NotDominant as exc:
        raise BadInput(str(exc))
    op = "alt" if args.alt else "sym"
    fn = alt_power if args.alt else sym_power
    cache = default_cache()
    rows = cache.memo(d.fingerprint, op, [ser.labels(hw), args.m],
                      lambda: _character_rows(d, fn(d, c, args.m)))
    meta = {"type": args.type, "hw": ser.labels(hw), "power": args.m, "operation": op}
    _character_output(op, d, meta, rows, args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bdslie",
        description="Borel-de Siebenthal case atlas, relative invariants and K-type spectra.",
        epilog=ENV_HELP + f"\ncache directory in effect: {cache_root()}",
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, fn, help_):
        sp = sub.add_parser(name, help=help_, description=help_, epilog=ENV_HELP,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
        sp.set_defaults(fn=fn)
        return sp

    sp = verb("cases", cmd_cases, "list every case (exceptional plus classical up to --max-rank)")
    sp.add_argument("--max-rank", type=int, default=9)
    sp.add_argument("--max-degree", type=int, default=DEFAULT_SEARCH_BOUND,
                    help="bound of the relative-invariant scan")
    sp.add_argument("--verify", action="store_true", help="diff against the golden corpus; exit 2 on mismatch")

    sp = verb("case", cmd_case, "describe one case (ids like E8,D8, E8_D8, Spin(6,3), Sp(2,3), D9:3)")
    sp.add_argument("case_id")

    sp = verb("invariants", cmd_invariants, "self-duality, bilinear form and relative invariant of (L, u1)")
    sp.add_argument("case_id")
    sp.add_argument("--max-degree", type=int, default=DEFAULT_SEARCH_BOUND)
    sp.add_argument("--allow-slow", action="store_true",
                    help=f"permit scans above degree {SLOW_FREE_BOUND} for the slow rows {sorted(SLOW_ROWS)}")

    sp = verb("spectrum", cmd_spectrum, "K-type spectrum of the cohomology on Y")
    sp.add_argument("case_id")
    sp.add_argument("--gamma0", help="comma separated labels (with 0 at nu, or omitting nu); default 0")
    sp.add_argument("--k", type=int, help="default: smallest sufficient k")
    sp.add_argument("--m-max", type=int, default=6)
    sp.add_argument("--force", action="store_true", help="skip the sufficient-negativity gate")

    sp = verb("check-negativity", cmd_check_negativity,
              "negativity thresholds; symbolic without --gamma, evaluated with it")
    sp.add_argument("case_id")
    sp.add_argument("--gamma", help="comma separated labels of gamma (l-dominant); write --gamma=-3,0,... for a negative first label")

    sp = verb("tensor", cmd_tensor, "decompose V(hw1) (x) V(hw2)")
    sp.add_argument("type", help="simple or semisimple type, e.g. A2, G2, A1A1")
    sp.add_argument("hw1")
    sp.add_argument("hw2")

    sp = verb("sym", cmd_sym, "decompose S^m V(hw) (or the exterior power with --alt)")
    sp.add_argument("type")
    sp.add_argument("hw")
    sp.add_argument("m", type=int)
    sp.add_argument("--alt", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_BAD_INPUT
    try:
        return args.fn(args)
    except BadInput as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT
    except InsufficientNegativity as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NEGATIVITY
    except (VanishingViolation, LowestKTypeMismatch) as exc:
        sys.stderr.write(f"MISMATCH: {exc}\n")
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
