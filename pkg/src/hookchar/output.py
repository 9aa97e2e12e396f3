"""Serialization of sweep results to CSV and JSON.

Exact rationals never lose precision: JSON carries them as
{"num": "...", "den": "..."} decimal strings and CSV splits them into
numerator and denominator columns.  Bound tables use the fixed column
set (n, lambda, alpha_or_mu, lhs_num, lhs_den, rhs_num, rhs_den,
implied_c_num, implied_c_den, satisfied); compression and sharpness
tables carry their own documented columns.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .harness import BoundRecord, CompressionRecord, SharpnessRecord, SweepResult

BOUND_COLUMNS = [
    "n", "lambda", "alpha_or_mu",
    "lhs_num", "lhs_den", "rhs_num", "rhs_den",
    "implied_c_num", "implied_c_den", "satisfied",
]
COMPRESSION_COLUMNS = [
    "lambda", "mu", "k",
    "p_num", "p_den", "pl_num", "pl_den", "a_num", "a_den",
    "bound_num", "bound_den", "contained", "satisfied",
]
SHARPNESS_COLUMNS = [
    "s_tilde", "h", "k", "case", "lambda", "mu",
    "ratio_num", "ratio_den", "rhs_num", "rhs_den", "satisfied",
]


def frac_json(value: Fraction) -> dict[str, str]:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _bool_text(value: bool | None) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def _jsonable(value):
    if isinstance(value, Fraction):
        return frac_json(value)
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def record_json(rec) -> dict:
    if isinstance(rec, BoundRecord):
        return {
            "n": rec.n,
            "lambda": rec.lam,
            "alpha_or_mu": rec.alpha_or_mu,
            "lhs": frac_json(rec.lhs),
            "rhs": frac_json(rec.rhs),
            "implied_constant": frac_json(rec.implied_constant),
            "exponent": rec.exponent,
            "satisfied": rec.satisfied,
        }
    if isinstance(rec, CompressionRecord):
        return {
            "lambda": rec.lam,
            "mu": rec.mu,
            "k": rec.k,
            "p": frac_json(rec.p),
            "pl": frac_json(rec.pl),
            "a": frac_json(rec.a),
            "bound": frac_json(rec.bound),
            "contained": rec.contained,
            "satisfied": rec.satisfied,
        }
    if isinstance(rec, SharpnessRecord):
        return {
            "s_tilde": rec.s_tilde,
            "h": rec.h,
            "k": rec.k,
            "case": rec.case,
            "lambda": rec.lam,
            "mu": rec.mu,
            "ratio": frac_json(rec.ratio),
            "rhs": frac_json(rec.rhs),
            "satisfied": rec.satisfied,
        }
    raise TypeError(f"unknown record type {type(rec).__name__}")


def result_json(result: SweepResult) -> dict:
    return {
        "command": result.command,
        "n": result.n,
        "sections": {
            name: [record_json(rec) for rec in records]
            for name, records in result.sections.items()
        },
        "summary": _jsonable(result.summary),
    }


def _bound_row(rec: BoundRecord) -> list[str]:
    return [
        str(rec.n), rec.lam, rec.alpha_or_mu,
        str(rec.lhs.numerator), str(rec.lhs.denominator),
        str(rec.rhs.numerator), str(rec.rhs.denominator),
        str(rec.implied_constant.numerator), str(rec.implied_constant.denominator),
        _bool_text(rec.satisfied),
    ]


def _compression_row(rec: CompressionRecord) -> list[str]:
    return [
        rec.lam, rec.mu, str(rec.k),
        str(rec.p.numerator), str(rec.p.denominator),
        str(rec.pl.numerator), str(rec.pl.denominator),
        str(rec.a.numerator), str(rec.a.denominator),
        str(rec.bound.numerator), str(rec.bound.denominator),
        _bool_text(rec.contained), _bool_text(rec.satisfied),
    ]


def _sharpness_row(rec: SharpnessRecord) -> list[str]:
    return [
        str(rec.s_tilde), str(rec.h), str(rec.k), str(rec.case),
        rec.lam, rec.mu,
        str(rec.ratio.numerator), str(rec.ratio.denominator),
        str(rec.rhs.numerator), str(rec.rhs.denominator),
        _bool_text(rec.satisfied),
    ]


def _table_shape(records, like=None):
    kinds = {type(rec) for rec in records}
    if len(kinds) > 1:
        raise TypeError(f"mixed record types in one table: {kinds}")
    kind = kinds.pop() if kinds else (like or BoundRecord)
    if kind is BoundRecord:
        return BOUND_COLUMNS, _bound_row
    if kind is CompressionRecord:
        return COMPRESSION_COLUMNS, _compression_row
    return SHARPNESS_COLUMNS, _sharpness_row


def write_csv(records, stream, like=None) -> None:
    columns, to_row = _table_shape(records, like)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow(to_row(rec))


def _result_kind(result: SweepResult):
    # empty sections still need the right header columns
    for records in result.sections.values():
        if records:
            return type(records[0])
    return BoundRecord


def write_result_csv(result: SweepResult, out_path: Path) -> list[Path]:
    """One CSV per section; extra sections get suffixed file names."""
    out_path = Path(out_path)
    like = _result_kind(result)
    written = []
    for name, records in result.sections.items():
        if name == "records":
            target = out_path
        else:
            target = out_path.with_name(f"{out_path.stem}_{name}{out_path.suffix}")
        with open(target, "w", newline="") as stream:
            write_csv(records, stream, like)
        written.append(target)
    return written


def write_result_json(result: SweepResult, out_path: Path) -> list[Path]:
    out_path = Path(out_path)
    with open(out_path, "w") as stream:
        json.dump(result_json(result), stream, indent=2)
        stream.write("\n")
    return [out_path]


def render_result(result: SweepResult, fmt: str) -> str:
    """Single-string form of a result, for stdout."""
    if fmt == "json":
        return json.dumps(result_json(result), indent=2)
    import io

    like = _result_kind(result)
    chunks = []
    for name, records in result.sections.items():
        buffer = io.StringIO()
        write_csv(records, buffer, like)
        header = "" if name == "records" else f"# section: {name}\n"
        chunks.append(header + buffer.getvalue())
    return "\n".join(chunks)


def summary_lines(result: SweepResult) -> list[str]:
    lines = [f"{result.command}: n={result.n}"]
    for key, value in result.summary.items():
        if isinstance(value, dict) and "ratio" in value:
            approx = value.get("approx")
            lines.append(
                f"  {key}: ({value['ratio']})^(1/{value['exponent']})"
                + (f" ~ {approx:.6g}" if approx else "")
            )
        else:
            lines.append(f"  {key}: {value}")
    return lines


def schema_path() -> Path:
    return Path(resources.files("hookchar") / "schemas" / "verify.schema.json")
