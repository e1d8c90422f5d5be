"""JSON and CSV encodings.  Rationals are always strings: ``"3"``, ``"-1/3"``."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .algebra import AffineAlgebra, Weight, build_affine
from .branching import BranchRow, BranchTable, FormalSeries
from .errors import IoFailure
from .paths import Path


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    """Accepts ints, ``"p/q"`` and decimal strings; floats are rejected as lossy."""
    if isinstance(s, bool) or isinstance(s, float):
        raise ValueError(f"refusing lossy rational {s!r}")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(str(s).strip())


def weight_to_json(w: Weight) -> dict:
    return {"labels": [format_rational(x) for x in w.labels], "d": format_rational(w.d)}


def weight_from_json(obj) -> Weight:
    return Weight([parse_rational(x) for x in obj["labels"]], parse_rational(obj.get("d", "0")))


def algebra_to_json(alg: AffineAlgebra) -> dict:
    out = {"cartan": [list(r) for r in alg.cartan]}
    if alg.name:
        out["name"] = alg.name
    return out


def algebra_from_json(obj) -> AffineAlgebra:
    return build_affine(obj["cartan"], name=obj.get("name"))


def path_to_json(p: Path) -> list:
    return [weight_to_json(s) for s in p.segments]


def path_from_json(obj, n: int | None = None) -> Path:
    segs = [weight_from_json(s) for s in obj]
    if not segs and n is None:
        raise ValueError("an empty path needs the label count n passed explicitly")
    return Path(segs, len(segs[0]) - 1 if segs else n)


def series_to_json(series: FormalSeries) -> dict:
    rows = sorted(series.items(), key=lambda kv: (series.depth(kv[0]), kv[0]))
    return {
        "top": weight_to_json(series.top),
        "truncation_depth": series.truncation_depth,
        "terms": [dict(weight_to_json(w), depth=format_rational(series.depth(w)), coeff=c)
                  for w, c in rows],
    }


def _methods_str(methods: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in methods.items())


def table_to_json(table: BranchTable) -> dict:
    return {
        "algebra": algebra_to_json(table.algebra),
        "u": table.u,
        "lambda": weight_to_json(table.lam),
        "depth": table.depth,
        "margin": table.margin,
        "rows": [
            dict(weight_to_json(r.weight), depth=format_rational(table.row_depth(r)),
                 mult=r.mult, methods=dict(r.methods))
            for r in table.rows
        ],
        "verified": table.verified,
    }


def table_from_json(obj) -> BranchTable:
    rows = [BranchRow(weight_from_json(r), int(r["mult"]), dict(r.get("methods", {})))
            for r in obj["rows"]]
    return BranchTable(algebra_from_json(obj["algebra"]), int(obj["u"]),
                       weight_from_json(obj["lambda"]), int(obj["depth"]), int(obj["margin"]),
                       rows, bool(obj["verified"]))


def table_header(n: int) -> list[str]:
    return [f"label_{i}" for i in range(n)] + ["d", "depth", "mult", "methods", "verified"]


def table_to_csv(table: BranchTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table_header(table.algebra.n))
    for r in table.rows:
        writer.writerow([format_rational(x) for x in r.weight.labels]
                        + [format_rational(r.weight.d), format_rational(table.row_depth(r)),
                           r.mult, _methods_str(r.methods), str(table.verified).lower()])
    return buf.getvalue()


def table_to_pretty(table: BranchTable) -> str:
    head = table_header(table.algebra.n)[:-1]
    body = [[format_rational(x) for x in r.weight.labels]
            + [format_rational(r.weight.d), format_rational(table.row_depth(r)), str(r.mult),
               _methods_str(r.methods)]
            for r in table.rows]
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    lines = [f"# {table.algebra.name or 'algebra'}  u={table.u}  "
             f"lambda={format_rational_vec(table.lam.labels)}  depth={table.depth}  "
             f"margin={table.margin}  verified={str(table.verified).lower()}"]
    for row in [head] + body:
        lines.append("  ".join(x.rjust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def format_rational_vec(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit_table(table: BranchTable, fmt: str = "json", stream=None) -> bytes:
    """Encode ``table``; also write it to ``stream`` (binary or text) when given."""
    if fmt == "json":
        text = dumps(table_to_json(table))
    elif fmt == "csv":
        text = table_to_csv(table)
    elif fmt == "pretty":
        text = table_to_pretty(table)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    data = text.encode("utf-8")
    if stream is not None:
        try:
            if isinstance(stream, io.TextIOBase):
                stream.write(text)
            else:
                stream.write(data)
            stream.flush()
        except OSError as exc:
            raise IoFailure(str(exc)) from exc
    return data
