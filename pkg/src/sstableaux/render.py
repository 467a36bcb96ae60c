"""Text and JSON rendering of construction traces."""

from __future__ import annotations

from itertools import groupby
from typing import Sequence

from .algorithms import TraceRecord

# column sets per construction; letter names the tableau in assignment cells
LAYOUTS = {
    "greatest": ("T", ("nu", "b", "rho(nu,b)", "T")),
    "fill": ("U", ("nu", "b", "rho", "U")),
    "least": ("S", ("nu", "b", "m", "l'", "h", "l", "S")),
}


def fmt_seq(seq) -> str:
    if seq is None:
        return ""
    return "(" + ",".join(map(str, seq)) + ")"


def fmt_assignments(letter: str, assignments) -> str:
    """``T(2,4)=T(4,1)=5``-style cell, one group per value."""
    groups = []
    for value, cells in groupby(sorted(assignments, key=lambda c: c[2]), key=lambda c: c[2]):
        lhs = "=".join(f"{letter}({i},{j})" for i, j, _ in cells)
        groups.append(f"{lhs}={value}")
    return ", ".join(groups)


def _opt(x) -> str:
    return "" if x is None else str(x)


def trace_rows(kind: str, steps: Sequence[TraceRecord]) -> list[list[str]]:
    letter, _ = LAYOUTS[kind]
    rows = []
    for rec in steps:
        cell = fmt_assignments(letter, rec.assignments)
        if kind == "least":
            rows.append(
                [fmt_seq(rec.nu), fmt_seq(rec.b), _opt(rec.m), _opt(rec.l_prime), _opt(rec.h), _opt(rec.l), cell]
            )
        else:
            rows.append([fmt_seq(rec.nu), fmt_seq(rec.b), fmt_seq(rec.rho), cell])
    return rows


def trace_table(kind: str, steps: Sequence[TraceRecord]) -> str:
    _, header = LAYOUTS[kind]
    body = trace_rows(kind, steps)
    widths = [max(len(r[c]) for r in [list(header)] + body) for c in range(len(header))]

    def line(cells):
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    out = [line(header), "-+-".join("-" * w for w in widths)]
    out.extend(line(r) for r in body)
    return "\n".join(out)


def trace_json(steps: Sequence[TraceRecord]) -> list[dict]:
    out = []
    for rec in steps:
        item = {"step": rec.step, "nu": list(rec.nu), "b": list(rec.b)}
        for key in ("rho", "l", "l_prime", "m", "h"):
            val = getattr(rec, key)
            if val is not None:
                item[key] = list(val) if key == "rho" else val
        item["assignments"] = [list(c) for c in rec.assignments]
        out.append(item)
    return out
