"""Regenerate the distribution tables (expanded polynomials) by brute force."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterator

from .distributions import brute_multi, dist_brute
from .polynomials import IntPolynomial
from .statistics import StatisticSpec

TABLES = ("N", "H", "J", "L", "K", "Hk1k2")

_PARAMS = {
    "N": (),
    "H": ("k",),
    "J": ("k",),
    "L": ("d", "k"),
    "K": ("k",),
    "Hk1k2": ("k1", "k2"),
}


def rows(table: str, n_max: int, d: int = 2) -> Iterator[tuple[int, tuple, IntPolynomial]]:
    """Yield ``(n, params, polynomial)`` in table order."""
    if table not in TABLES:
        raise ValueError(f"unknown table {table!r}")
    for n in range(1, n_max + 1):
        if table == "N":
            yield n, (), dist_brute(StatisticSpec("ninvsum"), n, cap=n)
            continue
        specs = {}
        if table == "H":
            for k in range(1, n + 1):
                specs[(k,)] = StatisticSpec("inv_k", k=k)
        elif table == "J":
            for k in range(1, max(n - 1, 1) + 1):
                specs[(k,)] = StatisticSpec("inv_le_k", k=k)
        elif table == "L":
            for k in range(1, n + 1):
                specs[(d, k)] = StatisticSpec("modinv_dk", d=d, k=k)
        elif table == "K":
            for k in range(1, n + 1):
                specs[(k,)] = StatisticSpec("ipcni_k", k=k)
        else:
            for k1 in range(1, n + 1):
                for k2 in range(1, n + 1):
                    specs[(k1, k2)] = StatisticSpec("inv_k1k2", k1=k1, k2=k2)
        polys = brute_multi({key: s.function() for key, s in specs.items()}, n, cap=n)
        for key in specs:
            yield n, key, polys[key]


def render_csv(table: str, data) -> str:
    """Header ``n,params...,coeffs_ascending``; the coefficients share one quoted field."""
    buf = io.StringIO()
    buf.write(",".join(["n", *_PARAMS[table], "coeffs_ascending"]) + "\n")
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    for n, params, poly in data:
        writer.writerow([n, *params, " ".join(str(c) for c in poly.coeffs)])
    return buf.getvalue()


def parse_csv(text: str) -> list[tuple[int, tuple, IntPolynomial]]:
    reader = csv.reader(io.StringIO(text))
    next(reader)
    return [
        (int(row[0]), tuple(int(v) for v in row[1:-1]),
         IntPolynomial([int(c) for c in row[-1].split()]))
        for row in reader
    ]


def render_json(table: str, data) -> str:
    out = []
    for n, params, poly in data:
        row = {"n": n, **dict(zip(_PARAMS[table], params))}
        row.update(poly.to_json())
        out.append(row)
    return json.dumps(out)
