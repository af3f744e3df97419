"""Statistic and parity-pair tables for every overpartition of a fixed weight."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .core import format_ext
from .counting import ParityFamilyId as F, parity_pair, profiled
from .families import FamilyId


@dataclass(frozen=True)
class Table:
    title: str
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def text(self) -> str:
        widths = [max(len(r[i]) for r in (self.header,) + self.rows) for i in range(len(self.header))]
        rule = "+" + "+".join("-" * (w + 2) for w in widths) + "+"

        def line(cells):
            return "|" + "|".join(f" {c:<{w}} " for c, w in zip(cells, widths)) + "|"

        out = [self.title, rule, line(self.header), rule]
        out += [line(r) for r in self.rows]
        out.append(rule)
        return "\n".join(out)

    def csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"title": self.title, "header": list(self.header), "rows": [list(r) for r in self.rows]}


_ZERO_STATS = (("LN", "LN"), ("SN", "SN"), ("LO", "LO"), ("SO", "SO"),
               ("l_{N>=O}", "l_NgeO"), ("l_{N>O}", "l_NgtO"),
               ("l_{O>=N}", "l_OgeN"), ("l_{O>N}", "l_OgtN"))
_INF_STATS = (("LN~", "LNx"), ("SN~", "SNx"), ("LO~", "LOx"), ("SO~", "SOx"),
              ("l_{N<=O}", "l_NleO"), ("l_{N<O}", "l_NltO"),
              ("l_{O<=N}", "l_OleN"), ("l_{O<N}", "l_OltN"))

_PAIR_TABLES = (
    ("parity counts, plain families", (
        ("A_{N>=O}", "B_{N>=O}", F.NgeO), ("A_{N>O}", "B_{N>O}", F.NgtO),
        ("A_{O>=N}", "B_{O>=N}", F.OgeN), ("A_{O>N}", "B_{O>N}", F.OgtN))),
    ("parity counts, barred families", (
        ("Abar_{N>=O}", "Bbar_{N>=O}", F.barNgeO), ("Abar_{N>O}", "Bbar_{N>O}", F.barNgtO),
        ("Abar_{O>=N}", "Bbar_{O>=N}", F.barOgeN), ("Abar_{O>N}", "Bbar_{O>N}", F.barOgtN))),
    ("parity counts, O<=N and O<N families", (
        ("A_{O<=N}", "B_{O<=N}", F.OleN), ("Atilde_{O<=N}", "Btilde_{O<=N}", F.tildeOleN),
        ("A_{O<N}", "B_{O<N}", F.OltN), ("Atilde_{O<N}", "Btilde_{O<N}", F.tildeOltN))),
    ("parity counts, N<=O and N<O families", (
        ("A_{N<=O}", "B_{N<=O}", F.NleO), ("Atilde_{N<=O}", "Btilde_{N<=O}", F.tildeNleO),
        ("A_{N<O}", "B_{N<O}", F.NltO), ("Atilde_{N<O}", "Btilde_{N<O}", F.tildeNltO))),
)


def statistic_tables(n: int) -> tuple[Table, Table]:
    items = profiled(FamilyId.OP, n)
    tables = []
    for title, cols in (("statistics (0 for absent parts)", _ZERO_STATS),
                        ("statistics (+inf for absent parts)", _INF_STATS)):
        header = ("pi",) + tuple(label for label, _ in cols)
        rows = tuple((pi.display(),) + tuple(format_ext(getattr(st, attr)) for _, attr in cols)
                     for pi, st in items)
        tables.append(Table(f"{title}, n={n}", header, rows))
    return tables[0], tables[1]


def pair_tables(n: int) -> tuple[Table, ...]:
    out = []
    for title, cols in _PAIR_TABLES:
        header, row = [], []
        for a_label, b_label, fid in cols:
            a, b = parity_pair(fid, n)
            header += [f"{a_label}({n})", f"{b_label}({n})"]
            row += [str(a), str(b)]
        out.append(Table(f"{title}, n={n}", tuple(header), (tuple(row),)))
    return tuple(out)


def all_tables(n: int) -> tuple[Table, ...]:
    """The two statistic tables followed by the four A/B tables."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return statistic_tables(n) + pair_tables(n)


def render(n: int, fmt: str = "text") -> str:
    tables = all_tables(n)
    if fmt == "csv":
        return "\n".join(f"# {t.title}\n{t.csv()}" for t in tables)
    return "\n\n".join(t.text() for t in tables) + "\n"
