"""Perimeter table for n = 16..256 and the Z_32 / Z_64 gap analysis."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .families import construct_bn, construct_z32, construct_z64, mossinghoff_reference
from .geometry import regular_perimeter, upper_bound_perimeter

TABLE_NS = (16, 32, 64, 128, 256)
TABLE_HEADER = ("n", "L(R_n)", "L(M_n)", "L(B_n)", "ub L_n", "fraction")
CSV_HEADER = ("n", "L_R", "L_M", "L_B", "ub", "fraction")


@dataclass(frozen=True)
class TableRow:
    n: int
    regular: float
    mossinghoff: float
    bn: float
    upper_bound: float

    @property
    def fraction(self) -> float:
        """Position of L(B_n) inside [L(M_n), ub L_n]."""
        return (self.bn - self.mossinghoff) / (self.upper_bound - self.mossinghoff)

    def cells(self) -> tuple[str, ...]:
        return (
            str(self.n),
            f"{self.regular:.10f}",
            f"{self.mossinghoff:.10f}",
            f"{self.bn:.10f}",
            f"{self.upper_bound:.10f}",
            f"{self.fraction:.4f}",
        )


def perimeter_table(ns=TABLE_NS) -> list[TableRow]:
    return [
        TableRow(
            n=n,
            regular=regular_perimeter(n),
            mossinghoff=mossinghoff_reference(n),
            bn=construct_bn(n).perimeter,
            upper_bound=upper_bound_perimeter(n),
        )
        for n in ns
    ]


def format_table(rows: list[TableRow]) -> str:
    cells = [TABLE_HEADER] + [r.cells() for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(TABLE_HEADER))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def table_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(r.cells() for r in rows)
    return buf.getvalue()


@dataclass(frozen=True)
class GapRow:
    n: int
    bn: float
    improved: float
    upper_bound: float

    @property
    def gap_improved(self) -> float:
        return self.upper_bound - self.improved

    @property
    def gap_bn(self) -> float:
        return self.upper_bound - self.bn

    @property
    def fraction(self) -> float:
        """Share of the B_n gap closed by the improved polygon."""
        return (self.improved - self.bn) / (self.upper_bound - self.bn)


def gap_analysis() -> list[GapRow]:
    return [
        GapRow(32, construct_bn(32).perimeter, construct_z32().perimeter, upper_bound_perimeter(32)),
        GapRow(64, construct_bn(64).perimeter, construct_z64().perimeter, upper_bound_perimeter(64)),
    ]


def format_gaps(rows: list[GapRow]) -> str:
    out = []
    for r in rows:
        n = r.n
        out.append(f"n = {n}")
        out.append(f"  L(Z_{n})               {r.improved:.10f}")
        out.append(f"  L(B_{n})               {r.bn:.10f}")
        out.append(f"  ub_{n} - L(Z_{n})       {r.gap_improved:.4e}")
        out.append(f"  ub_{n} - L(B_{n})       {r.gap_bn:.4e}")
        out.append(f"  fraction of gap closed {r.fraction:.6f}")
    return "\n".join(out) + "\n"
