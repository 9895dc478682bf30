"""Rows of the f_n / h_n constant table and their CSV form."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .constants import ConstantSpec, Family, constant_digits, series_enclosure
from .primes import nth_prime

HEADER = ("n", "f_n", "h_n", "p_n")


@dataclass(frozen=True)
class TableRow:
    n: int
    f: str
    h: str
    p: int

    def as_tuple(self) -> tuple[str, str, str, str]:
        return (str(self.n), self.f, self.h, str(self.p))


def fractional_digits(text: str) -> int:
    return len(text.partition(".")[2])


def significant_digits(spec: ConstantSpec, sig: int, rounding: str = "nearest") -> str:
    """Render with ``sig`` significant digits in total (integer part included)."""
    whole = series_enclosure(spec, 0).floor()
    frac = max(1, sig - len(str(whole)))
    return constant_digits(spec, frac, rounding)


def table_row(n: int, sig: int = 20, rounding: str = "nearest") -> TableRow:
    return TableRow(
        n,
        significant_digits(ConstantSpec(Family.FLOOR, n), sig, rounding),
        significant_digits(ConstantSpec(Family.CEILING, n), sig, rounding),
        nth_prime(n),
    )


def build_table(rows: int, sig: int = 20, rounding: str = "nearest") -> list[TableRow]:
    return [table_row(n, sig, rounding) for n in range(1, rows + 1)]


def render_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    writer.writerows(r.as_tuple() for r in rows)
    return buf.getvalue()


def parse_csv(text: str) -> list[TableRow]:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != HEADER:
        raise ValueError(f"unexpected table header {header}")
    return [TableRow(int(n), f, h, int(p)) for n, f, h, p in reader]


def load_fixture(path: str | Path | None = None) -> list[TableRow]:
    """The reference table shipped as ``data/table1.csv`` (or a given file)."""
    if path is None:
        text = resources.files("primerep").joinpath("data/table1.csv").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return parse_csv(text)
