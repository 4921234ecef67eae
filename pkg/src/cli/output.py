import enum
import json
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence

import click
import pandas as pd


def format_ratio(value: Fraction) -> str:
    """Always 'p/q', so integral abundancies print as '3/1'"""
    return f"{value.numerator}/{value.denominator}"


def _plain(value):
    if isinstance(value, Fraction):
        return format_ratio(value)
    if isinstance(value, enum.Enum):
        return value.value
    return value


def emit_table(rows: Iterable[Dict[str, object]], columns: Sequence[str], as_json: bool = False):
    """
    TSV with a header row, or one JSON object per row.

    Cells stay Python objects (dtype=object) so big integers print exactly.
    """
    rows: List[Dict[str, object]] = list(rows)
    if as_json:
        for row in rows:
            click.echo(json.dumps({c: _plain(row.get(c)) for c in columns}))
        return
    frame = pd.DataFrame([[_plain(row.get(c)) for c in columns] for row in rows],
                         columns=list(columns), dtype=object)
    click.echo(frame.to_csv(sep="\t", index=False), nl=False)


def emit_value(name: str, value, as_json: bool = False):
    if as_json:
        click.echo(json.dumps({name: _plain(value)}))
    else:
        click.echo(_plain(value))
