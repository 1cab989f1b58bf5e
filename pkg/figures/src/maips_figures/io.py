"""CSV loading for suite artifacts."""

import csv
from pathlib import Path

import numpy as np


class MissingArtifact(Exception):
    """A CSV the figure needs is not in the suite directory."""


def load_csv(path):
    """Read a headed CSV into a dict of named column arrays.

    Columns are float arrays when every entry parses as a float and
    string arrays otherwise.
    """
    path = Path(path)
    if not path.is_file():
        raise MissingArtifact(f"missing artifact: {path}")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [row for row in reader if row]
    if not rows:
        raise MissingArtifact(f"empty artifact: {path}")
    columns = {}
    for i, name in enumerate(header):
        values = [row[i] for row in rows]
        try:
            columns[name] = np.array([float(v) for v in values])
        except ValueError:
            columns[name] = np.array(values)
    return columns


def groups(table, key):
    """Split a column table by the distinct values of one column.

    Yields (value, subtable) in first-appearance order.
    """
    order = []
    for v in table[key]:
        if v not in order:
            order.append(v)
    for v in order:
        mask = table[key] == v
        yield v, {name: col[mask] for name, col in table.items()}
