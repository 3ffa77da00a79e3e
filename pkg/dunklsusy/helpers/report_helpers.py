import csv
import io
import json
import numbers

import numpy as np

from dunklsusy.constants import MACHINE_DIGITS
from dunklsusy.constants import TABLE_DIGITS


def remove_nones(original):
    return {k: v for k, v in original.items() if v is not None}


def or_default(value, default):
    """value unless it is None; zero is a legitimate setting."""
    return default if value is None else value


def format_number(value, digits=TABLE_DIGITS):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        return str(value)
    if isinstance(value, numbers.Integral):
        return str(int(value))
    return '{:.{}g}'.format(float(value), digits)


def json_ready(value):
    """Convert numpy scalars and tuples into plain JSON types."""
    if isinstance(value, dict):
        return {str(k): json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    return str(value)


def json_stringify(data):
    # repr-based float output round-trips every double exactly.
    return json.dumps(json_ready(data), separators=(',', ':'))


def render_table(headers, rows):
    cells = [[str(h) for h in headers]] + [
        [format_number(v) for v in row] for row in rows
    ]
    widths = [
        max(len(line[i]) for line in cells) for i in range(len(headers))
    ]
    return '\n'.join(
        '  '.join(cell.rjust(width) for cell, width in zip(line, widths))
        for line in cells
    ) + '\n'


def render_csv(headers, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(headers)
    for row in rows:
        writer.writerow([format_number(v, MACHINE_DIGITS) for v in row])
    return buffer.getvalue()


def write_report(text, path=None, stream=None):
    """Write text to path, or to stream when no path is given."""
    if path is None:
        stream.write(text)
        return
    with open(path, 'w') as handle:
        handle.write(text)
