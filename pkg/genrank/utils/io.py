# -*- coding: utf-8 -*-
import csv
import json
import pathlib

from ..cleanup import atomic_open
from ..exceptions import ConfigError


def dumps_json(obj, indent=2):
    """Sorted-key JSON text with a trailing newline."""
    return json.dumps(obj, indent=indent, sort_keys=True) + '\n'


def write_json(obj, path, indent=2):
    """Writes ``obj`` as sorted-key JSON through an atomic rename."""
    with atomic_open(path) as f:
        f.write(dumps_json(obj, indent))
    return pathlib.Path(path)


def dump_csv(rows, fields, stream, header_comment=None):
    """Writes dict rows to an open text stream, optionally preceded by a
    ``# ...`` line identifying the schema version."""
    if header_comment:
        stream.write('# {}\n'.format(header_comment))
    writer = csv.DictWriter(stream, fieldnames=fields, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def write_csv(rows, fields, path, header_comment=None):
    """:func:`dump_csv` into ``path`` through an atomic rename."""
    with atomic_open(path, newline='') as f:
        dump_csv(rows, fields, f, header_comment)
    return pathlib.Path(path)


def read_csv(path):
    """Reads back a CSV written by :func:`write_csv`, skipping comments."""
    with open(str(path)) as f:
        lines = [line for line in f if not line.startswith('#')]
    return list(csv.DictReader(lines))


class JSONLinesWriter:
    """Appends one JSON object per line; used for solver traces."""

    def __init__(self, path):
        self.path = pathlib.Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._f = open(str(self.path), 'w')

    def write(self, record):
        self._f.write(json.dumps(record, sort_keys=True) + '\n')

    def close(self):
        self._f.close()

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.close()


def emit_report(fmt, out, rows, fields, document, header_comment, stream):
    """Writes a report as CSV ``rows`` or as the JSON ``document``, into
    ``out`` or onto ``stream`` when ``out`` is empty."""
    if fmt not in ('csv', 'json'):
        raise ConfigError("Report format must be 'csv' or 'json', got {!r}".format(fmt))
    if fmt == 'csv':
        if out:
            return write_csv(rows, fields, out, header_comment)
        dump_csv(rows, fields, stream, header_comment)
    else:
        if out:
            return write_json(document, out)
        stream.write(dumps_json(document))
    return None
