# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Rendering of results as aligned text tables, CSV or JSON.

Everything printed by the scripts passes through here. Tables are built as
:class:`astropy.table.Table` objects; the 'table' format is astropy's aligned
text rendering, 'csv' its csv writer. JSON output uses sorted keys so that
output is byte-identical for identical input.
"""

from fractions import Fraction
import io
import json

from astropy.io import ascii
from astropy.table import Table

from .core import *

__all__ = (
    'FORMATS', 'Report', 'graded_table', 'series_table', 'render',
    'render_json',
)

FORMATS = ('table', 'csv', 'json')


class Report:
    """Outcome of a check: a title, a table of rows and an overall verdict.

    Arguments::

       title : string
          one-line description, printed above the table

       colnames : sequence of strings
          column names

       rows : list of tuples
          the table body; every row must match `colnames` in length

       passed : bool
          overall verdict. The scripts exit with status 1 when False.

       extras : dict
          additional named results carried along into the JSON form
    """

    def __init__(self, title, colnames, rows, passed=True, extras=None):
        self.title = title
        self.colnames = tuple(colnames)
        self.rows = [tuple(row) for row in rows]
        for row in self.rows:
            if len(row) != len(self.colnames):
                raise SteinhcError(
                    'row {!r} does not match the columns {!r}'.format(
                        row, self.colnames)
                )
        self.passed = bool(passed)
        self.extras = {} if extras is None else dict(extras)

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return 'Report(title={!r}, passed={!r}, rows={:d})'.format(
            self.title, self.passed, len(self.rows)
        )

    def table(self):
        """The rows as an astropy :class:`Table` of strings"""
        return _string_table(self.colnames, self.rows)

    def to_dict(self):
        """Plain JSON-ready dictionary"""
        return {
            'title': self.title,
            'passed': self.passed,
            'rows': [
                dict(zip(self.colnames, (_jsonable(v) for v in row)))
                for row in self.rows
            ],
            'extras': {key: _jsonable(val) for key, val in self.extras.items()},
        }


def _jsonable(value):
    """Maps exact and numpy values to JSON types"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if hasattr(value, 'item'):
        # numpy scalar
        return value.item()
    return value


def _cell(value):
    if isinstance(value, bool):
        return 'PASS' if value else 'FAIL'
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, float):
        return '{:.12g}'.format(value)
    return str(value)


def _string_table(colnames, rows):
    columns = [[_cell(row[i]) for row in rows] for i in range(len(colnames))]
    return Table(columns, names=colnames, dtype=[str]*len(colnames))


def graded_table(w):
    """Table of (degree, rank) of a :class:`GradedDims`"""
    return _string_table(
        ('degree', 'rank'),
        [(rational_str(degree), rank) for degree, rank in w.items()]
    )


def series_table(series):
    """Table of (degree, coefficient) of a :class:`PoincareSeries`"""
    return _string_table(
        ('degree', 'coefficient'),
        [(d, c) for d, c in enumerate(series.coefficients)]
    )


def render_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def render(table, fmt, title=None, obj=None):
    """Renders a table in one of FORMATS.

    Arguments::

      table : astropy.table.Table
         the table to render for 'table' and 'csv'

      fmt : string
         'table', 'csv' or 'json'

      title : string | None
         printed above the table in 'table' format only

      obj : dict | None
         the object dumped for 'json'. If None, the table rows are dumped.

    Returns:: string with LF line endings, ending in a newline
    """
    if fmt == 'table':
        lines = table.pformat(max_lines=-1, max_width=-1)
        if len(table) == 0:
            lines = list(lines) + ['(empty)']
        if title:
            lines = [title, ''] + list(lines)
        return '\n'.join(lines) + '\n'

    elif fmt == 'csv':
        buff = io.StringIO()
        ascii.write(table, buff, format='csv', fast_writer=False)
        text = buff.getvalue().replace('\r\n', '\n')
        return text if text.endswith('\n') else text + '\n'

    elif fmt == 'json':
        if obj is None:
            obj = [dict(zip(table.colnames, (str(v) for v in row)))
                   for row in table]
        return render_json(obj)

    raise SteinhcError(
        'format = {!r} not one of {!r}'.format(fmt, FORMATS)
    )
