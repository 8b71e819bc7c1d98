#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for the weave, report and manifest documents.

Weave document:

    {
        "kind": "forward",
        "window": {"T": "1", "X": "1"},
        "grid": [["0", "-1"], ...],
        "paths": [
            {"breakpoints": [["-1", "0", "0"], ...],
             "extends_below": false, "extends_above": true,
             "sigma": "-1", "tau": "1", "initial_left": "0"},
            ...
        ],
        "restriction_closed": false
    }

Breakpoint values on the window edges -X and X stand for minus and plus
infinity. A path record lists them in an "inf" companion of
[index, "left"|"right", "-"|"+"] entries, checked against the window on
load.

Numbers are written as exact decimal strings, "p/q" strings for other
fractions and JSON floats for floats. The emitted form is canonical:
sorted keys, sorted grid, sorted paths and a trailing newline.

"""

import io
import csv
import json
from collections import namedtuple

from .paths import (
    CadlagPath,
    GraphPoint
)

from .weave import (
    Window,
    Weave,
    DualWeave,
    WeaveReport,
    validate
)

from .formats import (
    REPORT_COLUMNS,
    WEAVE_KINDS
)

from .utils import (
    to_number,
    encode_number,
    sha256_digest
)

from .errors import (
    InvariantError,
    SchemaError
)


RunManifest = namedtuple('RunManifest', 'command seed version inputs outputs wall_time')


def _dumps(document):
    return (json.dumps(document, indent=2, sort_keys=True) + '\n').encode('utf-8')


def _number(value, where):
    try:
        return to_number(value)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(where, 'expected a number, got {0!r}'.format(value))


def _expect(value, kind, where):
    if not isinstance(value, kind):
        raise SchemaError(where, 'expected {0}'.format(kind.__name__))
    return value


def load_json(data):
    if isinstance(data, bytes):
        try:
            data = data.decode('utf-8')
        except UnicodeDecodeError as error:
            raise SchemaError('$', 'not UTF-8 ({0})'.format(error))

    try:
        return json.loads(data)
    except ValueError as error:
        raise SchemaError('$', 'invalid JSON ({0})'.format(error))


_SIDES = ('left', 'right')

_TAGS = ('-', '+')


def _boundary_tags(f, x_max):
    """Return [index, side, tag] for the breakpoint values on the window edges. """
    tags = []

    for index, bp in enumerate(f.breakpoints):
        for side, value in zip(_SIDES, (bp.left, bp.right)):
            if value == x_max:
                tags.append([index, side, '+'])
            elif value == -x_max:
                tags.append([index, side, '-'])

    return tags


def _check_tags(record, bps, where, x_max):
    tags = _expect(record.get('inf', []), list, where + '.inf')

    for number, tag in enumerate(tags):
        tag_where = '{0}.inf[{1}]'.format(where, number)

        if not isinstance(tag, list) or len(tag) != 3 or tag[1] not in _SIDES or tag[2] not in _TAGS:
            raise SchemaError(tag_where, 'expected [index, "left"|"right", "-"|"+"]')

        index, side, sign = tag

        if isinstance(index, bool) or not isinstance(index, int) or not 0 <= index < len(bps):
            raise SchemaError(tag_where, 'no breakpoint {0!r}'.format(index))

        value = bps[index][1 + _SIDES.index(side)]

        if x_max is None:
            tagged = value > 0 if sign == '+' else value < 0
        else:
            tagged = value == (x_max if sign == '+' else -x_max)

        if not tagged:
            raise SchemaError(tag_where, '{0} is not on the {1} window edge'.format(value, sign))


def _parse_path(record, where, x_max=None):
    _expect(record, dict, where)

    breakpoints = _expect(record.get('breakpoints'), list, where + '.breakpoints')

    if not breakpoints:
        raise SchemaError(where + '.breakpoints', 'a path needs at least one breakpoint')

    bps = []

    for index, bp in enumerate(breakpoints):
        bp_where = '{0}.breakpoints[{1}]'.format(where, index)
        _expect(bp, list, bp_where)

        if len(bp) != 3:
            raise SchemaError(bp_where, 'expected [t, left, right]')

        bps.append(tuple(_number(value, bp_where) for value in bp))

        if index > 0 and not bps[index - 1][0] < bps[index][0]:
            raise SchemaError(bp_where, 'breakpoint times must be strictly increasing')

    below = _expect(record.get('extends_below', False), bool, where + '.extends_below')
    above = _expect(record.get('extends_above', False), bool, where + '.extends_above')

    for field, value in (('sigma', bps[0][0]), ('tau', bps[-1][0]), ('initial_left', bps[0][1])):
        if field in record and _number(record[field], where + '.' + field) != value:
            raise SchemaError(where + '.' + field, 'does not match the breakpoints')

    _check_tags(record, bps, where, x_max)

    return CadlagPath(bps, below, above)


def parse_weave(data, check=True):
    """Load a weave document.

    Args:
        data (bytes or string): The JSON document.
        check (boolean): Enforce the weave invariants.

    Returns:
        Weave or DualWeave.

    Raises:
        SchemaError with the JSON path of the offending element.
        InvariantError with the crossing pairs and uncovered points.

    """
    document = _expect(load_json(data), dict, '$')

    kind = document.get('kind', 'forward')

    if kind not in WEAVE_KINDS:
        raise SchemaError('$.kind', 'unknown weave kind {0!r}'.format(kind))

    window = _expect(document.get('window'), dict, '$.window')
    T = _number(window.get('T'), '$.window.T')
    X = _number(window.get('X'), '$.window.X')

    if T <= 0 or X <= 0:
        raise SchemaError('$.window', 'T and X must be positive')

    grid = []

    for index, z in enumerate(_expect(document.get('grid', []), list, '$.grid')):
        where = '$.grid[{0}]'.format(index)

        if not isinstance(z, list) or len(z) != 2:
            raise SchemaError(where, 'expected [x, t]')

        grid.append(GraphPoint(_number(z[0], where), _number(z[1], where)))

    paths = []

    for index, record in enumerate(_expect(document.get('paths'), list, '$.paths')):
        where = '$.paths[{0}]'.format(index)
        f = _parse_path(record, where, X)

        if kind == 'forward' and not f.extends_above:
            raise SchemaError(where, 'weave paths must extend above')

        if kind == 'dual' and not f.extends_below:
            raise SchemaError(where, 'dual weave paths must extend below')

        paths.append(f)

    closed = _expect(document.get('restriction_closed', False), bool, '$.restriction_closed')
    cls = Weave if kind == 'forward' else DualWeave
    weave = cls(Window(T, X), grid, paths, closed)

    if check:
        report = validate(weave)

        if not report.valid:
            raise InvariantError(report.crossings + report.uncovered)

    return weave


def _encode_point(z):
    return [encode_number(z.x), encode_number(z.t)]


def _encode_path(f, x_max=None):
    record = {
        'breakpoints': [[encode_number(value) for value in bp] for bp in f.breakpoints],
        'extends_below': f.extends_below,
        'extends_above': f.extends_above,
        'initial_left': encode_number(f.initial_left),
        'sigma': encode_number(f.sigma),
        'tau': encode_number(f.tau)
    }

    tags = _boundary_tags(f, x_max) if x_max is not None else []

    if tags:
        record['inf'] = tags

    return record


def weave_document(weave):
    return {
        'kind': weave.KIND,
        'window': {'T': encode_number(weave.window.T), 'X': encode_number(weave.window.X)},
        'grid': [_encode_point(z) for z in weave.grid],
        'paths': [_encode_path(f, weave.window.X) for f in weave.paths],
        'restriction_closed': weave.restriction_closed
    }


def emit_weave(weave):
    """Return the canonical JSON bytes of the weave. """
    return _dumps(weave_document(weave))


def parse_path(data):
    """Load a single path document. """
    return _parse_path(load_json(data), '$')


def emit_path(f):
    return _dumps(_encode_path(f))


def _weave_report_document(report):
    return {
        'valid': report.valid,
        'crossings': [[i, j, kind] for i, j, kind in report.crossings],
        'uncovered': [_encode_point(z) for z in report.uncovered],
        'ramified': [_encode_point(z) for z in report.ramified],
        'profile': [float(value) for value in report.profile]
    }


def _float(value):
    return None if value is None else float(value)


def _level_document(record):
    return {
        'mesh': float(record.mesh),
        'ks': _float(record.ks),
        'cdf_table': [[float(t), empirical, oracle] for t, empirical, oracle in record.cdf_table],
        'weave_ks': _float(record.weave_ks),
        'weave_table': [[float(t), empirical, exact] for t, empirical, exact in record.weave_table],
        'profile': [float(value) for value in record.profile],
        'ramified_fraction': float(record.ramified_fraction),
        'successive_distance': _float(record.successive_distance)
    }


def report_columns(report):
    """Return the CSV columns of a convergence report. """
    return list(REPORT_COLUMNS) + ['w_delta={0}'.format(delta) for delta in report.deltas]


def report_rows(report):
    """Return one dictionary per level of a convergence report. """
    rows = []

    for level, record in enumerate(report.levels):
        row = {
            'level': level,
            'mesh': float(record.mesh),
            'ks': _float(record.ks),
            'weave_ks': _float(record.weave_ks),
            'ramified_fraction': float(record.ramified_fraction),
            'successive_distance': _float(record.successive_distance)
        }

        for delta, value in zip(report.deltas, record.profile):
            row['w_delta={0}'.format(delta)] = float(value)

        rows.append(row)

    return rows


def emit_report(report, fmt='json'):
    """Return the bytes of a WeaveReport or a ConvergenceReport.

    Args:
        report: The report.
        fmt (string): 'json' or 'csv'. CSV is available for
            convergence reports only.

    """
    if isinstance(report, WeaveReport):
        if fmt != 'json':
            raise ValueError('weave reports are written as json')

        return _dumps(_weave_report_document(report))

    if fmt == 'csv':
        stream = io.StringIO()
        writer = csv.DictWriter(stream, fieldnames=report_columns(report), lineterminator='\n')
        writer.writeheader()

        for row in report_rows(report):
            writer.writerow({key: '' if value is None else value for key, value in row.items()})

        return stream.getvalue().encode('utf-8')

    return _dumps({
        'generator': report.generator,
        'distance': float(report.distance),
        'trials': report.trials,
        'deltas': [float(delta) for delta in report.deltas],
        'levels': [_level_document(record) for record in report.levels]
    })


def _polyline(f, window):
    """Return the (x, t) drawing coordinates of H(f) clipped to the window. """
    xs, ts = [], []

    if f.extends_below and f.sigma > -window.T:
        xs.append(float(f.initial_left))
        ts.append(-float(window.T))

    for bp in f.breakpoints:
        xs.extend([float(bp.left), float(bp.right)])
        ts.extend([float(bp.t), float(bp.t)])

    if f.extends_above and f.tau < window.T:
        xs.append(float(f.final_right))
        ts.append(float(window.T))

    return xs, ts


def emit_svg(weave, title=None):
    """Render the weave as SVG bytes, space horizontal and time upwards.

    Note:
        The output is deterministic: the SVG hash salt is fixed and no
        date is written.

    """
    import matplotlib
    matplotlib.use('Agg')

    from matplotlib import pyplot

    T, X = float(weave.window.T), float(weave.window.X)

    with matplotlib.rc_context({'svg.hashsalt': 'weavekit', 'svg.fonttype': 'none'}):
        figure, axes = pyplot.subplots(figsize=(6, 6))

        for f in weave.paths:
            xs, ts = _polyline(f, weave.window)
            axes.plot(xs, ts, color='black', linewidth=0.8)

        if weave.grid:
            axes.plot([float(z.x) for z in weave.grid], [float(z.t) for z in weave.grid],
                      linestyle='none', marker='o', markersize=2, color='tab:blue')

        axes.set_xlim(-X, X)
        axes.set_ylim(-T, T)
        axes.set_xlabel('space')
        axes.set_ylabel('time')

        if title:
            axes.set_title(title)

        stream = io.BytesIO()
        figure.savefig(stream, format='svg', metadata={'Date': None})
        pyplot.close(figure)

    return stream.getvalue()


def emit_manifest(manifest):
    return _dumps(manifest._asdict())


def parse_manifest(data):
    """Load a RunManifest document.

    Raises:
        SchemaError if a field is missing.

    """
    document = _expect(load_json(data), dict, '$')

    for field in RunManifest._fields:
        if field not in document:
            raise SchemaError('$.' + field, 'missing field')

    return RunManifest(**{field: document[field] for field in RunManifest._fields})


def digest(data):
    return sha256_digest(data)
