#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit command line front end.

Every subcommand handler returns its outputs as bytes together with a
return code. The front end writes the outputs, records a RunManifest
next to the primary output and logs the run. Replaying a manifest runs
the recorded command again without writing anything and compares the
output digests.

"""

import sys
import json
import time
import argparse
from collections import (
    namedtuple,
    OrderedDict
)

from .version import __version__
from .info import (
    __appname__,
    __description__
)

from .codec import (
    RunManifest,
    parse_weave,
    parse_path,
    parse_manifest,
    load_json,
    emit_weave,
    emit_report,
    emit_svg,
    emit_manifest,
    digest
)

from .parsers import (
    GRID_SPECS,
    OptionsParser,
    parse_list,
    parse_number,
    parse_window,
    resolve_grid
)

from .weave import (
    WeaveReport,
    validate,
    web_op,
    flow_op,
    dual_web,
    reconstruct_flow,
    double_web_report,
    phi_embedding
)

from .order import (
    NONE,
    left_of,
    classify_crossing,
    is_ramified
)

from .metrics import (
    dist_path,
    dist_path_sets,
    tightness_profile
)

from .sim import (
    WEAVE_TRIALS,
    SimParams,
    generate,
    convergence_sweep,
    jittered_sites
)

from .fixtures import figure_fixture
from .formats import (
    METRICS,
    GENERATORS,
    FIXTURES,
    CROSS_KINDS
)

from .utils import encode_number

from .errors import (
    OK,
    INVARIANT,
    WeaveError,
    InvariantError,
    ParamError,
    SchemaError
)


STDOUT = '-'

MANIFEST_SUFFIX = '.manifest.json'

DEFAULT_MANIFEST = 'manifest.json'

Outcome = namedtuple('Outcome', 'outputs returncode')


class Inputs(OrderedDict):

    """Input files of a run, mapped to their digests. """

    def read(self, filename):
        try:
            with open(filename, 'rb') as input_file:
                data = input_file.read()
        except (IOError, OSError) as error:
            raise SchemaError(filename, 'cannot read ({0})'.format(error))

        self[filename] = digest(data)
        return data

    def weave(self, filename, check=True):
        return parse_weave(self.read(filename), check)

    def paths(self, filename):
        """Load a path document or the paths of a weave document. """
        data = self.read(filename)
        document = load_json(data)

        if isinstance(document, dict) and 'paths' in document:
            return list(parse_weave(data).paths)

        return [parse_path(data)]


def _single(outputs_target, data):
    return [(outputs_target or STDOUT, data)]


def _json_bytes(document):
    return (json.dumps(document, indent=2, sort_keys=True) + '\n').encode('utf-8')


def _ramified_points(weave, points):
    return [z for z in points if is_ramified(weave, z)]


def cmd_validate(args, inputs):
    weave = inputs.weave(args.input, check=False)
    report = validate(weave)

    profile = ()
    if args.profile:
        profile = tightness_profile(weave.maximal(), weave.window.T, parse_list(args.profile))

    report = WeaveReport(report.crossings, report.uncovered,
                         _ramified_points(weave, weave.grid), profile)

    return Outcome(_single(args.output, emit_report(report)), OK if report.valid else INVARIANT)


def cmd_dist(args, inputs):
    first = inputs.paths(args.first)
    window = parse_window(args.window) if args.window else None

    if args.profile:
        values = parse_list(args.profile)

        if len(values) < 2:
            raise ParamError('profile needs "T,d1,d2,..."')

        profile = tightness_profile(first, values[0], values[1:])
        lines = ['delta,w'] + ['{0},{1!r}'.format(encode_number(delta), float(w))
                               for delta, w in zip(values[1:], profile)]

        return Outcome(_single(args.output, ('\n'.join(lines) + '\n').encode('utf-8')), OK)

    if args.second is None:
        raise ParamError('dist needs two documents')

    second = inputs.paths(args.second)

    if len(first) == 1 and len(second) == 1:
        value = dist_path(first[0], second[0], args.metric, args.refine, window, args.tol)
    else:
        value = dist_path_sets(first, second, args.metric, args.refine, window, args.tol)

    return Outcome(_single(args.output, '{0!r}\n'.format(float(value)).encode('utf-8')), OK)


def cmd_check_order(args, inputs):
    f = inputs.paths(args.first)[0]
    g = inputs.paths(args.second)[0]
    kind = classify_crossing(f, g)

    document = {
        'left_of_ab': left_of(f, g),
        'left_of_ba': left_of(g, f),
        'crossing': kind != NONE,
        'kind': kind,
        'kind_label': CROSS_KINDS[kind]
    }

    return Outcome(_single(args.output, _json_bytes(document)), OK)


def cmd_web(args, inputs):
    weave = inputs.weave(args.input)
    web = web_op(weave, resolve_grid(args.grid, weave))

    return Outcome(_single(args.output, emit_weave(web)), OK)


def cmd_flow(args, inputs):
    weave = inputs.weave(args.input)
    flow = flow_op(weave)

    outputs = _single(args.output, emit_weave(flow))

    if args.phi:
        embedding = phi_embedding(flow, args.mu_samples, args.seed)
        document = [{'path': flow.index(f), 'phi': phi} for f, phi in embedding]
        outputs.append((args.phi, _json_bytes(document)))

    return Outcome(outputs, OK)


def cmd_dual(args, inputs):
    weave = inputs.weave(args.input)
    dual = dual_web(weave, resolve_grid(args.grid, weave))

    return Outcome(_single(args.output, emit_weave(dual)), OK)


def cmd_reconstruct(args, inputs):
    web = inputs.weave(args.web)
    dual = inputs.weave(args.dual)

    if dual.KIND != 'dual':
        raise SchemaError('$.kind', 'second document must be a dual weave')

    crossings = double_web_report(web, dual)
    if not crossings.valid:
        raise InvariantError(crossings.crossings)

    points = list(dual.grid) if args.grid is None else resolve_grid(args.grid, web)
    flow = reconstruct_flow(web, dual, points)

    return Outcome(_single(args.output, emit_weave(flow)), OK)


def cmd_ramified(args, inputs):
    weave = inputs.weave(args.input)
    points = resolve_grid(args.grid, weave)

    if args.lattice:
        points = jittered_sites(points, parse_number(args.lattice), args.jitter, weave.window)

    report = WeaveReport(ramified=_ramified_points(weave, points))

    return Outcome(_single(args.output, emit_report(report)), OK)


def cmd_sim(args, inputs):
    params = SimParams(parse_window(args.window), parse_number(args.mesh), args.branch_prob, args.seed)
    weave = generate(args.gen, params)

    return Outcome(_single(args.output, emit_weave(weave)), OK)


def cmd_sweep(args, inputs):
    report = convergence_sweep(args.gen,
                               parse_list(args.levels),
                               parse_number(args.distance),
                               args.trials,
                               seed=args.seed,
                               window=parse_window(args.window),
                               deltas=[float(delta) for delta in parse_list(args.deltas)],
                               branch_prob=args.branch_prob,
                               jitter=args.jitter,
                               workers_number=args.workers,
                               log_manager=args.log_manager,
                               refine=args.refine,
                               weave_trials=args.weave_trials,
                               weave_mesh=parse_number(args.weave_mesh))

    return Outcome(_single(args.report, emit_report(report, args.format)), OK)


def cmd_render(args, inputs):
    weave = inputs.weave(args.input)

    return Outcome(_single(args.output, emit_svg(weave, args.title)), OK)


def cmd_fixture(args, inputs):
    eps = parse_number(args.eps) if args.eps is not None else None

    return Outcome(_single(args.output, emit_weave(figure_fixture(args.name, eps))), OK)


def _add_output(subparser, flag='-o', dest='output'):
    subparser.add_argument(flag, '--' + dest, dest=dest, default=None,
                           help='output file, standard output if missing')


def build_parser(options_dictionary):
    """Return the argparse parser with the settings as defaults. """
    options_parser = OptionsParser()

    parser = argparse.ArgumentParser(prog=__appname__.lower(), description=__description__)
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--manifest', default=None,
                        help='manifest file, next to the output if missing')

    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    def add(name, handler, text):
        subparser = commands.add_parser(name, help=text, description=text)
        subparser.set_defaults(handler=handler)
        options_parser.add_arguments(subparser, name, options_dictionary)
        return subparser

    sub = add('validate', cmd_validate, 'check the weave invariants')
    sub.add_argument('input')
    sub.add_argument('--profile', default=None, help='tightness deltas "d1,d2,..."')
    _add_output(sub)

    sub = add('dist', cmd_dist, 'distance between two paths or path sets')
    sub.add_argument('first')
    sub.add_argument('second', nargs='?', default=None)
    sub.add_argument('--window', default=None, help='treat the window edges as infinity')
    sub.add_argument('--profile', default=None, help='tightness profile "T,d1,d2,..." as CSV')
    _add_output(sub)

    sub = add('check-order', cmd_check_order, 'left-of relation and crossing kind')
    sub.add_argument('first')
    sub.add_argument('second')
    _add_output(sub)

    for name, handler, text in (('web', cmd_web, 'web of the weave for a grid'),
                                ('dual', cmd_dual, 'dual web of the weave for a grid')):
        sub = add(name, handler, text)
        sub.add_argument('input')
        sub.add_argument('--grid', default='nonramified',
                         help='{0} or "x,t;x,t;..."'.format('|'.join(GRID_SPECS)))
        _add_output(sub)

    sub = add('flow', cmd_flow, 'flow of the weave')
    sub.add_argument('input')
    sub.add_argument('--phi', default=None, help='also write the phi embedding to this file')
    _add_output(sub)

    sub = add('reconstruct', cmd_reconstruct, 'glue a web and its dual into a flow')
    sub.add_argument('web')
    sub.add_argument('dual')
    sub.add_argument('--grid', default=None, help='seed points, the dual grid if missing')
    _add_output(sub)

    sub = add('ramified', cmd_ramified, 'ramified points of a grid')
    sub.add_argument('input')
    sub.add_argument('--grid', default='all')
    sub.add_argument('--lattice', default=None, help='jitter the points off a lattice of this mesh')
    _add_output(sub)

    sub = add('sim', cmd_sim, 'random lattice weave')
    sub.add_argument('--gen', choices=list(GENERATORS.keys()), default='coalesce')
    sub.add_argument('--mesh', required=True)
    sub.add_argument('--branch-prob', type=float, default=0.0)
    _add_output(sub)

    sub = add('sweep', cmd_sweep, 'convergence diagnostics over decreasing meshes')
    sub.add_argument('--gen', choices=list(GENERATORS.keys()), default='coalesce')
    sub.add_argument('--levels', required=True, help='meshes "h1,h2,..."')
    sub.add_argument('--trials', type=int, default=1000)
    sub.add_argument('--distance', default='0.5')
    sub.add_argument('--deltas', default='0.5,0.25,0.125')
    sub.add_argument('--weave-trials', type=int, default=WEAVE_TRIALS,
                     help='generated weaves per level whose meeting times are sampled')
    sub.add_argument('--weave-mesh', default='0.25', help='finest mesh with weave sampling')
    sub.add_argument('--branch-prob', type=float, default=0.0)
    sub.add_argument('--format', choices=('json', 'csv'), default='json')
    _add_output(sub, '-r', 'report')

    sub = add('render', cmd_render, 'draw the weave as SVG')
    sub.add_argument('input')
    sub.add_argument('--title', default=None)
    _add_output(sub)

    sub = add('fixture', cmd_fixture, 'write a hand built weave')
    sub.add_argument('name', choices=list(FIXTURES.keys()))
    sub.add_argument('--eps', default=None)
    _add_output(sub)

    sub = commands.add_parser('replay', help='re-run a manifest and compare the outputs')
    sub.add_argument('manifest_file')
    sub.set_defaults(handler=None)

    return parser


def _strip_manifest_flag(argv):
    result, skip = [], False

    for item in argv:
        if skip:
            skip = False
        elif item == '--manifest':
            skip = True
        elif not item.startswith('--manifest='):
            result.append(item)

    return result


def _execute(args, argv, log_manager=None):
    if args.command == 'replay':
        raise ParamError('a replay cannot be recorded')

    if args.command == 'dist' and args.metric not in METRICS:
        raise ParamError('unknown metric {0!r}'.format(args.metric))

    args.log_manager = log_manager

    inputs = Inputs()
    outcome = args.handler(args, inputs)

    recorded = _strip_manifest_flag(argv) + OptionsParser().parse(args.command, args)

    return outcome, inputs, recorded


def execute(argv, options_dictionary, log_manager=None):
    """Parse and run a command line without writing anything.

    Returns:
        (Outcome, Inputs, recorded command line list). The recorded
        command line spells out every switch backed by a setting.

    """
    args = build_parser(options_dictionary).parse_args(argv)

    return _execute(args, list(argv), log_manager)


def write_outputs(outputs, stdout=None):
    stdout = stdout or sys.stdout

    for target, data in outputs:
        if target == STDOUT:
            stream = getattr(stdout, 'buffer', None)

            if stream is not None:
                stream.write(data)
                stream.flush()
            else:
                stdout.write(data.decode('utf-8'))
        else:
            with open(target, 'wb') as output_file:
                output_file.write(data)


def manifest_path(outputs, override=None):
    """Return where the manifest of a run goes. """
    if override:
        return override

    for target, _ in outputs:
        if target != STDOUT:
            return target + MANIFEST_SUFFIX

    return DEFAULT_MANIFEST


def replay(manifest_file, options_dictionary, log_manager=None):
    """Run the command of a manifest again and compare the digests.

    Raises:
        InvariantError listing the inputs and outputs whose digests
        differ.

    """
    try:
        with open(manifest_file, 'rb') as input_file:
            manifest = parse_manifest(input_file.read())
    except (IOError, OSError) as error:
        raise SchemaError(manifest_file, 'cannot read ({0})'.format(error))

    outcome, inputs, _ = execute(list(manifest.command), options_dictionary, log_manager)

    outputs = dict((target, digest(data)) for target, data in outcome.outputs)

    mismatches = [('input', name) for name, value in sorted(manifest.inputs.items())
                  if inputs.get(name) != value]
    mismatches += [('output', name) for name, value in sorted(manifest.outputs.items())
                   if outputs.get(name) != value]

    if mismatches:
        raise InvariantError(mismatches)

    return OK


def run(argv, opt_manager, log_manager=None, stdout=None, stderr=None):
    """Run a command line and return its exit code. """
    stderr = stderr or sys.stderr
    argv = list(argv)
    options = opt_manager.options

    args = build_parser(options).parse_args(argv)

    try:
        if args.command == 'replay':
            returncode = replay(args.manifest_file, options, log_manager)

            if log_manager is not None:
                log_manager.log('replay manifest={0} ok'.format(args.manifest_file))
            stderr.write('replay ok\n')

            return returncode

        start = time.time()
        outcome, inputs, recorded = _execute(args, argv, log_manager)
        wall_time = time.time() - start

        write_outputs(outcome.outputs, stdout)

        manifest = RunManifest(command=recorded,
                               seed=getattr(args, 'seed', None),
                               version=__version__,
                               inputs=dict(inputs),
                               outputs=dict((target, digest(data)) for target, data in outcome.outputs),
                               wall_time=wall_time)

        target = manifest_path(outcome.outputs, args.manifest)

        with open(target, 'wb') as manifest_file:
            manifest_file.write(emit_manifest(manifest))

        if log_manager is not None:
            log_manager.log_run(manifest, target, outcome.returncode)

        return outcome.returncode

    except WeaveError as error:
        if log_manager is not None:
            log_manager.log_error(argv, error)
        stderr.write('{0}: error: {1}\n'.format(__appname__.lower(), error))

        return error.returncode
