# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Command line front end.

    numbergate value --game "{0|1}"
    numbergate closure-check --ruleset cutcake --seed 6x6
    numbergate classify-pairs --game "{-2|0}"

Every command prints one report, JSON by default, and exits with 0 (ok),
1 (violated), 2 (budget exceeded) or 3 (parse error).
"""

import argparse
import logging
import os
import sys

from .gateerror import BudgetExceededError, NumbergateError
from .games.dyadic import DyadicRational
from .games.literal import parse_game, render_game
from .properties.classification import classify_position_pair
from .properties.closure import check_closure, closure_options, hcr_closure
from .properties.probes import con_verdict, number_avoidance_probe
from .provider import RulesetProvider
from .utils.helpers import dumps_report

logger = logging.getLogger(__name__)

SCHEMA = 'numbergate/1'

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_BUDGET = 2
EXIT_PARSE = 3

STATUS_CODES = {
    'ok': EXIT_OK,
    'violated': EXIT_VIOLATED,
    'budget-exceeded': EXIT_BUDGET,
    'parse-error': EXIT_PARSE
}

COMMANDS = ('value', 'canonical', 'outcome', 'sum', 'classify-pairs',
            'closure-check', 'confirm-con', 'avoidance-probe')

LOG_FORMAT = '%(asctime)s:%(name)s:%(levelname)s: %(message)s'


class UsageError(NumbergateError):
    """Invalid command line."""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser reporting usage errors as exceptions."""

    def error(self, message):
        raise UsageError(message)


def build_parser():
    """Return the argument parser of the command line."""
    parser = _Parser(prog='numbergate',
                     description='Values of short partizan games and checks '
                                 'of the F1 / F2 properties.')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('--game', action='append', default=[],
                        help='game literal, e.g. "{0,*|*}" (repeatable)')
    parser.add_argument('--ruleset', help='ruleset name for --seed positions')
    parser.add_argument('--seed', action='append', default=[],
                        help='position in the ruleset grammar (repeatable)')
    parser.add_argument('--number', help='number literal or game literal of '
                                         'the number in avoidance-probe')
    parser.add_argument('--x', action='append', default=[], dest='x_set',
                        help='number summed in confirm-con (repeatable)')
    parser.add_argument('--max-positions', type=int, default=None)
    parser.add_argument('--max-arena', type=int, default=None)
    parser.add_argument('--parallel', type=int, default=None,
                        help='worker threads classifying closure positions')
    parser.add_argument('--no-fast-path', action='store_true')
    parser.add_argument('--audit-fast-path', action='store_true')
    parser.add_argument('--format', choices=('json', 'text'), default='json')
    parser.add_argument('--emit-positions', metavar='PATH',
                        help='write the closure positions, one per line')
    parser.add_argument('--log-level', default=None,
                        help='logging level (Default: $NUMBERGATE_LOG_LEVEL '
                             'or WARNING)')
    return parser


def _configure_logging(level):
    level = (level or os.getenv('NUMBERGATE_LOG_LEVEL') or 'WARNING').upper()
    root = logging.getLogger()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(getattr(logging, level, logging.WARNING))
    return handler


def _closure_options(args):
    options = {}
    if args.max_positions is not None:
        options['max_positions'] = args.max_positions
    if args.parallel is not None:
        options['max_parallel_positions'] = args.parallel
    if args.no_fast_path:
        options['fast_path'] = False
    if args.audit_fast_path:
        options['audit_fast_path'] = True
    if args.x_set:
        options['x_set'] = [DyadicRational.from_string(x) for x in args.x_set]
    return closure_options(options)


def _configuration(args, options, arena):
    return {
        'max_arena': arena.options['max_arena'],
        'max_depth': arena.options['max_depth'],
        'max_positions': options['max_positions'],
        'fast_path': options['fast_path'],
        'audit_fast_path': options['audit_fast_path'],
        'max_parallel_positions': options['max_parallel_positions'],
        'x_set': [str(x) for x in options['x_set']],
        'format': args.format
    }


def _inputs(args, provider):
    """Return (ruleset, positions) for the position arguments."""
    if args.ruleset:
        if args.game:
            raise UsageError("Use either --ruleset with --seed or --game, not both.")
        ruleset = provider.get_ruleset(args.ruleset)
        texts = args.seed
    else:
        if args.seed:
            raise UsageError("--seed needs --ruleset.")
        ruleset = provider.get_ruleset('game')
        texts = args.game
    if not texts:
        raise UsageError("No position given: pass --game or --ruleset with --seed.")
    return ruleset, [ruleset.parse_position(text) for text in texts]


def _value_entry(ruleset, position, command):
    arena = ruleset.arena
    gid = ruleset.to_game(position)
    entry = {'input': ruleset.render_position(position)}
    if command in ('value', 'sum'):
        value = arena.to_number(gid)
        entry['value'] = None if value is None else str(value)
    if command in ('value', 'outcome', 'sum'):
        entry['outcome'] = arena.outcome(gid).value
    if command in ('value', 'canonical', 'sum'):
        entry['canonical'] = render_game(arena, arena.canonical_form(gid), braces=True)
    return entry


def _run_values(args, provider, _options):
    ruleset, positions = _inputs(args, provider)
    results = [_value_entry(ruleset, pos, args.command) for pos in positions]
    return 'ok', None, results


def _run_sum(args, provider, _options):
    ruleset, positions = _inputs(args, provider)
    arena = ruleset.arena
    total = arena.zero
    for pos in positions:
        total = arena.sum(total, arena.canonical_form(ruleset.to_game(pos)))
    form_ruleset = provider.get_ruleset('game')
    entry = _value_entry(form_ruleset, total, 'sum')
    entry['input'] = [ruleset.render_position(pos) for pos in positions]
    return 'ok', None, entry


def _run_classify(args, provider, options):
    ruleset, positions = _inputs(args, provider)
    arena = ruleset.arena

    def _render(gid):
        return render_game(arena, gid)

    results = []
    for pos in positions:
        pairs = []
        lefts, rights = ruleset.options(pos)
        for left in lefts:
            for right in rights:
                pair = classify_position_pair(ruleset, left, right, options['fast_path'])
                record = pair.to_dict(render=_render)
                record['left_position'] = ruleset.render_position(left)
                record['right_position'] = ruleset.render_position(right)
                record['class'] = pair.kind
                pairs.append(record)
        results.append({'input': ruleset.render_position(pos), 'pairs': pairs})
    return 'ok', None, results


def _emit(path, texts):
    with open(path, 'w', encoding='utf-8') as handle:
        for text in texts:
            handle.write(text + '\n')
    logger.info("Wrote %d positions to %s.", len(texts), path)


def _run_closure_check(args, provider, options):
    ruleset, positions = _inputs(args, provider)
    report = check_closure(ruleset, positions, options)
    if args.emit_positions:
        _emit(args.emit_positions, report.positions)
    if report.violations:
        return 'violated', 'theorem', report.to_dict()
    return 'ok', None, report.to_dict()


def _run_confirm_con(args, provider, options):
    ruleset, positions = _inputs(args, provider)
    closure = hcr_closure(ruleset, positions, options)
    if args.emit_positions:
        _emit(args.emit_positions, [ruleset.render_position(pos) for pos in closure])
    verdict = con_verdict(ruleset, closure, options['x_set'])
    results = verdict.to_dict()
    results['position_count'] = len(closure)
    if verdict.violated:
        return 'violated', 'theorem', results
    if verdict.witness is not None:
        return 'violated', 'property-witness', results
    return 'ok', None, results


def _run_avoidance(args, provider, _options):
    if args.number is None:
        raise UsageError("avoidance-probe needs --number.")
    ruleset, positions = _inputs(args, provider)
    arena = ruleset.arena
    number = parse_game(arena, args.number)

    def _render(gid):
        return render_game(arena, gid)

    results = []
    passed = True
    for pos in positions:
        verdict = number_avoidance_probe(arena, number, ruleset.to_game(pos))
        record = verdict.to_dict(render=_render)
        record['input'] = ruleset.render_position(pos)
        record['number'] = _render(number)
        results.append(record)
        passed = passed and verdict.passed
    if not passed:
        return 'violated', 'theorem', results
    return 'ok', None, results


_RUNNERS = {
    'value': _run_values,
    'canonical': _run_values,
    'outcome': _run_values,
    'sum': _run_sum,
    'classify-pairs': _run_classify,
    'closure-check': _run_closure_check,
    'confirm-con': _run_confirm_con,
    'avoidance-probe': _run_avoidance
}


def _error(err):
    record = {'type': type(err).__name__, 'message': err.message}
    for attr in ('budget', 'limit', 'frontier', 'position'):
        val = getattr(err, attr, None)
        if val is not None:
            record[attr] = val
    return record


def run(argv=None):
    """Run one command and return (exit code, report dictionary)."""
    report = {'schema': SCHEMA, 'command': None, 'configuration': None,
              'status': None, 'kind': None, 'results': None}
    try:
        args = build_parser().parse_args(argv)
        report['command'] = {'name': args.command, 'ruleset': args.ruleset,
                             'seeds': list(args.seed), 'games': list(args.game),
                             'number': args.number}
        arena_options = {}
        if args.max_arena is not None:
            arena_options['max_arena'] = args.max_arena
        provider = RulesetProvider(arena_options)
        options = _closure_options(args)
        report['configuration'] = _configuration(args, options, provider.arena)
        status, kind, results = _RUNNERS[args.command](args, provider, options)
        report.update(status=status, kind=kind, results=results)
    except BudgetExceededError as err:
        logger.warning("Budget exceeded: %s", err.message)
        report.update(status='budget-exceeded', kind='budget', error=_error(err))
    except NumbergateError as err:
        logger.warning("Invalid input: %s", err.message)
        report.update(status='parse-error', kind='input', error=_error(err))
    return STATUS_CODES[report['status']], report


def _text_lines(value, prefix=''):
    if isinstance(value, dict):
        for key in sorted(value):
            name = '{}.{}'.format(prefix, key) if prefix else str(key)
            yield from _text_lines(value[key], name)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for idx, item in enumerate(value):
            yield from _text_lines(item, '{}[{}]'.format(prefix, idx))
    else:
        if isinstance(value, list):
            value = ', '.join(str(v) for v in value)
        yield '{}: {}'.format(prefix, '-' if value is None else value)


def format_report(report, fmt='json'):
    """Render a report as JSON or as plain text lines."""
    if fmt == 'text':
        return '\n'.join(_text_lines(report))
    return dumps_report(report)


def main(argv=None):
    """Console entry point. Prints the report and returns the exit code."""
    if argv is None:
        argv = sys.argv[1:]
    # Logging and output format are needed before the full parse can fail
    early = argparse.ArgumentParser(add_help=False)
    early.add_argument('--log-level', default=None)
    early.add_argument('--format', default='json')
    known, _ = early.parse_known_args(argv)
    handler = _configure_logging(known.log_level)
    try:
        code, report = run(argv)
        fmt = known.format if known.format in ('json', 'text') else 'json'
        print(format_report(report, fmt))
    finally:
        logging.getLogger().removeHandler(handler)
    return code
