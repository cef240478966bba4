# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Hereditary closures and the checks run over them.

A set of positions is hereditarily closed when every move from a position
of the set leads back into the set. `hcr_closure` builds the smallest such
set containing some seeds; `check_closure` classifies every option pair of
every position in it and checks the relations between F1, F2 and numbers
that hold on closed sets:

    * if every pair satisfies F1 or F2, every position is a number;
    * every position is a number exactly when every pair satisfies F1;
    * if every pair satisfies F2, every position is an integer;
    * if every pair satisfies F2, every pair has a strict F1 witness.

Pairs that a ruleset settles through `Ruleset.pair_claim` are also checked
against the property it names.

A failed check is recorded in the report as a violation; it is never raised.
"""

import logging
from collections import deque
from concurrent import futures
from dataclasses import dataclass, field
from typing import Optional

from ..gateerror import BudgetExceededError
from ..games.dyadic import DyadicRational
from ..games.gameerror import GameError
from ..utils.helpers import merge_options
from .classification import (classify_options, classify_position_pair,
                             validate_witnesses)
from .probes import DEFAULT_X_SET, ConVerdict, con_verdict

logger = logging.getLogger(__name__)

DEFAULT_OPTIONS = {
    'max_positions': 200000,
    'fast_path': True,
    'audit_fast_path': False,
    'max_neither_witnesses': 32,
    'max_parallel_positions': 1,
    'con_probe': True,
    'x_set': DEFAULT_X_SET
}

CLASS_NAMES = ('both', 'f1-only', 'f2-only', 'neither')


def closure_options(options=None):
    """Merge closure options over DEFAULT_OPTIONS and validate them.

    Numbers in "x_set" may be given as DyadicRational, int or text.

    Raises:
        GameError: if an option has an invalid value.
    """
    options = merge_options(DEFAULT_OPTIONS, options, owner='closure')
    for key in ('max_positions', 'max_neither_witnesses', 'max_parallel_positions'):
        val = options[key]
        if not isinstance(val, int) or val < 0:
            raise GameError("Invalid {}: must be a non-negative integer.".format(key))
    x_set = []
    for val in options['x_set']:
        if isinstance(val, str):
            val = DyadicRational.from_string(val)
        elif isinstance(val, int):
            val = DyadicRational(val)
        x_set.append(val)
    options['x_set'] = tuple(x_set)
    return options


def hcr_closure(ruleset, seeds, options=None):
    """Return the hereditary closure of `seeds` in breadth-first order.

    Seeds come first in the order given, then the Left moves followed by
    the Right moves of each position, skipping positions already seen.
    Positions are normalized with `Ruleset.normalize_position`.

    Args:
        ruleset (Ruleset): the ruleset generating moves.
        seeds (list): positions or position texts.
        options (dict): closure options; "max_positions" bounds the size.

    Returns:
        list: the closure positions, each exactly once.

    Raises:
        BudgetExceededError: if the closure has more than "max_positions"
            positions.
        GameParseError: if a seed text does not parse.
    """
    limit = merge_options(DEFAULT_OPTIONS, options, owner='closure')['max_positions']
    seen = {}
    queue = deque()

    def _visit(pos):
        if pos in seen:
            return
        if len(seen) >= limit:
            raise BudgetExceededError(
                "Closure budget exceeded on {}: more than {} positions "
                "with {} left to expand.".format(ruleset.name(), limit,
                                                  len(queue) + 1),
                budget='max_positions', limit=limit, frontier=len(queue) + 1)
        seen[pos] = None
        queue.append(pos)

    for seed in seeds:
        _visit(ruleset.normalize_position(ruleset.as_position(seed)))
    while queue:
        left, right = ruleset.options(queue.popleft())
        for child in left + right:
            _visit(child)
    logger.info("Closure of %d seed(s) on %s has %d positions.",
                len(seeds), ruleset.name(), len(seen))
    return list(seen)


@dataclass
class ClosureReport:
    """Everything `check_closure` learned about one closure.

    Positions are keyed by their rendered text. Values are None for
    positions that are not numbers.
    """
    ruleset_name: str
    positions: list
    values: dict
    pair_count: int
    class_counts: dict
    neither_witnesses: list
    all_numbers: bool
    all_integers_claim: bool
    all_f1: bool
    all_f2: bool
    all_f1_or_f2: bool
    snc_consistent: bool
    con_probe: Optional[ConVerdict] = None
    fast_path_hits: int = 0
    fast_path_disagreements: list = field(default_factory=list)
    pair_claims_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def position_count(self):
        """Number of positions in the closure."""
        return len(self.positions)

    def ok(self):
        """Return True if no check was violated."""
        return not self.violations

    def to_dict(self):
        """Return the report as a dictionary."""
        values = {}
        for text, val in self.values.items():
            values[text] = None if val is None else str(val)
        return {
            'ruleset': self.ruleset_name,
            'position_count': self.position_count,
            'pair_count': self.pair_count,
            'class_counts': dict(self.class_counts),
            'neither_witnesses': list(self.neither_witnesses),
            'all_numbers': self.all_numbers,
            'all_integers_claim': self.all_integers_claim,
            'all_f1': self.all_f1,
            'all_f2': self.all_f2,
            'all_f1_or_f2': self.all_f1_or_f2,
            'snc_consistent': self.snc_consistent,
            'con_probe': None if self.con_probe is None else self.con_probe.to_dict(),
            'fast_path_hits': self.fast_path_hits,
            'fast_path_disagreements': list(self.fast_path_disagreements),
            'pair_claims_checked': self.pair_claims_checked,
            'violations': list(self.violations),
            'values': values
        }


def _classify_position(ruleset, position, options):
    """Classify every option pair of one position, Left moves major."""
    pairs = []
    lefts, rights = ruleset.options(position)
    for left in lefts:
        for right in rights:
            pairs.append((left, right, classify_position_pair(
                ruleset, left, right, options['fast_path'])))
    return pairs


def _classify_closure(ruleset, positions, options):
    """Return {position: [(left, right, classification)]} in closure order."""
    workers = options['max_parallel_positions']
    if workers == 1 or len(positions) < 2:
        return {pos: _classify_position(ruleset, pos, options) for pos in positions}
    # 0 lets the executor pick its default pool size
    with futures.ThreadPoolExecutor(max_workers=workers or None) as executor:
        results = executor.map(lambda pos: _classify_position(ruleset, pos, options),
                               positions)
        return dict(zip(positions, results))


def _pair_record(ruleset, position, left, right):
    render = ruleset.render_position
    return {'position': render(position), 'left_option': render(left),
            'right_option': render(right)}


def check_closure(ruleset, seeds, options=None):
    """Compute and check the hereditary closure of `seeds`.

    Args:
        ruleset (Ruleset): the ruleset.
        seeds (list): positions or position texts.
        options (dict): closure options:

            * "max_positions" (int): closure size cap (Default: 200000).

            * "fast_path" (bool): decide F1/F2 clauses from position
              identity where possible (Default: True).

            * "audit_fast_path" (bool): re-check every fast-path verdict by
              value comparison (Default: False).

            * "max_neither_witnesses" (int): how many pairs satisfying
              neither property to list (Default: 32).

            * "max_parallel_positions" (int): worker threads classifying
              positions, 0 for the executor default (Default: 1).

            * "con_probe" (bool): run the outcomes-and-numbers probe
              (Default: True).

            * "x_set" (list): numbers for that probe (Default: the numbers
              born by day 3).

    Returns:
        ClosureReport: the report; violations are listed, not raised.

    Raises:
        BudgetExceededError: if the closure or the arena exceeds its budget.
    """
    options = closure_options(options)
    arena = ruleset.arena
    render = ruleset.render_position
    positions = hcr_closure(ruleset, seeds, options)
    values = {pos: arena.to_number(ruleset.to_game(pos)) for pos in positions}
    classified = _classify_closure(ruleset, positions, options)

    counts = dict.fromkeys(CLASS_NAMES, 0)
    neither = []
    hits = 0
    disagreements = []
    pair_count = 0
    claims_checked = 0
    broken_claims = []
    for pos in positions:
        for left, right, pair in classified[pos]:
            pair_count += 1
            counts[pair.kind] += 1
            claim = ruleset.pair_claim(pos, left, right)
            if claim is not None:
                claims_checked += 1
                if not getattr(pair, claim):
                    record = _pair_record(ruleset, pos, left, right)
                    record['claim'] = claim
                    broken_claims.append(record)
            if pair.kind == 'neither' and len(neither) < options['max_neither_witnesses']:
                neither.append(_pair_record(ruleset, pos, left, right))
            if pair.fast_path:
                hits += 1
                if options['audit_fast_path']:
                    audit = classify_options(arena, pair.left_option, pair.right_option)
                    wrong = [name for name in pair.fast_path if not getattr(audit, name)]
                    if wrong or not validate_witnesses(arena, pair):
                        record = _pair_record(ruleset, pos, left, right)
                        record['clauses'] = wrong
                        disagreements.append(record)
                        logger.warning("Fast path verdict %s not confirmed by value "
                                       "comparison at %s.", wrong, record['position'])

    all_pairs = [pair for pos in positions for _, _, pair in classified[pos]]
    all_numbers = all(val is not None for val in values.values())
    all_integers = all_numbers and all(val.is_integer() for val in values.values())
    all_f1 = all(pair.f1 for pair in all_pairs)
    all_f2 = all(pair.f2 for pair in all_pairs)
    all_f1_or_f2 = all(pair.f1 or pair.f2 for pair in all_pairs)

    violations = []

    def _violation(theorem, detail, **extra):
        record = {'theorem': theorem, 'detail': detail}
        record.update(extra)
        logger.error("Check %s violated on %s: %s", theorem, ruleset.name(), detail)
        violations.append(record)

    def _first_position(predicate):
        return next((render(pos) for pos in positions if predicate(values[pos])), None)

    def _first_pair(predicate):
        for pos in positions:
            for left, right, pair in classified[pos]:
                if predicate(pair):
                    return _pair_record(ruleset, pos, left, right)
        return None

    if all_f1_or_f2 and not all_numbers:
        _violation('f1-or-f2-gives-numbers',
                   "every pair satisfies F1 or F2 but a position is not a number",
                   position=_first_position(lambda val: val is None))
    if all_numbers and not all_f1:
        _violation('numbers-iff-f1',
                   "every position is a number but a pair fails F1",
                   pair=_first_pair(lambda pair: not pair.f1))
    if all_f1 and not all_numbers:
        _violation('numbers-iff-f1',
                   "every pair satisfies F1 but a position is not a number",
                   position=_first_position(lambda val: val is None))
    if all_f2 and not all_integers:
        _violation('f2-gives-integers',
                   "every pair satisfies F2 but a position is not an integer",
                   position=_first_position(lambda val: val is None or not val.is_integer()))
    if all_f2:
        for pos in positions:
            for left, right, pair in classified[pos]:
                if pair.f1_strict:
                    continue
                if classify_options(arena, pair.left_option, pair.right_option).f1_strict:
                    continue
                _violation('f2-gives-strict-f1',
                           "every pair satisfies F2 but a pair has no strict F1 witness",
                           pair=_pair_record(ruleset, pos, left, right))

    for record in broken_claims:
        _violation('ruleset-pair-claim',
                   "the rules settle a pair as {} but it fails".format(record['claim']),
                   pair=record)

    probe = None
    if options['con_probe']:
        probe = con_verdict(ruleset, positions, options['x_set'])
        for record in probe.forward_violations:
            _violation('numbers-avoid-n',
                       "every position is a number but a number sum is in N",
                       sum=record)

    logger.info("Checked %d pairs over %d positions on %s: %s.", pair_count,
                len(positions), ruleset.name(), counts)
    return ClosureReport(
        ruleset_name=ruleset.name(),
        positions=[render(pos) for pos in positions],
        values={render(pos): values[pos] for pos in positions},
        pair_count=pair_count,
        class_counts=counts,
        neither_witnesses=neither,
        all_numbers=all_numbers,
        all_integers_claim=all_integers,
        all_f1=all_f1,
        all_f2=all_f2,
        all_f1_or_f2=all_f1_or_f2,
        snc_consistent=(all_numbers == all_f1),
        con_probe=probe,
        fast_path_hits=hits,
        fast_path_disagreements=disagreements,
        pair_claims_checked=claims_checked,
        violations=violations)
