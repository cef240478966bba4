# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
"""
Command line tests
"""

import contextlib
import io
import json
import os
import tempfile
import unittest

from test.numbergate import common
from numbergate.cli import (EXIT_BUDGET, EXIT_OK, EXIT_PARSE, EXIT_VIOLATED,
                            SCHEMA, format_report, main, run)
from numbergate.utils.helpers import dumps_report


class TestCommands(common.NumbergateTestCase):
    """Reports of every command"""

    def test_value(self):
        """The value, outcome and canonical form of one half"""
        code, report = run(['value', '--game', '{0|1}'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report['schema'], SCHEMA)
        self.assertEqual(report['status'], 'ok')
        entry = report['results'][0]
        self.assertEqual(entry['value'], '1/2')
        self.assertEqual(entry['outcome'], 'L')
        self.assertEqual(entry['canonical'], '{0|1}')

    def test_value_of_non_number(self):
        """Switches have no value but an outcome and a canonical form"""
        _, report = run(['value', '--game', '{1|0}', '--game', '{0,*|*}'])
        first, second = report['results']
        self.assertIsNone(first['value'])
        self.assertEqual(first['outcome'], 'N')
        self.assertEqual(first['canonical'], '{1|0}')
        self.assertIsNone(second['value'])

    def test_canonical_and_outcome(self):
        """Each command reports only its own fields"""
        _, report = run(['canonical', '--game', '{-1|1}'])
        self.assertEqual(set(report['results'][0]), {'input', 'canonical'})
        self.assertEqual(report['results'][0]['canonical'], '{|}')
        _, report = run(['outcome', '--ruleset', 'turtles', '--seed', 'UD'])
        self.assertEqual(report['results'][0], {'input': 'UD', 'outcome': 'R'})

    def test_sum(self):
        """Positions are summed by value"""
        _, report = run(['sum', '--game', '1/2', '--game', '1/2', '--game', '*'])
        self.assertIsNone(report['results']['value'])
        self.assertEqual(report['results']['outcome'], 'L')
        _, report = run(['sum', '--ruleset', 'hackenbush', '--seed', 'br', '--seed', 'r'])
        self.assertEqual(report['results']['value'], '-1/2')
        self.assertEqual(report['results']['input'], ['br', 'r'])

    def test_classify_pairs(self):
        """The pair (-2, 0) of {-2|0} satisfies F1 only"""
        code, report = run(['classify-pairs', '--game', '{-2|0}'])
        self.assertEqual(code, EXIT_OK)
        pairs = report['results'][0]['pairs']
        self.assertEqual(len(pairs), 1)
        self.assertTrue(pairs[0]['f1'])
        self.assertFalse(pairs[0]['f2'])
        self.assertTrue(pairs[0]['f1_strict'])
        self.assertEqual(pairs[0]['class'], 'f1-only')

    def test_closure_check(self):
        """A 6x6 cake closes on integers"""
        code, report = run(['closure-check', '--ruleset', 'cutcake', '--seed', '6x6'])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report['results']['all_integers_claim'])
        self.assertTrue(report['results']['all_f2'])
        self.assertEqual(report['results']['violations'], [])
        self.assertEqual(report['results']['position_count'], 34147)
        self.assertEqual(report['configuration']['max_positions'], 200000)

    def test_negative_control(self):
        """The subtraction control has a neither pair but breaks no check"""
        code, report = run(['closure-check', '--ruleset', 'subtraction',
                            '--seed', 'n=2;L=1;R=2'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report['results']['class_counts']['neither'], 1)

    def test_confirm_con(self):
        """A witness sum in N is reported as violated"""
        code, report = run(['confirm-con', '--ruleset', 'subtraction',
                            '--seed', 'n=2;L=1;R=2'])
        self.assertEqual(code, EXIT_VIOLATED)
        self.assertEqual(report['kind'], 'property-witness')
        self.assertEqual(report['results']['witness']['x'], '0')
        self.assertEqual(report['results']['position_count'], 3)
        code, report = run(['confirm-con', '--ruleset', 'divisors', '--seed', '5,4',
                            '--x', '0', '--x', '1/2'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report['results']['verdict'], 'no-n-sum')
        self.assertEqual(report['configuration']['x_set'], ['0', '1/2'])

    def test_avoidance_probe(self):
        """Zero plus star passes"""
        code, report = run(['avoidance-probe', '--number', '0', '--game', '*'])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report['results'][0]['passed'])
        self.assertEqual(report['results'][0]['number'], '0')


class TestErrors(common.NumbergateTestCase):
    """Exit codes and error records"""

    def test_parse_error(self):
        """An unterminated literal names the failing position"""
        code, report = run(['value', '--game', '{0|'])
        self.assertEqual(code, EXIT_PARSE)
        self.assertEqual(report['status'], 'parse-error')
        self.assertEqual(report['error']['type'], 'GameParseError')
        self.assertIn('position', report['error'])
        self.assertIsNone(report['results'])

    def test_usage_errors(self):
        """Bad command lines are parse errors"""
        for argv in (['evaluate', '--game', '0'], ['value'],
                     ['value', '--seed', '1,1'],
                     ['value', '--ruleset', 'divisors', '--seed', '1,1', '--game', '0'],
                     ['avoidance-probe', '--game', '*'],
                     ['value', '--ruleset', 'shove', '--seed', 'x']):
            code, report = run(argv)
            self.assertEqual(code, EXIT_PARSE, msg=argv)
            self.assertEqual(report['status'], 'parse-error')

    def test_domain_errors(self):
        """Probe preconditions are reported, not raised"""
        code, report = run(['avoidance-probe', '--number', '*', '--game', '*'])
        self.assertEqual(code, EXIT_PARSE)
        self.assertEqual(report['error']['type'], 'GameError')

    def test_budget(self):
        """A closure over its budget exits with 2 and names the budget"""
        code, report = run(['closure-check', '--ruleset', 'divisors',
                            '--seed', '24,24', '--max-positions', '3'])
        self.assertEqual(code, EXIT_BUDGET)
        self.assertEqual(report['status'], 'budget-exceeded')
        self.assertEqual(report['error']['budget'], 'max_positions')
        self.assertEqual(report['error']['limit'], 3)
        self.assertGreater(report['error']['frontier'], 0)


class TestOutput(common.NumbergateTestCase):
    """Formats, determinism and emitted positions"""

    def test_deterministic(self):
        """Identical runs print identical JSON"""
        argv = ['closure-check', '--ruleset', 'chomp', '--seed', 'BG/GB']
        self.assertEqual(format_report(run(argv)[1]), format_report(run(argv)[1]))
        parallel = argv + ['--parallel', '3']
        first, second = run(argv)[1], run(parallel)[1]
        self.assertEqual(first['results'], second['results'])

    def test_json_schema(self):
        """Top level keys of the JSON report"""
        text = format_report(run(['outcome', '--game', '*'])[1])
        report = json.loads(text)
        self.assertEqual(set(report),
                         {'schema', 'command', 'configuration', 'status', 'kind', 'results'})
        self.assertEqual(report['command']['games'], ['*'])

    def test_dumps_report(self):
        """Reports serialize with sorted keys and no spaces"""
        self.assertEqual(dumps_report({'b': 1, 'a': [None, '1/2']}),
                         '{"a":[null,"1/2"],"b":1}')
        _, report = run(['value', '--game', '{0|1}'])
        self.assertEqual(json.loads(format_report(report)), report)

    def test_text_format(self):
        """Plain text lines through main"""
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            code = main(['value', '--game', '{0|1}', '--format', 'text'])
        self.assertEqual(code, EXIT_OK)
        lines = stdout.getvalue().splitlines()
        self.assertIn('schema: numbergate/1', lines)
        self.assertIn('status: ok', lines)
        self.assertIn('results[0].value: 1/2', lines)

    def test_main_exit_code(self):
        """main returns the status exit code"""
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            code = main(['confirm-con', '--ruleset', 'subtraction',
                         '--seed', 'n=2;L=1;R=2'])
        self.assertEqual(code, EXIT_VIOLATED)
        self.assertEqual(json.loads(stdout.getvalue())['status'], 'violated')

    def test_emit_positions(self):
        """Closure positions are written one per line in closure order"""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, 'positions.txt')
            code, _ = run(['closure-check', '--ruleset', 'subtraction',
                           '--seed', 'n=2;L=1;R=2', '--emit-positions', path])
            self.assertEqual(code, EXIT_OK)
            with open(path, encoding='utf-8') as handle:
                lines = handle.read().splitlines()
        self.assertEqual(lines, ['n=2;L=1;R=2', 'n=1;L=1;R=2', 'n=0;L=1;R=2'])


if __name__ == '__main__':
    unittest.main()
