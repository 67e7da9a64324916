import json
import logging
import os
import shutil
import tempfile
import unittest
from TSW import assistant
from unittest.mock import patch

CONFIG = os.path.join('tests', 'data', 'config.yml')


def data(name):
    return os.path.join('tests', 'data', name)


class AssistantTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    @classmethod
    def tearDownClass(cls):
        pass

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def call(self, *argv):
        with patch('builtins.print') as fake_print:
            code = assistant.main(['--config', CONFIG] + list(argv))
        printed = fake_print.call_args[0][0] if fake_print.call_args else None
        return code, printed

    def test_eval(self):
        code, printed = self.call(
            'eval', '--structure', data('structure_p0.json'), '--team', data('team_v0_all.json'),
            '--formula', 'P(v0)', '--dialect', 'fo',
        )
        self.assertEqual(code, assistant.EXIT_FALSE)
        self.assertEqual(printed, 'false')
        code, printed = self.call(
            'eval', '--structure', data('structure_p0.json'), '--team', data('team_v0_all.json'),
            '--formula', 'P(v0) | !P(v0)', '--dialect', 'fo',
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertEqual(printed, 'true')

    def test_eval_json(self):
        code, printed = self.call(
            '--json', 'eval', '--structure', data('structure_p0.json'), '--team', data('team_v0v1.json'),
            '--formula', 'dep(v0 ; v1)',
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertEqual(json.loads(printed), {'result': True})

    def test_translate(self):
        code, printed = self.call('--json', 'translate', '--dialect', 'fot', '--arity', '1', '--formula', 'P(v0)')
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertIn('sentence', json.loads(printed))

    def test_eval_so(self):
        code, printed = self.call(
            'eval-so', '--structure', data('structure_p0.json'), '--sentence', 'EX R:1. forall x. R(x) -> P(x)',
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        code, printed = self.call(
            'eval-so', '--structure', data('structure_p0.json'), '--sentence', 'forall x. S(x) -> !P(x)',
            '--param', 'S=' + data('relation_p0.json'),
        )
        self.assertEqual(code, assistant.EXIT_FALSE)
        code, printed = self.call(
            'eval-so', '--structure', data('structure_p0.json'), '--sentence', 'P(c)', '--param', 'broken',
        )
        self.assertEqual(code, assistant.EXIT_USAGE)

    def test_closure_writes_out_file(self):
        out = os.path.join(self.temp_dir, 'closure.json')
        code, printed = self.call(
            '--out', out, 'closure', '--structure', data('structure_p0.json'), '--relations', data('relations_p0.json'),
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        with open(out, 'r') as f:
            result = json.load(f)
        self.assertGreater(result['truncated'], 0)
        self.assertIn({'arity': 1, 'tuples': [['0']]}, result['relations'])

    def test_output_options_after_command(self):
        code, printed = self.call(
            'closure', '--structure', data('structure_p0.json'), '--relations', data('relations_p0.json'),
            '--max-arity', '2', '--json',
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertIn({'arity': 1, 'tuples': [['0']]}, json.loads(printed)['relations'])
        code, printed = self.call(
            'eval', '--structure', data('structure_p0.json'), '--team', data('team_v0v1.json'),
            '--formula', 'dep(v0 ; v1)', '--json',
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertEqual(json.loads(printed), {'result': True})

    def test_check_map(self):
        code, printed = self.call('check-map', '--map', data('map_swap.json'), '--boolean', '1')
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertEqual(printed, 'pass')
        code, printed = self.call('check-map', '--map', data('map_swap.json'), '--tarski-vaught', data('corpus.txt'))
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertEqual(printed, 'pass')
        code, printed = self.call('--json', 'check-map', '--map', data('map_self.json'))
        self.assertEqual(code, assistant.EXIT_FALSE)
        self.assertFalse(json.loads(printed)['ok'])

    def test_find_map(self):
        code, printed = self.call(
            'find-map', '--source', data('structure_p0.json'), '--relations', data('relations_p0.json'),
            '--target', data('structure_p1.json'),
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertIn('{(0)}/1 -> {(1)}/1', printed.splitlines())
        code, printed = self.call(
            'find-map', '--source', data('structure_p0.json'), '--target', data('structure_p_empty.json'),
        )
        self.assertEqual(code, assistant.EXIT_FALSE)
        self.assertEqual(printed, 'none')

    def test_ultra(self):
        code, printed = self.call(
            '--json', 'ultra', '--ultrafilter', data('ultrafilter_principal.json'),
            '--structures', data('structure_p0.json'), data('structure_p1.json'),
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        payload = json.loads(printed)
        self.assertEqual(payload['principal'], '1')
        self.assertEqual(payload['structure']['relations']['P']['tuples'], [['1']])

    def test_ultra_los(self):
        code, printed = self.call(
            '--json', 'ultra', '--ultrafilter', data('ultrafilter_principal.json'),
            '--structures', data('structure_p0.json'), data('structure_p1.json'),
            '--teams', data('team_v0_all.json'), data('team_v0_all.json'), '--formula', 'P(v0)',
        )
        self.assertEqual(code, assistant.EXIT_TRUE)
        payload = json.loads(printed)
        self.assertTrue(payload['los']['ok'])
        self.assertEqual(payload['team']['domain'], ['v0'])
        code, printed = self.call(
            'ultra', '--ultrafilter', data('ultrafilter_principal.json'),
            '--structures', data('structure_p0.json'), data('structure_p1.json'), '--formula', 'P(v0)',
        )
        self.assertEqual(code, assistant.EXIT_USAGE)

    def test_limit(self):
        code, printed = self.call('--json', 'limit', '--system', data('system_chain.json'))
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertEqual(len(json.loads(printed)['structure']['domain']), 3)
        code, printed = self.call('limit', '--system', data('system_chain.json'), '--cofinal', '1')
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertEqual(printed, 'pass')
        code, printed = self.call('limit', '--system', data('system_chain.json'), '--cofinal', '0')
        self.assertEqual(code, assistant.EXIT_USAGE)

    def test_properties(self):
        code, printed = self.call('properties')
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertTrue(printed.endswith('all suites passed'))
        code, printed = self.call('--json', 'properties', '--suite', 'ultrafilters', '--seed', '2')
        self.assertEqual(code, assistant.EXIT_TRUE)
        self.assertEqual(json.loads(printed)['seed'], 2)

    def test_usage_errors(self):
        code, _ = self.call()
        self.assertEqual(code, assistant.EXIT_USAGE)
        code, _ = self.call('eval', '--structure', data('structure_p0.json'))
        self.assertEqual(code, assistant.EXIT_USAGE)
        code, _ = self.call(
            'eval', '--structure', data('no_such.json'), '--team', data('team_v0_all.json'), '--formula', 'P(v0)',
        )
        self.assertEqual(code, assistant.EXIT_USAGE)
        code, _ = self.call(
            'eval', '--structure', data('structure_p0.json'), '--team', data('team_v0_all.json'),
            '--formula', 'dep(v0 ; v0)', '--dialect', 'fot',
        )
        self.assertEqual(code, assistant.EXIT_USAGE)

    def test_malformed_input_is_a_usage_error(self):
        no_arity = os.path.join(self.temp_dir, 'no_arity.json')
        with open(no_arity, 'w') as f:
            json.dump({'domain': ['0', '1'], 'relations': {'P': {'tuples': [['0']]}}}, f)
        no_domain = os.path.join(self.temp_dir, 'no_domain.json')
        with open(no_domain, 'w') as f:
            json.dump({'relations': {}}, f)
        for structure in (no_arity, no_domain):
            code, _ = self.call('closure', '--structure', structure)
            self.assertEqual(code, assistant.EXIT_USAGE)


if __name__ == '__main__':
    unittest.main()
