import logging
import os
import unittest
from TSW.utils import utils
from unittest.mock import patch


class UtilsClassTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    @classmethod
    def tearDownClass(cls):
        pass

    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_check_parameter_keys(self):
        par = {'a': 0}
        utils.check_parameter_keys(parameter=par, needed_keys=['a'])
        utils.check_parameter_keys(parameter=par, needed_keys=None, optional_keys=['b'], default_value=-1)
        self.assertEqual(par['b'], -1)
        with self.assertRaises(ValueError):
            utils.check_parameter_keys(parameter=par, needed_keys=['c'])

    def test_natural_key(self):
        names = ['v10', 'v2', 'b', 'v1', '10', '9']
        self.assertEqual(sorted(names, key=utils.natural_key), ['9', '10', 'b', 'v1', 'v2', 'v10'])

    def test_setup_missing_file_gives_defaults(self):
        with patch.dict(os.environ, {}, clear=False):
            os.environ.pop(utils.BUDGET_VARIABLE, None)
            conf = utils.setup('tests/data/no_such_config.yml')
        self.assertEqual(conf['default']['max_arity'], 3)
        self.assertEqual(conf['default']['eso_budget'], utils.DEFAULT_BUDGET)
        self.assertEqual(conf['default']['max_lift_relations'], 4096)
        self.assertIsNone(conf['log_dirs']['logs'])
        self.assertEqual(conf['properties'], {})

    def test_setup_reads_file(self):
        with patch.dict(os.environ, {}, clear=False):
            os.environ.pop(utils.BUDGET_VARIABLE, None)
            conf = utils.setup('tests/data/config.yml')
        self.assertEqual(conf['default']['max_arity'], 2)
        self.assertEqual(conf['default']['eso_budget'], 4096)
        self.assertEqual(conf['properties']['suites'], ['ultrafilters', 'empty-team'])

    def test_setup_malformed(self):
        with patch('yaml.load', return_value=['not', 'a', 'mapping']):
            with self.assertRaises(ValueError):
                utils.setup('tests/data/config.yml')

    def test_budget_from_environment(self):
        with patch.dict(os.environ, {utils.BUDGET_VARIABLE: '17'}):
            self.assertEqual(utils.get_budget(5), 17)
            conf = utils.setup('tests/data/config.yml')
        self.assertEqual(conf['default']['eso_budget'], 17)
        with patch.dict(os.environ, {utils.BUDGET_VARIABLE: 'many'}):
            with self.assertRaises(ValueError):
                utils.get_budget()
        with patch.dict(os.environ, {utils.BUDGET_VARIABLE: '0'}):
            with self.assertRaises(ValueError):
                utils.get_budget()

    def test_parse_args(self):
        args = utils.parse_args(['--json', 'closure', '--structure', 's.json'])
        self.assertEqual(args['command'], 'closure')
        self.assertTrue(args['json'])
        self.assertIsNone(args['relations'])
        self.assertIsNone(args['max_arity'])
        args = utils.parse_args(['properties', '--suite', 'los', '--suite', 'limits', '--seed', '4'])
        self.assertEqual(args['suites'], ['los', 'limits'])
        self.assertEqual(args['seed'], 4)
        with self.assertRaises(ValueError):
            utils.parse_args([])

    def test_parse_args_output_options_after_command(self):
        args = utils.parse_args(['closure', '--structure', 's.json', '--max-arity', '3', '--json', '--out', 'o.json'])
        self.assertEqual(args['max_arity'], 3)
        self.assertTrue(args['json'])
        self.assertEqual(args['out'], 'o.json')
        args = utils.parse_args(['--max-arity', '4', '--json', 'find-map', '--source', 'a.json', '--target', 'b.json'])
        self.assertEqual(args['max_arity'], 4)
        self.assertTrue(args['json'])
        self.assertIsNone(args['out'])
        args = utils.parse_args(['eval', '--structure', 's', '--team', 't', '--formula', 'P(v0)'])
        self.assertFalse(args['json'])
        self.assertIsNone(args['max_arity'])

    def test_parse_args_exclusive_map_checks(self):
        with self.assertRaises(SystemExit):
            utils.parse_args(['check-map', '--map', 'm.json', '--pi', '--elementary'])


if __name__ == '__main__':
    unittest.main()
