import json
import logging
import os
import shutil
import tempfile
import unittest
from TSW.core.relation import Relation
from TSW.utils.datahandler import (
    DataHandler, dump, structure_from_dict, structure_to_dict, team_to_dict,
)


class DataHandlerTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def setUp(self):
        self.data = DataHandler('tests/data')
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_load_structure(self):
        A = self.data.load_structure('structure_p0.json')
        self.assertEqual(A.domain, ('0', '1'))
        self.assertEqual(A.relations['P'], Relation(1, [('0',)]))
        self.assertEqual(A.signature.relations, {'P': 1})

    def test_structure_cache(self):
        first = self.data.load_structure('structure_p0.json')
        second = self.data.load_structure(os.path.join('..', 'data', 'structure_p0.json'))
        self.assertIs(first, second)

    def test_functions_and_constants(self):
        A = self.data.load_structure('structure_function.json')
        self.assertEqual(A.functions['f'], {('0',): '1', ('1',): '0'})
        self.assertEqual(A.constants, {'c': '0'})
        self.assertEqual(structure_from_dict(structure_to_dict(A)), A)

    def test_load_team(self):
        X = self.data.load_team('team_v0v1.json')
        self.assertEqual(X.domain, ('v0', 'v1'))
        self.assertEqual(len(X), 2)
        self.assertEqual(team_to_dict(X), {'domain': ['v0', 'v1'], 'rows': [{'v0': '0', 'v1': '0'}, {'v0': '1', 'v1': '1'}]})

    def test_load_relations(self):
        family = self.data.load_relations('relations_p0.json')
        self.assertEqual(len(family), 1)
        self.assertIn(Relation(1, [('0',)]), family)
        self.assertEqual(self.data.load_relation('relation_p0.json'), Relation(1, [('0',)]))
        with self.assertRaises(ValueError):
            self.data.load_relations('relation_p0.json')

    def test_load_map(self):
        f = self.data.load_map('map_swap.json')
        self.assertEqual(len(f), 6)
        self.assertIs(f.source, self.data.load_structure('structure_p0.json'))
        self.assertEqual(f(Relation(1, [('0',)])), Relation(1, [('1',)]))
        self.assertEqual(f(Relation(0, [()])), Relation(0, [()]))

    def test_load_ultrafilter(self):
        principal = self.data.load_ultrafilter('ultrafilter_principal.json')
        self.assertEqual(principal.principal_index(), '1')
        self.assertEqual(len(principal), 2)
        listed = self.data.load_ultrafilter('ultrafilter_members.json')
        self.assertEqual(listed.principal_index(), '0')

    def test_load_system(self):
        S = self.data.load_system('system_chain.json')
        self.assertEqual(S.index, ('0', '1'))
        self.assertTrue(S.leq('0', '1'))
        self.assertFalse(S.leq('1', '0'))
        self.assertEqual(S.structures['1'].size, 3)
        f = S.maps[('0', '1')]
        self.assertEqual(f(Relation(1, [('1',)])), Relation(1, [('1',)]))
        self.assertEqual(f(Relation(1, [('0',), ('1',)])), Relation(1, [('0',), ('1',), ('2',)]))

    def test_missing_and_malformed_files(self):
        with self.assertRaises(ValueError):
            self.data.load_structure('no_such_file.json')
        broken = os.path.join(self.temp_dir, 'broken.json')
        with open(broken, 'w') as f:
            f.write('{"domain": [')
        with self.assertRaises(ValueError):
            self.data.load_structure(broken)
        no_entries = os.path.join(self.temp_dir, 'map.json')
        with open(no_entries, 'w') as f:
            json.dump({'source': os.path.abspath('tests/data/pure2.json'), 'target': os.path.abspath('tests/data/pure2.json')}, f)
        with self.assertRaises(ValueError):
            self.data.load_map(no_entries)

    def write(self, name, payload):
        path = os.path.join(self.temp_dir, name)
        with open(path, 'w') as f:
            json.dump(payload, f)
        return path

    def test_malformed_structures_raise_value_error(self):
        payloads = [
            {'relations': {'P': {'arity': 1, 'tuples': [['0']]}}},
            {'domain': ['0', '1'], 'relations': {'P': {'tuples': [['0']]}}},
            {'domain': ['0', '1'], 'relations': [{'arity': 1, 'tuples': [['0']]}]},
            {'domain': ['0', '1'], 'relations': {'P': {'arity': 'one', 'tuples': []}}},
            {'domain': ['0', '1'], 'relations': {'P': {'arity': 1, 'tuples': '0'}}},
            {'domain': ['0', '1'], 'functions': {'f': {'arity': 1}}},
            {'domain': ['0', '1'], 'functions': {'f': {'arity': 1, 'table': [['0']]}}},
            {'domain': '01'},
            ['0', '1'],
        ]
        for n, payload in enumerate(payloads):
            path = self.write('structure{}.json'.format(n), payload)
            with self.assertRaises(ValueError):
                self.data.load_structure(path)

    def test_malformed_relations_and_teams_raise_value_error(self):
        with self.assertRaises(ValueError):
            self.data.load_relation(self.write('r.json', {'tuples': [['0']]}))
        with self.assertRaises(ValueError):
            self.data.load_relation(self.write('r2.json', {'arity': 2, 'tuples': [['0']]}))
        with self.assertRaises(ValueError):
            self.data.load_relations(self.write('rs.json', [{'arity': 1, 'tuples': [['0']]}, ['0']]))
        with self.assertRaises(ValueError):
            self.data.load_team(self.write('t.json', {'rows': [{'v0': '0'}]}))
        with self.assertRaises(ValueError):
            self.data.load_team(self.write('t2.json', {'domain': ['v0'], 'rows': [['0']]}))

    def test_malformed_map_and_system_raise_value_error(self):
        pure2 = os.path.abspath('tests/data/pure2.json')
        with self.assertRaises(ValueError):
            self.data.load_map(self.write('m.json', {'source': pure2, 'target': pure2, 'entries': [{'from': {'arity': 0}}]}))
        with self.assertRaises(ValueError):
            self.data.load_system(self.write('s.json', {'index': ['0'], 'structures': ['x.json']}))
        with self.assertRaises(ValueError):
            self.data.load_system(self.write(
                's2.json', {'index': ['0'], 'structures': {'0': pure2}, 'maps': [{'edge': ['0', '1'], 'embedding': {}}]},
            ))

    def test_dump(self):
        path = os.path.join(self.temp_dir, 'out.json')
        dump({'b': 1, 'a': [1, 2]}, path)
        with open(path, 'r') as f:
            self.assertEqual(json.load(f), {'a': [1, 2], 'b': 1})


if __name__ == '__main__':
    unittest.main()
