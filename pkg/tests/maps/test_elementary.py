import logging
import unittest
from TSW.core.relation import Relation
from TSW.core.structure import Signature, Structure, pure_set
from TSW.maps import elementary
from TSW.maps.checks import check_partial_team_isomorphism
from TSW.maps.substructure import induced_substructure
from TSW.maps.teammap import TeamMap, lift_isomorphism, lift_map

UNARY = Signature({'P': 1})


def single(*elements):
    return Relation(1, [(a,) for a in elements])


class ElementaryTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def setUp(self):
        self.A = Structure(UNARY, ['0', '1'], {'P': single('0')})
        self.B = Structure(UNARY, ['0', '1'], {'P': single('1')})
        self.E = Structure(UNARY, ['0', '1'], {'P': single()})

    def test_expansion_isomorphisms(self):
        self.assertEqual(list(elementary.expansion_isomorphisms(self.A, self.A, [])), [{'0': '0', '1': '1'}])
        S = pure_set(['0', '1'])
        self.assertEqual(len(list(elementary.expansion_isomorphisms(S, S, []))), 2)
        pairs = [(single('0'), single('1'))]
        self.assertEqual(list(elementary.expansion_isomorphisms(S, S, pairs)), [{'0': '1', '1': '0'}])

    def test_check_elementary_map(self):
        f = lift_isomorphism({'0': '1', '1': '0'}, self.A, self.B, 2)
        self.assertTrue(elementary.check_elementary_map(f))
        entries = dict(f.entries)
        entries[single('0')] = single('0')
        self.assertFalse(elementary.check_elementary_map(TeamMap(self.A, self.B, entries)))

    def test_find_partial_elementary_map(self):
        f = elementary.find_partial_elementary_map(self.A, [], self.B, 2)
        self.assertEqual(f(single('0')), single('1'))
        self.assertEqual(check_partial_team_isomorphism(f, 2), [])
        self.assertIsNone(elementary.find_partial_elementary_map(self.A, [], self.E, 2))

    def test_all_partial_elementary_maps(self):
        S = pure_set(['0', '1'])
        self.assertEqual(len(list(elementary.all_partial_elementary_maps(S, [], S, 2))), 1)
        self.assertEqual(len(list(elementary.all_partial_elementary_maps(S, [single('0')], S, 2))), 2)

    def test_expansions_isomorphic(self):
        S = pure_set(['0', '1'])
        self.assertTrue(elementary.expansions_isomorphic(S, single('0'), S, single('1')))
        self.assertFalse(elementary.expansions_isomorphic(self.A, single('0'), self.A, single('1')))
        self.assertFalse(elementary.expansions_isomorphic(S, single('0'), S, single('0', '1')))


class InducedSubstructureTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def test_restricts_to_singleton_images(self):
        A = Structure(UNARY, ['0', '1'], {'P': single('0')})
        C = Structure(UNARY, ['0', '1', '2'], {'P': single('0', '2')})
        f = lift_map({'0': '2', '1': '1'}, A, C, 1)
        B, g = induced_substructure(f, C)
        self.assertEqual(B.domain, ('1', '2'))
        self.assertEqual(B.relations['P'], single('2'))
        self.assertEqual(g(A.full(1)), B.full(1))
        self.assertEqual(g(single('1')), single('1'))

    def test_needs_element_total_map(self):
        A = pure_set(['0', '1'])
        C = pure_set(['0', '1', '2'])
        f = TeamMap(A, C, {A.full(1): C.full(1)})
        with self.assertRaises(ValueError):
            induced_substructure(f, C)
        g = lift_map({'0': '0', '1': '1'}, A, C, 1)
        with self.assertRaises(ValueError):
            induced_substructure(g, A)
