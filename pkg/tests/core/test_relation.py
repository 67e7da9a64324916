import logging
import unittest
from TSW.core.relation import Relation, RelationFamily
from TSW.core.report import Defect, sorted_report


class RelationTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def test_empty_relations_of_different_arity_differ(self):
        self.assertNotEqual(Relation.empty(1), Relation.empty(2))
        self.assertEqual(Relation.empty(2), Relation(2, []))

    def test_wrong_tuple_length(self):
        with self.assertRaises(ValueError):
            Relation(2, [('0',)])

    def test_negative_arity(self):
        with self.assertRaises(ValueError):
            Relation(-1, [])

    def test_render_is_canonical(self):
        R = Relation(2, [('1', '0'), ('0', '1')])
        self.assertEqual(R.render(), '{(0,1),(1,0)}/2')
        self.assertEqual(R.to_dict(), {'arity': 2, 'tuples': [['0', '1'], ['1', '0']]})

    def test_natural_order(self):
        R = Relation(1, [('a10',), ('a2',)])
        self.assertEqual(R.sorted_tuples(), [('a2',), ('a10',)])

    def test_subset_needs_same_arity(self):
        self.assertTrue(Relation.empty(1).issubset(Relation(1, [('0',)])))
        self.assertFalse(Relation.empty(2).issubset(Relation(1, [('0',)])))

    def test_family_ignores_truncation_count(self):
        members = [Relation.empty(0), Relation(1, [('0',)])]
        self.assertEqual(RelationFamily(members, truncated=3), RelationFamily(members))
        self.assertEqual([r.arity for r in RelationFamily(members)], [0, 1])
        self.assertEqual(RelationFamily(members).arities(), [0, 1])


class DefectTest(unittest.TestCase):
    def test_render(self):
        d = Defect('PI2', (Relation(1, [('0',)]),), 'singleton not preserved')
        self.assertEqual(d.render(), 'PI2: {(0)}/1: singleton not preserved')
        self.assertEqual(d.to_dict()['witnesses'], ['{(0)}/1'])

    def test_sorted_report_drops_duplicates(self):
        a = Defect('PI5', ('x',))
        b = Defect('PI1', ('y',))
        self.assertEqual(sorted_report([a, b, a]), [b, a])
