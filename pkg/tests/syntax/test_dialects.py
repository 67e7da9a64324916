import logging
import unittest
from TSW.core.structure import Signature
from TSW.syntax.ast import Var, Rel, Eq, Neg, Exists, WeakNot, Con, Inc, Dep
from TSW.syntax.dialects import (
    check_dialect, dialects_of, is_downward_closed_fragment, is_union_closed_fragment, is_quantifier_free,
)
from TSW.syntax.enumerate import atoms, enumerate_formulas, iter_formulas, sample_formula, depth
from TSW.syntax.ast import size

UNARY = Signature({'P': 1})
P0 = Rel('P', (Var('v0'),))


class DialectTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def test_dialects_of(self):
        self.assertEqual(dialects_of(P0), ['fo', 'fot', 'foil', 'so'])
        self.assertEqual(dialects_of(Inc(('v0',), ('v1',))), ['fot', 'foil'])
        self.assertEqual(dialects_of(WeakNot(P0)), ['fot'])
        self.assertEqual(dialects_of(Neg(Exists('v0', P0))), ['so'])

    def test_check_dialect_returns_formula(self):
        self.assertIs(check_dialect(P0, 'fo'), P0)
        with self.assertRaises(ValueError):
            check_dialect(P0, 'esl')

    def test_fragments(self):
        self.assertTrue(is_downward_closed_fragment(Dep(('v0',), ('v1',))))
        self.assertFalse(is_downward_closed_fragment(Inc(('v0',), ('v1',))))
        self.assertTrue(is_union_closed_fragment(Inc(('v0',), ('v1',))))
        self.assertFalse(is_union_closed_fragment(Con(('v0',))))
        self.assertTrue(is_quantifier_free(Neg(Eq(Var('v0'), Var('v1')))))


class EnumerateTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def test_first_order_atoms(self):
        self.assertEqual(len(atoms(UNARY, ['v0'], 'fo')), 4)

    def test_team_atoms_are_added(self):
        fot = atoms(UNARY, ['v0'], 'fot')
        self.assertIn(Con(('v0',)), fot)
        self.assertIn(Inc(('v0',), ('v0',)), fot)
        self.assertNotIn(Dep(('v0',), ('v0',)), fot)
        self.assertIn(Dep(('v0',), ('v0',)), atoms(UNARY, ['v0'], 'foil'))

    def test_enumeration_respects_bound_and_dialect(self):
        for dialect in ('fo', 'fot', 'foil'):
            formulas = list(iter_formulas(UNARY, ['v0'], 3, dialect))
            self.assertEqual(len(formulas), len(set(formulas)))
            for phi in formulas:
                self.assertLessEqual(size(phi), 3)
                check_dialect(phi, dialect)

    def test_enumeration_is_smallest_first(self):
        sizes = [size(phi) for phi in iter_formulas(UNARY, ['v0'], 3, 'fot')]
        self.assertEqual(sizes, sorted(sizes))

    def test_enumeration_counts(self):
        formulas = enumerate_formulas(UNARY, ['v0'], 2, 'fo')
        self.assertEqual(len(formulas), 12)
        self.assertEqual(formulas, list(iter_formulas(UNARY, ['v0'], 2, 'fo')))
        self.assertIn(Exists('v0', P0), formulas)

    def test_second_order_is_not_enumerated(self):
        with self.assertRaises(ValueError):
            list(iter_formulas(UNARY, ['v0'], 2, 'so'))

    def test_sampling_is_seeded(self):
        a = sample_formula(UNARY, ['v0', 'v1'], 4, 7, 'foil')
        b = sample_formula(UNARY, ['v0', 'v1'], 4, 7, 'foil')
        self.assertEqual(a, b)
        self.assertLessEqual(depth(a), 4)
        check_dialect(a, 'foil')
