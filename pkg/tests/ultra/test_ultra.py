import logging
import unittest
from TSW.core.relation import Relation
from TSW.core.structure import Signature, Structure
from TSW.core.team import Team, window
from TSW.maps.elementary import check_elementary_map
from TSW.syntax.parser import parse_formula
from TSW.ultra.filters import (
    Ultrafilter, principal_ultrafilter, validate_ultrafilter, enumerate_ultrafilters, subsets,
)
from TSW.ultra.los import verify_los, ultrapower_map
from TSW.ultra.product import ultraproduct_structures, relation_ultraproduct, team_ultraproduct, ultrapower

UNARY = Signature({'P': 1})


def single(*elements):
    return Relation(1, [(a,) for a in elements])


class UltrafilterTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def test_subsets(self):
        self.assertEqual(len(subsets(['a', 'b', 'c'])), 8)
        self.assertEqual(subsets(['a'])[0], frozenset())

    def test_principal(self):
        U = principal_ultrafilter(['0', '1', '2'], 1)
        self.assertEqual(validate_ultrafilter(U), [])
        self.assertEqual(U.principal_index(), '1')
        self.assertEqual(len(U), 4)
        self.assertIn({'1', '2'}, U)
        self.assertNotIn({'0', '2'}, U)
        with self.assertRaises(ValueError):
            principal_ultrafilter(['0'], '3')

    def test_validation(self):
        kinds = {d.kind for d in validate_ultrafilter(Ultrafilter(['0', '1'], []))}
        self.assertEqual(kinds, {'maximality'})
        kinds = {d.kind for d in validate_ultrafilter(Ultrafilter(['0', '1'], [[], ['0'], ['0', '1']]))}
        self.assertIn('empty', kinds)
        kinds = {d.kind for d in validate_ultrafilter(Ultrafilter(['0', '1'], [['0'], ['1'], ['0', '1']]))}
        self.assertIn('intersection', kinds)
        kinds = {d.kind for d in validate_ultrafilter(Ultrafilter(['0'], [['0', '9']]))}
        self.assertIn('index', kinds)

    def test_enumeration_finds_only_principal_ultrafilters(self):
        found = enumerate_ultrafilters(['a', 'b', 'c'])
        self.assertEqual([U.principal_index() for U in found], ['a', 'b', 'c'])
        with self.assertRaises(ValueError):
            enumerate_ultrafilters(['0', '1', '2', '3', '4'])

    def test_render(self):
        self.assertEqual(principal_ultrafilter(['0', '1'], '0').render(), '{{0}, {0,1}}')


class UltraproductTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def setUp(self):
        self.factors = [
            Structure(UNARY, ['0'], {'P': single('0')}),
            Structure(UNARY, ['0', '1'], {'P': single('1')}),
            Structure(UNARY, ['0', '1'], {'P': single()}),
        ]
        self.U = principal_ultrafilter(['0', '1', '2'], '1')
        self.teams = [
            Team(window(1), [('0',)]),
            Team(window(1), [('0',), ('1',)]),
            Team(window(1), [('1',)]),
        ]

    def test_collapses_to_principal_factor(self):
        product = ultraproduct_structures(self.factors, self.U)
        self.assertEqual(product.principal, '1')
        self.assertEqual(product.structure, self.factors[1])
        self.assertEqual(len(product.classes['1']), 2)
        self.assertEqual(product.class_of(('0', '1', '1')), '1')

    def test_relation_and_team_ultraproducts(self):
        product = ultraproduct_structures(self.factors, self.U)
        relations = [single('0'), single('0'), single('0', '1')]
        self.assertEqual(relation_ultraproduct(relations, self.U, product), single('0'))
        self.assertEqual(team_ultraproduct(self.teams, self.U, product), self.teams[1])

    def test_input_validation(self):
        with self.assertRaises(ValueError):
            ultraproduct_structures(self.factors[:2], self.U)
        with self.assertRaises(ValueError):
            ultraproduct_structures(self.factors, Ultrafilter(['0', '1', '2'], []))
        with self.assertRaises(ValueError):
            ultraproduct_structures([self.factors[0], self.factors[1], Structure(Signature(), ['0'])], self.U)

    def test_los_transfer(self):
        for text, dialect in [('P(v0)', 'fot'), ('~con(v0)', 'fot'), ('exists v1. inc(v1 ; v0) & !P(v1)', 'foil')]:
            phi = parse_formula(text, dialect)
            report = verify_los(self.factors, self.teams, self.U, phi, dialect)
            self.assertTrue(report.ok, text)
            self.assertEqual(report.defects(), [])
        with self.assertRaises(ValueError):
            verify_los(self.factors, self.teams, self.U, parse_formula('P(v0)', 'fo'), 'so')

    def test_factor_set(self):
        report = verify_los(self.factors, self.teams, self.U, parse_formula('~con(v0)', 'fot'), 'fot')
        self.assertEqual(report.factor_set, ('1',))
        self.assertTrue(report.factor_side)
        self.assertTrue(report.product_side)
        self.assertEqual(report.to_dict()['factor_set'], ['1'])

    def test_ultrapower_map_is_elementary(self):
        A = self.factors[1]
        f, product = ultrapower_map(A, principal_ultrafilter(['0', '1'], '0'))
        self.assertEqual(product.structure, A)
        self.assertTrue(f.is_element_total())
        self.assertTrue(check_elementary_map(f))
        self.assertEqual(ultrapower(A, principal_ultrafilter(['0', '1'], '1')).structure, A)
