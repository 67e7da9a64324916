import logging
import unittest
from TSW.core.relation import Relation
from TSW.core.structure import pure_set
from TSW.limits.direct import (
    LimitElement, direct_limit, check_limit_factoring, check_limit_elements_unique, check_unique_lifting,
    cofinal_restriction_check, mediating_map, check_mediating_factoring,
)
from TSW.limits.system import DirectedSystem, validate_system
from TSW.maps.checks import check_partial_team_isomorphism
from TSW.maps.teammap import lift_embedding


def chain():
    A = pure_set(['0', '1'])
    B = pure_set(['0', '1', '2'])
    f = lift_embedding({'0': '0', '1': '1'}, A, B, 2)
    return DirectedSystem.from_edges(['0', '1'], [('0', '1')], {'0': A, '1': B}, {('0', '1'): f}, 2)


def diamond():
    A = pure_set(['0', '1'])
    swap = {'0': '1', '1': '0'}
    identity = {'0': '0', '1': '1'}
    edges = {
        ('b', 'l'): lift_embedding(swap, A, A, 2),
        ('l', 't'): lift_embedding(swap, A, A, 2),
        ('b', 'r'): lift_embedding(identity, A, A, 2),
        ('r', 't'): lift_embedding(identity, A, A, 2),
    }
    return DirectedSystem.from_edges(['b', 'l', 'r', 't'], list(edges), {i: A for i in 'blrt'}, edges, 2)


class DirectedSystemTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def test_from_edges_completes_the_diagram(self):
        S = diamond()
        self.assertTrue(S.leq('b', 't'))
        self.assertFalse(S.leq('l', 'r'))
        self.assertIn(('b', 't'), S.maps)
        self.assertEqual(validate_system(S), [])

    def test_order_queries(self):
        S = diamond()
        self.assertEqual(S.above('l'), ['l', 't'])
        self.assertEqual(S.upper_bounds(('l', 'r')), ['t'])
        self.assertTrue(S.is_cofinal(['t']))
        self.assertFalse(S.is_cofinal(['l']))
        self.assertTrue(S.is_directed())
        self.assertFalse(S.is_directed(['l', 'r']))
        self.assertEqual(S.upsets()[0], ('t',))

    def test_cycles_are_rejected(self):
        A = pure_set(['0'])
        with self.assertRaises(ValueError):
            DirectedSystem.from_edges(['0', '1'], [('0', '1'), ('1', '0')], {'0': A, '1': A}, {}, 2)

    def test_missing_edge_map(self):
        A = pure_set(['0'])
        with self.assertRaises(ValueError):
            DirectedSystem.from_edges(['0', '1'], [('0', '1')], {'0': A, '1': A}, {}, 2)

    def test_not_directed(self):
        A = pure_set(['0', '1'])
        f = lift_embedding({'0': '0', '1': '1'}, A, A, 2)
        S = DirectedSystem.from_edges(['a', 'b', 'c'], [('a', 'b'), ('a', 'c')], {i: A for i in 'abc'},
                                      {('a', 'b'): f, ('a', 'c'): f}, 2)
        self.assertIn('directed', {d.kind for d in validate_system(S)})

    def test_missing_maps_and_order(self):
        A = pure_set(['0'])
        S = DirectedSystem(['0', '1'], [('0', '0'), ('0', '1'), ('1', '1')], {'0': A, '1': A}, {})
        self.assertEqual({d.kind for d in validate_system(S)}, {'map'})
        S = DirectedSystem(['0'], [], {'0': A}, {})
        self.assertIn('reflexive', {d.kind for d in validate_system(S)})

    def test_broken_composition(self):
        S = chain()
        S.maps[('0', '1')] = S.maps[('0', '0')].then(S.maps[('0', '1')]).restrict(
            [Relation.empty(1), Relation(1, [('0',)])]
        )
        kinds = {d.kind for d in validate_system(S, partial_isomorphisms=False)}
        self.assertIn('domain', kinds)


class DirectLimitTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def test_chain_limit(self):
        limit = direct_limit(chain())
        self.assertEqual(set(limit.structure.domain), {'0=0;1=0', '0=1;1=1', '1=2'})
        self.assertEqual(limit.element_at('1', '2'), '1=2')
        self.assertEqual(limit.element_at('0', '2'), None)
        self.assertEqual(check_limit_factoring(limit), [])
        self.assertEqual(check_unique_lifting(limit), [])
        self.assertEqual(check_limit_elements_unique(limit), [])
        for g in limit.maps.values():
            self.assertEqual(check_partial_team_isomorphism(g, 2), [])

    def test_diamond_limit(self):
        limit = direct_limit(diamond())
        self.assertEqual(len(limit.structure.domain), 2)
        self.assertEqual(check_limit_factoring(limit), [])
        self.assertEqual(check_unique_lifting(limit), [])
        self.assertIn(limit.structure.full(1), limit.admissible)

    def test_cofinal_restriction(self):
        self.assertEqual(cofinal_restriction_check(chain(), ['1']), [])
        self.assertEqual(cofinal_restriction_check(diamond(), ['t']), [])
        self.assertEqual(cofinal_restriction_check(diamond(), ['l', 't']), [])
        with self.assertRaises(ValueError):
            cofinal_restriction_check(chain(), ['0'])
        with self.assertRaises(ValueError):
            cofinal_restriction_check(diamond(), ['l', 'r', 't', 'x'])

    def test_mediating_map(self):
        S = chain()
        limit = direct_limit(S)
        cone = {'0': S.maps[('0', '1')], '1': S.maps[('1', '1')]}
        k = mediating_map(limit, cone)
        self.assertEqual(check_mediating_factoring(limit, cone, k), [])
        with self.assertRaises(ValueError):
            mediating_map(limit, {'0': cone['0']})

    def test_limit_element(self):
        eta = LimitElement((('0', 'a'), ('1', 'b')))
        self.assertEqual(eta.name, '0=a;1=b')
        self.assertEqual(eta.support(), ('0', '1'))
        self.assertEqual(eta.restrict(['1']).name, '1=b')
        self.assertIsNone(eta.at('2'))
