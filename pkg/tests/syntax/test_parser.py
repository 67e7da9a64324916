import logging
import unittest
from TSW.syntax.ast import (
    Var, Const, Func, Rel, Eq, Neg, And, Or, Exists, Forall, WeakNot, WeakOr, Exists1,
    Dep, Con, Inc, Ind, SOSentence, free_vars, size, substitute,
)
from TSW.syntax.dialects import DialectError
from TSW.syntax.parser import parse_formula, FormulaSyntaxError
from TSW.syntax.printer import render


def P(x):
    return Rel('P', (Var(x),))


class ParserTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def test_quantifier_body_extends_right(self):
        phi = parse_formula('exists x. P(x) & Q(x)', 'foil')
        self.assertEqual(phi, Exists('x', And(P('x'), Rel('Q', (Var('x'),)))))

    def test_conjunction_binds_tighter_than_split(self):
        phi = parse_formula('P(x) & P(y) | P(z)', 'foil')
        self.assertEqual(phi, Or(And(P('x'), P('y')), P('z')))

    def test_constants_and_functions(self):
        phi = parse_formula('P(f(c)) & x = c', 'fo', constants=['c'])
        self.assertEqual(
            phi,
            And(Rel('P', (Func('f', (Const('c'),)),)), Eq(Var('x'), Const('c'))),
        )
        self.assertEqual(free_vars(phi), ['x'])

    def test_team_atoms(self):
        self.assertEqual(parse_formula('dep(x y ; z)', 'foil'), Dep(('x', 'y'), ('z',)))
        self.assertEqual(parse_formula('dep( ; z)', 'foil'), Con(('z',)))
        self.assertEqual(parse_formula('inc(x ; y)', 'fot'), Inc(('x',), ('y',)))
        self.assertEqual(parse_formula('ind(x ; ; y)', 'foil'), Ind(('x',), (), ('y',)))

    def test_weak_connectives(self):
        phi = parse_formula('E1 x. P(x) ~> ~P(y)', 'fot')
        self.assertEqual(phi, Exists1('x', WeakOr(WeakNot(P('x')), WeakNot(P('y')))))

    def test_syntax_error_position(self):
        with self.assertRaises(FormulaSyntaxError) as cm:
            parse_formula('P(x', 'fo')
        self.assertEqual(cm.exception.line, 1)
        self.assertGreater(cm.exception.column, 0)

    def test_dialect_error_names_constructor(self):
        with self.assertRaises(DialectError) as cm:
            parse_formula('dep(x ; y)', 'fot')
        self.assertEqual(cm.exception.constructor, 'dependence atom')
        self.assertEqual(cm.exception.dialect, 'fot')

    def test_negation_only_on_literals(self):
        with self.assertRaises(DialectError):
            parse_formula('!(P(x) & P(y))', 'foil')
        self.assertEqual(parse_formula('!(P(x) & P(y))', 'so'), SOSentence((), Neg(And(P('x'), P('y')))))

    def test_unknown_dialect(self):
        with self.assertRaises(ValueError):
            parse_formula('P(x)', 'ifl')

    def test_second_order_prefix(self):
        sentence = parse_formula('EX R:1. forall x. R(x) -> S(x)', 'so', parameters=[('S', 1)])
        self.assertEqual(sentence.prefix, (('R', 1),))
        self.assertEqual(sentence.parameters, (('S', 1),))
        with self.assertRaises(FormulaSyntaxError):
            parse_formula('EX R:1. R(x)', 'foil')
        with self.assertRaises(FormulaSyntaxError):
            parse_formula('EX R:1. R(x, y)', 'so')

    def test_render_parses_back(self):
        formulas = [
            And(Exists('x', P('x')), P('y')),
            Forall('x', Or(P('x'), Neg(Eq(Var('x'), Var('y'))))),
            WeakOr(WeakNot(Exists1('x', P('x'))), Inc(('y',), ('x',))),
            Or(P('x'), And(P('y'), P('z'))),
        ]
        for phi in formulas:
            dialect = 'fot' if isinstance(phi, WeakOr) else 'foil'
            self.assertEqual(parse_formula(render(phi), dialect), phi)

    def test_size_counts_negated_literal_once(self):
        self.assertEqual(size(Neg(P('x'))), 1)
        self.assertEqual(size(Exists('x', And(P('x'), Neg(P('x'))))), 4)

    def test_substitute_respects_binding(self):
        phi = And(P('x'), Exists('x', P('x')))
        self.assertEqual(substitute(phi, {'x': Var('y')}), And(P('y'), Exists('x', P('x'))))
