from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError
from TSW.syntax.ast import (
    Var, Const, Func, Rel, Eq, Neg, And, Or, Implies, Iff, Exists, Forall, WeakNot, WeakOr,
    Exists1, Forall1, Dep, Con, Inc, Exc, Ind, Top, Bottom, SOSentence,
)
from TSW.syntax.dialects import check_dialect, DIALECTS
from TSW.utils.logger import get_logger

logger = get_logger(__name__)

# Quantifier bodies are full formulas; the LALR shift preference makes them extend maximally right.
GRAMMAR = r'''
    start: prefix* formula

    prefix: "EX" NAME ":" INT "."

    ?formula: iff
    ?iff: implies
        | implies "<->" implies                  -> iff
    ?implies: wequiv
        | wequiv "->" implies                    -> implies
    ?wequiv: wimp
        | wimp "<~>" wimp                        -> weak_iff
    ?wimp: disj
        | disj "~>" wimp                         -> weak_implies
    ?disj: conj
        | disj "|" conj                          -> split_or
        | disj "\\/" conj                        -> weak_or
    ?conj: unary
        | conj "&" unary                         -> conj
    ?unary: "~" unary                            -> weak_not
        | "!" unary                              -> neg
        | "exists" NAME "." formula              -> exists
        | "forall" NAME "." formula              -> forall
        | "E1" NAME "." formula                  -> exists1
        | "A1" NAME "." formula                  -> forall1
        | "(" formula ")"
        | atom

    ?atom: NAME "(" [terms] ")"                  -> rel_atom
        | term "=" term                          -> eq_atom
        | "dep" "(" names ";" names ")"          -> dep
        | "con" "(" names ")"                    -> con
        | "inc" "(" names ";" names ")"          -> inc
        | "exc" "(" names ";" names ")"          -> exc
        | "ind" "(" names ";" names ";" names ")" -> ind
        | "true"                                 -> top
        | "false"                                -> bottom

    terms: term ("," term)*
    names: NAME*

    ?term: NAME "(" [terms] ")"                  -> func
        | NAME                                   -> var

    NAME: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.INT
    %import common.WS
    %ignore WS
'''

_PARSER = Lark(GRAMMAR, parser='lalr', start='start')


class FormulaSyntaxError(ValueError):
    """Raised on malformed formula text.

    Attributes:
        line: 1-based line of the error.
        column: 1-based column of the error.
    """

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__('{m} (line {l}, column {c})'.format(m=message, l=line, c=column))


@v_args(inline=True)
class FormulaBuilder(Transformer):
    """ Turns the parse tree into AST nodes. """

    def __init__(self, constants=()):
        super().__init__()
        self.constants = frozenset(constants)

    def start(self, *items):
        prefix = [p for p in items[:-1]]
        return prefix, items[-1]

    def prefix(self, name, arity):
        return (str(name), int(arity))

    def terms(self, *items):
        return tuple(items)

    def names(self, *items):
        return tuple(str(x) for x in items)

    def var(self, name):
        name = str(name)
        if name in self.constants:
            return Const(name)
        return Var(name)

    def func(self, name, args):
        return Func(str(name), args or ())

    def rel_atom(self, name, args):
        return Rel(str(name), args or ())

    def eq_atom(self, left, right):
        return Eq(left, right)

    def dep(self, xs, ys):
        if not xs:
            return Con(ys)
        return Dep(xs, ys)

    def con(self, xs):
        return Con(xs)

    def inc(self, xs, ys):
        return Inc(xs, ys)

    def exc(self, xs, ys):
        return Exc(xs, ys)

    def ind(self, xs, zs, ys):
        return Ind(xs, zs, ys)

    def top(self):
        return Top()

    def bottom(self):
        return Bottom()

    def neg(self, body):
        return Neg(body)

    def weak_not(self, body):
        return WeakNot(body)

    def conj(self, left, right):
        return And(left, right)

    def split_or(self, left, right):
        return Or(left, right)

    def weak_or(self, left, right):
        return WeakOr(left, right)

    def implies(self, left, right):
        return Implies(left, right)

    def iff(self, left, right):
        return Iff(left, right)

    def weak_implies(self, left, right):
        return WeakOr(WeakNot(left), right)

    def weak_iff(self, left, right):
        return And(WeakOr(WeakNot(left), right), WeakOr(WeakNot(right), left))

    def exists(self, name, body):
        return Exists(str(name), body)

    def forall(self, name, body):
        return Forall(str(name), body)

    def exists1(self, name, body):
        return Exists1(str(name), body)

    def forall1(self, name, body):
        return Forall1(str(name), body)


def _position(text, error):
    line = getattr(error, 'line', -1)
    column = getattr(error, 'column', -1)
    if line is None or line < 1:
        lines = text.split('\n')
        line, column = len(lines), len(lines[-1]) + 1
    return line, column


def parse_formula(text, dialect='foil', constants=(), parameters=()):
    """Parses formula text of one dialect.

    Args:
        text: formula string.
        dialect: one of 'fo', 'fot', 'foil', 'so'.
        constants: names that denote constant symbols rather than variables.
        parameters: (name, arity) pairs declared as free relation parameters ('so' only).

    Returns:
        a Formula, or an SOSentence for dialect 'so'.
    """
    if dialect not in DIALECTS:
        logger.error('Unknown dialect {}.'.format(dialect))
        raise ValueError('Unknown dialect {}.'.format(dialect))
    try:
        tree = _PARSER.parse(text)
        prefix, matrix = FormulaBuilder(constants).transform(tree)
    except UnexpectedInput as e:
        line, column = _position(text, e)
        logger.debug('Syntax error in {t!r} at {l}:{c}'.format(t=text, l=line, c=column))
        raise FormulaSyntaxError('Unexpected input', line, column)
    except VisitError as e:
        raise FormulaSyntaxError(str(e.orig_exc), 1, 1)

    if dialect == 'so':
        check_dialect(matrix, 'so')
        try:
            return SOSentence(tuple(prefix), matrix, tuple(parameters))
        except ValueError as e:
            raise FormulaSyntaxError(str(e), 1, 1)
    if prefix:
        raise FormulaSyntaxError('Relation quantifiers need dialect so', 1, 1)
    check_dialect(matrix, dialect)
    return matrix
