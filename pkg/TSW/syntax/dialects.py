from TSW.syntax.ast import (
    Rel, Eq, Neg, And, Or, Implies, Iff, Exists, Forall, WeakNot, WeakOr, Exists1, Forall1,
    Dep, Con, Inc, Exc, Ind, Top, Bottom, SOSentence, LITERAL_ATOMS, subformulas,
)
from TSW.utils.logger import get_logger

logger = get_logger(__name__)

DIALECTS = ('fo', 'fot', 'foil', 'so')

CONSTRUCTORS = {
    'fo': (Rel, Eq, Neg, And, Or, Exists, Forall),
    'fot': (Rel, Eq, Neg, Inc, Con, And, WeakOr, WeakNot, Exists1, Forall1),
    'foil': (Rel, Eq, Neg, Dep, Con, Inc, Exc, Ind, And, Or, Exists, Forall),
    'so': (Rel, Eq, Neg, And, Or, Implies, Iff, Exists, Forall, Top, Bottom),
}

# formulas built only from these are closed downwards / under unions
DOWNWARD_CLOSED = (Rel, Eq, Neg, Dep, Con, Exc, And, Or, Exists, Forall)
UNION_CLOSED = (Rel, Eq, Neg, Inc, And, Or, Exists, Forall)


class DialectError(ValueError):
    """Raised when a formula uses a constructor outside its dialect.

    Attributes:
        constructor: label of the offending constructor.
        dialect: the dialect checked against.
    """

    def __init__(self, constructor, dialect):
        self.constructor = constructor
        self.dialect = dialect
        super().__init__('{c} is not allowed in {d}'.format(c=constructor, d=dialect))


def _violation(phi, dialect):
    allowed = CONSTRUCTORS[dialect]
    for node in subformulas(phi):
        if not isinstance(node, allowed):
            return node.label
        if dialect != 'so' and isinstance(node, Neg) and not isinstance(node.body, LITERAL_ATOMS):
            return 'negation of a compound formula'
    return None


def check_dialect(phi, dialect):
    """ Raises DialectError naming the first constructor outside the dialect. """
    if dialect not in DIALECTS:
        logger.error('Unknown dialect {}.'.format(dialect))
        raise ValueError('Unknown dialect {}.'.format(dialect))
    if isinstance(phi, SOSentence):
        if dialect != 'so':
            raise DialectError('relation quantifier', dialect)
        phi = phi.matrix
    label = _violation(phi, dialect)
    if label is not None:
        logger.debug('{l} outside {d}'.format(l=label, d=dialect))
        raise DialectError(label, dialect)
    return phi


def dialects_of(phi):
    """ Every dialect the formula belongs to. """
    if isinstance(phi, SOSentence):
        return ['so']
    return [d for d in DIALECTS if _violation(phi, d) is None]


def in_fragment(phi, constructors):
    return all(isinstance(node, constructors) for node in subformulas(phi))


def is_downward_closed_fragment(phi):
    return in_fragment(phi, DOWNWARD_CLOSED)


def is_union_closed_fragment(phi):
    return in_fragment(phi, UNION_CLOSED)


def is_first_order(phi):
    return _violation(phi, 'fo') is None


def is_quantifier_free(phi):
    return not any(isinstance(n, (Exists, Forall, Exists1, Forall1)) for n in subformulas(phi))
