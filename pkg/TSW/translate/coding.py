from TSW.core.algebra import product
from TSW.core.relation import Relation
from TSW.syntax.ast import (
    Var, Rel, Implies, SOSentence, QUANTIFIERS, BINARY, UNARY, exists_all,
)
from TSW.translate.base import used_names
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _fresh(taken, stem):
    i = 0
    while '_{s}{i}'.format(s=stem, i=i) in taken:
        i += 1
    name = '_{s}{i}'.format(s=stem, i=i)
    taken.add(name)
    return name


def chi_plus(sentence, n=None):
    """ ∃x⃗ R(x⃗) → χ(R), the prefix kept outermost. """
    if len(sentence.parameters) != 1:
        message = 'chi_plus needs exactly one relation parameter.'
        logger.error(message)
        raise ValueError(message)
    name, arity = sentence.parameters[0]
    if n is not None and n != arity:
        message = 'Parameter {p} has arity {a}, not {n}.'.format(p=name, a=arity, n=n)
        logger.error(message)
        raise ValueError(message)
    taken = used_names(sentence.matrix) | {p for p, _ in sentence.prefix}
    xs = [_fresh(taken, 'g') for _ in range(arity)]
    guard = exists_all(xs, Rel(name, tuple(Var(x) for x in xs)))
    return SOSentence(sentence.prefix, Implies(guard, sentence.matrix), sentence.parameters)


def encode_relations(relations):
    """ The product coding ∏Rᵢ of a nonempty list of nonempty relations. """
    relations = list(relations)
    if not relations:
        message = 'Nothing to encode.'
        logger.error(message)
        raise ValueError(message)
    for r in relations:
        if r.is_empty():
            message = 'Cannot encode the empty relation of arity {}.'.format(r.arity)
            logger.error(message)
            raise ValueError(message)
    coded = Relation(0, [()])
    for r in relations:
        coded = product(coded, r)
    return coded


def _recode(phi, blocks, coded, taken):
    if isinstance(phi, Rel) and phi.name in blocks:
        before, arity, after = blocks[phi.name]
        pre = [_fresh(taken, 'c') for _ in range(before)]
        post = [_fresh(taken, 'c') for _ in range(after)]
        args = tuple(Var(v) for v in pre) + tuple(phi.args) + tuple(Var(v) for v in post)
        return exists_all(pre + post, Rel(coded, args))
    if isinstance(phi, QUANTIFIERS):
        return type(phi)(phi.var, _recode(phi.body, blocks, coded, taken))
    if isinstance(phi, BINARY):
        return type(phi)(_recode(phi.left, blocks, coded, taken), _recode(phi.right, blocks, coded, taken))
    if isinstance(phi, UNARY):
        return type(phi)(_recode(phi.body, blocks, coded, taken))
    return phi


def encode_sentence(sentence, names, coded=None):
    """Rewrites a sentence in parameters R0..R(k-1) into one over their product coding.

    For nonempty relations, A ⊨ φ(R⃗) iff A ⊨ ψ(encode_relations(R⃗)).

    Args:
        sentence: SOSentence declaring every name in `names` as a parameter.
        names: parameter names in coding order.
        coded: name of the product parameter.
    """
    arities = dict(sentence.parameters)
    missing = [n for n in names if n not in arities]
    if missing:
        message = 'Parameters {} are not declared.'.format(missing)
        logger.error(message)
        raise ValueError(message)
    taken = used_names(sentence.matrix) | set(arities) | {p for p, _ in sentence.prefix}
    coded = coded or _fresh(taken, 'Code')
    total = sum(arities[n] for n in names)
    blocks = {}
    offset = 0
    for n in names:
        blocks[n] = (offset, arities[n], total - offset - arities[n])
        offset += arities[n]
    matrix = _recode(sentence.matrix, blocks, coded, taken)
    rest = tuple((n, a) for n, a in sentence.parameters if n not in blocks)
    return SOSentence(sentence.prefix, matrix, ((coded, total),) + rest)
