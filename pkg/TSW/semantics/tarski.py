from TSW.syntax.ast import (
    Rel, Eq, Neg, And, Or, Implies, Iff, Exists, Forall, Top, Bottom, SOSentence,
    free_vars, relation_usage,
)
from TSW.syntax.dialects import is_first_order
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _fail(message):
    logger.error(message)
    raise ValueError(message)


class FirstOrderEvaluator:
    """Classical satisfaction over a finite structure, with named relation parameters.

    Args:
        structure: Structure.
        relations: dict name -> Relation; shadows the structure's own symbols.

    Methods:
        holds: truth of a first-order formula under an assignment.
    """

    def __init__(self, structure, relations=None):
        self.structure = structure
        self.relations = dict(relations or {})

    def lookup(self, name, arity):
        if name in self.relations:
            relation = self.relations[name]
        elif name in self.structure.relations:
            relation = self.structure.relations[name]
        else:
            _fail('Unbound relation symbol {}.'.format(name))
        if relation.arity != arity:
            _fail('Relation {n} has arity {a}, used with {u}.'.format(n=name, a=relation.arity, u=arity))
        return relation

    def holds(self, phi, env):
        A = self.structure
        if isinstance(phi, Rel):
            relation = self.lookup(phi.name, len(phi.args))
            return tuple(A.evaluate(t, env) for t in phi.args) in relation.tuples
        if isinstance(phi, Eq):
            return A.evaluate(phi.left, env) == A.evaluate(phi.right, env)
        if isinstance(phi, Neg):
            return not self.holds(phi.body, env)
        if isinstance(phi, And):
            return self.holds(phi.left, env) and self.holds(phi.right, env)
        if isinstance(phi, Or):
            return self.holds(phi.left, env) or self.holds(phi.right, env)
        if isinstance(phi, Implies):
            return (not self.holds(phi.left, env)) or self.holds(phi.right, env)
        if isinstance(phi, Iff):
            return self.holds(phi.left, env) == self.holds(phi.right, env)
        if isinstance(phi, Exists):
            inner = dict(env)
            for a in A.domain:
                inner[phi.var] = a
                if self.holds(phi.body, inner):
                    return True
            return False
        if isinstance(phi, Forall):
            inner = dict(env)
            for a in A.domain:
                inner[phi.var] = a
                if not self.holds(phi.body, inner):
                    return False
            return True
        if isinstance(phi, Top):
            return True
        if isinstance(phi, Bottom):
            return False
        _fail('{} is not a first-order formula.'.format(getattr(phi, 'label', phi)))


def eval_tarski(structure, assignment, phi):
    """ A ⊨_s φ for a first-order formula. """
    if not is_first_order(phi):
        _fail('eval_tarski needs a first-order formula.')
    for v in free_vars(phi):
        if v not in assignment and v not in structure.constants:
            _fail('Free variable {} is not assigned.'.format(v))
    return FirstOrderEvaluator(structure).holds(phi, dict(assignment))


def check_parameters(structure, sentence, params):
    """ Validates parameter bindings against the declared and used arities. """
    prefix = dict(sentence.prefix)
    for name, arity in sentence.parameters:
        if name not in params:
            _fail('Parameter {} is not bound.'.format(name))
        if params[name].arity != arity:
            _fail('Parameter {n} declared with arity {a}, bound to arity {b}.'.format(
                n=name, a=arity, b=params[name].arity))
    for name, used in relation_usage(sentence.matrix).items():
        if name in prefix:
            continue
        if name in params:
            relation = params[name]
        elif name in structure.relations:
            relation = structure.relations[name]
        else:
            _fail('Relation {} is neither a parameter nor a symbol of the structure.'.format(name))
        if used != {relation.arity}:
            _fail('Relation {n} has arity {a}, used with {u}.'.format(n=name, a=relation.arity, u=sorted(used)))
    free = [v for v in free_vars(sentence.matrix) if v not in structure.constants]
    if free:
        _fail('Sentence has free variables {}.'.format(free))


def eval_fo_with_relations(structure, sentence, params):
    """ A ⊨ φ(R⃗) for a sentence with empty relation prefix. """
    if not isinstance(sentence, SOSentence):
        sentence = SOSentence((), sentence)
    if sentence.prefix:
        _fail('eval_fo_with_relations needs an empty relation prefix.')
    check_parameters(structure, sentence, params)
    return FirstOrderEvaluator(structure, params).holds(sentence.matrix, {})
