from itertools import product as cartesian
from TSW.core.relation import Relation
from TSW.core.structure import Structure
from TSW.maps.teammap import TeamMap
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _fail(message):
    logger.error(message)
    raise ValueError(message)


def induced_substructure(f, C):
    """The substructure of C carried by the singleton images of an element-total team map.

    Args:
        f: TeamMap A -> C, element-total.
        C: Structure, the target of f.

    Returns:
        (B, g): B has domain {f(a)} and R^B = f(R^A) ∩ Bⁿ; g maps X to f(X) ∩ Bⁿ.
    """
    if f.target != C:
        _fail('Team map does not target the given structure.')
    if not f.is_element_total():
        _fail('Induced substructure needs an element-total map.')
    A = f.source
    images = set(f.element_map().values())
    domain = [c for c in C.domain if c in images]

    def meet(relation):
        return Relation(relation.arity, [t for t in relation.tuples if set(t) <= images])

    def image_of(R, name):
        if R not in f:
            _fail('Interpretation of {} is outside the domain of the team map.'.format(name))
        return meet(f.entries[R])

    relations = {name: image_of(R, name) for name, R in A.relations.items()}
    functions = {}
    for name in A.functions:
        graph = image_of(A.function_graph(name), name)
        table = {}
        for t in graph.tuples:
            if t[:-1] in table:
                _fail('Image of {} is not a function.'.format(name))
            table[t[:-1]] = t[-1]
        for args in cartesian(domain, repeat=A.signature.functions[name]):
            if args not in table:
                _fail('Image of the domain is not closed under {}.'.format(name))
        functions[name] = table
    constants = {}
    for name in A.constants:
        value = image_of(A.constant_relation(name), name)
        if not value.is_singleton():
            _fail('Image of constant {} is not an element.'.format(name))
        constants[name] = next(iter(value.tuples))[0]
    B = Structure(C.signature, domain, relations, functions, constants)

    for name, R in B.relations.items():
        assert R == meet(C.relations[name]), 'Relation {} is not the restriction of the target.'.format(name)
    for name, table in B.functions.items():
        assert all(C.functions[name][args] == v for args, v in table.items()), 'Function {} disagrees.'.format(name)
    for name, value in B.constants.items():
        assert C.constants[name] == value, 'Constant {} disagrees.'.format(name)

    g = TeamMap(A, B, {X: meet(Y) for X, Y in f.entries.items()})
    return B, g
