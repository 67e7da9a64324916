"""Ultraproducts of structures, relations and teams over a finite index set."""
from dataclasses import dataclass, field
from itertools import product as cartesian
from TSW.core.relation import Relation
from TSW.core.structure import Structure
from TSW.core.team import Team
from TSW.ultra.filters import validate_ultrafilter
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _fail(message):
    logger.error(message)
    raise ValueError(message)


@dataclass
class Ultraproduct:
    """The quotient ∏A_i/U together with the data of its construction.

    Attributes:
        structure: Structure whose elements are named by their class's value at the principal index.
        factors: the factor structures, in index order.
        ultrafilter: Ultrafilter.
        principal: the principal index j.
        classes: dict element -> list of choice sequences in its class.
        collapse: dict element -> element of the factor at j.
    """

    structure: Structure
    factors: list
    ultrafilter: object
    principal: str
    classes: dict = field(default_factory=dict)
    collapse: dict = field(default_factory=dict)

    def agreement(self, values):
        """ {i | condition holds at i} for a sequence of per-index booleans. """
        return frozenset(i for i, ok in zip(self.ultrafilter.index, values) if ok)

    def holds(self, values):
        return self.agreement(values) in self.ultrafilter

    def class_of(self, sequence):
        """ f/U for a choice sequence f. """
        sequence = tuple(sequence)
        for name, members in self.classes.items():
            if self.holds([a == b for a, b in zip(sequence, members[0])]):
                return name
        _fail('{} is not a choice sequence of the product.'.format(sequence))

    def representative(self, name):
        return self.classes[name][0]


def _check_inputs(factors, U):
    if not factors:
        _fail('Ultraproduct needs at least one factor.')
    if len(factors) != len(U.index):
        _fail('{f} factors for an index set of size {n}.'.format(f=len(factors), n=len(U.index)))
    signature = factors[0].signature
    if any(A.signature != signature for A in factors):
        _fail('Factor structures do not share a signature.')
    defects = validate_ultrafilter(U)
    if defects:
        _fail('Invalid ultrafilter: {}'.format(defects[0].render()))
    return signature


def ultraproduct_structures(factors, U):
    """∏A_i/U computed from equivalence classes of choice sequences.

    Args:
        factors: list of Structure over one signature, one per index of U.
        U: Ultrafilter.

    Returns:
        Ultraproduct.
    """
    signature = _check_inputs(factors, U)
    j = U.principal_index()
    position = U.index.index(j)
    index = U.index

    def same(f, g):
        return frozenset(i for i, a, b in zip(index, f, g) if a == b) in U

    representatives = []
    members = []
    for sequence in cartesian(*[A.domain for A in factors]):
        for k, r in enumerate(representatives):
            if same(sequence, r):
                members[k].append(sequence)
                break
        else:
            representatives.append(sequence)
            members.append([sequence])

    classes = {}
    for r, group in zip(representatives, members):
        name = r[position]
        assert all(s[position] == name for s in group), 'Class is not determined by its principal component.'
        assert name not in classes, 'Two classes share a principal component.'
        classes[name] = group
    factor = factors[position]
    domain = [a for a in factor.domain if a in classes]
    assert len(domain) == len(classes), 'Quotient does not biject onto the principal factor.'

    product = Ultraproduct(None, list(factors), U, j, classes, {a: a for a in domain})
    relations = {
        name: relation_ultraproduct([A.relations[name] for A in factors], U, product, domain)
        for name in signature.relations
    }
    functions = {}
    for name, arity in signature.functions.items():
        table = {}
        for args in cartesian(domain, repeat=arity):
            sequences = [product.representative(a) for a in args]
            values = [A.functions[name][tuple(s[k] for s in sequences)] for k, A in enumerate(factors)]
            table[args] = product.class_of(values)
        functions[name] = table
    constants = {name: product.class_of([A.constants[name] for A in factors]) for name in signature.constants}
    product.structure = Structure(signature, domain, relations, functions, constants)
    logger.debug('Ultraproduct of {n} factors has {m} elements.'.format(n=len(factors), m=len(domain)))
    return product


def relation_ultraproduct(relations, U, product, domain=None):
    """ ∏R_i/U: tuples of classes whose components lie in R_i on a U-large set. """
    if len(relations) != len(U.index):
        _fail('{r} relations for an index set of size {n}.'.format(r=len(relations), n=len(U.index)))
    arities = {R.arity for R in relations}
    if len(arities) != 1:
        _fail('Relations of an ultraproduct must share an arity.')
    (n,) = arities
    domain = product.structure.domain if domain is None else domain
    tuples = []
    for names in cartesian(domain, repeat=n):
        sequences = [product.representative(a) for a in names]
        values = [tuple(s[k] for s in sequences) in R.tuples for k, R in enumerate(relations)]
        if product.holds(values):
            tuples.append(names)
    return Relation(n, tuples)


def team_ultraproduct(teams, U, product):
    """∏X_i/U: classes (s_i)/U of assignment sequences with {i | s_i ∈ X_i} ∈ U.

    Args:
        teams: list of Team over one variable domain, one per index.
        U: Ultrafilter.
        product: Ultraproduct of the context structures.
    """
    if len(teams) != len(U.index):
        _fail('{t} teams for an index set of size {n}.'.format(t=len(teams), n=len(U.index)))
    domain = teams[0].domain
    if any(X.domain != domain for X in teams):
        _fail('Teams of an ultraproduct must share a variable domain.')
    rows = set()
    assignments = [A.tuples(len(domain)) for A in product.factors]
    for sequence in cartesian(*assignments):
        if not product.holds([row in X.rows for row, X in zip(sequence, teams)]):
            continue
        rows.add(tuple(
            product.class_of([row[p] for row in sequence]) for p in range(len(domain))
        ))
    return Team(domain, rows)


def ultrapower(structure, U):
    return ultraproduct_structures([structure] * len(U.index), U)
