"""Direct limits of directed systems of element-total partial team isomorphisms."""
from dataclasses import dataclass, field
from itertools import product as cartesian
from TSW.core.relation import Relation, RelationFamily
from TSW.core.report import Defect, sorted_report
from TSW.core.structure import Structure
from TSW.limits.system import validate_system
from TSW.maps.teammap import TeamMap, check_isomorphism, image
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _fail(message):
    logger.error(message)
    raise ValueError(message)


@dataclass(frozen=True)
class LimitElement:
    """A thread η: a coherent choice η(i) ∈ A_i over a nonempty upset of the index.

    Attributes:
        values: tuple of (index, element) pairs in index order.
    """

    values: tuple

    @property
    def name(self):
        return ';'.join('{i}={a}'.format(i=i, a=a) for i, a in self.values)

    def support(self):
        return tuple(i for i, _ in self.values)

    def at(self, i):
        return dict(self.values).get(i)

    def restrict(self, J):
        return LimitElement(tuple((i, a) for i, a in self.values if i in J))


@dataclass
class DirectLimit:
    """lim A_i with its limit maps.

    Attributes:
        system: the DirectedSystem.
        structure: Structure whose elements are LimitElement names.
        elements: dict name -> LimitElement.
        maps: dict index -> TeamMap g_i.
        admissible: RelationFamily, the union of the ranges of the g_i.
    """

    system: object
    structure: Structure
    elements: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    admissible: RelationFamily = field(default_factory=RelationFamily)

    def element_at(self, i, a):
        """ The unique η with η(i) = a. """
        for name, eta in self.elements.items():
            if eta.at(i) == a:
                return name
        return None


def limit_elements(system):
    """Every thread satisfying the upset, coherence and backward-maximality conditions."""
    S = system
    arrows = S.element_maps()
    found = []
    for upset in S.upsets():
        for choice in cartesian(*[S.structures[i].domain for i in upset]):
            eta = dict(zip(upset, choice))
            coherent = all(
                arrows[(i, j)].get(eta[i]) == eta[j]
                for i in upset for j in upset if S.leq(i, j)
            )
            if not coherent:
                continue
            maximal = not any(
                any(arrows[(i, j)].get(a) == eta[j] for a in S.structures[i].domain)
                for i in S.index if i not in eta
                for j in upset if S.leq(i, j)
            )
            if maximal:
                found.append(LimitElement(tuple((i, eta[i]) for i in upset)))
    return found


def limit_map(system, elements, i):
    """g_i: X -> the η⃗ with (η_k(j)) ∈ f_{i,j}(X) for some j >= i common to their supports."""
    S = system
    names = list(elements)
    entries = {}
    for X in S.maps[(i, i)].domain():
        tuples = []
        for etas in cartesian(names, repeat=X.arity):
            threads = [elements[e] for e in etas]
            for j in S.above(i):
                values = [eta.at(j) for eta in threads]
                if None in values:
                    continue
                if tuple(values) in S.maps[(i, j)].entries[X].tuples:
                    tuples.append(etas)
                    break
        entries[X] = Relation(X.arity, tuples)
    return entries


def direct_limit(system):
    """Builds lim A_i, the limit maps g_i and the admissible relations.

    Raises:
        ValueError when the system is invalid, a map is not element-total, or the
        symbol interpretations depend on the chosen index.
    """
    S = system
    defects = validate_system(S)
    if defects:
        _fail('Invalid directed system: {}'.format(defects[0].render()))
    if not S.is_element_total():
        _fail('Direct limit needs element-total team maps.')
    threads = limit_elements(S)
    elements = {eta.name: eta for eta in threads}
    domain = [eta.name for eta in threads]
    entries = {i: limit_map(S, elements, i) for i in S.index}

    signature = S.structures[S.index[0]].signature
    interpretations = {}
    for i in S.index:
        A = S.structures[i]
        for name, R in A.symbol_relations().items():
            if R not in entries[i]:
                _fail('Interpretation of {n} is outside the domain of f_{i},{i}.'.format(n=name, i=i))
            value = entries[i][R]
            if interpretations.setdefault(name, value) != value:
                _fail('Interpretation of {} in the limit depends on the index.'.format(name))
    relations = {name: interpretations[name] for name in signature.relations}
    functions = {}
    for name in signature.functions:
        functions[name] = {t[:-1]: t[-1] for t in interpretations[name].tuples}
    constants = {}
    for name in signature.constants:
        (t,) = interpretations[name].tuples
        constants[name] = t[0]
    B = Structure(signature, domain, relations, functions, constants)

    maps = {i: TeamMap(S.structures[i], B, entries[i]) for i in S.index}
    admissible = RelationFamily(Y for g in maps.values() for Y in g.entries.values())
    logger.info('Direct limit over {n} indices has {m} elements.'.format(n=len(S.index), m=len(domain)))
    return DirectLimit(S, B, elements, maps, admissible)


def check_limit_factoring(limit):
    """ g_i = g_j ∘ f_{i,j} on dom(f_{i,i}) for all i <= j. """
    S = limit.system
    defects = []
    for i, j in sorted(S.order):
        composite = S.maps[(i, j)].then(limit.maps[j])
        for X, Y in limit.maps[i].items():
            if composite.entries.get(X) != Y:
                defects.append(Defect('factoring', (i, j, X)))
    return sorted_report(defects)


def check_limit_elements_unique(limit):
    """ Distinct threads never agree at a shared index. """
    defects = []
    threads = sorted(limit.elements.values(), key=lambda eta: eta.name)
    for k, eta in enumerate(threads):
        for xi in threads[k + 1:]:
            for i in eta.support():
                if xi.at(i) is not None and xi.at(i) == eta.at(i):
                    defects.append(Defect('thread', (eta.name, xi.name, i)))
    return sorted_report(defects)


def check_unique_lifting(limit):
    """ For a⃗ ∈ X ∈ dom(g_i), exactly one η⃗ ∈ g_i(X) has η_k(i) = a_k. """
    defects = []
    for i, g in sorted(limit.maps.items()):
        for X, Y in g.items():
            for a in X.tuples:
                lifts = [
                    etas for etas in Y.tuples
                    if all(limit.elements[e].at(i) == b for e, b in zip(etas, a))
                ]
                if len(lifts) != 1:
                    defects.append(Defect('lifting', (i, X, a), '{} lifts'.format(len(lifts))))
    return sorted_report(defects)


def cofinal_restriction_check(system, J):
    """Compares lim over I with lim over a cofinal directed J ⊆ I.

    η -> η restricted to J must be an isomorphism π with g^J_j = π ∘ g^I_j for j in J.

    Raises:
        ValueError when J is not a cofinal directed subset.
    """
    S = system
    J = tuple(str(j) for j in J)
    if not set(J) <= set(S.index):
        _fail('{} is not a subset of the index.'.format(J))
    if not S.is_cofinal(J):
        _fail('{} is not cofinal.'.format(J))
    if not S.is_directed(J):
        _fail('{} is not directed.'.format(J))
    whole = direct_limit(S)
    part = direct_limit(S.restrict(J))
    pi = {name: eta.restrict(J).name for name, eta in whole.elements.items()}
    defects = []
    for name, value in sorted(pi.items()):
        if value not in part.elements:
            defects.append(Defect('restriction', (name, value), 'not a thread of the restricted system'))
    if defects:
        return sorted_report(defects)
    defects.extend(check_isomorphism(pi, whole.structure, part.structure))
    for j in part.system.index:
        for X, Y in whole.maps[j].items():
            if part.maps[j].entries.get(X) != image(pi, Y):
                defects.append(Defect('restriction-map', (j, X)))
    return sorted_report(defects)


def mediating_map(limit, cone):
    """k on the admissible relations with k(g_i(X)) = h_i(X).

    Args:
        limit: DirectLimit.
        cone: dict index -> TeamMap h_i into a common structure C with h_i = h_j ∘ f_{i,j}.

    Raises:
        ValueError when the cone assigns one admissible relation two images.
    """
    S = limit.system
    missing = [i for i in S.index if i not in cone]
    if missing:
        _fail('Cone has no map for {}.'.format(missing))
    target = cone[S.index[0]].target
    entries = {}
    for i in S.index:
        for X, Y in limit.maps[i].items():
            if X not in cone[i]:
                _fail('Cone map {i} is undefined on {x}.'.format(i=i, x=X.render()))
            value = cone[i].entries[X]
            if entries.setdefault(Y, value) != value:
                _fail('Cone does not factor through the limit at {}.'.format(Y.render()))
    return TeamMap(limit.structure, target, entries)


def check_mediating_factoring(limit, cone, k):
    """ k ∘ g_i = h_i. """
    defects = []
    for i in limit.system.index:
        for X, Y in limit.maps[i].items():
            if k.entries.get(Y) != cone[i].entries.get(X):
                defects.append(Defect('mediating', (i, X)))
    return sorted_report(defects)
