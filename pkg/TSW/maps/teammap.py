from collections import deque
from TSW.core.algebra import basic_relations, intersection, product, project, index_tuples
from TSW.core.relation import Relation, RelationFamily
from TSW.core.report import Defect
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _fail(message):
    logger.error(message)
    raise ValueError(message)


class TeamMap:
    """A finite partial map from relations of one structure to relations of another.

    Args:
        source: Structure.
        target: Structure.
        entries: dict Relation -> Relation, arity-preserving.

    Methods:
        apply: f(X).
        domain / range: RelationFamily of keys / values.
        inverse, compose, restrict: new TeamMaps.
        element_map: a -> the element of f({a}).
    """

    def __init__(self, source, target, entries):
        self.source = source
        self.target = target
        self.entries = dict(entries)
        source_elements = set(source.domain)
        target_elements = set(target.domain)
        for X, Y in self.entries.items():
            if X.arity != Y.arity:
                _fail('Team map entry {x} -> {y} does not preserve arity.'.format(x=X.render(), y=Y.render()))
            if any(not set(t) <= source_elements for t in X.tuples):
                _fail('{} is not a relation of the source.'.format(X.render()))
            if any(not set(t) <= target_elements for t in Y.tuples):
                _fail('{} is not a relation of the target.'.format(Y.render()))

    def __len__(self):
        return len(self.entries)

    def __contains__(self, relation):
        return relation in self.entries

    def __eq__(self, other):
        return (
            isinstance(other, TeamMap)
            and self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    def __call__(self, relation):
        return self.apply(relation)

    def apply(self, relation):
        if relation not in self.entries:
            _fail('{} is not in the domain of the team map.'.format(relation.render()))
        return self.entries[relation]

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: kv[0].sort_key())

    def domain(self):
        return RelationFamily(self.entries)

    def range(self):
        return RelationFamily(self.entries.values())

    def restrict(self, family):
        return TeamMap(self.source, self.target, {X: self.entries[X] for X in family if X in self.entries})

    def inverse(self):
        inverse = {}
        for X, Y in self.entries.items():
            if Y in inverse and inverse[Y] != X:
                _fail('Team map is not injective at {}.'.format(Y.render()))
            inverse[Y] = X
        return TeamMap(self.target, self.source, inverse)

    def then(self, other):
        """ other ∘ self on every X with self(X) in the domain of other. """
        return TeamMap(
            self.source,
            other.target,
            {X: other.entries[Y] for X, Y in self.entries.items() if Y in other.entries},
        )

    def singleton_image(self, a):
        image = self.entries.get(Relation(1, [(a,)]))
        if image is None or not image.is_singleton():
            return None
        (t,) = image.tuples
        return t[0]

    def element_map(self):
        """ dict a -> f(a) for every a with {a} in the domain and f({a}) a singleton. """
        out = {}
        for a in self.source.domain:
            b = self.singleton_image(a)
            if b is not None:
                out[a] = b
        return out

    def is_element_total(self):
        return len(self.element_map()) == len(self.source.domain)

    def is_element_surjective(self):
        values = self.range()
        return all(Relation(1, [(b,)]) in values for b in self.target.domain)

    def to_dict(self):
        return {'entries': [{'from': X.to_dict(), 'to': Y.to_dict()} for X, Y in self.items()]}


def compose(f, g):
    """ g ∘ f. """
    return f.then(g)


def image(mapping, relation):
    """ {π(a⃗) | a⃗ ∈ X}. """
    return Relation(relation.arity, [tuple(mapping[a] for a in t) for t in relation.tuples])


def check_isomorphism(pi, A, B):
    """ Defects preventing an element map from being a τ-isomorphism A -> B. """
    defects = []
    if set(pi) != set(A.domain):
        defects.append(Defect('total', (), 'map is not defined on the whole source'))
        return defects
    if set(pi.values()) != set(B.domain) or len(set(pi.values())) != len(pi):
        defects.append(Defect('bijective', (), 'map is not a bijection onto the target'))
        return defects
    return defects + check_embedding(pi, A, B, strict=False)


def check_embedding(iota, A, B, strict=True):
    """ Defects preventing an injective element map from preserving and reflecting every symbol. """
    defects = []
    if strict:
        if set(iota) != set(A.domain) or not set(iota.values()) <= set(B.domain):
            return [Defect('total', (), 'map is not defined on the whole source')]
        if len(set(iota.values())) != len(iota):
            return [Defect('injective', (), 'map is not injective')]
    image_domain = set(iota.values())
    for name, R in sorted(A.relations.items()):
        target = B.relations[name]
        restricted = Relation(R.arity, [t for t in target.tuples if set(t) <= image_domain])
        if image(iota, R) != restricted:
            defects.append(Defect('atom', (name,), 'relation {} is not preserved'.format(name)))
    for name, table in sorted(A.functions.items()):
        for args, value in sorted(table.items()):
            if B.functions[name][tuple(iota[a] for a in args)] != iota[value]:
                defects.append(Defect('atom', (name,) + args, 'function {} is not preserved'.format(name)))
                break
    for name, value in sorted(A.constants.items()):
        if B.constants[name] != iota[value]:
            defects.append(Defect('atom', (name,), 'constant {} is not preserved'.format(name)))
    return defects


def relations_up_to(structure, max_arity, limit):
    total = sum(structure.count_relations(n) for n in range(max_arity + 1))
    if total > limit:
        _fail(
            'Structure has {t} relations up to arity {m}; pass a family instead (limit {l}).'.format(
                t=total, m=max_arity, l=limit
            )
        )
    for n in range(max_arity + 1):
        for X in structure.all_relations(n):
            yield X


def lift_isomorphism(pi, A, B, max_arity=2, family=None, limit=2 ** 12):
    """π̂: X -> π(X) for every relation of A up to the cap, or for a given family.

    Args:
        pi: dict element -> element, a τ-isomorphism A -> B.
        family: optional iterable of relations of A to restrict the lift to.
        limit: refuse to enumerate more relations than this.
    """
    defects = check_isomorphism(pi, A, B)
    if defects:
        _fail('Not an isomorphism: {}'.format(defects[0].render()))
    return lift_map(pi, A, B, max_arity, family, limit)


def lift_map(iota, A, B, max_arity=2, family=None, limit=2 ** 12):
    """ X -> ι(X) for an injective element map, without checking it is an isomorphism. """
    relations = relations_up_to(A, max_arity, limit) if family is None else family
    return TeamMap(A, B, {X: image(iota, X) for X in relations})


def identity_map(structure, family):
    return TeamMap(structure, structure, {X: X for X in family})


def lift_embedding(iota, A, B, max_arity=2, seeds=()):
    """Team map generated from an embedding by the closure operations.

    Starts from (∅ₙ, ∅ₙ), (Aⁿ, Bⁿ), Δ, the symbol interpretations, ({a}, {ι(a)})
    and (X, ι(X)) for the seeds, then closes the graph under ∩, × and Pr.

    Raises:
        ValueError when ι is no embedding or two derivations give one relation different images.
    """
    defects = check_embedding(iota, A, B)
    if defects:
        _fail('Not an embedding: {}'.format(defects[0].render()))
    pairs = list(zip(basic_relations(A, max_arity), basic_relations(B, max_arity)))
    pairs += [(Relation(1, [(a,)]), Relation(1, [(iota[a],)])) for a in A.domain]
    pairs += [(X, image(iota, X)) for X in seeds]
    graph = {}
    by_arity = {n: [] for n in range(max_arity + 1)}
    projections = {n: index_tuples(n, max_arity) for n in range(max_arity + 1)}
    worklist = deque(pairs)
    while worklist:
        X, Y = worklist.popleft()
        if X in graph:
            if graph[X] != Y:
                _fail('Embedding does not lift: {x} has images {a} and {b}.'.format(
                    x=X.render(), a=graph[X].render(), b=Y.render()))
            continue
        graph[X] = Y
        by_arity[X.arity].append((X, Y))
        found = [(intersection(X, U), intersection(Y, V)) for U, V in by_arity[X.arity]]
        for m, members in by_arity.items():
            if X.arity + m > max_arity:
                continue
            for U, V in members:
                found.append((product(X, U), product(Y, V)))
                found.append((product(U, X), product(V, Y)))
        for indices in projections[X.arity]:
            found.append((project(X, indices), project(Y, indices)))
        worklist.extend(found)
    return TeamMap(A, B, graph)
