"""Elementarity of team maps between finite structures, decided by expansion isomorphism."""
from TSW.core.algebra import closure
from TSW.maps.teammap import TeamMap, image
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def symbol_pairs(A, B):
    """ (R^A, R^B) for every symbol; relation, function graph and constant alike. """
    target = B.symbol_relations()
    return [(R, target[name]) for name, R in sorted(A.symbol_relations().items())]


def expansion_isomorphisms(A, B, pairs):
    """Every bijection π: A -> B with π(X) = Y for all given pairs, in canonical order.

    The symbol interpretations are always added to the pairs, so each result is
    a τ-isomorphism of the expansions. Backtracking assigns the elements of A in
    domain order and prunes on every tuple whose elements are all assigned.

    Args:
        A, B: Structure over one signature.
        pairs: iterable of (Relation of A, Relation of B).

    Yields:
        dict element -> element.
    """
    if A.signature != B.signature or A.size != B.size:
        return
    pairs = list(pairs) + symbol_pairs(A, B)
    for X, Y in pairs:
        if X.arity != Y.arity or len(X) != len(Y):
            return
    forward = {a: [] for a in A.domain}
    backward = {b: [] for b in B.domain}
    for k, (X, Y) in enumerate(pairs):
        for t in X.tuples:
            for a in set(t):
                forward[a].append((k, t))
        for u in Y.tuples:
            for b in set(u):
                backward[b].append((k, u))
    pi = {}
    used = {}

    def consistent(a, b):
        for k, t in forward[a]:
            if all(c in pi for c in t) and tuple(pi[c] for c in t) not in pairs[k][1].tuples:
                return False
        for k, u in backward[b]:
            if all(d in used for d in u) and tuple(used[d] for d in u) not in pairs[k][0].tuples:
                return False
        return True

    def extend(position):
        if position == A.size:
            yield dict(pi)
            return
        a = A.domain[position]
        for b in B.domain:
            if b in used:
                continue
            pi[a] = b
            used[b] = a
            if consistent(a, b):
                yield from extend(position + 1)
            del pi[a]
            del used[b]

    yield from extend(0)


def first_expansion_isomorphism(A, B, pairs):
    return next(expansion_isomorphisms(A, B, pairs), None)


def check_elementary_map(f):
    """True iff (A, X)_{X ∈ dom f} and (B, f(X)) are isomorphic expansions."""
    found = first_expansion_isomorphism(f.source, f.target, f.items()) is not None
    logger.debug('Elementarity over {n} entries: {r}.'.format(n=len(f), r=found))
    return found


def find_partial_elementary_map(A, family, B, max_arity=3):
    """The canonical partial elementary team map with domain cl(𝒳), if any.

    Returns:
        TeamMap lifted from the first τ-isomorphism A -> B and restricted to cl(𝒳),
        or None when A and B are not isomorphic.
    """
    domain = closure(A, family, max_arity)
    pi = first_expansion_isomorphism(A, B, [])
    if pi is None:
        return None
    return TeamMap(A, B, {X: image(pi, X) for X in domain})


def all_partial_elementary_maps(A, family, B, max_arity=3):
    """ Every partial elementary team map with domain cl(𝒳), one per isomorphism, without duplicates. """
    domain = list(closure(A, family, max_arity))
    seen = []
    for pi in expansion_isomorphisms(A, B, []):
        f = TeamMap(A, B, {X: image(pi, X) for X in domain})
        if f not in seen:
            seen.append(f)
            yield f


def expansions_isomorphic(A, R, B, S):
    """ (A, R) ≅ (B, S); by finiteness the same as teams R and S being FOT-indistinguishable. """
    return first_expansion_isomorphism(A, B, [(R, S)]) is not None
