"""Desk-scale instance spaces for the property suites."""
from itertools import permutations
from TSW.core.relation import Relation
from TSW.core.structure import Signature, Structure
from TSW.core.team import Team, all_teams
from TSW.maps.elementary import expansion_isomorphisms
from TSW.syntax.enumerate import enumerate_formulas

UNARY = Signature({'P': 1})


def elements(n):
    return [str(i) for i in range(n)]


def unary_structures(sizes):
    """ Every structure over {P} with a domain 0..n-1 for n in sizes, P in canonical order. """
    out = []
    for n in sizes:
        domain = elements(n)
        base = Structure(Signature(), domain)
        for P in base.all_relations(1):
            out.append(Structure(UNARY, domain, {'P': P}))
    return out


def structure_teams(structures, variables, max_team, nonempty=False):
    """ (A, X) for every structure and every team over `variables` with at most max_team rows. """
    out = []
    for A in structures:
        for X in all_teams(A, variables, max_team):
            if nonempty and X.is_empty():
                continue
            out.append((A, X))
    return out


def isomorphisms(A, B):
    return list(expansion_isomorphisms(A, B, []))


def isomorphism_cases(structures):
    """ (A, B, π) for every ordered pair of structures and every isomorphism between them. """
    out = []
    for A in structures:
        for B in structures:
            for pi in isomorphisms(A, B):
                out.append((A, B, pi))
    return out


def embeddings(A, B):
    """ Injective maps preserving and reflecting P, in canonical order. """
    out = []
    for image in permutations(B.domain, A.size):
        iota = dict(zip(A.domain, image))
        P = A.relations['P']
        if all(((iota[a],) in B.relations['P']) == ((a,) in P) for a in A.domain):
            out.append(iota)
    return out


class FormulaPool:
    """ Memoized formula lists per (dialect, variables, size bound, filter). """

    def __init__(self, signature=UNARY, max_tuple=1):
        self.signature = signature
        self.max_tuple = max_tuple
        self._cache = {}

    def get(self, dialect, variables, size_bound, keep=None):
        key = (dialect, tuple(variables), size_bound, keep)
        if key not in self._cache:
            formulas = enumerate_formulas(self.signature, variables, size_bound, dialect, self.max_tuple)
            if keep is not None:
                formulas = [phi for phi in formulas if keep(phi)]
            self._cache[key] = formulas
        return self._cache[key]


def full_team(structure, variables):
    return Team(tuple(variables), structure.tuples(len(variables)))


def random_subteam(rng, structure, variables):
    rows = full_team(structure, variables).sorted_rows()
    return Team(tuple(variables), [r for r in rows if rng.randint(2)])


def random_relation(rng, structure, n):
    return Relation(n, [t for t in structure.tuples(n) if rng.randint(2)])


def relation_space(structures, n):
    """ (A, R) for every structure and every n-ary relation over it. """
    return [(A, R) for A in structures for R in A.all_relations(n)]
