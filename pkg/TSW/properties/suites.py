"""The property suites. Each suite pairs an instance space with a check that compares two independent computations."""
from dataclasses import dataclass
from itertools import combinations, product as cartesian
from TSW.core.algebra import join_k, join_via_products
from TSW.core.team import Team, window
from TSW.limits.direct import (
    direct_limit, check_limit_factoring, check_limit_elements_unique, check_unique_lifting,
    cofinal_restriction_check,
)
from TSW.limits.system import DirectedSystem, validate_system
from TSW.maps.checks import (
    check_partial_team_isomorphism, check_join_preservation, check_intersection_preservation,
    check_forward_preservation, check_tarski_vaught, extract_isomorphism,
)
from TSW.maps.elementary import check_elementary_map, find_partial_elementary_map
from TSW.maps.teammap import TeamMap, lift_isomorphism, lift_embedding
from TSW.properties import instances
from TSW.semantics.so import eval_eso, SearchBudgetExceeded
from TSW.semantics.tarski import eval_tarski, eval_fo_with_relations
from TSW.semantics.team import TeamEvaluator, eval_team
from TSW.syntax.ast import Con, free_vars
from TSW.syntax.dialects import is_downward_closed_fragment, is_union_closed_fragment
from TSW.syntax.enumerate import sample_formula
from TSW.translate.coding import chi_plus
from TSW.translate.definitions import constancy_definition, team_characterisation
from TSW.translate.foil import foil_to_eso
from TSW.translate.fot import fot_to_fo
from TSW.ultra.filters import enumerate_ultrafilters, principal_ultrafilter
from TSW.ultra.los import verify_los
from TSW.ultra.product import ultraproduct_structures, relation_ultraproduct, team_ultraproduct


class SkipCase(Exception):
    """ Raised by a check when the case is outside what can be decided, e.g. a search budget. """


@dataclass(frozen=True)
class Suite:
    """A named property.

    Attributes:
        name: suite identifier used in the configuration.
        space: callable runner -> list of axes; a case is one item from each axis.
        check: callable (runner, rng, case) -> None on success, a failure description otherwise.
    """

    name: str
    space: object
    check: object


SUITES = {}


def suite(name, space):
    def register(check):
        SUITES[name] = Suite(name, space, check)
        return check

    return register


W1 = window(1)
W2 = window(2)


def _structures(runner):
    return instances.unary_structures(range(1, runner.max_structure + 1))


def _pairs(runner, variables=W2, nonempty=False):
    return runner.memo(
        ('pairs', variables, nonempty),
        lambda: instances.structure_teams(_structures(runner), variables, runner.max_team, nonempty),
    )


def _formulas(runner, dialect, variables=W2, keep=None, size=None):
    return runner.pool.get(dialect, variables, size or runner.max_formula_size, keep)


def _isos(runner):
    return runner.memo(('isos',), lambda: instances.isomorphism_cases(_structures(runner)))


def _lift(runner, case):
    A, B, pi = case
    return runner.memo(
        ('lift', id(case)),
        lambda: lift_isomorphism(pi, A, B, runner.max_arity, limit=runner.max_lift_relations),
    )


def _mismatch(left, right, what=('team', 'oracle')):
    if left != right:
        return '{a} {l}, {b} {r}'.format(a=what[0], l=left, b=what[1], r=right)
    return None


def _has_sentence_form(phi):
    return not free_vars(phi)


# -- team semantics --------------------------------------------------------

@suite('flatness', lambda r: [_pairs(r), _formulas(r, 'fo')])
def flatness(runner, rng, case):
    (A, X), phi = case
    rows = all(eval_tarski(A, s, phi) for s in X.assignments())
    return _mismatch(eval_team(A, X, phi), rows, ('team', 'row-wise'))


@suite('locality', lambda r: [_pairs(r, window(3)), _formulas(r, 'foil') + _formulas(r, 'fot')])
def locality(runner, rng, case):
    (A, X), phi = case
    return _mismatch(eval_team(A, X, phi), eval_team(A, X.restrict(free_vars(phi)), phi), ('team', 'restricted'))


@suite('empty-team', lambda r: [_structures(r), _formulas(r, 'foil')])
def empty_team(runner, rng, case):
    A, phi = case
    if not eval_team(A, Team.empty(W2), phi):
        return 'empty team fails'
    return None


@suite('downward-closure', lambda r: [_pairs(r), _formulas(r, 'foil', keep=is_downward_closed_fragment)])
def downward_closure(runner, rng, case):
    (A, X), phi = case
    evaluator = TeamEvaluator(A)
    if not evaluator.satisfies(X, phi):
        return None
    for Y in X.subteams():
        if not evaluator.satisfies(Y, phi):
            return 'fails on subteam ' + Y.render()
    return None


@suite('union-closure', lambda r: [_pairs(r), _formulas(r, 'foil', keep=is_union_closed_fragment)])
def union_closure(runner, rng, case):
    (A, X), phi = case
    evaluator = TeamEvaluator(A)
    truth = {Y: evaluator.satisfies(Y, phi) for Y in X.subteams()}
    holding = [Y for Y, ok in truth.items() if ok]
    for Y, Z in combinations(holding, 2):
        if not truth[Y.union(Z)]:
            return 'fails on the union of {y} and {z}'.format(y=Y.render(), z=Z.render())
    return None


@suite('sentences', lambda r: [_pairs(r, nonempty=True), _formulas(r, 'foil', keep=_has_sentence_form) + _formulas(r, 'fot', keep=_has_sentence_form)])
def sentences(runner, rng, case):
    (A, X), phi = case
    return _mismatch(eval_team(A, X, phi), eval_team(A, Team.unit(), phi), ('team', 'unit team'))


@suite('constancy', lambda r: [_pairs(r), [('v0',), ('v1',), ('v0', 'v1')]])
def constancy(runner, rng, case):
    (A, X), xs = case
    return _mismatch(eval_team(A, X, Con(xs)), eval_team(A, X, constancy_definition(xs)), ('atom', 'definition'))


@suite('theta', lambda r: [_pairs(r, nonempty=True), [('v0',), ('v1',)]])
def theta(runner, rng, case):
    (A, X), xs = case
    expected = X.relation(xs) == A.relations['P']
    return _mismatch(eval_team(A, X, team_characterisation('P', xs)), expected, ('theta', 'X[x] = P'))


@suite('fast-path', lambda r: [_pairs(r), _formulas(r, 'foil', keep=is_downward_closed_fragment)])
def fast_path(runner, rng, case):
    (A, X), phi = case
    generic = TeamEvaluator(A, 'generic').satisfies(X, phi)
    fragment = TeamEvaluator(A, 'fragment').satisfies(X, phi)
    return _mismatch(generic, fragment, ('generic', 'fragment'))


# -- translations ----------------------------------------------------------

def _fot_sentence(runner, phi):
    return runner.memo(('fot', id(phi)), lambda: fot_to_fo(phi, 2))


@suite('fot-translation', lambda r: [_pairs(r), _formulas(r, 'fot')])
def fot_translation(runner, rng, case):
    (A, X), phi = case
    chi = _fot_sentence(runner, phi)
    params = {chi.parameters[0][0]: X.relation(W2)}
    return _mismatch(eval_team(A, X, phi), eval_fo_with_relations(A, chi, params))


@suite('foil-translation', lambda r: [_pairs(r, W1), _formulas(r, 'foil', W1, size=min(r.max_formula_size, 4))])
def foil_translation(runner, rng, case):
    (A, X), phi = case
    chi = runner.memo(('foil', id(phi)), lambda: foil_to_eso(phi, 1))
    params = {chi.parameters[0][0]: X.relation(W1)}
    try:
        translated = eval_eso(A, chi, params, runner.eso_budget)
    except SearchBudgetExceeded as e:
        raise SkipCase(str(e))
    return _mismatch(eval_team(A, X, phi), translated)


@suite('chi-plus', lambda r: [instances.relation_space(_structures(r), 2), _formulas(r, 'fot')])
def chi_plus_guard(runner, rng, case):
    (A, R), phi = case
    chi = _fot_sentence(runner, phi)
    guarded = chi_plus(chi)
    params = {chi.parameters[0][0]: R}
    value = eval_fo_with_relations(A, guarded, params)
    expected = True if R.is_empty() else eval_fo_with_relations(A, chi, params)
    if value != expected:
        return _mismatch(value, expected, ('guarded', 'expected'))
    return _mismatch(eval_fo_with_relations(A, chi_plus(guarded), params), value, ('guarded twice', 'guarded'))


# -- team maps -------------------------------------------------------------

@suite('pi-axioms', lambda r: [_isos(r)])
def pi_axioms(runner, rng, case):
    (iso,) = case
    A, B, pi = iso
    f = _lift(runner, iso)
    defects = check_partial_team_isomorphism(f, runner.max_arity)
    if defects:
        return 'lifted isomorphism fails: ' + defects[0].render()
    extracted, defects = extract_isomorphism(f)
    if extracted != pi or defects:
        return 'isomorphism not recovered from singletons'
    items = f.items()
    X, Y = items[rng.randint(len(items))]
    others = [Z for Z in B.all_relations(X.arity) if Z != Y]
    Z = others[rng.randint(len(others))]
    entries = dict(f.entries)
    entries[X] = Z
    corrupted = TeamMap(A, B, entries)
    if not check_partial_team_isomorphism(corrupted, runner.max_arity):
        return 'corruption {x} -> {z} passes'.format(x=X.render(), z=Z.render())
    return None


@suite('join-preservation', lambda r: [_isos(r)])
def join_preservation(runner, rng, case):
    (iso,) = case
    A = iso[0]
    f = _lift(runner, iso)
    defects = check_join_preservation(f, runner.max_arity) + check_intersection_preservation(f)
    if defects:
        return defects[0].render()
    for n, m in ((1, 1), (1, 2), (2, 2)):
        X = instances.random_relation(rng, A, n)
        Y = instances.random_relation(rng, A, m)
        for k in range(min(n, m) + 1):
            if join_k(X, Y, k) != join_via_products(A, X, Y, k):
                return 'join of {x} and {y} at {k} differs from its product form'.format(
                    x=X.render(), y=Y.render(), k=k)
    return None


@suite('tarski-vaught', lambda r: [_isos(r)])
def tarski_vaught(runner, rng, case):
    (iso,) = case
    f = _lift(runner, iso)
    pool = _formulas(runner, 'fot')
    corpus = [pool[i] for i in rng.randint(len(pool), size=runner.samples)]
    defects = check_tarski_vaught(f, corpus)
    if defects:
        return defects[0].render()
    return None


def _same_size_pairs(runner):
    structures = _structures(runner)
    return [(A, B) for A in structures for B in structures if A.size == B.size]


@suite('elementarity', lambda r: [_same_size_pairs(r), ['none', 'first', 'P']])
def elementarity(runner, rng, case):
    (A, B), seed = case
    family = {'none': [], 'first': [A.singleton(A.domain[0])], 'P': [A.relations['P']]}[seed]
    f = find_partial_elementary_map(A, family, B, runner.max_arity)
    isomorphic = bool(instances.isomorphisms(A, B))
    if (f is not None) != isomorphic:
        return 'map found: {m}, isomorphic: {i}'.format(m=f is not None, i=isomorphic)
    if f is None:
        return None
    if not check_elementary_map(f):
        return 'found map is not elementary'
    defects = check_partial_team_isomorphism(f, runner.max_arity)
    if defects:
        return 'elementary map fails ' + defects[0].render()
    formulas = [sample_formula(instances.UNARY, W1, 3, rng, 'foil') for _ in range(runner.samples)]
    defects = check_forward_preservation(f.restrict(f.domain().of_arity(1)), formulas)
    if defects:
        return defects[0].render()
    return None


# -- ultraproducts ---------------------------------------------------------

def _los_space(runner):
    factors = instances.unary_structures([min(2, runner.max_structure)])
    cases = []
    for k in range(1, runner.max_index + 1):
        for i in range(k):
            for chosen in cartesian(factors, repeat=k):
                cases.append((k, i, chosen))
    return cases


@suite('ultrafilters', lambda r: [list(range(1, r.max_index + 1))])
def ultrafilters(runner, rng, case):
    (k,) = case
    index = [str(i) for i in range(k)]
    found = enumerate_ultrafilters(index)
    principal = [principal_ultrafilter(index, i) for i in index]
    if sorted(U.render() for U in found) != sorted(U.render() for U in principal):
        return '{} ultrafilters found'.format(len(found))
    return None


@suite('los', lambda r: [_los_space(r), _formulas(r, 'fot', W1)])
def los(runner, rng, case):
    (k, i, factors), phi = case
    U = principal_ultrafilter(range(k), i)
    product = runner.memo(('ultra', k, i, tuple(id(A) for A in factors)), lambda: ultraproduct_structures(list(factors), U))
    teams = [instances.random_subteam(rng, A, W1) for A in factors]
    report = verify_los(list(factors), teams, U, phi, 'fot', product)
    if not report.ok:
        return report.defects()[0].render()
    left = team_ultraproduct(teams, U, product).relation(W1)
    right = relation_ultraproduct([X.relation(W1) for X in teams], U, product)
    if left != right:
        return 'team ultraproduct does not commute with projection'
    return None


# -- direct limits ---------------------------------------------------------

def _chain_structures(runner):
    # a one-element source never lifts into a larger target: its full relation is also a singleton
    return instances.unary_structures(range(2, max(3, runner.max_structure) + 1))


def _limit_space(runner):
    chained = _chain_structures(runner)
    cases = []
    for A in chained:
        for B in chained:
            if A.size < B.size:
                cases.extend(('chain', (A, B), (iota,)) for iota in instances.embeddings(A, B))
    for A in _structures(runner):
        autos = instances.isomorphisms(A, A)
        for sigma in autos:
            for tau in autos:
                cases.append(('diamond', (A,), (sigma, tau)))
    return cases


def _system(runner, case):
    kind, structures, maps = case
    cap = runner.max_arity
    try:
        if kind == 'chain':
            (A, B), (iota,) = structures, maps
            f = lift_embedding(iota, A, B, cap)
            return DirectedSystem.from_edges(['0', '1'], [('0', '1')], {'0': A, '1': B}, {('0', '1'): f}, cap)
        (A,), (sigma, tau) = structures, maps
        composite = {a: tau[sigma[a]] for a in A.domain}
        identity = {a: a for a in A.domain}
        edges = {
            ('b', 'l'): lift_embedding(sigma, A, A, cap),
            ('l', 't'): lift_embedding(tau, A, A, cap),
            ('b', 'r'): lift_embedding(composite, A, A, cap),
            ('r', 't'): lift_embedding(identity, A, A, cap),
        }
        return DirectedSystem.from_edges(['b', 'l', 'r', 't'], list(edges), {i: A for i in 'blrt'}, edges, cap)
    except ValueError as e:
        raise SkipCase(str(e))


@suite('limits', lambda r: [_limit_space(r)])
def limits(runner, rng, case):
    (shape,) = case
    S = _system(runner, shape)
    defects = validate_system(S)
    if defects:
        return 'invalid system: ' + defects[0].render()
    limit = direct_limit(S)
    defects = check_limit_factoring(limit) + check_unique_lifting(limit) + check_limit_elements_unique(limit)
    for i, g in sorted(limit.maps.items()):
        defects.extend(check_partial_team_isomorphism(g, runner.max_arity))
    if defects:
        return defects[0].render()
    for size in range(1, len(S.index) + 1):
        for J in combinations(S.index, size):
            if S.is_cofinal(J) and S.is_directed(J):
                defects = cofinal_restriction_check(S, J)
                if defects:
                    return 'cofinal {j}: {d}'.format(j=','.join(J), d=defects[0].render())
    if all(check_elementary_map(f) for f in S.maps.values()):
        if not all(check_elementary_map(g) for g in limit.maps.values()):
            return 'elementarity does not transfer to the limit maps'
    return None
