"""Checkers over team maps. Every checker returns a sorted list of Defect; empty means pass."""
from TSW.core.algebra import (
    diagonal, intersection, is_closed, join_k, product, project, index_tuples, term_graph,
)
from TSW.core.relation import Relation
from TSW.core.report import Defect, sorted_report
from TSW.core.team import team_of_relation, window
from TSW.maps.teammap import image
from TSW.semantics.team import eval_team
from TSW.syntax.ast import Exists1, free_vars
from TSW.syntax.printer import render
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _closure_defects(f, max_arity):
    defects = []
    for side, structure, family in (('dom', f.source, f.domain()), ('ran', f.target, f.range())):
        for d in is_closed(structure, family, max_arity):
            defects.append(Defect('closure-' + side, d.witnesses, d.kind + ' ' + d.detail))
    return defects


def check_partial_team_isomorphism(f, max_arity=2):
    """Every violated (PI1)-(PI6) instance of a team map.

    Closure of dom(f) and ran(f) is checked first and reported as 'closure-dom' /
    'closure-ran' defects; axiom instances whose arguments fall outside dom(f) are
    covered by those defects and not repeated.

    Args:
        f: TeamMap.
        max_arity: arity cap for (C3), (C4) and (PI3), (PI4).
    """
    A, B = f.source, f.target
    defects = _closure_defects(f, max_arity)
    items = f.items()
    for X, Y in items:
        if X.arity != Y.arity:
            defects.append(Defect('arity', (X, Y)))
    for X, Y in items:
        if X.is_empty() != Y.is_empty():
            defects.append(Defect('PI1', (X, Y), 'emptiness not preserved'))
        if (X == A.full(X.arity)) != (Y == B.full(Y.arity)):
            defects.append(Defect('PI1', (X, Y), 'fullness not preserved'))
        if X.is_singleton() != Y.is_singleton():
            defects.append(Defect('PI2', (X, Y), 'singleton not preserved'))
    for X, Y in items:
        for U, V in items:
            if X.arity + U.arity > max_arity:
                continue
            XU = product(X, U)
            if XU in f and f.entries[XU] != product(Y, V):
                defects.append(Defect('PI3', (X, U)))
    for X, Y in items:
        for indices in index_tuples(X.arity, max_arity):
            P = project(X, indices)
            if P in f and f.entries[P] != project(Y, indices):
                defects.append(Defect('PI4', (X, indices)))
    by_arity = {}
    for X, Y in items:
        by_arity.setdefault(X.arity, []).append((X, Y))
    for members in by_arity.values():
        for X, Y in members:
            for U, V in members:
                if X.issubset(U) != Y.issubset(V):
                    defects.append(Defect('PI5', (X, U), 'inclusion not preserved'))
    delta = diagonal(A, 1)
    if delta in f and f.entries[delta] != diagonal(B, 1):
        defects.append(Defect('PI6', (delta,), 'diagonal not preserved'))
    target_symbols = B.symbol_relations()
    for name, R in sorted(A.symbol_relations().items()):
        if R in f and f.entries[R] != target_symbols[name]:
            defects.append(Defect('PI6', (R,), 'interpretation of {} not preserved'.format(name)))
    report = sorted_report(defects)
    logger.debug('PI check over {n} entries: {d} defects.'.format(n=len(f), d=len(report)))
    return report


def check_boolean_embedding(f, n):
    """ Union and complement preservation over the n-ary part of dom(f). """
    A, B = f.source, f.target
    defects = []
    members = [(X, Y) for X, Y in f.items() if X.arity == n]
    for X, Y in members:
        complement = Relation(n, A.full(n).tuples - X.tuples)
        if complement not in f:
            defects.append(Defect('domain', (complement,), 'complement outside the domain'))
        elif f.entries[complement] != Relation(n, B.full(n).tuples - Y.tuples):
            defects.append(Defect('complement', (X, complement)))
        for U, V in members:
            union = Relation(n, X.tuples | U.tuples)
            if union not in f:
                defects.append(Defect('domain', (union,), 'union outside the domain'))
            elif f.entries[union] != Relation(n, Y.tuples | V.tuples):
                defects.append(Defect('union', (X, U)))
    for X, expected in ((Relation.empty(n), Relation.empty(n)), (A.full(n), B.full(n))):
        if X in f and f.entries[X] != expected:
            defects.append(Defect('PI1', (X,), 'bottom or top not preserved'))
    return sorted_report(defects)


def check_intersection_preservation(f):
    defects = []
    items = f.items()
    for X, Y in items:
        for U, V in items:
            if X.arity != U.arity:
                continue
            meet = intersection(X, U)
            if meet in f and f.entries[meet] != intersection(Y, V):
                defects.append(Defect('intersection', (X, U)))
    return sorted_report(defects)


def check_join_preservation(f, max_arity=2):
    """ f(X ⋈ₖ Y) = f(X) ⋈ₖ f(Y) for every k keeping the join within the cap. """
    defects = []
    items = f.items()
    for X, Y in items:
        for U, V in items:
            for k in range(min(X.arity, U.arity) + 1):
                if X.arity + U.arity - k > max_arity:
                    continue
                joined = join_k(X, U, k)
                if joined in f and f.entries[joined] != join_k(Y, V, k):
                    defects.append(Defect('join', (X, U, k)))
    return sorted_report(defects)


def check_quantifier_free_preservation(f, formulas):
    """A ⊨_X φ iff B ⊨_f(X) φ for quantifier-free φ over the window of X."""
    defects = []
    for phi in formulas:
        names = set(free_vars(phi))
        for X, Y in f.items():
            if not names <= set(window(X.arity)):
                continue
            left = eval_team(f.source, team_of_relation(X), phi)
            right = eval_team(f.target, team_of_relation(Y), phi)
            if left != right:
                defects.append(Defect('qf', (X, render(phi))))
    return sorted_report(defects)


def check_forward_preservation(f, formulas):
    """ A ⊨_X φ implies B ⊨_f(X) φ. """
    defects = []
    for phi in formulas:
        names = set(free_vars(phi))
        for X, Y in f.items():
            if not names <= set(window(X.arity)):
                continue
            if eval_team(f.source, team_of_relation(X), phi) and not eval_team(
                f.target, team_of_relation(Y), phi
            ):
                defects.append(Defect('forward', (X, render(phi))))
    return sorted_report(defects)


def check_term_graphs(f, terms, n):
    """ f(Gₙ(t; A)) = Gₙ(t; B). """
    defects = []
    for t in terms:
        graph = term_graph(f.source, t, n)
        if graph not in f:
            defects.append(Defect('term-graph-domain', (graph,)))
        elif f.entries[graph] != term_graph(f.target, t, n):
            defects.append(Defect('term-graph', (graph,)))
    return sorted_report(defects)


def extract_isomorphism(f):
    """π read off the singleton entries, when f is element-total and element-surjective.

    Returns:
        (π, defects): π is None when it does not exist; defects lists entries not
        contained in the lift of π.
    """
    if not f.is_element_total() or not f.is_element_surjective():
        return None, [Defect('element', (), 'map is not element-total and element-surjective')]
    pi = f.element_map()
    if len(set(pi.values())) != len(pi):
        return None, [Defect('element', (), 'singleton images are not distinct')]
    defects = [Defect('lift', (X,)) for X, Y in f.items() if image(pi, X) != Y]
    return pi, sorted_report(defects)


def check_tarski_vaught(f, corpus):
    """Tarski-Vaught condition for every formula of a corpus.

    For φ with free variables among v0..vn and every n-ary X in dom(f) such
    that B ⊨_f(X) ∃¹vn φ, looks for a in A with B ⊨_f(X)(f(a)/n) φ.

    Args:
        f: element-total TeamMap.
        corpus: iterable of formulas or (formula, n) pairs; without n, n is the
            largest window index free in the formula.

    Raises:
        ValueError when f is not element-total.
    """
    if not f.is_element_total():
        message = 'Tarski-Vaught check needs an element-total map.'
        logger.error(message)
        raise ValueError(message)
    A, B = f.source, f.target
    elements = f.element_map()
    defects = []
    for entry in corpus:
        phi, n = entry if isinstance(entry, tuple) else (entry, _last_index(entry))
        variable = 'v{}'.format(n)
        for X, Y in f.items():
            if X.arity != n:
                continue
            if not eval_team(B, team_of_relation(Y), Exists1(variable, phi)):
                continue
            witnessed = False
            for a in A.domain:
                extended = product(Y, Relation(1, [(elements[a],)]))
                lifted = product(X, Relation(1, [(a,)]))
                if lifted in f and f.entries[lifted] != extended:
                    defects.append(Defect('TV-identity', (X, a)))
                if eval_team(B, team_of_relation(extended), phi):
                    witnessed = True
                    break
            if not witnessed:
                defects.append(Defect('TV', (X, render(phi)), 'no witness in the source'))
    return sorted_report(defects)


def _last_index(phi):
    indices = [int(v[1:]) for v in free_vars(phi) if v[:1] == 'v' and v[1:].isdigit()]
    return max(indices, default=0)
