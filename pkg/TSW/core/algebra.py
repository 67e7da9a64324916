"""Relational-algebra kernel: projection, product, joins, diagonals, closure and term graphs."""
from collections import deque
from itertools import product as cartesian
from TSW.core.relation import Relation, RelationFamily
from TSW.core.report import Defect, sorted_report
from TSW.syntax.ast import term_vars
from TSW.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_MAX_ARITY = 3


def _fail(message):
    logger.error(message)
    raise ValueError(message)


def project(relation, indices):
    """ Pr_ı⃗(R): permute, repeat or drop coordinates. """
    indices = tuple(indices)
    for i in indices:
        if not 0 <= i < relation.arity:
            _fail('Projection index {i} out of range for arity {n}.'.format(i=i, n=relation.arity))
    return Relation(len(indices), [tuple(t[i] for i in indices) for t in relation.tuples])


def product(left, right):
    return Relation(
        left.arity + right.arity, [a + b for a in left.tuples for b in right.tuples]
    )


def intersection(left, right):
    """ Set intersection; relations of different arities meet in the empty relation. """
    if left.arity != right.arity:
        return Relation.empty(left.arity)
    return Relation(left.arity, left.tuples & right.tuples)


def join_k(left, right, k):
    """ The natural k-join: a⃗b⃗c⃗ with a⃗b⃗ in left, b⃗c⃗ in right, |b⃗| = k. """
    if k < 0 or k > left.arity or k > right.arity:
        _fail('Join width {k} exceeds arities {a} and {b}.'.format(k=k, a=left.arity, b=right.arity))
    split = left.arity - k
    index = {}
    for t in right.tuples:
        index.setdefault(t[:k], []).append(t[k:])
    return Relation(
        left.arity + right.arity - k,
        [t + rest for t in left.tuples for rest in index.get(t[split:], ())],
    )


def diagonal(structure, n):
    """ Δⁿ = {a⃗a⃗ | a⃗ ∈ Aⁿ}. """
    return Relation(2 * n, [t + t for t in structure.tuples(n)])


def diagonal_via_products(structure, n):
    """ Δⁿ from Δ_A by n-fold product and one reordering projection. """
    relation = Relation(0, [()])
    delta = diagonal(structure, 1)
    for _ in range(n):
        relation = product(relation, delta)
    # coordinates are a0 a0 a1 a1 ...; gather the first copies then the second copies
    order = [2 * i for i in range(n)] + [2 * i + 1 for i in range(n)]
    return project(relation, order)


def join_via_products(structure, left, right, k):
    """ Pr_ȷ⃗((X × Y) ∩ (Aⁿ × Δᵏ × Aᵐ)) with n = |a⃗|, m = |c⃗|. """
    n = left.arity - k
    m = right.arity - k
    mask = product(product(structure.full(n), diagonal(structure, k)), structure.full(m))
    # Δᵏ lists the left copy then the right copy, which matches b⃗ then b⃗ in X × Y
    meet = intersection(product(left, right), mask)
    keep = list(range(n + k)) + list(range(n + 2 * k, n + 2 * k + m))
    return project(meet, keep)


def index_tuples(arity, max_length):
    """ Every ı⃗ over range(arity) with |ı⃗| <= max_length. """
    out = []
    for length in range(max_length + 1):
        if arity == 0 and length > 0:
            break
        out.extend(cartesian(range(arity), repeat=length))
    return out


def required_arity(structure, family=()):
    arities = [r.arity for r in family] + [structure.signature.max_arity(), 2]
    return max(arities)


def _check_cap(structure, family, max_arity):
    if max_arity < 2:
        _fail('Arity cap {} is below 2.'.format(max_arity))
    need = required_arity(structure, family)
    if max_arity < need:
        _fail('Arity cap {c} is below the required arity {n}.'.format(c=max_arity, n=need))


def basic_relations(structure, max_arity):
    """ The (C1) and (C5) members. """
    seeds = []
    for n in range(max_arity + 1):
        seeds.append(Relation.empty(n))
        seeds.append(structure.full(n))
    seeds.append(diagonal(structure, 1))
    seeds.extend(structure.symbol_relations().values())
    return seeds


def closure(structure, family=(), max_arity=DEFAULT_MAX_ARITY):
    """cl(𝒳) up to an arity cap, by worklist saturation.

    Args:
        structure: Structure whose relations the family consists of.
        family: iterable of Relation.
        max_arity: integer cap, at least 2 and at least every arity involved.

    Returns:
        RelationFamily; `truncated` counts the pairs whose product exceeds the cap and
        is neither empty nor the product of two full relations.
    """
    family = list(family)
    _check_cap(structure, family, max_arity)
    elements = set(structure.domain)
    for r in family:
        for t in r.tuples:
            if not set(t) <= elements:
                _fail('Relation {} is not a relation of the structure.'.format(r.render()))

    projections = {n: index_tuples(n, max_arity) for n in range(max_arity + 1)}
    known = set()
    by_arity = {n: [] for n in range(max_arity + 1)}
    worklist = deque(basic_relations(structure, max_arity) + family)
    skipped = 0
    full = {structure.full(n) for n in range(max_arity + 1)}
    while worklist:
        r = worklist.popleft()
        if r in known:
            continue
        known.add(r)
        by_arity[r.arity].append(r)
        found = []
        for s in by_arity[r.arity]:
            found.append(intersection(r, s))
        for m, members in by_arity.items():
            for s in members:
                if r.arity + m <= max_arity:
                    found.append(product(r, s))
                    found.append(product(s, r))
                elif not (r.is_empty() or s.is_empty() or (r in full and s in full)):
                    skipped += 1
        for indices in projections[r.arity]:
            found.append(project(r, indices))
        worklist.extend(x for x in found if x not in known)
    if skipped:
        logger.debug('Closure skipped {} products above arity {}.'.format(skipped, max_arity))
    return RelationFamily(known, truncated=skipped)


def is_closed(structure, family, max_arity=DEFAULT_MAX_ARITY):
    """Reports every (C1)-(C5) instance missing from a family, without saturating.

    Returns:
        list of Defect with kinds 'C1'..'C5'.
    """
    members = set(family)
    defects = []
    for n in range(max_arity + 1):
        for r in (Relation.empty(n), structure.full(n)):
            if r not in members:
                defects.append(Defect('C1', (r,), 'missing basic relation'))
    for name, r in sorted(structure.symbol_relations().items()):
        if r not in members:
            defects.append(Defect('C5', (r,), 'missing interpretation of {}'.format(name)))
    delta = diagonal(structure, 1)
    if delta not in members:
        defects.append(Defect('C5', (delta,), 'missing diagonal'))
    ordered = sorted(members, key=Relation.sort_key)
    for i, r in enumerate(ordered):
        for s in ordered[i:]:
            if r.arity == s.arity and intersection(r, s) not in members:
                defects.append(Defect('C2', (r, s), 'intersection missing'))
            if r.arity + s.arity <= max_arity:
                for a, b in ((r, s), (s, r)):
                    if product(a, b) not in members:
                        defects.append(Defect('C3', (a, b), 'product missing'))
        if r.arity <= max_arity:
            for indices in index_tuples(r.arity, max_arity):
                if project(r, indices) not in members:
                    defects.append(Defect('C4', (r, indices), 'projection missing'))
    return sorted_report(defects)


def term_graph(structure, term, n):
    """ Gₙ(t; A) = {(c⃗, t(c⃗)) | c⃗ ∈ Aⁿ}. """
    names = ['v{}'.format(i) for i in range(n)]
    for v in term_vars(term):
        if v not in names:
            _fail('Variable {v} of the term is outside v0..v{m}.'.format(v=v, m=n - 1))
    return Relation(
        n + 1,
        [c + (structure.evaluate(term, dict(zip(names, c))),) for c in structure.tuples(n)],
    )
