"""Exhaustive enumeration and seeded sampling of dialect formulas."""
from itertools import product as cartesian
import numpy as np
from TSW.syntax.ast import (
    Var, Const, Rel, Eq, Neg, And, Or, Exists, Forall, WeakNot, WeakOr, Exists1, Forall1,
    Dep, Con, Inc, Exc, Ind, children,
)
from TSW.syntax.dialects import DIALECTS

_UNARY = {
    'fo': (Exists, Forall),
    'foil': (Exists, Forall),
    'fot': (Exists1, Forall1),
}
_BINARY = {
    'fo': (And, Or),
    'foil': (And, Or),
    'fot': (And, WeakOr),
}


def _check(dialect):
    if dialect not in DIALECTS or dialect == 'so':
        raise ValueError('Cannot enumerate dialect {}.'.format(dialect))


def _tuples(variables, lengths):
    out = []
    for n in lengths:
        out.extend(cartesian(variables, repeat=n))
    return out


def literals(signature, variables):
    """ Positive and negated relation and equality atoms over variables and constants. """
    terms = [Var(v) for v in variables] + [Const(c) for c in sorted(signature.constants)]
    atoms = []
    for name in sorted(signature.relations):
        for args in cartesian(terms, repeat=signature.relations[name]):
            atoms.append(Rel(name, args))
    for left, right in cartesian(terms, repeat=2):
        atoms.append(Eq(left, right))
    out = []
    for atom in atoms:
        out.append(atom)
        out.append(Neg(atom))
    return out


def atoms(signature, variables, dialect, max_tuple=1):
    """ All size-one formulas of a dialect. """
    _check(dialect)
    out = literals(signature, variables)
    if dialect == 'fo':
        return out
    lengths = range(1, max_tuple + 1)
    tuples = _tuples(variables, lengths)
    out.extend(Con(xs) for xs in tuples)
    for n in lengths:
        same = list(cartesian(variables, repeat=n))
        out.extend(Inc(xs, ys) for xs in same for ys in same)
    if dialect == 'fot':
        return out
    out.extend(Dep(xs, ys) for xs in tuples for ys in tuples)
    for n in lengths:
        same = list(cartesian(variables, repeat=n))
        out.extend(Exc(xs, ys) for xs in same for ys in same)
    middles = _tuples(variables, range(0, max_tuple + 1))
    out.extend(Ind(xs, zs, ys) for xs in tuples for zs in middles for ys in tuples)
    return out


def iter_formulas(signature, variables, size_bound, dialect, max_tuple=1):
    """ Yields every dialect formula with at most size_bound nodes, smallest first. """
    _check(dialect)
    variables = list(variables)
    by_size = {}
    for size in range(1, size_bound + 1):
        level = []
        if size == 1:
            level = atoms(signature, variables, dialect, max_tuple)
        else:
            for body in by_size[size - 1]:
                if dialect == 'fot':
                    level.append(WeakNot(body))
                for quantifier in _UNARY[dialect]:
                    level.extend(quantifier(x, body) for x in variables)
            for left_size in range(1, size - 1):
                right_size = size - 1 - left_size
                for op in _BINARY[dialect]:
                    for left in by_size[left_size]:
                        for right in by_size[right_size]:
                            level.append(op(left, right))
        by_size[size] = level
        for phi in level:
            yield phi


def enumerate_formulas(signature, variables, size_bound, dialect, max_tuple=1):
    return list(iter_formulas(signature, variables, size_bound, dialect, max_tuple))


def _sample(rng, signature, variables, depth, dialect, pool):
    options = ['atom']
    if depth > 1:
        options += ['unary', 'binary']
        if dialect == 'fot':
            options.append('weak_not')
    choice = options[rng.randint(len(options))]
    if choice == 'atom':
        return pool[rng.randint(len(pool))]
    if choice == 'weak_not':
        return WeakNot(_sample(rng, signature, variables, depth - 1, dialect, pool))
    if choice == 'unary':
        quantifier = _UNARY[dialect][rng.randint(len(_UNARY[dialect]))]
        x = variables[rng.randint(len(variables))]
        return quantifier(x, _sample(rng, signature, variables, depth - 1, dialect, pool))
    op = _BINARY[dialect][rng.randint(len(_BINARY[dialect]))]
    left = _sample(rng, signature, variables, depth - 1, dialect, pool)
    right = _sample(rng, signature, variables, depth - 1, dialect, pool)
    return op(left, right)


def sample_formula(signature, variables, depth, seed, dialect, max_tuple=1):
    """Draws a random formula of depth at most `depth`.

    Deterministic for a fixed seed; each node chooses uniformly among the productions.
    """
    _check(dialect)
    if depth < 1:
        raise ValueError('Sampling depth must be at least 1.')
    rng = seed if isinstance(seed, np.random.RandomState) else np.random.RandomState(seed)
    pool = atoms(signature, list(variables), dialect, max_tuple)
    return _sample(rng, signature, list(variables), depth, dialect, pool)


def depth(phi):
    kids = children(phi)
    return 1 + max((depth(c) for c in kids), default=0)
