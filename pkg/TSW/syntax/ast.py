"""Terms, team formulas and second-order sentences.

All nodes are immutable and hashable, so they can key memo tables.
Team atoms take variables; literals take terms.
"""
from dataclasses import dataclass


# Terms

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Func:
    name: str
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, 'args', tuple(self.args))


def term_vars(term):
    """ Variables of a term in order of first occurrence. """
    if isinstance(term, Var):
        return [term.name]
    if isinstance(term, Func):
        seen = []
        for arg in term.args:
            for v in term_vars(arg):
                if v not in seen:
                    seen.append(v)
        return seen
    return []


def term_depth(term):
    if isinstance(term, Func):
        return 1 + max([term_depth(a) for a in term.args], default=0)
    return 0


# Formulas

class Formula:
    """ Base class of all formula nodes. """

    label = 'formula'


@dataclass(frozen=True)
class Top(Formula):
    label = 'true'


@dataclass(frozen=True)
class Bottom(Formula):
    label = 'false'


@dataclass(frozen=True)
class Rel(Formula):
    name: str
    args: tuple = ()
    label = 'relation atom'

    def __post_init__(self):
        object.__setattr__(self, 'args', tuple(self.args))


@dataclass(frozen=True)
class Eq(Formula):
    left: object
    right: object
    label = 'equality'


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula
    label = 'negation'


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula
    label = 'conjunction'


@dataclass(frozen=True)
class Or(Formula):
    """ Classical disjunction; in team semantics the (lax) split junction. """

    left: Formula
    right: Formula
    label = 'disjunction'


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula
    label = 'implication'


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula
    label = 'equivalence'


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula
    label = 'existential quantifier'


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula
    label = 'universal quantifier'


@dataclass(frozen=True)
class WeakNot(Formula):
    body: Formula
    label = 'weak negation'


@dataclass(frozen=True)
class WeakOr(Formula):
    left: Formula
    right: Formula
    label = 'weak disjunction'


@dataclass(frozen=True)
class Exists1(Formula):
    var: str
    body: Formula
    label = 'weak existential quantifier'


@dataclass(frozen=True)
class Forall1(Formula):
    var: str
    body: Formula
    label = 'weak universal quantifier'


def _names(xs):
    return tuple(x.name if isinstance(x, Var) else x for x in xs)


@dataclass(frozen=True)
class Dep(Formula):
    xs: tuple
    ys: tuple
    label = 'dependence atom'

    def __post_init__(self):
        object.__setattr__(self, 'xs', _names(self.xs))
        object.__setattr__(self, 'ys', _names(self.ys))


@dataclass(frozen=True)
class Con(Formula):
    xs: tuple = ()
    label = 'constancy atom'

    def __post_init__(self):
        object.__setattr__(self, 'xs', _names(self.xs))


@dataclass(frozen=True)
class Inc(Formula):
    xs: tuple
    ys: tuple
    label = 'inclusion atom'

    def __post_init__(self):
        object.__setattr__(self, 'xs', _names(self.xs))
        object.__setattr__(self, 'ys', _names(self.ys))
        if len(self.xs) != len(self.ys):
            raise ValueError('Inclusion atom needs tuples of equal length.')


@dataclass(frozen=True)
class Exc(Formula):
    xs: tuple
    ys: tuple
    label = 'exclusion atom'

    def __post_init__(self):
        object.__setattr__(self, 'xs', _names(self.xs))
        object.__setattr__(self, 'ys', _names(self.ys))
        if len(self.xs) != len(self.ys):
            raise ValueError('Exclusion atom needs tuples of equal length.')


@dataclass(frozen=True)
class Ind(Formula):
    """ Conditional independence xs ⊥_zs ys. """

    xs: tuple
    zs: tuple
    ys: tuple
    label = 'independence atom'

    def __post_init__(self):
        object.__setattr__(self, 'xs', _names(self.xs))
        object.__setattr__(self, 'zs', _names(self.zs))
        object.__setattr__(self, 'ys', _names(self.ys))


@dataclass(frozen=True)
class SOSentence:
    """An existential second-order sentence in prenex form.

    Args:
        prefix: tuple of (name, arity) pairs, the existentially quantified relation variables.
        matrix: first-order Formula, negation unrestricted.
        parameters: tuple of (name, arity) pairs, the declared free relation parameters.
    """

    prefix: tuple
    matrix: Formula
    parameters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'prefix', tuple((n, int(a)) for n, a in self.prefix))
        object.__setattr__(self, 'parameters', tuple((n, int(a)) for n, a in self.parameters))
        arities = dict(self.parameters)
        for name, arity in self.prefix:
            if name in arities and arities[name] != arity:
                raise ValueError('Relation variable {} declared with two arities.'.format(name))
            arities[name] = arity
        for name, used in relation_usage(self.matrix).items():
            if len(used) > 1:
                raise ValueError('Relation {n} used with arities {a}.'.format(n=name, a=sorted(used)))
            if name in arities and used != {arities[name]}:
                raise ValueError(
                    'Relation {n} declared with arity {d}, used with {u}.'.format(
                        n=name, d=arities[name], u=used.pop()
                    )
                )


LITERAL_ATOMS = (Rel, Eq)
TEAM_ATOMS = (Dep, Con, Inc, Exc, Ind)
QUANTIFIERS = (Exists, Forall, Exists1, Forall1)
BINARY = (And, Or, WeakOr, Implies, Iff)
UNARY = (Neg, WeakNot)


def is_literal(phi):
    return isinstance(phi, LITERAL_ATOMS) or (
        isinstance(phi, Neg) and isinstance(phi.body, LITERAL_ATOMS)
    )


def children(phi):
    if isinstance(phi, BINARY):
        return (phi.left, phi.right)
    if isinstance(phi, UNARY) or isinstance(phi, QUANTIFIERS):
        return (phi.body,)
    return ()


def subformulas(phi):
    """ Pre-order iteration over all subformula nodes. """
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def size(phi):
    """ Number of AST nodes; a negated atom counts as one literal node. """
    if is_literal(phi) or isinstance(phi, TEAM_ATOMS + (Top, Bottom)):
        return 1
    return 1 + sum(size(c) for c in children(phi))


def atom_vars(phi):
    """ Variables of an atomic node in order of first occurrence. """
    if isinstance(phi, Neg):
        return atom_vars(phi.body)
    if isinstance(phi, Rel):
        names = [v for t in phi.args for v in term_vars(t)]
    elif isinstance(phi, Eq):
        names = term_vars(phi.left) + term_vars(phi.right)
    elif isinstance(phi, (Dep, Inc, Exc)):
        names = list(phi.xs) + list(phi.ys)
    elif isinstance(phi, Con):
        names = list(phi.xs)
    elif isinstance(phi, Ind):
        names = list(phi.xs) + list(phi.zs) + list(phi.ys)
    else:
        names = []
    ordered = []
    for v in names:
        if v not in ordered:
            ordered.append(v)
    return ordered


def free_vars(phi):
    """ Free variables in order of first occurrence; the weak quantifiers bind like the strong ones. """
    if isinstance(phi, SOSentence):
        return free_vars(phi.matrix)
    if isinstance(phi, QUANTIFIERS):
        return [v for v in free_vars(phi.body) if v != phi.var]
    if isinstance(phi, BINARY):
        ordered = free_vars(phi.left)
        for v in free_vars(phi.right):
            if v not in ordered:
                ordered.append(v)
        return ordered
    if isinstance(phi, UNARY):
        return free_vars(phi.body)
    return atom_vars(phi)


def relation_usage(phi):
    """ Mapping relation name -> set of arities it is used with. """
    usage = {}
    for node in subformulas(phi):
        if isinstance(node, Rel):
            usage.setdefault(node.name, set()).add(len(node.args))
    return usage


def _rename_term(term, mapping):
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    if isinstance(term, Func):
        return Func(term.name, tuple(_rename_term(a, mapping) for a in term.args))
    return term


def substitute(phi, mapping):
    """Replaces free variables by terms.

    Args:
        mapping: dict variable name -> term (team atoms only accept Var images).
    """
    if not mapping:
        return phi
    if isinstance(phi, Rel):
        return Rel(phi.name, tuple(_rename_term(t, mapping) for t in phi.args))
    if isinstance(phi, Eq):
        return Eq(_rename_term(phi.left, mapping), _rename_term(phi.right, mapping))
    if isinstance(phi, TEAM_ATOMS):
        def rn(xs):
            out = []
            for x in xs:
                image = mapping.get(x, Var(x))
                assert isinstance(image, Var), 'Team atoms only take variables'
                out.append(image.name)
            return tuple(out)
        if isinstance(phi, Con):
            return Con(rn(phi.xs))
        if isinstance(phi, Ind):
            return Ind(rn(phi.xs), rn(phi.zs), rn(phi.ys))
        return type(phi)(rn(phi.xs), rn(phi.ys))
    if isinstance(phi, QUANTIFIERS):
        inner = {k: v for k, v in mapping.items() if k != phi.var}
        return type(phi)(phi.var, substitute(phi.body, inner))
    if isinstance(phi, BINARY):
        return type(phi)(substitute(phi.left, mapping), substitute(phi.right, mapping))
    if isinstance(phi, UNARY):
        return type(phi)(substitute(phi.body, mapping))
    return phi


def conjunction(parts):
    """ Left-nested conjunction; the empty conjunction is Top. """
    parts = list(parts)
    if not parts:
        return Top()
    result = parts[0]
    for p in parts[1:]:
        result = And(result, p)
    return result


def disjunction(parts):
    parts = list(parts)
    if not parts:
        return Bottom()
    result = parts[0]
    for p in parts[1:]:
        result = Or(result, p)
    return result


def exists_all(variables, body):
    for v in reversed(list(variables)):
        body = Exists(v, body)
    return body


def forall_all(variables, body):
    for v in reversed(list(variables)):
        body = Forall(v, body)
    return body
