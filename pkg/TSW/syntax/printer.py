from TSW.syntax.ast import (
    Var, Const, Func, Rel, Eq, Neg, And, Or, Implies, Iff, Exists, Forall, WeakNot, WeakOr,
    Exists1, Forall1, Dep, Con, Inc, Exc, Ind, Top, Bottom, SOSentence, QUANTIFIERS, UNARY,
)

# binding strength; higher binds tighter
_LEVEL = {Iff: 0, Implies: 1, Or: 4, WeakOr: 4, And: 5}
_UNARY_LEVEL = 6
_ATOM_LEVEL = 7

_SYMBOL = {And: '&', Or: '|', WeakOr: '\\/', Implies: '->', Iff: '<->'}
_QUANTIFIER = {Exists: 'exists', Forall: 'forall', Exists1: 'E1', Forall1: 'A1'}


def render_term(term):
    if isinstance(term, (Var, Const)):
        return term.name
    if isinstance(term, Func):
        return '{f}({a})'.format(f=term.name, a=', '.join(render_term(t) for t in term.args))
    raise ValueError('Not a term: {}'.format(term))


def _names(xs):
    return ' '.join(xs)


def _atom(phi):
    if isinstance(phi, Rel):
        return '{r}({a})'.format(r=phi.name, a=', '.join(render_term(t) for t in phi.args))
    if isinstance(phi, Eq):
        return '{l} = {r}'.format(l=render_term(phi.left), r=render_term(phi.right))
    if isinstance(phi, Con) or (isinstance(phi, Dep) and not phi.xs):
        return 'con({})'.format(_names(phi.ys if isinstance(phi, Dep) else phi.xs))
    if isinstance(phi, Dep):
        return 'dep({x} ; {y})'.format(x=_names(phi.xs), y=_names(phi.ys))
    if isinstance(phi, Inc):
        return 'inc({x} ; {y})'.format(x=_names(phi.xs), y=_names(phi.ys))
    if isinstance(phi, Exc):
        return 'exc({x} ; {y})'.format(x=_names(phi.xs), y=_names(phi.ys))
    if isinstance(phi, Ind):
        return 'ind({x} ; {z} ; {y})'.format(x=_names(phi.xs), z=_names(phi.zs), y=_names(phi.ys))
    if isinstance(phi, Top):
        return 'true'
    if isinstance(phi, Bottom):
        return 'false'
    raise ValueError('Cannot render {}'.format(phi))


def _level(phi):
    if type(phi) in _LEVEL:
        return _LEVEL[type(phi)]
    if isinstance(phi, QUANTIFIERS) or isinstance(phi, UNARY):
        return _UNARY_LEVEL
    return _ATOM_LEVEL


def _ends_open(phi):
    """ True when the rendering ends in a quantifier body that would swallow what follows. """
    if isinstance(phi, QUANTIFIERS):
        return True
    if isinstance(phi, UNARY):
        return _ends_open(phi.body)
    if type(phi) in _LEVEL:
        return _ends_open(phi.right)
    return False


def _render(phi, level, tail):
    if _level(phi) < level or (not tail and _ends_open(phi)):
        return '(' + _render(phi, 0, True) + ')'
    if isinstance(phi, QUANTIFIERS):
        return '{q} {x}. {b}'.format(q=_QUANTIFIER[type(phi)], x=phi.var, b=_render(phi.body, 0, True))
    if isinstance(phi, WeakNot):
        return '~' + _render(phi.body, _UNARY_LEVEL, tail)
    if isinstance(phi, Neg):
        return '!' + _render(phi.body, _UNARY_LEVEL, tail)
    if type(phi) in _LEVEL:
        own = _LEVEL[type(phi)]
        if isinstance(phi, Implies):
            left_level, right_level = own + 1, own
        elif isinstance(phi, Iff):
            left_level, right_level = own + 1, own + 1
        else:
            left_level, right_level = own, own + 1
        return '{l} {s} {r}'.format(
            l=_render(phi.left, left_level, False),
            s=_SYMBOL[type(phi)],
            r=_render(phi.right, right_level, tail),
        )
    return _atom(phi)


def render(phi):
    """ Concrete syntax that parses back to the same tree. """
    if isinstance(phi, SOSentence):
        prefix = ''.join('EX {n}:{a}. '.format(n=n, a=a) for n, a in phi.prefix)
        return prefix + _render(phi.matrix, 0, True)
    return _render(phi, 0, True)
