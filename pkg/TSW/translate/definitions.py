"""FOT formulas with a fixed meaning, used by the definability checks."""
from TSW.syntax.ast import Var, Rel, Eq, And, Inc, WeakNot, WeakOr, Exists1, Forall1, conjunction


def weak_implies(left, right):
    return WeakOr(WeakNot(left), right)


def constancy_definition(xs, stem='y'):
    """ ∃¹y⃗ ⋀ xᵢ = yᵢ, equivalent to con(x⃗). """
    ys = _names(xs, stem)
    body = conjunction(Eq(Var(x), Var(y)) for x, y in zip(xs, ys))
    for y in reversed(ys):
        body = Exists1(y, body)
    return body


def team_characterisation(relation, xs, stem='y'):
    """θ = R(x⃗) ∧ ∀¹y⃗ (R(y⃗) ⤳ y⃗ ⊆ x⃗).

    On nonempty teams θ holds iff X[x⃗] equals the interpretation of R.
    """
    ys = _names(xs, stem)
    body = weak_implies(Rel(relation, tuple(Var(y) for y in ys)), Inc(tuple(ys), tuple(xs)))
    for y in reversed(ys):
        body = Forall1(y, body)
    return And(Rel(relation, tuple(Var(x) for x in xs)), body)


def _names(xs, stem):
    ys = ['{s}{i}'.format(s=stem, i=i) for i in range(len(xs))]
    if set(ys) & set(xs):
        return _names(xs, stem + '_')
    return ys
