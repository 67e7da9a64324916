from TSW.syntax.ast import Var, Eq, Neg, And, Or, Exists, Forall, WeakNot, WeakOr, Exists1, Forall1, exists_all
from TSW.syntax.dialects import check_dialect
from TSW.translate.base import Translator


class FOTTranslator(Translator):
    """FOT to first-order logic over one relation parameter.

    A weak quantifier over x appends a column for x; an earlier column for the
    same variable is shadowed. Membership in the extended team is
    "row without the new column is in the team, and the new column equals y".
    """

    def connective(self, phi, window, member):
        if isinstance(phi, WeakOr):
            return Or(self.chi(phi.left, window, member), self.chi(phi.right, window, member))
        if isinstance(phi, WeakNot):
            names = self.fresh_vars(len(window))
            nonempty = exists_all(names, member([Var(v) for v in names]))
            return Or(Neg(nonempty), Neg(self.chi(phi.body, window, member)))
        if isinstance(phi, (Exists1, Forall1)):
            y = self.fresh('y')
            inner = [None if v == phi.var else v for v in window] + [phi.var]

            def extended(terms, member=member, y=y):
                return And(member(terms[:-1]), Eq(terms[-1], Var(y)))

            body = self.chi(phi.body, inner, extended)
            return Exists(y, body) if isinstance(phi, Exists1) else Forall(y, body)
        return super().connective(phi, window, member)


def fot_to_fo(phi, n, parameter=None):
    """χ(R) with A ⊨_X φ iff A ⊨ χ(X[v0..v(n-1)]) for teams X over the window.

    Returns:
        SOSentence with an empty prefix and the single parameter (R, n).
    """
    check_dialect(phi, 'fot')
    return FOTTranslator(phi, n, parameter).sentence()
