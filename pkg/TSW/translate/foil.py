from TSW.syntax.ast import Var, Rel, And, Or, Iff, Implies, Exists, Forall, free_vars, exists_all, forall_all
from TSW.syntax.dialects import check_dialect
from TSW.translate.base import Translator


class FOILTranslator(Translator):
    """FOIL to existential second-order logic over one relation parameter.

    Splits and existential quantifiers introduce relation variables, hoisted
    into the prefix. Both range only over the free variables of the subformula
    they serve; by locality this does not change satisfaction.
    """

    def _project(self, window, member, keep):
        """ Membership in the team restricted to the columns `keep`. """
        if list(keep) == list(window):
            return member

        def projected(terms, window=window, member=member, keep=list(keep)):
            names = []
            full = []
            for x in window:
                if x in keep:
                    full.append(terms[keep.index(x)])
                else:
                    name = self.fresh()
                    names.append(name)
                    full.append(Var(name))
            return exists_all(names, member(full))

        return projected

    def _live(self, window, phi):
        free = set(free_vars(phi))
        return [x for x in window if x is not None and x in free]

    def _relation_variable(self, arity, stem):
        name = self.fresh(stem)
        self.prefix.append((name, arity))
        return name

    def connective(self, phi, window, member):
        if isinstance(phi, Or):
            keep = self._live(window, phi)
            outer = self._project(window, member, keep)
            r1 = self._relation_variable(len(keep), 'R')
            r2 = self._relation_variable(len(keep), 'R')
            names = self.fresh_vars(len(keep))
            terms = [Var(v) for v in names]
            cover = forall_all(names, Iff(outer(terms), Or(Rel(r1, terms), Rel(r2, terms))))
            left = self.chi(phi.left, keep, lambda ts, r=r1: Rel(r, tuple(ts)))
            right = self.chi(phi.right, keep, lambda ts, r=r2: Rel(r, tuple(ts)))
            return And(And(cover, left), right)
        if isinstance(phi, (Exists, Forall)):
            keep = self._live(window, phi)
            outer = self._project(window, member, keep)
            if phi.var not in free_vars(phi.body):
                return self.chi(phi.body, keep, outer)
            inner = keep + [phi.var]
            if isinstance(phi, Forall):
                return self.chi(phi.body, inner, lambda ts, m=outer: m(ts[:-1]))
            s = self._relation_variable(len(keep) + 1, 'S')
            names = self.fresh_vars(len(keep))
            terms = [Var(v) for v in names]
            y = self.fresh('y')
            total = forall_all(
                names, Implies(outer(terms), Exists(y, Rel(s, tuple(terms) + (Var(y),))))
            )
            names2 = self.fresh_vars(len(keep))
            terms2 = [Var(v) for v in names2]
            y2 = self.fresh('y')
            projection = forall_all(
                names2 + [y2], Implies(Rel(s, tuple(terms2) + (Var(y2),)), outer(terms2))
            )
            body = self.chi(phi.body, inner, lambda ts, r=s: Rel(r, tuple(ts)))
            return And(And(total, projection), body)
        return super().connective(phi, window, member)


def foil_to_eso(phi, n, parameter=None):
    """Prenex ESO sentence χ(R) with A ⊨_X φ iff A ⊨ χ(X[v0..v(n-1)]).

    The prefix has at most two relation variables per split and one per
    existential quantifier.
    """
    check_dialect(phi, 'foil')
    return FOILTranslator(phi, n, parameter).sentence()
