from TSW.syntax.ast import (
    Var, Rel, Eq, Neg, And, Or, Implies, Exists, Forall, Dep, Con, Inc, Exc, Ind,
    SOSentence, free_vars, is_literal, substitute, subformulas, term_vars, atom_vars,
    conjunction, disjunction, exists_all, forall_all, relation_usage,
)
from TSW.core.team import window as window_variables
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def used_names(phi):
    names = set(relation_usage(phi))
    for node in subformulas(phi):
        names.update(atom_vars(node))
        if hasattr(node, 'var'):
            names.add(node.var)
    return names


class Translator:
    """Shared clauses of the team-to-sentence compilers.

    A translation state is a window (column variable names, None for a
    shadowed column) and a membership builder: a callable taking one term per
    column and returning the first-order formula "this row is in the team".

    Args:
        phi: the formula being translated, used for name hygiene.
        n: window size.
        parameter: name of the relation parameter, derived from phi when None.
    """

    def __init__(self, phi, n, parameter=None):
        self.phi = phi
        self.n = n
        self.taken = used_names(phi)
        self.counter = 0
        self.prefix = []
        if parameter is None:
            parameter = 'R'
            while parameter in self.taken:
                parameter = '_' + parameter
        self.parameter = parameter
        self.taken.add(parameter)
        self.window = window_variables(n)
        outside = [v for v in free_vars(phi) if v not in self.window]
        if outside:
            message = 'Free variables {v} are outside the window v0..v{m}.'.format(v=outside, m=n - 1)
            logger.error(message)
            raise ValueError(message)

    def fresh(self, stem='x'):
        while True:
            name = '_{s}{c}'.format(s=stem, c=self.counter)
            self.counter += 1
            if name not in self.taken:
                self.taken.add(name)
                return name

    def fresh_vars(self, k, stem='x'):
        return [self.fresh(stem) for _ in range(k)]

    def parameter_member(self):
        return lambda terms: Rel(self.parameter, tuple(terms))

    def sentence(self):
        matrix = self.chi(self.phi, list(self.window), self.parameter_member())
        return SOSentence(tuple(self.prefix), matrix, ((self.parameter, self.n),))

    def _rows(self, window, member, stem='x'):
        """ Fresh row variables, their terms, and the column lookup. """
        names = self.fresh_vars(len(window), stem)
        terms = [Var(v) for v in names]
        column = {x: terms[i] for i, x in enumerate(window) if x is not None}
        return names, terms, column

    def chi(self, phi, window, member):
        if is_literal(phi):
            names, terms, column = self._rows(window, member)
            return forall_all(names, Implies(member(terms), substitute(phi, column)))
        if isinstance(phi, Con):
            names, terms, column = self._rows(window, member)
            ys = self.fresh_vars(len(phi.xs), 'y')
            body = conjunction(Eq(column[x], Var(y)) for x, y in zip(phi.xs, ys))
            return exists_all(ys, forall_all(names, Implies(member(terms), body)))
        if isinstance(phi, Dep):
            v_names, v, vc = self._rows(window, member)
            w_names, w, wc = self._rows(window, member)
            same_x = conjunction(Eq(vc[x], wc[x]) for x in phi.xs)
            same_y = conjunction(Eq(vc[y], wc[y]) for y in phi.ys)
            return forall_all(
                v_names + w_names, Implies(And(And(member(v), member(w)), same_x), same_y)
            )
        if isinstance(phi, Inc):
            v_names, v, vc = self._rows(window, member)
            w_names, w, wc = self._rows(window, member)
            match = conjunction(Eq(wc[y], vc[x]) for x, y in zip(phi.xs, phi.ys))
            return forall_all(
                v_names, Implies(member(v), exists_all(w_names, And(member(w), match)))
            )
        if isinstance(phi, Exc):
            v_names, v, vc = self._rows(window, member)
            w_names, w, wc = self._rows(window, member)
            differ = disjunction(Neg(Eq(vc[x], wc[y])) for x, y in zip(phi.xs, phi.ys))
            return forall_all(v_names + w_names, Implies(And(member(v), member(w)), differ))
        if isinstance(phi, Ind):
            v_names, v, vc = self._rows(window, member)
            w_names, w, wc = self._rows(window, member)
            u_names, u, uc = self._rows(window, member)
            same_z = conjunction(Eq(vc[z], wc[z]) for z in phi.zs)
            match = conjunction(
                [Eq(uc[x], vc[x]) for x in phi.xs + phi.zs] + [Eq(uc[y], wc[y]) for y in phi.ys]
            )
            return forall_all(
                v_names + w_names,
                Implies(
                    And(And(member(v), member(w)), same_z),
                    exists_all(u_names, And(member(u), match)),
                ),
            )
        if isinstance(phi, And):
            return And(self.chi(phi.left, window, member), self.chi(phi.right, window, member))
        return self.connective(phi, window, member)

    def connective(self, phi, window, member):
        message = '{} cannot be translated here.'.format(getattr(phi, 'label', phi))
        logger.error(message)
        raise ValueError(message)
