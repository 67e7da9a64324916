from itertools import product as cartesian, combinations
from TSW.core.algebra import join_k
from TSW.core.team import Team
from TSW.syntax.ast import (
    Rel, Eq, Neg, And, Or, Exists, Forall, WeakNot, WeakOr, Exists1, Forall1,
    Dep, Con, Inc, Exc, Ind, Top, Bottom, free_vars,
)
from TSW.syntax.dialects import is_downward_closed_fragment
from TSW.semantics.tarski import FirstOrderEvaluator
from TSW.utils.logger import get_logger

STRATEGIES = ('auto', 'generic', 'fragment')


class TeamEvaluator:
    """Lax team semantics over a finite structure.

    The memo table lives on the instance and is keyed on (subformula id, team).

    Args:
        structure: Structure.
        strategy: 'generic' searches all covers and supplement functions,
            'fragment' only partitions and singleton-valued supplements (sound for
            the downward-closed fragment), 'auto' picks 'fragment' when the
            evaluated formula lies in that fragment.

    Methods:
        satisfies: A ⊨_X φ.
    """

    def __init__(self, structure, strategy='auto'):
        self.structure = structure
        self.logger = get_logger(__name__)
        if strategy not in STRATEGIES:
            message = 'Unknown strategy {}.'.format(strategy)
            self.logger.error(message)
            raise ValueError(message)
        self.strategy = strategy
        self.tarski = FirstOrderEvaluator(structure)
        self._memo = {}
        self._singletons = False
        # nonempty subsets of the domain, full domain first
        domain = structure.domain
        subsets = []
        for k in range(len(domain), 0, -1):
            subsets.extend(combinations(domain, k))
        self._supplements = subsets

    def satisfies(self, team, phi):
        if not team.is_empty():
            missing = [v for v in free_vars(phi) if v not in team.domain and v not in self.structure.constants]
            if missing:
                message = 'Free variables {m} are outside the team domain {d}.'.format(m=missing, d=team.domain)
                self.logger.error(message)
                raise ValueError(message)
        if self.strategy == 'auto':
            self._singletons = is_downward_closed_fragment(phi)
        else:
            self._singletons = self.strategy == 'fragment'
        self._memo = {}
        return self._eval(team, phi)

    def _eval(self, X, phi):
        key = (id(phi), X)
        if key in self._memo:
            return self._memo[key]
        result = self._clause(X, phi)
        self._memo[key] = result
        return result

    def _rows_satisfy(self, X, phi):
        tarski = self.tarski
        return all(tarski.holds(phi, dict(zip(X.domain, row))) for row in X.rows)

    def _clause(self, X, phi):
        if isinstance(phi, (Rel, Eq, Neg)):
            return self._rows_satisfy(X, phi)
        if isinstance(phi, Top):
            return True
        if isinstance(phi, Bottom):
            return X.is_empty()
        if isinstance(phi, (Dep, Con, Inc, Exc, Ind)):
            return X.is_empty() or self._atom(X, phi)
        if isinstance(phi, And):
            return self._eval(X, phi.left) and self._eval(X, phi.right)
        if isinstance(phi, WeakOr):
            return self._eval(X, phi.left) or self._eval(X, phi.right)
        if isinstance(phi, WeakNot):
            return X.is_empty() or not self._eval(X, phi.body)
        if isinstance(phi, Or):
            return self._split(X, phi)
        if isinstance(phi, Exists):
            return self._exists(X, phi)
        if isinstance(phi, Forall):
            return self._eval(X.duplicate(self.structure, phi.var), phi.body)
        if isinstance(phi, Exists1):
            return any(self._eval(X.with_value(a, phi.var), phi.body) for a in self.structure.domain)
        if isinstance(phi, Forall1):
            return all(self._eval(X.with_value(a, phi.var), phi.body) for a in self.structure.domain)
        message = '{} has no team semantics.'.format(getattr(phi, 'label', phi))
        self.logger.error(message)
        raise ValueError(message)

    def _atom(self, X, phi):
        if isinstance(phi, Dep):
            seen = {}
            xs = [X.position(x) for x in phi.xs]
            ys = [X.position(y) for y in phi.ys]
            for row in X.rows:
                key = tuple(row[p] for p in xs)
                value = tuple(row[p] for p in ys)
                if seen.setdefault(key, value) != value:
                    return False
            return True
        if isinstance(phi, Con):
            return len(X.relation(phi.xs)) <= 1
        if isinstance(phi, Inc):
            return X.relation(phi.xs).tuples <= X.relation(phi.ys).tuples
        if isinstance(phi, Exc):
            return not (X.relation(phi.xs).tuples & X.relation(phi.ys).tuples)
        # Ind: X[xzy] = X[xz] ⋈_|z| X[zy]
        whole = X.relation(phi.xs + phi.zs + phi.ys)
        joined = join_k(X.relation(phi.xs + phi.zs), X.relation(phi.zs + phi.ys), len(phi.zs))
        return whole == joined

    def _split(self, X, phi):
        rows = X.sorted_rows()
        sides = ('L', 'R') if self._singletons else ('L', 'R', 'B')
        for choice in cartesian(sides, repeat=len(rows)):
            left = Team(X.domain, [r for r, c in zip(rows, choice) if c != 'R'])
            if not self._eval(left, phi.left):
                continue
            right = Team(X.domain, [r for r, c in zip(rows, choice) if c != 'L'])
            if self._eval(right, phi.right):
                return True
        return False

    def _exists(self, X, phi):
        rows = X.sorted_rows()
        if self._singletons:
            options = [(a,) for a in self.structure.domain]
        else:
            options = self._supplements
        tried = set()
        for choice in cartesian(options, repeat=len(rows)):
            Y = X.supplement_rows(dict(zip(rows, choice)), phi.var)
            if Y in tried:
                continue
            tried.add(Y)
            if self._eval(Y, phi.body):
                return True
        return False


def eval_team(structure, team, phi, strategy='auto'):
    """ A ⊨_X φ under lax team semantics. """
    return TeamEvaluator(structure, strategy).satisfies(team, phi)
