from dataclasses import dataclass
from itertools import combinations
from TSW.core.relation import Relation
from TSW.utils.utils import natural_key
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def window(n):
    """ The variables v0, ..., v(n-1). """
    return tuple('v{}'.format(i) for i in range(n))


@dataclass(frozen=True)
class Team:
    """A set of assignments over a common variable domain.

    The domain is kept in natural variable order and every row is a tuple
    aligned with it, so equal teams compare and hash equal.

    Args:
        domain: iterable of variable names.
        rows: iterable of value tuples aligned with `domain` as given.

    Methods:
        assignments: rows as dicts.
        restrict: X restricted to a set of variables.
        with_value: X(a/x).
        supplement: X(F/x).
        duplicate: X(A/x).
        relation: X[x⃗].
    """

    domain: tuple
    rows: frozenset

    def __post_init__(self):
        domain = tuple(self.domain)
        if len(set(domain)) != len(domain):
            message = 'Team domain {} repeats a variable.'.format(domain)
            logger.error(message)
            raise ValueError(message)
        order = sorted(range(len(domain)), key=lambda i: natural_key(domain[i]))
        rows = frozenset(tuple(row[i] for i in order) for row in self.rows)
        for row in rows:
            if len(row) != len(domain):
                message = 'Row {r} does not match the team domain {d}.'.format(r=row, d=domain)
                logger.error(message)
                raise ValueError(message)
        object.__setattr__(self, 'domain', tuple(domain[i] for i in order))
        object.__setattr__(self, 'rows', rows)
        object.__setattr__(self, '_position', {x: i for i, x in enumerate(self.domain)})

    @classmethod
    def from_assignments(cls, domain, assignments):
        domain = tuple(domain)
        rows = []
        for s in assignments:
            if set(s) != set(domain):
                message = 'Assignment {s} does not have domain {d}.'.format(s=s, d=domain)
                logger.error(message)
                raise ValueError(message)
            rows.append(tuple(s[x] for x in domain))
        return cls(domain, rows)

    @classmethod
    def empty(cls, domain=()):
        return cls(tuple(domain), frozenset())

    @classmethod
    def unit(cls):
        """ The team {∅}. """
        return cls((), [()])

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.assignments())

    def is_empty(self):
        return not self.rows

    def position(self, x):
        if x not in self._position:
            message = 'Variable {} is not in the team domain.'.format(x)
            logger.error(message)
            raise ValueError(message)
        return self._position[x]

    def sorted_rows(self):
        return sorted(self.rows, key=lambda r: tuple(natural_key(a) for a in r))

    def assignments(self):
        return [dict(zip(self.domain, row)) for row in self.sorted_rows()]

    def relation(self, xs):
        """ X[x⃗]; repetitions allowed. """
        positions = [self.position(x) for x in xs]
        return Relation(len(positions), [tuple(row[p] for p in positions) for row in self.rows])

    def restrict(self, variables):
        variables = set(variables)
        missing = variables - set(self.domain)
        if missing:
            message = 'Cannot restrict to {}: not in the team domain.'.format(sorted(missing))
            logger.error(message)
            raise ValueError(message)
        keep = [i for i, x in enumerate(self.domain) if x in variables]
        return Team(
            tuple(self.domain[i] for i in keep),
            [tuple(row[i] for i in keep) for row in self.rows],
        )

    def _extend(self, x, pairs):
        """ Rows s(a/x) for (row, a) in pairs. """
        if x in self._position:
            p = self._position[x]
            return Team(self.domain, [row[:p] + (a,) + row[p + 1:] for row, a in pairs])
        return Team(self.domain + (x,), [row + (a,) for row, a in pairs])

    def with_value(self, a, x):
        """ X(a/x). """
        return self._extend(x, [(row, a) for row in self.rows])

    def supplement(self, F, x):
        """X(F/x).

        Args:
            F: callable taking an assignment dict, returning a nonempty set of elements.
            x: variable name; an existing variable is overwritten.
        """
        pairs = []
        for row in self.sorted_rows():
            s = dict(zip(self.domain, row))
            try:
                values = F(s)
            except (KeyError, IndexError, TypeError):
                message = 'Supplement function undefined on {}.'.format(s)
                logger.error(message)
                raise ValueError(message)
            if not values:
                message = 'Supplement function is empty on {}.'.format(s)
                logger.error(message)
                raise ValueError(message)
            pairs.extend((row, a) for a in values)
        return self._extend(x, pairs)

    def supplement_rows(self, choice, x):
        """ X(F/x) with F given as a dict row tuple -> iterable of elements. """
        return self._extend(x, [(row, a) for row in self.rows for a in choice[row]])

    def duplicate(self, structure, x):
        """ X(A/x). """
        return self._extend(x, [(row, a) for row in self.rows for a in structure.domain])

    def union(self, other):
        if set(self.domain) != set(other.domain):
            message = 'Cannot unite teams over {a} and {b}.'.format(a=self.domain, b=other.domain)
            logger.error(message)
            raise ValueError(message)
        return Team(self.domain, self.rows | other.rows)

    def issubset(self, other):
        return self.domain == other.domain and self.rows <= other.rows

    def subteams(self, min_size=0):
        """ All subteams, by increasing size. """
        rows = self.sorted_rows()
        for k in range(min_size, len(rows) + 1):
            for chosen in combinations(rows, k):
                yield Team(self.domain, chosen)

    def render(self):
        body = ', '.join(
            '{' + ', '.join('{x}:{a}'.format(x=x, a=a) for x, a in zip(self.domain, row)) + '}'
            for row in self.sorted_rows()
        )
        return '[' + body + '] over (' + ' '.join(self.domain) + ')'


def team_of_relation(relation):
    """ team(R): rows read positionally over v0, ..., v(n-1). """
    return Team(window(relation.arity), relation.tuples)


def relation_of_team(team, xs):
    return team.relation(xs)


def supplement(team, F, x):
    return team.supplement(F, x)


def duplicate(team, structure, x):
    return team.duplicate(structure, x)


def restrict(team, variables):
    return team.restrict(variables)


def all_teams(structure, domain, max_size=None):
    """ Every team over `domain` with at most max_size rows, by increasing size. """
    full = Team(tuple(domain), structure.tuples(len(domain)))
    for X in full.subteams():
        if max_size is not None and len(X) > max_size:
            break
        yield X
