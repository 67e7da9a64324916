from dataclasses import dataclass, field
from TSW.utils.utils import natural_key


def _tuple_key(t):
    return tuple(natural_key(a) for a in t)


@dataclass(frozen=True)
class Relation:
    """An arity-tagged set of tuples of element identifiers.

    Two empty relations of different arities are different values.

    Args:
        arity: integer, the length of every tuple.
        tuples: iterable of element sequences; stored as a frozenset of tuples.
    """

    arity: int
    tuples: frozenset = frozenset()

    def __post_init__(self):
        tuples = frozenset(tuple(t) for t in self.tuples)
        object.__setattr__(self, 'tuples', tuples)
        if self.arity < 0:
            raise ValueError('Negative arity {}.'.format(self.arity))
        for t in tuples:
            if len(t) != self.arity:
                raise ValueError(
                    'Tuple {t} does not have arity {n}.'.format(t=t, n=self.arity)
                )

    @classmethod
    def empty(cls, arity):
        return cls(arity, frozenset())

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.sorted_tuples())

    def __contains__(self, t):
        return tuple(t) in self.tuples

    def is_empty(self):
        return not self.tuples

    def is_singleton(self):
        return len(self.tuples) == 1

    def issubset(self, other):
        return self.arity == other.arity and self.tuples <= other.tuples

    def sorted_tuples(self):
        return sorted(self.tuples, key=_tuple_key)

    def sort_key(self):
        """ Canonical ordering: arity, size, then tuples. """
        return (self.arity, len(self.tuples), [_tuple_key(t) for t in self.sorted_tuples()])

    def render(self):
        body = ','.join('(' + ','.join(t) + ')' for t in self.sorted_tuples())
        return '{' + body + '}/' + str(self.arity)

    def to_dict(self):
        return {'arity': self.arity, 'tuples': [list(t) for t in self.sorted_tuples()]}

    def __repr__(self):
        return 'Relation(' + self.render() + ')'


@dataclass(frozen=True)
class RelationFamily:
    """A finite set of relations, optionally remembering how many products an arity cap skipped.

    Attributes:
        members: frozenset of Relation.
        truncated: number of informative products the arity cap skipped.
    """

    members: frozenset = frozenset()
    truncated: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'members', frozenset(self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members, key=Relation.sort_key))

    def __contains__(self, relation):
        return relation in self.members

    def of_arity(self, n):
        return [r for r in self if r.arity == n]

    def arities(self):
        return sorted({r.arity for r in self.members})

    def union(self, other):
        return RelationFamily(self.members | frozenset(other))

    def issubset(self, other):
        return self.members <= frozenset(other)
