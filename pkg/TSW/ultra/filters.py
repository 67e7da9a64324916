from dataclasses import dataclass
from itertools import combinations
from TSW.core.report import Defect, sorted_report
from TSW.utils.utils import natural_key
from TSW.utils.logger import get_logger

logger = get_logger(__name__)

MAX_ENUMERATION_INDEX = 4


def _fail(message):
    logger.error(message)
    raise ValueError(message)


def subsets(index):
    """ Every subset of a finite index, by size then index order. """
    index = tuple(index)
    out = []
    for k in range(len(index) + 1):
        out.extend(frozenset(c) for c in combinations(index, k))
    return out


def _render_set(S):
    return '{' + ','.join(sorted(S, key=natural_key)) + '}'


@dataclass(frozen=True)
class Ultrafilter:
    """A family of subsets of a finite index set.

    Validity is not enforced on construction; see validate_ultrafilter.

    Args:
        index: ordered index names.
        members: iterable of subsets of the index.
    """

    index: tuple
    members: frozenset

    def __post_init__(self):
        index = tuple(str(i) for i in self.index)
        if len(set(index)) != len(index):
            _fail('Index set {} repeats an element.'.format(index))
        object.__setattr__(self, 'index', index)
        object.__setattr__(self, 'members', frozenset(frozenset(str(i) for i in S) for S in self.members))

    def __contains__(self, S):
        return frozenset(S) in self.members

    def __len__(self):
        return len(self.members)

    def principal_index(self):
        """ The i with {i} a member, or None. """
        for i in self.index:
            if frozenset([i]) in self.members:
                return i
        return None

    def render(self):
        ordered = sorted(self.members, key=lambda S: (len(S), sorted(S, key=natural_key)))
        return '{' + ', '.join(_render_set(S) for S in ordered) + '}'


def principal_ultrafilter(index, i):
    index = tuple(str(k) for k in index)
    i = str(i)
    if i not in index:
        _fail('{i} is not in the index set {I}.'.format(i=i, I=index))
    return Ultrafilter(index, [S for S in subsets(index) if i in S])


def validate_ultrafilter(U):
    """Every violated ultrafilter axiom of U, as Defects.

    Kinds: 'index' (member not a subset of I), 'empty', 'upward',
    'intersection', 'maximality'.
    """
    defects = []
    index = frozenset(U.index)
    for S in U.members:
        if not S <= index:
            defects.append(Defect('index', (_render_set(S),), 'member is not a subset of the index set'))
    if frozenset() in U.members:
        defects.append(Defect('empty', (), 'the empty set is a member'))
    everything = subsets(U.index)
    for S in U.members:
        for T in everything:
            if S <= T and T not in U.members:
                defects.append(Defect('upward', (_render_set(S), _render_set(T))))
        for T in U.members:
            if S & T not in U.members:
                defects.append(Defect('intersection', (_render_set(S), _render_set(T))))
    for S in everything:
        if (S in U.members) == (index - S in U.members):
            defects.append(Defect('maximality', (_render_set(S),), 'exactly one of S and its complement must be a member'))
    return sorted_report(defects)


def enumerate_ultrafilters(index):
    """Every valid ultrafilter on a small index set, by brute force over all families.

    Raises:
        ValueError when the index has more than MAX_ENUMERATION_INDEX elements.
    """
    index = tuple(str(i) for i in index)
    if len(index) > MAX_ENUMERATION_INDEX:
        _fail('Refusing to enumerate families over {} indices.'.format(len(index)))
    candidates = subsets(index)
    found = []
    half = 2 ** len(index) // 2
    for mask in range(2 ** len(candidates)):
        # maximality forces exactly half of all subsets, and never the empty one
        if mask & 1 or bin(mask).count('1') != half:
            continue
        U = Ultrafilter(index, [S for k, S in enumerate(candidates) if mask >> k & 1])
        if not validate_ultrafilter(U):
            found.append(U)
    return found
