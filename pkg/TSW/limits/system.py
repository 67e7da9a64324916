from itertools import product as cartesian
import networkx as nx
from TSW.core.algebra import closure
from TSW.core.report import Defect, sorted_report
from TSW.maps.checks import check_partial_team_isomorphism
from TSW.maps.teammap import identity_map
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _fail(message):
    logger.error(message)
    raise ValueError(message)


class DirectedSystem:
    """Structures indexed by a finite preorder together with team maps f_{i,j} for i <= j.

    Args:
        index: ordered index names.
        order: iterable of pairs (i, j) meaning i <= j; taken as given, see validate_system.
        structures: dict index -> Structure.
        maps: dict (i, j) -> TeamMap.
        partial_isomorphisms: the maps are declared partial team isomorphisms.
        max_arity: arity cap used when checking the maps.

    Methods:
        leq: i <= j.
        upsets: every nonempty upward closed subset.
        restrict: the subsystem on a subset of the index.
    """

    def __init__(self, index, order, structures, maps, partial_isomorphisms=True, max_arity=2):
        self.index = tuple(str(i) for i in index)
        self.order = frozenset((str(i), str(j)) for i, j in order)
        self.structures = {str(i): A for i, A in structures.items()}
        self.maps = {(str(i), str(j)): f for (i, j), f in maps.items()}
        self.partial_isomorphisms = partial_isomorphisms
        self.max_arity = max_arity
        self.logger = get_logger(__name__)

    @classmethod
    def from_edges(cls, index, edges, structures, edge_maps, max_arity=2, partial_isomorphisms=True):
        """Completes a diagram on an acyclic graph to a directed system.

        The order is the reflexive-transitive closure of the edges. f_{i,i} is the
        identity on the domain of an outgoing edge map, or for maximal i on the closure
        of the singletons and every incoming range. f_{i,k} composes the edge maps
        along a shortest path.

        Args:
            index: ordered index names.
            edges: iterable of (i, j) with i < j.
            structures: dict index -> Structure.
            edge_maps: dict edge -> TeamMap.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(str(i) for i in index)
        graph.add_edges_from((str(i), str(j)) for i, j in edges)
        if not nx.is_directed_acyclic_graph(graph):
            _fail('Edges of a directed system must not form a cycle.')
        edge_maps = {(str(i), str(j)): f for (i, j), f in edge_maps.items()}
        missing = [e for e in graph.edges if e not in edge_maps]
        if missing:
            _fail('No team map given for edges {}.'.format(missing))
        structures = {str(i): A for i, A in structures.items()}
        reach = nx.transitive_closure_dag(graph)
        order = set(reach.edges) | {(i, i) for i in graph.nodes}

        maps = {}
        for i in nx.topological_sort(graph):
            successors = sorted(graph.successors(i))
            if successors:
                domain = edge_maps[(i, successors[0])].domain()
            else:
                A = structures[i]
                seeds = [A.singleton(a) for a in A.domain]
                for p, _ in graph.in_edges(i):
                    seeds.extend(edge_maps[(p, i)].range())
                domain = closure(A, seeds, max_arity)
            maps[(i, i)] = identity_map(structures[i], domain)
        for i, k in reach.edges:
            path = nx.shortest_path(graph, i, k)
            f = edge_maps[(path[0], path[1])]
            for a, b in zip(path[1:], path[2:]):
                f = f.then(edge_maps[(a, b)])
            maps[(i, k)] = f
        return cls(index, order, structures, maps, partial_isomorphisms, max_arity)

    def leq(self, i, j):
        return (i, j) in self.order

    def graph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.index)
        graph.add_edges_from((i, j) for i, j in self.order if i != j)
        return graph

    def above(self, i):
        return [j for j in self.index if self.leq(i, j)]

    def upper_bounds(self, indices, within=None):
        within = self.index if within is None else within
        return [k for k in within if all(self.leq(i, k) for i in indices)]

    def upsets(self):
        """ Every nonempty upset, ordered by size then index order. """
        out = []
        for mask in range(1, 2 ** len(self.index)):
            members = [i for k, i in enumerate(self.index) if mask >> k & 1]
            chosen = set(members)
            if all(j in chosen for i in members for j in self.above(i)):
                out.append(tuple(members))
        return sorted(out, key=lambda u: (len(u), [self.index.index(i) for i in u]))

    def is_cofinal(self, J):
        return all(any(self.leq(i, j) for j in J) for i in self.index)

    def is_directed(self, J=None):
        J = self.index if J is None else tuple(J)
        return bool(J) and all(self.upper_bounds((i, j), J) for i in J for j in J)

    def restrict(self, J):
        J = tuple(j for j in self.index if j in set(str(k) for k in J))
        return DirectedSystem(
            J,
            [(i, j) for i, j in self.order if i in J and j in J],
            {j: self.structures[j] for j in J},
            {(i, j): f for (i, j), f in self.maps.items() if i in J and j in J},
            self.partial_isomorphisms,
            self.max_arity,
        )

    def element_maps(self):
        """ dict (i, j) -> element map of f_{i,j}. """
        return {key: f.element_map() for key, f in self.maps.items()}

    def is_element_total(self):
        return all(f.is_element_total() for f in self.maps.values())


def validate_system(system, partial_isomorphisms=None):
    """Every violated condition of a directed system.

    Kinds: 'reflexive', 'transitive', 'directed', 'structure', 'signature', 'map',
    'endpoints', 'domain' (i, j), 'identity' (i,), 'range' (i, j, k),
    'composition' (i, j, k), and 'map-PI*' / 'map-closure-*' when the system is
    declared a system of partial team isomorphisms.
    """
    S = system
    if partial_isomorphisms is None:
        partial_isomorphisms = S.partial_isomorphisms
    defects = []
    for i in S.index:
        if not S.leq(i, i):
            defects.append(Defect('reflexive', (i,)))
    for (i, j), (k, l) in cartesian(sorted(S.order), repeat=2):
        if j == k and not S.leq(i, l):
            defects.append(Defect('transitive', (i, j, l)))
    if not S.index:
        defects.append(Defect('directed', (), 'empty index set'))
    for i, j in cartesian(S.index, repeat=2):
        if not S.upper_bounds((i, j)):
            defects.append(Defect('directed', (i, j), 'no upper bound'))
    defects.extend(Defect('structure', (i,)) for i in S.index if i not in S.structures)
    if defects:
        return sorted_report(defects)
    signature = S.structures[S.index[0]].signature
    for i in S.index:
        if S.structures[i].signature != signature:
            defects.append(Defect('signature', (i,)))
    pairs = sorted(S.order, key=lambda p: (S.index.index(p[0]), S.index.index(p[1])))
    for i, j in pairs:
        if (i, j) not in S.maps:
            defects.append(Defect('map', (i, j), 'missing team map'))
    if any(d.kind == 'map' for d in defects):
        return sorted_report(defects)
    for i, j in pairs:
        f = S.maps[(i, j)]
        if f.source != S.structures[i] or f.target != S.structures[j]:
            defects.append(Defect('endpoints', (i, j)))
        if f.domain() != S.maps[(i, i)].domain():
            defects.append(Defect('domain', (i, j)))
    for i in S.index:
        if any(X != Y for X, Y in S.maps[(i, i)].items()):
            defects.append(Defect('identity', (i,)))
    for i, j in pairs:
        for k in S.above(j):
            f, g, h = S.maps[(i, j)], S.maps[(j, k)], S.maps[(i, k)]
            if not f.range().issubset(g.domain()):
                defects.append(Defect('range', (i, j, k)))
            elif f.then(g).entries != h.entries:
                defects.append(Defect('composition', (i, j, k)))
    if partial_isomorphisms:
        for i, j in pairs:
            for d in check_partial_team_isomorphism(S.maps[(i, j)], S.max_arity):
                defects.append(Defect('map-' + d.kind, (i, j) + tuple(d.witnesses), d.detail))
    report = sorted_report(defects)
    S.logger.debug('Directed system over {n} indices: {d} defects.'.format(n=len(S.index), d=len(report)))
    return report
