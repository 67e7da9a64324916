from dataclasses import dataclass, field
from itertools import product as cartesian
from TSW.core.relation import Relation
from TSW.syntax.ast import Var, Const, Func
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


def _fail(message):
    logger.error(message)
    raise ValueError(message)


@dataclass(frozen=True)
class Signature:
    """Relation, function and constant symbols.

    Args:
        relations: dict name -> arity (>= 0).
        functions: dict name -> arity (>= 1).
        constants: iterable of names.
    """

    relations: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    constants: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'relations', dict(self.relations))
        object.__setattr__(self, 'functions', dict(self.functions))
        object.__setattr__(self, 'constants', frozenset(self.constants))
        names = list(self.relations) + list(self.functions) + list(self.constants)
        if len(names) != len(set(names)):
            _fail('Symbol names must be distinct across relations, functions and constants.')
        if any(a < 0 for a in self.relations.values()):
            _fail('Relation arities must be non-negative.')
        if any(a < 1 for a in self.functions.values()):
            _fail('Function arities must be positive.')

    def max_arity(self):
        """ Largest arity a symbol interpretation takes as a relation (graphs add one). """
        arities = list(self.relations.values()) + [a + 1 for a in self.functions.values()]
        if self.constants:
            arities.append(1)
        return max(arities, default=0)


@dataclass(frozen=True, eq=False)
class Structure:
    """A finite structure.

    Args:
        signature: Signature.
        domain: nonempty sequence of element identifiers (strings), in canonical order.
        relations: dict name -> Relation.
        functions: dict name -> dict from argument tuples to elements (total tables).
        constants: dict name -> element.

    Methods:
        full: the relation domain^n.
        tuples: domain^n in canonical order.
        evaluate: value of a term under an assignment.
        symbol_relations: every symbol interpretation as a relation (graphs for functions).
        all_relations: every n-ary relation in canonical order.
    """

    signature: Signature
    domain: tuple
    relations: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'domain', tuple(str(a) for a in self.domain))
        object.__setattr__(self, 'relations', dict(self.relations))
        object.__setattr__(
            self, 'functions',
            {k: {tuple(t): v for t, v in table.items()} for k, table in self.functions.items()},
        )
        object.__setattr__(self, 'constants', dict(self.constants))
        object.__setattr__(self, '_cache', {})
        self._check()

    def _check(self):
        sig = self.signature
        elements = set(self.domain)
        if not self.domain:
            _fail('Structure domain must be nonempty.')
        if len(elements) != len(self.domain):
            _fail('Structure domain has repeated elements.')
        if set(self.relations) != set(sig.relations):
            _fail('Relation interpretations {} do not match the signature.'.format(sorted(self.relations)))
        if set(self.functions) != set(sig.functions):
            _fail('Function interpretations {} do not match the signature.'.format(sorted(self.functions)))
        if set(self.constants) != set(sig.constants):
            _fail('Constant interpretations {} do not match the signature.'.format(sorted(self.constants)))
        for name, rel in self.relations.items():
            if rel.arity != sig.relations[name]:
                _fail('Relation {} has the wrong arity.'.format(name))
            for t in rel.tuples:
                if not set(t) <= elements:
                    _fail('Relation {n} mentions {t} outside the domain.'.format(n=name, t=t))
        for name, table in self.functions.items():
            arity = sig.functions[name]
            for args in cartesian(self.domain, repeat=arity):
                if args not in table:
                    _fail('Function {n} is undefined on {a}.'.format(n=name, a=args))
                if table[args] not in elements:
                    _fail('Function {n} leaves the domain on {a}.'.format(n=name, a=args))
            if len(table) != len(self.domain) ** arity:
                _fail('Function {} has arguments outside the domain.'.format(name))
        for name, value in self.constants.items():
            if value not in elements:
                _fail('Constant {} is interpreted outside the domain.'.format(name))

    def __eq__(self, other):
        if not isinstance(other, Structure):
            return NotImplemented
        return (
            self.signature == other.signature
            and set(self.domain) == set(other.domain)
            and self.relations == other.relations
            and self.functions == other.functions
            and self.constants == other.constants
        )

    def __hash__(self):
        return hash((frozenset(self.domain), tuple(sorted(self.relations.items(), key=lambda kv: kv[0]))))

    @property
    def size(self):
        return len(self.domain)

    def index(self, element):
        order = self._cache.get('index')
        if order is None:
            order = {a: i for i, a in enumerate(self.domain)}
            self._cache['index'] = order
        return order[element]

    def tuples(self, n):
        """ domain^n in canonical (lexicographic by domain order) order. """
        key = ('tuples', n)
        if key not in self._cache:
            self._cache[key] = list(cartesian(self.domain, repeat=n))
        return self._cache[key]

    def full(self, n):
        key = ('full', n)
        if key not in self._cache:
            self._cache[key] = Relation(n, self.tuples(n))
        return self._cache[key]

    def singleton(self, element):
        if element not in self.domain:
            _fail('{} is not an element of the structure.'.format(element))
        return Relation(1, [(element,)])

    def relation(self, name):
        if name not in self.relations:
            _fail('Unknown relation symbol {}.'.format(name))
        return self.relations[name]

    def function_graph(self, name):
        table = self.functions[name]
        return Relation(self.signature.functions[name] + 1, [args + (v,) for args, v in table.items()])

    def constant_relation(self, name):
        return Relation(1, [(self.constants[name],)])

    def symbol_relations(self):
        """ dict symbol name -> interpretation as a relation. """
        out = dict(self.relations)
        for name in self.functions:
            out[name] = self.function_graph(name)
        for name in self.constants:
            out[name] = self.constant_relation(name)
        return out

    def evaluate(self, term, env):
        """Value of a term.

        Args:
            term: Var, Const or Func.
            env: mapping variable name -> element.
        """
        if isinstance(term, Var):
            if term.name not in env:
                _fail('Unbound variable {}.'.format(term.name))
            return env[term.name]
        if isinstance(term, Const):
            if term.name not in self.constants:
                _fail('Unknown constant symbol {}.'.format(term.name))
            return self.constants[term.name]
        if isinstance(term, Func):
            if term.name not in self.functions:
                _fail('Unknown function symbol {}.'.format(term.name))
            if len(term.args) != self.signature.functions[term.name]:
                _fail('Function {} applied to the wrong number of arguments.'.format(term.name))
            args = tuple(self.evaluate(a, env) for a in term.args)
            return self.functions[term.name][args]
        _fail('Not a term: {}.'.format(term))

    def all_relations(self, n):
        """ Every n-ary relation, ordered by the binary encoding over tuples(n). """
        tuples = self.tuples(n)
        for mask in range(2 ** len(tuples)):
            yield Relation(n, [t for i, t in enumerate(tuples) if mask >> i & 1])

    def count_relations(self, n):
        return 2 ** (self.size ** n)

    def rename(self, mapping):
        """ Isomorphic copy with elements renamed by a bijection. """
        if set(mapping) != set(self.domain) or len(set(mapping.values())) != len(self.domain):
            _fail('Renaming must be a bijection on the domain.')
        def img(t):
            return tuple(mapping[a] for a in t)
        return Structure(
            self.signature,
            [mapping[a] for a in self.domain],
            {k: Relation(r.arity, [img(t) for t in r.tuples]) for k, r in self.relations.items()},
            {k: {img(a): mapping[v] for a, v in tb.items()} for k, tb in self.functions.items()},
            {k: mapping[v] for k, v in self.constants.items()},
        )


def pure_set(elements):
    """ Structure over the empty signature. """
    return Structure(Signature(), list(elements))
