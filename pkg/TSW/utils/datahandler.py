import os
import json
from TSW.core.relation import Relation, RelationFamily
from TSW.core.structure import Signature, Structure
from TSW.core.team import Team
from TSW.limits.system import DirectedSystem
from TSW.maps.teammap import TeamMap, lift_embedding
from TSW.ultra.filters import Ultrafilter, principal_ultrafilter
from TSW.utils.logger import get_logger

logger = get_logger(__name__)


class DataHandler:
    """Reads and writes the JSON files of the workbench.

    File references inside map and system files are resolved against the
    directory of the referring file. Loaded structures are cached per path, so
    maps sharing a structure file share the Structure object.

    Args:
        base_dir: directory against which relative paths given directly are resolved.

    Methods:
        load_structure, load_team, load_relations, load_map, load_ultrafilter, load_system.
    """

    def __init__(self, base_dir=None):
        self.base_dir = base_dir or os.getcwd()
        self.logger = get_logger(__name__)
        self._structures = {}

    def _path(self, path, relative_to=None):
        if os.path.isabs(path):
            return path
        return os.path.normpath(os.path.join(relative_to or self.base_dir, path))

    def _read(self, path):
        if not os.path.exists(path):
            self.logger.error('File {} does not exist.'.format(path))
            raise ValueError('File {} does not exist.'.format(path))
        with open(path, 'r') as f:
            try:
                return json.load(f)
            except json.JSONDecodeError as e:
                self.logger.error('{p} is not valid JSON: {e}'.format(p=path, e=e))
                raise ValueError('{p} is not valid JSON: {e}'.format(p=path, e=e))

    def _key(self, data, key, path):
        if not isinstance(data, dict):
            self.logger.error('{} must hold a JSON object.'.format(path))
            raise ValueError('{} must hold a JSON object.'.format(path))
        if key not in data:
            self.logger.error('{p} is missing key {k}'.format(p=path, k=key))
            raise ValueError('{p} is missing key {k}'.format(p=path, k=key))
        return data[key]

    def load_structure(self, path, relative_to=None):
        path = self._path(path, relative_to)
        if path not in self._structures:
            self._structures[path] = structure_from_dict(self._read(path))
            self.logger.debug('Loaded structure {}.'.format(path))
        return self._structures[path]

    def load_team(self, path):
        return team_from_dict(self._read(self._path(path)))

    def load_relations(self, path):
        data = self._read(self._path(path))
        if not isinstance(data, list):
            self.logger.error('{} must hold a list of relations.'.format(path))
            raise ValueError('{} must hold a list of relations.'.format(path))
        return RelationFamily(relation_from_dict(r) for r in data)

    def load_relation(self, path):
        return relation_from_dict(self._read(self._path(path)))

    def load_map(self, path):
        """ TeamMap file: {"source": FILE, "target": FILE, "entries": [{"from": R, "to": R}, ...]}. """
        path = self._path(path)
        data = self._read(path)
        folder = os.path.dirname(path)
        source = self.load_structure(self._key(data, 'source', path), folder)
        target = self.load_structure(self._key(data, 'target', path), folder)
        entries = {}
        for e in _field(data, 'entries', list, path):
            X = relation_from_dict(_field(e, 'from', dict, path), path)
            entries[X] = relation_from_dict(_field(e, 'to', dict, path), path)
        return TeamMap(source, target, entries)

    def load_ultrafilter(self, path):
        """ {"index": [...], "principal_at": i} or {"index": [...], "members": [[...], ...]}. """
        path = self._path(path)
        data = self._read(path)
        index = self._key(data, 'index', path)
        if 'principal_at' in data:
            return principal_ultrafilter(index, data['principal_at'])
        return Ultrafilter(index, self._key(data, 'members', path))

    def load_system(self, path):
        """System file.

        {"index": [...], "edges": [[i, j], ...], "structures": {i: FILE},
         "maps": [{"edge": [i, j], "map": FILE} | {"edge": [i, j], "embedding": {a: b}}],
         "max_arity": 2}

        Edges with an element embedding are lifted by closure; the diagram is then
        completed with identities and composites.
        """
        path = self._path(path)
        data = self._read(path)
        folder = os.path.dirname(path)
        index = [str(i) for i in self._key(data, 'index', path)]
        max_arity = data.get('max_arity', 2)
        structures = {
            str(i): self.load_structure(p, folder) for i, p in _field(data, 'structures', dict, path).items()
        }
        edges = [tuple(str(k) for k in e) for e in _field(data, 'edges', list, path, [])]
        maps = {}
        for item in _field(data, 'maps', list, path, []):
            i, j = (str(k) for k in self._key(item, 'edge', path))
            if i not in structures or j not in structures:
                self.logger.error('{p}: edge {e} names an index without a structure.'.format(p=path, e=(i, j)))
                raise ValueError('{p}: edge {e} names an index without a structure.'.format(p=path, e=(i, j)))
            if 'map' in item:
                maps[(i, j)] = self.load_map(self._path(item['map'], folder))
            else:
                embedding = {str(a): str(b) for a, b in _field(item, 'embedding', dict, path).items()}
                maps[(i, j)] = lift_embedding(embedding, structures[i], structures[j], max_arity)
        return DirectedSystem.from_edges(index, edges, structures, maps, max_arity)


def _fail(msg):
    logger.error(msg)
    raise ValueError(msg)


def _field(data, key, kind, what, default=None):
    """ data[key] checked against kind; a missing key yields default unless default is None. """

    if not isinstance(data, dict):
        _fail('{w} must be a JSON object, got {d!r}.'.format(w=what, d=data))
    if key not in data:
        if default is None:
            _fail('{w} is missing key {k}'.format(w=what, k=key))
        return default
    value = data[key]
    if not isinstance(value, kind):
        names = ' or '.join(t.__name__ for t in (kind if isinstance(kind, tuple) else (kind,)))
        _fail('{w}: {k} must be a {t}, got {v!r}.'.format(w=what, k=key, t=names, v=value))
    return value


def _arity(data, what):
    value = _field(data, 'arity', (int, str), what)
    try:
        arity = int(value)
    except ValueError:
        _fail('{w}: arity {v!r} is not an integer.'.format(w=what, v=value))
    if arity < 0:
        _fail('{w}: arity must not be negative.'.format(w=what))
    return arity


def _row(t, what):
    if not isinstance(t, (list, tuple)):
        _fail('{w}: {t!r} is not a tuple.'.format(w=what, t=t))
    return tuple(str(a) for a in t)


def relation_from_dict(data, what='relation'):
    arity = _arity(data, what)
    rows = [_row(t, what) for t in _field(data, 'tuples', list, what, [])]
    if any(len(t) != arity for t in rows):
        _fail('{w}: every tuple must have {n} entries.'.format(w=what, n=arity))
    return Relation(arity, rows)


def structure_from_dict(data):
    domain = [str(a) for a in _field(data, 'domain', list, 'structure')]
    relations = {
        name: relation_from_dict(r, 'relation {}'.format(name))
        for name, r in _field(data, 'relations', dict, 'structure', {}).items()
    }
    functions = {}
    arities = {}
    for name, f in _field(data, 'functions', dict, 'structure', {}).items():
        what = 'function {}'.format(name)
        arities[name] = _arity(f, what)
        table = {}
        for entry in _field(f, 'table', list, what):
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                _fail('{w}: table entries are [arguments, value] pairs.'.format(w=what))
            table[_row(entry[0], what)] = str(entry[1])
        functions[name] = table
    constants = {name: str(value) for name, value in _field(data, 'constants', dict, 'structure', {}).items()}
    signature = Signature({n: r.arity for n, r in relations.items()}, arities, constants)
    return Structure(signature, domain, relations, functions, constants)


def structure_to_dict(structure):
    return {
        'domain': list(structure.domain),
        'relations': {n: r.to_dict() for n, r in sorted(structure.relations.items())},
        'functions': {
            n: {
                'arity': structure.signature.functions[n],
                'table': [[list(args), v] for args, v in sorted(table.items(), key=lambda kv: [structure.index(a) for a in kv[0]])],
            }
            for n, table in sorted(structure.functions.items())
        },
        'constants': dict(sorted(structure.constants.items())),
    }


def team_from_dict(data):
    domain = [str(x) for x in _field(data, 'domain', list, 'team')]
    rows = _field(data, 'rows', list, 'team', [])
    if not all(isinstance(row, dict) for row in rows):
        _fail('team: rows must be objects mapping variables to elements.')
    assignments = [{str(x): str(a) for x, a in row.items()} for row in rows]
    return Team.from_assignments(domain, assignments)


def team_to_dict(team):
    return {'domain': list(team.domain), 'rows': [dict(s) for s in team.assignments()]}


def dump(data, path):
    with open(path, 'w') as f:
        json.dump(data, f, indent=2, sort_keys=True)
