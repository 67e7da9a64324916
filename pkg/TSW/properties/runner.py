import json
from dataclasses import dataclass, asdict
import numpy as np
from tqdm import tqdm
from TSW.core.relation import Relation
from TSW.core.structure import Structure
from TSW.core.team import Team
from TSW.properties.instances import FormulaPool
from TSW.properties.suites import SUITES, SkipCase
from TSW.syntax.ast import Formula
from TSW.syntax.printer import render
from TSW.utils.datahandler import structure_to_dict
from TSW.utils.logger import get_logger
from TSW.utils.utils import DEFAULT_BUDGET, check_parameter_keys

# sampling without replacement materializes a permutation of the space
_PERMUTATION_LIMIT = 10 ** 6


@dataclass
class SuiteResult:
    name: str
    cases: int
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: str = None

    @property
    def ok(self):
        return self.failed == 0

    def render(self):
        line = '{n}: {s} ({p} passed, {f} failed, {k} skipped of {c})'.format(
            n=self.name, s='PASS' if self.ok else 'FAIL', p=self.passed, f=self.failed,
            k=self.skipped, c=self.cases,
        )
        if self.counterexample:
            line += '\n  counterexample: ' + self.counterexample.replace('\n', '\n  ')
        return line


@dataclass
class PropertyReport:
    seed: int
    results: list

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def render(self):
        lines = ['seed {}'.format(self.seed)] + [r.render() for r in self.results]
        lines.append('all suites passed' if self.ok else 'some suites failed')
        return '\n'.join(lines)

    def to_json(self):
        return json.dumps(
            {'seed': self.seed, 'ok': self.ok, 'results': [asdict(r) for r in self.results]},
            indent=2, sort_keys=True,
        )


def describe(item):
    """ Canonical text of one component of a case. """
    if isinstance(item, Structure):
        return json.dumps(structure_to_dict(item), sort_keys=True)
    if isinstance(item, Team):
        return item.render()
    if isinstance(item, Formula):
        return render(item)
    if isinstance(item, Relation):
        return item.render()
    if isinstance(item, (tuple, list)):
        return '(' + ', '.join(describe(x) for x in item) + ')'
    if isinstance(item, dict):
        return '{' + ', '.join('{k}->{v}'.format(k=k, v=v) for k, v in sorted(item.items())) + '}'
    return str(item)


class PropertyRunner:
    """Runs the property suites on deterministically sampled desk-scale instances.

    Args:
        seed: integer, seeds the case sampling and the per-case random choices.
        count: integer, cases per suite; 0 runs the whole instance space.
        max_structure: largest structure size.
        max_team: largest team size.
        max_formula_size: largest enumerated formula size.
        max_arity: arity cap for closures and lifted maps.
        max_index: largest ultrafilter index set.
        samples: formulas sampled per case where a suite samples formulas.
        eso_budget: search budget of the second-order evaluator.
        max_lift_relations: refuse to lift over more relations than this.
        suites: names of the suites to run, all when None.
        log_dirs: dictionary, 'logs' names a directory for the log file.

    Methods:
        run: runs the selected suites and returns a PropertyReport.
    """

    def __init__(
        self,
        seed=0,
        count=200,
        max_structure=2,
        max_team=4,
        max_formula_size=4,
        max_arity=2,
        max_index=3,
        samples=10,
        eso_budget=DEFAULT_BUDGET,
        max_lift_relations=2 ** 12,
        suites=None,
        log_dirs={'logs': None},
    ):
        self.seed = seed
        self.count = count
        self.max_structure = max_structure
        self.max_team = max_team
        self.max_formula_size = max_formula_size
        self.max_arity = max_arity
        self.max_index = max_index
        self.samples = samples
        self.eso_budget = eso_budget
        self.max_lift_relations = max_lift_relations
        self.suites = suites
        self.log_dirs = log_dirs
        self.logger = get_logger(__name__, job_dir=log_dirs.get('logs'))
        self.pool = FormulaPool()
        self._memo = {}
        self._parameters_sanity_check()

    def _parameters_sanity_check(self):
        if self.count < 0:
            self.logger.error('count must be non-negative.')
            raise ValueError('count must be non-negative.')
        for name in ('max_structure', 'max_formula_size', 'max_index'):
            if getattr(self, name) < 1:
                self.logger.error('{} must be positive.'.format(name))
                raise ValueError('{} must be positive.'.format(name))
        if self.max_arity < 2:
            self.logger.error('max_arity must be at least 2.')
            raise ValueError('max_arity must be at least 2.')
        for name in self.suites or []:
            if name not in SUITES:
                self.logger.error('Unknown suite {}.'.format(name))
                raise ValueError('Unknown suite {}.'.format(name))

    @classmethod
    def from_config(cls, conf, seed=None, count=None, suites=None):
        """ Runner from the 'properties' section of a loaded configuration. """
        settings = dict(conf['properties'])
        check_parameter_keys(settings, None, ['seed'], 0)
        check_parameter_keys(settings, None, ['count'], 200)
        check_parameter_keys(settings, None, ['max_structure'], 2)
        check_parameter_keys(settings, None, ['max_team'], 4)
        check_parameter_keys(settings, None, ['max_formula_size'], 4)
        check_parameter_keys(settings, None, ['max_index'], 3)
        check_parameter_keys(settings, None, ['samples'], 10)
        check_parameter_keys(settings, None, ['max_arity'], 2)
        check_parameter_keys(settings, None, ['suites'], None)
        return cls(
            seed=settings['seed'] if seed is None else seed,
            count=settings['count'] if count is None else count,
            max_structure=settings['max_structure'],
            max_team=settings['max_team'],
            max_formula_size=settings['max_formula_size'],
            max_arity=settings['max_arity'],
            max_index=settings['max_index'],
            samples=settings['samples'],
            eso_budget=conf['default']['eso_budget'],
            max_lift_relations=conf['default']['max_lift_relations'],
            suites=suites or settings['suites'],
            log_dirs=conf['log_dirs'],
        )

    def memo(self, key, compute):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    def _select(self, total):
        """ Sorted case indices: everything, or `count` draws from the seeded generator. """
        if self.count == 0 or self.count >= total:
            return list(range(total))
        rng = np.random.RandomState(self.seed)
        if total <= _PERMUTATION_LIMIT:
            chosen = rng.choice(total, size=self.count, replace=False)
        else:
            chosen = np.unique(rng.randint(0, total, size=self.count))
        return sorted(int(i) for i in chosen)

    @staticmethod
    def _case(axes, index):
        case = []
        for axis in reversed(axes):
            index, position = divmod(index, len(axis))
            case.append(axis[position])
        return tuple(reversed(case))

    def run_suite(self, name):
        suite = SUITES[name]
        axes = suite.space(self)
        total = int(np.prod([len(axis) for axis in axes])) if all(axes) else 0
        selected = self._select(total)
        result = SuiteResult(name, len(selected))
        for index in tqdm(selected, desc=name, disable=None):
            case = self._case(axes, index)
            rng = np.random.RandomState((self.seed * 1000003 + index) % 2 ** 32)
            try:
                failure = suite.check(self, rng, case)
            except SkipCase as e:
                self.logger.debug('{n}: skipped case {i}: {e}'.format(n=name, i=index, e=e))
                result.skipped += 1
                continue
            if failure is None:
                result.passed += 1
                continue
            result.failed += 1
            self.logger.debug('{n}: case {i} fails: {f}'.format(n=name, i=index, f=failure))
            if result.counterexample is None:
                result.counterexample = describe(case) + '\n' + failure
        self.logger.info(result.render())
        return result

    def run(self, suites=None):
        names = suites or self.suites or sorted(SUITES)
        for name in names:
            if name not in SUITES:
                self.logger.error('Unknown suite {}.'.format(name))
                raise ValueError('Unknown suite {}.'.format(name))
        return PropertyReport(self.seed, [self.run_suite(name) for name in names])
