import os
import re
import argparse
import yaml
from TSW.utils.logger import get_logger


logger = get_logger(__name__)

DEFAULT_BUDGET = 2 ** 24
BUDGET_VARIABLE = 'TEAMLOG_BUDGET'

_CHUNKS = re.compile(r'(\d+)')


def natural_key(name):
    """ Sort key ordering 'v2' before 'v10'. """

    return tuple(
        (0, int(chunk), '') if chunk.isdigit() else (1, 0, chunk)
        for chunk in _CHUNKS.split(str(name))
        if chunk
    )


def _output_options():
    """ --json, --max-arity and --out after the command; unset ones keep the global values. """

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', dest='json', default=argparse.SUPPRESS)
    common.add_argument('--max-arity', action='store', dest='max_arity', type=int, default=argparse.SUPPRESS)
    common.add_argument('--out', action='store', dest='out', default=argparse.SUPPRESS)
    return common


def _get_parser():
    parser = argparse.ArgumentParser(prog='TSW', description='Team semantics workbench.')
    parser.add_argument('--config', action='store', dest='config_file', default='config.yml')
    parser.add_argument('--json', action='store_true', dest='json')
    parser.add_argument('--max-arity', action='store', dest='max_arity', type=int, default=None)
    parser.add_argument('--out', action='store', dest='out', default=None, help='Also write the JSON result to a file.')
    commands = parser.add_subparsers(dest='command')
    common = [_output_options()]

    ev = commands.add_parser('eval', parents=common, help='Evaluate a formula on a team.')
    ev.add_argument('--structure', required=True)
    ev.add_argument('--team', required=True)
    ev.add_argument('--formula', required=True)
    ev.add_argument('--dialect', default='foil', choices=['fo', 'fot', 'foil'])

    tr = commands.add_parser('translate', parents=common, help='Translate a team formula to a sentence.')
    tr.add_argument('--dialect', required=True, choices=['fot', 'foil'])
    tr.add_argument('--arity', required=True, type=int)
    tr.add_argument('--formula', required=True)
    tr.add_argument('--guard', action='store_true', help='Wrap the result in the chi+ guard.')

    so = commands.add_parser('eval-so', parents=common, help='Evaluate an (existential) second-order sentence.')
    so.add_argument('--structure', required=True)
    so.add_argument('--sentence', required=True)
    so.add_argument('--param', action='append', default=[], help='NAME=FILE')

    cl = commands.add_parser('closure', parents=common, help='Compute the closure of a relation family.')
    cl.add_argument('--structure', required=True)
    cl.add_argument('--relations', default=None)

    cm = commands.add_parser('check-map', parents=common, help='Check a team map.')
    cm.add_argument('--map', required=True)
    group = cm.add_mutually_exclusive_group()
    group.add_argument('--pi', action='store_true')
    group.add_argument('--elementary', action='store_true')
    group.add_argument('--boolean', type=int, default=None)
    group.add_argument('--tarski-vaught', dest='tarski_vaught', default=None)

    fm = commands.add_parser('find-map', parents=common, help='Search a partial elementary team map.')
    fm.add_argument('--source', required=True)
    fm.add_argument('--relations', default=None)
    fm.add_argument('--target', required=True)

    ul = commands.add_parser('ultra', parents=common, help='Ultraproducts and Los checks.')
    ul.add_argument('--ultrafilter', required=True)
    ul.add_argument('--structures', nargs='+', required=True)
    ul.add_argument('--teams', nargs='+', default=None)
    ul.add_argument('--formula', default=None)
    ul.add_argument('--dialect', default='fot', choices=['fot', 'foil'])

    li = commands.add_parser('limit', parents=common, help='Direct limit of a directed system.')
    li.add_argument('--system', required=True)
    li.add_argument('--cofinal', nargs='+', default=None)

    pr = commands.add_parser('properties', parents=common, help='Run the property suites.')
    pr.add_argument('--seed', type=int, default=None)
    pr.add_argument('--count', type=int, default=None)
    pr.add_argument('--suite', action='append', dest='suites', default=None)
    return parser


def parse_args(argv=None):
    """ Parse CLI arguments. """

    parser = _get_parser()
    args = vars(parser.parse_args(argv))
    if args['command'] is None:
        logger.error('Select a command.')
        raise ValueError('Select a command.')
    return args


def check_parameter_keys(parameter, needed_keys, optional_keys=None, default_value=None):
    if needed_keys:
        for key in needed_keys:
            if key not in parameter:
                logger.error('{p} is missing key {k}'.format(p=parameter, k=key))
                raise ValueError('{p} is missing key {k}'.format(p=parameter, k=key))
    if optional_keys:
        for key in optional_keys:
            if key not in parameter:
                logger.info('Setting {k} in {p} to {d}'.format(k=key, p=parameter, d=default_value))
                parameter[key] = default_value


def setup(config_file='config.yml'):
    """Loads the configuration file and fills in missing defaults.

    A missing file yields the built-in defaults. The TEAMLOG_BUDGET environment
    variable overrides default.eso_budget.
    """

    if config_file and os.path.exists(config_file):
        with open(config_file, 'r') as f:
            conf = yaml.load(f, Loader=yaml.FullLoader) or {}
    else:
        logger.debug('No configuration file at {}, using defaults.'.format(config_file))
        conf = {}
    if not isinstance(conf, dict):
        logger.error('Malformed configuration {}.'.format(config_file))
        raise ValueError('Malformed configuration {}.'.format(config_file))

    for section in ['default', 'log_dirs', 'properties']:
        conf.setdefault(section, {})
    check_parameter_keys(conf['default'], None, ['max_arity'], 3)
    check_parameter_keys(conf['default'], None, ['eso_budget'], DEFAULT_BUDGET)
    check_parameter_keys(conf['default'], None, ['max_lift_relations'], 2 ** 12)
    check_parameter_keys(conf['log_dirs'], None, ['logs'], None)
    conf['default']['eso_budget'] = get_budget(conf['default']['eso_budget'])
    return conf


def get_budget(default=DEFAULT_BUDGET):
    """ ESO search budget, TEAMLOG_BUDGET taking precedence over the given default. """

    value = os.environ.get(BUDGET_VARIABLE)
    if value is None:
        return int(default)
    try:
        budget = int(value)
    except ValueError:
        logger.error('{v} is not a valid {n}.'.format(v=value, n=BUDGET_VARIABLE))
        raise ValueError('{v} is not a valid {n}.'.format(v=value, n=BUDGET_VARIABLE))
    if budget < 1:
        logger.error('{n} must be positive.'.format(n=BUDGET_VARIABLE))
        raise ValueError('{n} must be positive.'.format(n=BUDGET_VARIABLE))
    return budget
