import sys
import json
from TSW.core.algebra import closure
from TSW.limits.direct import direct_limit, cofinal_restriction_check
from TSW.limits.system import validate_system
from TSW.maps.checks import check_partial_team_isomorphism, check_boolean_embedding, check_tarski_vaught
from TSW.maps.elementary import check_elementary_map, find_partial_elementary_map
from TSW.properties.runner import PropertyRunner
from TSW.semantics.so import eval_eso, SearchBudgetExceeded
from TSW.semantics.tarski import eval_fo_with_relations
from TSW.semantics.team import eval_team
from TSW.syntax.parser import parse_formula
from TSW.syntax.printer import render
from TSW.translate.coding import chi_plus
from TSW.translate.foil import foil_to_eso
from TSW.translate.fot import fot_to_fo
from TSW.ultra.los import verify_los
from TSW.ultra.product import ultraproduct_structures, team_ultraproduct
from TSW.utils.datahandler import DataHandler, dump, structure_to_dict, team_to_dict
from TSW.utils.logger import get_logger
from TSW.utils.utils import setup, parse_args

logger = get_logger(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


def _emit(args, text, data):
    if args.get('out'):
        dump(data, args['out'])
    if args['json']:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _verdict(args, value, extra=None):
    data = {'result': value}
    data.update(extra or {})
    _emit(args, 'true' if value else 'false', data)
    return EXIT_TRUE if value else EXIT_FALSE


def _report(args, defects):
    text = '\n'.join(d.render() for d in defects) if defects else 'pass'
    _emit(args, text, {'ok': not defects, 'defects': [d.to_dict() for d in defects]})
    return EXIT_FALSE if defects else EXIT_TRUE


def _max_arity(args, conf):
    return args['max_arity'] or conf['default']['max_arity']


def _eval(args, conf, data):
    A = data.load_structure(args['structure'])
    X = data.load_team(args['team'])
    phi = parse_formula(args['formula'], args['dialect'], constants=A.constants)
    return _verdict(args, eval_team(A, X, phi))


def _translate(args, conf, data):
    phi = parse_formula(args['formula'], args['dialect'])
    if args['dialect'] == 'fot':
        sentence = fot_to_fo(phi, args['arity'])
    else:
        sentence = foil_to_eso(phi, args['arity'])
    if args['guard']:
        sentence = chi_plus(sentence)
    _emit(args, render(sentence), {'sentence': render(sentence), 'parameters': [list(p) for p in sentence.parameters]})
    return EXIT_TRUE


def _eval_so(args, conf, data):
    A = data.load_structure(args['structure'])
    params = {}
    for binding in args['param']:
        name, _, path = binding.partition('=')
        if not name or not path:
            logger.error('Parameter binding {} is not NAME=FILE.'.format(binding))
            raise ValueError('Parameter binding {} is not NAME=FILE.'.format(binding))
        params[name] = data.load_relation(path)
    sentence = parse_formula(
        args['sentence'], 'so', constants=A.constants,
        parameters=[(name, r.arity) for name, r in params.items()],
    )
    if sentence.prefix:
        value = eval_eso(A, sentence, params, conf['default']['eso_budget'])
    else:
        value = eval_fo_with_relations(A, sentence, params)
    return _verdict(args, value)


def _closure(args, conf, data):
    A = data.load_structure(args['structure'])
    family = data.load_relations(args['relations']) if args['relations'] else []
    result = closure(A, family, _max_arity(args, conf))
    _emit(
        args,
        '\n'.join(r.render() for r in result),
        {'relations': [r.to_dict() for r in result], 'truncated': result.truncated},
    )
    return EXIT_TRUE


def _check_map(args, conf, data):
    f = data.load_map(args['map'])
    if args['elementary']:
        return _verdict(args, check_elementary_map(f))
    if args['boolean'] is not None:
        return _report(args, check_boolean_embedding(f, args['boolean']))
    if args['tarski_vaught']:
        with open(args['tarski_vaught'], 'r') as corpus_file:
            lines = [line.strip() for line in corpus_file]
        corpus = [parse_formula(line, 'fot', constants=f.target.constants) for line in lines if line and not line.startswith('#')]
        return _report(args, check_tarski_vaught(f, corpus))
    return _report(args, check_partial_team_isomorphism(f, _max_arity(args, conf)))


def _find_map(args, conf, data):
    A = data.load_structure(args['source'])
    B = data.load_structure(args['target'])
    family = data.load_relations(args['relations']) if args['relations'] else []
    f = find_partial_elementary_map(A, family, B, _max_arity(args, conf))
    if f is None:
        _emit(args, 'none', {'found': False})
        return EXIT_FALSE
    text = '\n'.join('{x} -> {y}'.format(x=X.render(), y=Y.render()) for X, Y in f.items())
    payload = f.to_dict()
    payload['found'] = True
    _emit(args, text, payload)
    return EXIT_TRUE


def _ultra(args, conf, data):
    U = data.load_ultrafilter(args['ultrafilter'])
    structures = [data.load_structure(p) for p in args['structures']]
    product = ultraproduct_structures(structures, U)
    payload = {'principal': product.principal, 'structure': structure_to_dict(product.structure)}
    if args['formula'] is None:
        _emit(args, json.dumps(payload['structure'], sort_keys=True), payload)
        return EXIT_TRUE
    if not args['teams']:
        logger.error('--formula needs --teams.')
        raise ValueError('--formula needs --teams.')
    teams = [data.load_team(p) for p in args['teams']]
    phi = parse_formula(args['formula'], args['dialect'], constants=structures[0].constants)
    report = verify_los(structures, teams, U, phi, args['dialect'], product)
    payload['team'] = team_to_dict(team_ultraproduct(teams, U, product))
    payload['los'] = report.to_dict()
    text = 'factor side {f} {s}, product side {p}: {r}'.format(
        f=report.factor_side, s=list(report.factor_set), p=report.product_side, r='pass' if report.ok else 'FAIL')
    _emit(args, text, payload)
    return EXIT_TRUE if report.ok else EXIT_FALSE


def _limit(args, conf, data):
    system = data.load_system(args['system'])
    defects = validate_system(system)
    if defects:
        return _report(args, defects)
    if args['cofinal']:
        return _report(args, cofinal_restriction_check(system, args['cofinal']))
    limit = direct_limit(system)
    payload = {
        'structure': structure_to_dict(limit.structure),
        'admissible': [r.to_dict() for r in limit.admissible],
    }
    text = '\n'.join(
        ['elements: ' + ' '.join(limit.structure.domain)]
        + ['{n} = {r}'.format(n=n, r=r.render()) for n, r in sorted(limit.structure.relations.items())]
        + ['admissible relations: {}'.format(len(limit.admissible))]
    )
    _emit(args, text, payload)
    return EXIT_TRUE


def run(config_file, seed=None, count=None, suites=None, as_json=False):
    """ Runs the property suites configured in config_file and prints the report. """
    conf = setup(config_file)
    runner = PropertyRunner.from_config(conf, seed=seed, count=count, suites=suites)
    report = runner.run()
    print(report.to_json() if as_json else report.render())
    return EXIT_TRUE if report.ok else EXIT_FALSE


_COMMANDS = {
    'eval': _eval,
    'translate': _translate,
    'eval-so': _eval_so,
    'closure': _closure,
    'check-map': _check_map,
    'find-map': _find_map,
    'ultra': _ultra,
    'limit': _limit,
}


def main(argv=None):
    try:
        args = parse_args(argv)
        if args['command'] == 'properties':
            return run(args['config_file'], args['seed'], args['count'], args['suites'], args['json'])
        conf = setup(args['config_file'])
        return _COMMANDS[args['command']](args, conf, DataHandler())
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_TRUE
    except (ValueError, SearchBudgetExceeded) as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
