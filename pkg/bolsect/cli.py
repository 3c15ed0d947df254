# MIT License
#
# Copyright (c) 2020 Christopher Henderson, chris@chenderson.org
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.


"""
Command line front end: ``bolsect verify-tables``, ``loop-suite``, ``reproduce``, ``classify`` and
``show``. Exit codes are 0 on success, 1 when a verification fails and 2 for configuration,
catalog or I/O problems.
"""

import argparse
import json
import logging
import sys

from bolsect._catalog import build_loop, emit_report, golden_mismatches, load_catalog, load_expected, \
    run_classification, verify_tables
from bolsect._groups import REPRODUCERS, run_suites
from bolsect.config import MAX_CATALOG_DIM, CliConfig
from bolsect.errors import CatalogError, HomomorphismError, ReproductionError, SectionError

log = logging.getLogger(__name__)

OK = 0
FAILED = 1
USAGE = 2


def _select(entries, group):
    if group is None:
        return entries
    chosen = [e for e in entries if e.tag == group]
    if not chosen:
        raise CatalogError(group, 'lookup', 'known groups are {}'.format(', '.join(e.tag for e in entries)))
    return chosen


def _write(config, text):
    if config.out is None:
        sys.stdout.write(text)
        return
    with open(config.out, 'w') as fh:
        fh.write(text)
    log.info('wrote %s', config.out)


def _dump(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + '\n'


def cmd_verify_tables(config):
    entries = _select(load_catalog(config.catalog, validate=False), config.group)
    checks = verify_tables(entries)
    failed = [c for c in checks if not c.ok]
    if config.format == 'json':
        _write(config, _dump({'checks': [c.to_dict() for c in checks], 'failed': len(failed)}))
    else:
        lines = ['{:<4} {:<16} {}{}'.format('ok' if c.ok else 'FAIL', c.entry, c.check,
                                            ': ' + c.detail if c.detail else '') for c in checks]
        lines.append('{} checks, {} failed'.format(len(checks), len(failed)))
        _write(config, '\n'.join(lines) + '\n')
    return FAILED if failed else OK


def cmd_loop_suite(config):
    entry = _select(load_catalog(config.catalog), config.group)[0]
    triples = [t for t in entry.triples if t.loop is not None]
    if not triples:
        log.warning('%s has no loop models', entry.tag)
    results = []
    status = OK
    for triple in triples:
        try:
            loop = build_loop(entry, triple.loop, config.seed)
            reports = run_suites(loop, config.samples, config.tolerance, config.seed)
        except (SectionError, HomomorphismError) as error:
            log.error('%s %s: %s', entry.tag, triple.id, error)
            results.append((triple, triple.loop.get('name'), [], str(error)))
            status = FAILED
            continue
        if not all(r.verdict for r in reports):
            status = FAILED
        results.append((triple, loop.name, reports, None))
    if config.format == 'json':
        _write(config, _dump({'group': entry.tag, 'loops': [
            {'triple': t.id, 'loop': name, 'error': error, 'suites': [r.to_dict() for r in reports]}
            for t, name, reports, error in results]}))
    else:
        lines = []
        for triple, name, reports, error in results:
            lines.append('{} {} ({})'.format(entry.tag, triple.id, name))
            if error is not None:
                lines.append('  error: {}'.format(error))
            for r in reports:
                lines.append('  {:<20} {:>6} samples  max residual {:.3e}  {}'.format(
                    r.suite, r.samples, r.max_residual, 'pass' if r.verdict else 'FAIL'))
        _write(config, '\n'.join(lines) + '\n' if lines else '')
    return status


def cmd_reproduce(config):
    params = {'tolerance': config.tolerances.membership}
    if config.reproducer == 'prop12':
        params['d'] = config.d
    elif config.reproducer == 'prop19':
        params['r_values'] = tuple(config.r)
    try:
        report = REPRODUCERS[config.reproducer](**params)
    except ReproductionError as error:
        log.error('%s', error)
        return FAILED
    if config.format == 'json':
        _write(config, _dump(report.to_dict()))
    else:
        lines = ['{} {}'.format(report.name, ' '.join('{}={}'.format(k, v)
                                                      for k, v in sorted(report.parameters.items())))]
        for row in report.rows:
            lines.append('  ' + '  '.join('{}: {}'.format(k, v) for k, v in sorted(row.items())))
        for check, ok in sorted(report.checks.items()):
            lines.append('  {:<40} {}'.format(check, 'holds' if ok else 'FAILS'))
        lines.append('verdict: {}'.format('reproduced' if report.verdict else 'not reproduced'))
        _write(config, '\n'.join(lines) + '\n')
    return OK if report.verdict else FAILED


def cmd_classify(config):
    entries = _select(load_catalog(config.catalog), config.group)
    verdicts = run_classification(config.max_dim, entries=entries, samples=config.samples,
                                  tolerance=config.tolerance, seed=config.seed, d=config.d)
    _write(config, emit_report(verdicts, config.format, entries))
    expected = load_expected(config.catalog)
    if expected is None:
        log.warning('no expected classification shipped with the catalog')
        return FAILED if any(not v.excluded and v.loop is None for v in verdicts) else OK
    groups = {e.tag for e in entries if e.dim <= config.max_dim}
    mismatches = golden_mismatches(verdicts, expected, groups)
    for group, triple, want, got in mismatches:
        log.error('%s %s: expected %s, got %s', group, triple, want and want['status'], got and got['status'])
    return FAILED if mismatches else OK


def cmd_show(config):
    entry = _select(load_catalog(config.catalog, validate=False), config.group)[0]
    record = {
        'tag': entry.tag,
        'title': entry.title,
        'dim': entry.dim,
        'summands': list(entry.summand_tags),
        'involutions': {name: {k: v for k, v in spec.items() if k in ('plus', 'minus', 'factors', 'citation')}
                        for name, spec in entry.involution_specs.items()},
        'subspaces': {name: {'basis': list(spec.basis), 'params': spec.params, 'flagged': spec.flagged}
                      for name, spec in entry.subspaces.items()},
        'witnesses': sorted(entry.witness_specs),
        'triples': [{'id': t.id, 'citation': t.citation, 'evidence': [e['kind'] for e in t.evidence],
                     'loop': t.loop and t.loop.get('name')} for t in entry.triples],
    }
    if config.format == 'json':
        _write(config, _dump(record))
        return OK
    lines = ['{} ({}), dim {}, summands {}'.format(entry.title, entry.tag, entry.dim,
                                                  ' + '.join(entry.summand_tags))]
    for name, spec in sorted(record['subspaces'].items()):
        extra = ''
        if spec['params']:
            extra += ' params ' + ', '.join('{} in {}'.format(k, v) for k, v in sorted(spec['params'].items()))
        if spec['flagged']:
            extra += ' flagged ' + spec['flagged']
        lines.append('  {:<14} <{}>{}'.format(name, ', '.join(spec['basis']), extra))
    for name in sorted(record['involutions']):
        lines.append('  involution {}'.format(name))
    for name in record['witnesses']:
        lines.append('  witness {}'.format(name))
    for t in record['triples']:
        lines.append('  triple {:<20} [{}] {}'.format(t['id'], t['citation'], t['loop'] or ', '.join(t['evidence'])))
    _write(config, '\n'.join(lines) + '\n')
    return OK


COMMANDS = {
    'verify-tables': cmd_verify_tables,
    'loop-suite': cmd_loop_suite,
    'reproduce': cmd_reproduce,
    'classify': cmd_classify,
    'show': cmd_show,
}


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--group', help='catalog group tag, e.g. sl3r or sl2r+so3')
    common.add_argument('--samples', type=int, default=1000, help='random samples per suite (default 1000)')
    common.add_argument('--tol', type=float, default=1e-8, dest='tolerance',
                        help='loop identity tolerance (default 1e-8)')
    common.add_argument('--seed', type=int, default=0, help='sampling seed (default 0)')
    common.add_argument('--format', choices=('text', 'json'), default='text', help='report format (default text)')
    common.add_argument('--out', metavar='PATH', help='write the report to PATH instead of stdout')
    common.add_argument('--max-dim', type=int, default=MAX_CATALOG_DIM, dest='max_dim',
                        help='largest group dimension to classify (default {})'.format(MAX_CATALOG_DIM))
    common.add_argument('--d', type=float, default=2.0, help='spiral base for prop12 (default 2)')
    common.add_argument('--r', type=float, nargs='+', default=[0.0, 1.0, -1.0, 2.0],
                        help='parameter values for prop19 (default 0 1 -1 2)')
    common.add_argument('--catalog', metavar='PATH', help='catalog directory (default $BOLSECT_CATALOG or packaged)')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG')

    parser = argparse.ArgumentParser(prog='bolsect', description='Verify the classification of differentiable '
                                                                 'Bol loops with small semi-simple groups.')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    sub.add_parser('verify-tables', parents=[common], help='run the exact catalog checks')
    sub.add_parser('loop-suite', parents=[common], help='property-test the loops of one group')
    reproduce = sub.add_parser('reproduce', parents=[common], help='rerun a coset counterexample')
    reproduce.add_argument('reproducer', choices=sorted(REPRODUCERS))
    sub.add_parser('classify', parents=[common], help='classify every catalog triple')
    sub.add_parser('show', parents=[common], help='print one catalog entry')
    return parser


def _config(args):
    options = {k: v for k, v in vars(args).items() if v is not None}
    options['r'] = tuple(options['r'])
    return CliConfig(**options)


def main(argv=None):
    """
    :Returns: the process exit code.
    """
    args = _parser().parse_args(argv)
    try:
        config = _config(args)
    except ValueError as error:
        sys.stderr.write('bolsect: {}\n'.format(error))
        return USAGE
    logging.basicConfig(level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(config.verbose, 2)],
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return COMMANDS[config.command](config)
    except (CatalogError, OSError) as error:
        log.error('%s', error)
        return USAGE


if __name__ == '__main__':
    sys.exit(main())
