#!/usr/bin/env python3
"""CLI for hessberg."""

import argparse
import csv
import io
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from hessberg import __version__
from hessberg.catalog import FORMATS, CatalogBuilder, catalog_digest, emit_catalog
from hessberg.errors import InputError, ParseError, PropertyViolation
from hessberg.hessenberg import enumerate_all, parse_hessenberg, parse_hessenberg_spaces, to_hessenberg_function
from hessberg.nilpotent import connect_chain, fixed_points, parse_nilpotent
from hessberg.report import (
    betti_payload,
    chain_payload,
    compact,
    describe_payload,
    fixed_points_payload,
    render,
    spaces_payload,
    to_json,
    witness_payload,
)
from hessberg.rootsys import CartanDatum, build_root_system, parse_cartan
from hessberg.semisimple import betti_numbers, disconnection_witness, is_connected_by_criterion
from hessberg.settings import DEFAULT_SETTINGS
from hessberg.validation import PropertySuite
from hessberg.weyl import parse_levi, weyl_group, weyl_order

logger = logging.getLogger(__name__)

COMMANDS = (
    'describe',
    'hessenberg-enumerate',
    'betti',
    'connected',
    'witness',
    'fixed-points',
    'chain',
    'catalog',
    'validate-all',
)


@dataclass
class Job:
    command: str
    cartan: Optional[CartanDatum]
    options: Dict[str, Any] = field(default_factory=dict)
    output: Optional[str] = None
    format: str = DEFAULT_SETTINGS['FORMAT']


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as ParseError (exit code 1) instead of exiting with 2."""

    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def build_parser():
    parser = _ArgumentParser(prog='hessberg', description="Hessenberg varieties from root data")
    parser.add_argument('--version', action='version', version=f'hessberg {__version__}')

    common = _ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true', help='Log progress to stderr')
    common.add_argument('--out', help='Write output to this file instead of stdout')
    common.add_argument('--force', action='store_true', help='Disable the Weyl order and rank guards')

    sub = parser.add_subparsers(dest='command', metavar='COMMAND')

    def command(name, help, formats=('text', 'json'), typed=True):
        p = sub.add_parser(name, help=help, parents=[common])
        if typed:
            p.add_argument('--type', required=True, dest='cartan', help='Cartan type, e.g. A2 or G2')
        p.add_argument('--format', choices=formats, default=DEFAULT_SETTINGS['FORMAT'])
        return p

    def levi_and_hess(p, forms='neg=-a1,-a2 | h=2,3,3 | b | g | all'):
        p.add_argument('--levi', default="", help='1-based simple roots of the Levi, e.g. "1,3" ("" is the torus)')
        p.add_argument('--hess', required=True, help=forms)

    command('describe', 'Root system summary')
    command('hessenberg-enumerate', 'List every Hessenberg space', formats=('text', 'json', 'csv'))

    p = command('betti', 'Cells and Betti numbers of B(S, H)')
    levi_and_hess(p)
    p.add_argument('--json', dest='json_path', help='Also write the JSON table to this file')

    levi_and_hess(command('connected', 'Connectedness of B(S, H) by Betti numbers and by the criterion'))
    levi_and_hess(command('witness', 'Point component certifying that B(S, H) is disconnected'),
                  forms='neg=-a1,-a2 | h=2,3,3 | b | g')

    p = command('fixed-points', 'Torus-fixed points of B(N, H)')
    p.add_argument('--nilpotent', default="", help='Support of N, e.g. "a1,a1+a2" ("" is N = 0)')
    p.add_argument('--hess', required=True, help='neg=... | h=... | b | g | all')

    p = command('chain', 'Rational curves from a fixed point down to the base flag')
    p.add_argument('--nilpotent', default="")
    p.add_argument('--hess', required=True)
    p.add_argument('--start', default="e", help='Reduced word, e.g. "s1 s2"')
    p.set_defaults(format='json')

    p = command('catalog', 'Every (Levi, Hessenberg space) pair of a type', formats=FORMATS)
    p.add_argument('--jobs', type=int, default=DEFAULT_SETTINGS['JOBS'])

    p = command('validate-all', 'Run the exhaustive property suite', typed=False)
    p.add_argument('--max-rank', type=int, default=DEFAULT_SETTINGS['MAX_RANK'])
    p.add_argument('--jobs', type=int, default=DEFAULT_SETTINGS['JOBS'])
    return parser


def make_job(args) -> Job:
    options = vars(args).copy()
    cartan = parse_cartan(options.pop('cartan')) if options.get('cartan') else None
    command = options.pop('command')
    fmt = options.pop('format')
    out = options.pop('out')
    if command == 'validate-all':
        # --out names the JSON report; the summary still goes to stdout
        options['report'] = out
        out = None
    return Job(command=command, cartan=cartan, options=options, output=out, format=fmt)


def _group(job):
    rs = build_root_system(job.cartan)
    if job.options.get('force'):
        logger.warning(f"Weyl order guard disabled for {job.cartan}")
        return rs, weyl_group(rs, None)
    return rs, weyl_group(rs, DEFAULT_SETTINGS['WEYL_ORDER_LIMIT'])


def _spaces(job, rs):
    limit = None if job.options.get('force') else DEFAULT_SETTINGS['ENUMERATION_RANK_LIMIT']
    return parse_hessenberg_spaces(job.options['hess'], rs, limit)


def _enumerating(job):
    return job.options['hess'].strip() == 'all'


def _collect(job, blocks):
    """
    Join per-space (text, payload, exit code) blocks into (output, json, exit code).

    With ``--hess all`` the JSON is an array with one payload per space.
    """
    payloads = [payload for _, payload, _ in blocks]
    code = max(c for _, _, c in blocks)
    json_text = to_json(payloads if _enumerating(job) else payloads[0])
    if job.format == 'json':
        return json_text, json_text, code
    return "\n".join(text for text, _, _ in blocks), json_text, code


def _semisimple_inputs(job):
    rs, W = _group(job)
    return parse_levi(W, job.options['levi']), parse_hessenberg(job.options['hess'], rs)


def _verdicts(M, H):
    table = betti_numbers(M, H)
    criterion = is_connected_by_criterion(M, H)
    witness = None if criterion else disconnection_witness(M, H)
    agree = (table.components == 1) == criterion
    if not agree:
        logger.error(f"Betti numbers and criterion disagree for {M.rs.cartan} levi=[{M}] {H}")
    return table, criterion, witness, agree


def do_describe(job):
    rs = build_root_system(job.cartan)
    order = weyl_order(job.cartan)
    if job.format == 'json':
        return to_json(describe_payload(rs, order)), 0
    return render(
        'describe',
        cartan=rs.cartan.name,
        rank=rs.rank,
        n_positive=rs.n_positive,
        order=order,
        highest=rs.highest_root,
        matrix=rs.cartan.matrix,
        roots=rs.positive_roots,
    ), 0


def do_enumerate(job):
    rs = build_root_system(job.cartan)
    limit = None if job.options['force'] else DEFAULT_SETTINGS['ENUMERATION_RANK_LIMIT']
    spaces = enumerate_all(rs, limit)
    h = [to_hessenberg_function(H) for H in spaces] if rs.cartan.family == 'A' else None
    if job.format == 'json':
        return to_json(spaces_payload(rs, spaces, h)), 0
    if job.format == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(['index', 'size', 'neg', 'h'])
        for k, H in enumerate(spaces):
            writer.writerow([k + 1, H.size, compact(H.vectors()), compact(h[k]) if h else ""])
        return buffer.getvalue(), 0
    return render('spaces', cartan=rs.cartan.name, spaces=spaces, h=h), 0


def _betti_block(M, H):
    table, criterion, witness, agree = _verdicts(M, H)
    text = render('betti', cartan=M.rs.cartan.name, levi=str(M), hess=str(H), cells=table.cells,
                  betti=table.counts, poincare=table.poincare)
    text += render('connected', connected=table.components == 1, criterion=criterion,
                   n0=table.components, witness=witness)
    payload = betti_payload(M, H, table, table.components == 1, witness)
    return text, payload, 0 if agree else 2


def do_betti(job):
    rs, W = _group(job)
    M = parse_levi(W, job.options['levi'])
    text, json_text, code = _collect(job, [_betti_block(M, H) for H in _spaces(job, rs)])
    if job.options.get('json_path'):
        with open(job.options['json_path'], 'w', encoding='utf-8', newline='\n') as f:
            f.write(json_text)
    return text, code


def _connected_block(M, H):
    table, criterion, witness, agree = _verdicts(M, H)
    text = render('connected', connected=table.components == 1, criterion=criterion,
                  n0=table.components, witness=witness)
    payload = {
        'cartan': M.rs.cartan.name,
        'levi': M.labels,
        'hess_neg': H.vectors(),
        'betti': list(table.counts),
        'connected_by_betti': table.components == 1,
        'connected_by_criterion': criterion,
        'witness': witness_payload(witness),
    }
    return text, payload, 0 if agree else 2


def do_connected(job):
    rs, W = _group(job)
    M = parse_levi(W, job.options['levi'])
    enumerating = _enumerating(job)
    blocks = []
    for H in _spaces(job, rs):
        text, payload, code = _connected_block(M, H)
        blocks.append((f"{H}: {text}" if enumerating else text, payload, code))
    text, _, code = _collect(job, blocks)
    return text, code


def do_witness(job):
    M, H = _semisimple_inputs(job)
    witness = disconnection_witness(M, H)
    if job.format == 'json':
        payload = witness_payload(witness)
        payload['case'] = witness.case
        payload['w'] = str(witness.w) if witness.w else None
        payload['y'] = str(witness.y) if witness.y else None
        return to_json(payload), 0
    return render('witness', witness=witness), 0


def do_fixed_points(job):
    rs, W = _group(job)
    N = parse_nilpotent(job.options['nilpotent'], rs)
    blocks = []
    for H in _spaces(job, rs):
        points = fixed_points(W, N, H)
        text = render('fixed_points', points=points, nilpotent=str(N), hess=str(H))
        blocks.append((text, fixed_points_payload(N, H, points), 0))
    text, _, code = _collect(job, blocks)
    return text, code


def _nilpotent_inputs(job):
    rs, W = _group(job)
    return W, parse_nilpotent(job.options['nilpotent'], rs), parse_hessenberg(job.options['hess'], rs)


def do_chain(job):
    W, N, H = _nilpotent_inputs(job)
    chain = connect_chain(W.parse_word(job.options['start']), N, H)
    if job.format == 'json':
        return to_json(chain_payload(chain)), 0
    return render('chain', chain=chain), 0


def do_catalog(job):
    builder = CatalogBuilder(job.cartan, jobs=job.options['jobs'], force=job.options['force'])
    rows = builder.build()
    logger.info(f"Catalog {job.cartan} sha256 {catalog_digest(rows)}")
    if builder.disagreements:
        logger.error(f"{len(builder.disagreements)} catalog rows disagree")
    return emit_catalog(rows, job.format), 2 if builder.disagreements else 0


def do_validate(job):
    suite = PropertySuite(max_rank=job.options['max_rank'], jobs=job.options['jobs'])
    suite.run()
    if job.options.get('report'):
        suite.save_results(job.options['report'])
    if job.format == 'json':
        text = to_json({'statistics': suite.get_statistics(), 'checks': suite.results})
    else:
        text = render('validation', checks=suite.results, passed=suite.passed)
    return text, 0 if suite.passed else 2


HANDLERS = {
    'describe': do_describe,
    'hessenberg-enumerate': do_enumerate,
    'betti': do_betti,
    'connected': do_connected,
    'witness': do_witness,
    'fixed-points': do_fixed_points,
    'chain': do_chain,
    'catalog': do_catalog,
    'validate-all': do_validate,
}


def _emit(job, output):
    data = output if isinstance(output, bytes) else output.encode('utf-8')
    if job.output:
        with open(job.output, 'wb') as f:
            f.write(data)
        logger.info(f"Output saved to {job.output}")
    else:
        sys.stdout.write(data.decode('utf-8'))
        sys.stdout.flush()


def run(argv=None) -> int:
    """Parse ``argv``, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else 0
    except ParseError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1

    if not args.command:
        parser.print_help(sys.stderr)
        return 1

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        job = make_job(args)
        output, code = HANDLERS[job.command](job)
        _emit(job, output)
        return code
    except PropertyViolation as exc:
        logger.error(f"Property violation: {exc}")
        print(f"Error: property violation: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        print("Interrupted", file=sys.stderr)
        return 1
    except Exception as exc:
        logger.debug("Unhandled error", exc_info=True)
        print(f"Error: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    return run(argv)


if __name__ == '__main__':
    sys.exit(main())
