"""
Commands working on a Stein domain: cz-index, cyl-hc, full-hc and pairing.
"""

from .. import utils
from ..core import *
from ..stein_hc import SteinDomainSpec, HCGenerator, generators, cyl_hc as \
    _cyl_hc, full_hc_series, verify_yau_isomorphism, well_definedness_check, \
    gw_pairing, pairing_matrix, two_point_correlator
from ..tables import Report, render, graded_table, series_table

__all__ = ['cz_index', 'cyl_hc', 'full_hc', 'pairing']


def _spec(path):
    spec = SteinDomainSpec.from_dict(utils.read_payload(path, 'stein'))
    spec.check()
    return spec


def _report(report, fmt):
    return render(report.table(), fmt, report.title, report.to_dict())


#################################################################
#
# cz-index -- chain-level generators and the well-definedness check
#
#################################################################

def cz_index(args=None):
    """``cz-index --input file --cutoff N [--format fmt]``

    Lists the generators of the cylindrical complex (critical point times
    multiplicity) of degree <= N with their Conley-Zehnder indices and
    degrees, then checks that no plane has index -1, 0 or 1. Exits with 1
    if that check fails.
    """
    parser = utils.command_parser(
        'cz-index', 'Conley-Zehnder indices of the distinguished orbits',
        cutoff=True
    )
    args = parser.parse_args(args)
    spec = _spec(args.input)

    gens = generators(spec, args.cutoff)
    rows = [
        (g.crit_id, g.index, g.multiplicity, g.cz, g.degree) for g in gens
    ]
    table = Report(
        'Generators of HC^cyl to degree {:d}, n = {:d}'.format(
            args.cutoff, spec.n),
        ('crit_id', 'k', 'm', 'cz', 'degree'), rows
    )
    check = well_definedness_check(spec)

    if args.format == 'json':
        utils.emit(render(None, 'json', obj={
            'generators': table.to_dict()['rows'],
            'well_definedness': check.to_dict(),
        }))
    else:
        utils.emit(_report(table, args.format), _report(check, args.format))
    return EXIT_OK if check.passed else EXIT_FAILED


#################################################################
#
# cyl-hc -- cylindrical contact homology and the shift check
#
#################################################################

def cyl_hc(args=None):
    """``cyl-hc --input file --cutoff N [--format fmt]``

    Ranks of HC^cyl(V) up to degree N. The result is compared with the
    shifted copies of H_*(M, dM) and the command exits with 1 if they
    disagree.
    """
    parser = utils.command_parser(
        'cyl-hc', 'Cylindrical contact homology of a subcritical Stein domain',
        cutoff=True
    )
    args = parser.parse_args(args)
    spec = _spec(args.input)

    hc = _cyl_hc(spec, args.cutoff)
    shifted = verify_yau_isomorphism(spec, args.cutoff)

    if args.format == 'json':
        utils.emit(render(None, 'json', obj={
            'cutoff': args.cutoff, 'ranks': hc.to_dict(),
            'yau_isomorphism': shifted,
        }))
    elif args.format == 'csv':
        utils.emit(render(graded_table(hc), 'csv'))
    else:
        utils.emit(
            render(graded_table(hc), 'table',
                   'HC^cyl(V) to degree {:d}'.format(args.cutoff)),
            'H_*(M, dM) shift check: {:s}\n'.format(
                'PASS' if shifted else 'FAIL')
        )
    return EXIT_OK if shifted else EXIT_FAILED


#################################################################
#
# full-hc -- Poincare series of the full contact homology algebra
#
#################################################################

def full_hc(args=None):
    """``full-hc --input file --cutoff N [--format fmt]``

    Coefficients 0..N of the Poincare series of the free graded-commutative
    algebra on HC^cyl(V).
    """
    parser = utils.command_parser(
        'full-hc', 'Poincare series of the full contact homology', cutoff=True
    )
    args = parser.parse_args(args)
    spec = _spec(args.input)

    series = full_hc_series(spec, args.cutoff)
    utils.emit(render(
        series_table(series), args.format,
        'Poincare series of HC(V) to degree {:d}'.format(args.cutoff),
        {'cutoff': series.cutoff, 'coefficients': series.to_list()}
    ))
    return EXIT_OK


#################################################################
#
# pairing -- one-point descendants and two-point correlators
#
#################################################################

def pairing(args=None):
    """``pairing --input file --m-max M [--format fmt]``

    Pairs every generator of multiplicity <= M with the canonical dual
    cochains and checks that each block of fixed multiplicity and index is
    nondegenerate (exit 1 otherwise). The payload may also carry explicit
    'cochains' to pair and 'correlators' queries for two-point correlators.
    """
    parser = utils.command_parser(
        'pairing', 'Genus-0 descendant pairings', m_max=True
    )
    args = parser.parse_args(args)
    payload = utils.read_payload(args.input, 'stein')
    spec = SteinDomainSpec.from_dict(payload)
    spec.check()
    if args.m_max < 1:
        raise InvalidMultiplicity(args.m_max)

    rows = []
    passed = True
    indices = sorted({p.index for p in spec.morse.points.values()})
    for m in range(1, args.m_max+1):
        for index in indices:
            labels, mat = pairing_matrix(spec, m, index)
            ok = mat.is_diagonal() and mat.det() != 0
            passed = passed and ok
            for i, label in enumerate(labels):
                gen = HCGenerator.of(spec, label, m)
                rows.append((
                    label, index, m, gen.cz, gen.degree,
                    str(mat[i, i]), ok
                ))
    canonical = Report(
        'Descendants against the canonical cochains, m <= {:d}'.format(
            args.m_max),
        ('crit_id', 'k', 'm', 'cz', 'degree', 'descendant', 'nondegenerate'),
        rows, passed
    )

    reports = [canonical]
    if payload.get('cochains'):
        rows = []
        for query in payload['cochains']:
            gen = HCGenerator.of(spec, query['generator'], query['multiplicity'])
            value, desc = gw_pairing(spec, gen, query['cochain'])
            rows.append((gen.crit_id, gen.multiplicity, value, desc))
        reports.append(Report(
            'Pairings against supplied cochains',
            ('crit_id', 'm', 'pairing', 'descendant'), rows
        ))

    if payload.get('correlators'):
        rows = []
        for query in payload['correlators']:
            value = two_point_correlator(
                spec, query['cup_value'], query['simple_minimum'],
                query['deg1'], query['deg2'], query['num_marked']
            )
            rows.append((
                rational_str(to_rational(query['cup_value'])),
                'yes' if query['simple_minimum'] else 'no',
                query['deg1'], query['deg2'], query['num_marked'], value
            ))
        reports.append(Report(
            'Genus-0 correlators',
            ('cup_value', 'simple_minimum', 'deg1', 'deg2', 'num_marked',
             'value'), rows
        ))

    if args.format == 'json':
        utils.emit(render(None, 'json', obj=[r.to_dict() for r in reports]))
    else:
        utils.emit(*[_report(r, args.format) for r in reports])
    return EXIT_OK if passed else EXIT_FAILED
