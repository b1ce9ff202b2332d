"""
Commands for prequantizations and polarizations: prequant-hc,
polarization-check and cross-check.
"""

from .. import utils
from ..core import *
from ..prequant import PrequantSpec, prequant_cyl_hc
from ..polarization import PolarizationData, check_relations, \
    cross_check_hc, derive_chern, solve_betti
from ..tables import Report, render, graded_table

__all__ = ['prequant_hc', 'polarization_check', 'cross_check']


#################################################################
#
# prequant-hc -- Morse-Bott contact homology of a prequantization
#
#################################################################

def prequant_hc(args=None):
    """``prequant-hc --input file --cutoff N [--format fmt]``

    Ranks of the Morse-Bott cylindrical contact homology of a
    prequantization up to degree N. Degrees may be fractional and are
    printed as "p/q".
    """
    parser = utils.command_parser(
        'prequant-hc', 'Contact homology of a prequantization', cutoff=True
    )
    args = parser.parse_args(args)
    spec = PrequantSpec.from_dict(utils.read_payload(args.input, 'prequant'))

    hc = prequant_cyl_hc(spec, args.cutoff)
    utils.emit(render(
        graded_table(hc), args.format,
        'Prequantization HC^cyl to degree {:d}'.format(args.cutoff),
        {'cutoff': args.cutoff, 'ranks': hc.to_dict()}
    ))
    return EXIT_OK


#################################################################
#
# polarization-check -- Betti number relations
#
#################################################################

def _polarization(path):
    """PolarizationData from an input file and whether b was solved for.
    A missing b is filled in by solve_betti from n and a."""
    payload = dict(utils.read_payload(path, 'polarization'))
    solved = 'b' not in payload
    if solved:
        payload['b'] = solve_betti(payload['n'], payload['a'])
    return PolarizationData.from_dict(payload), solved


def polarization_check(args=None):
    """``polarization-check --input file [--format fmt]``

    Evaluates the symmetry, accumulation, duality, monotonicity, degree and
    lowest-piece relations on polarization data, one row per relation.
    Exits with 1 if any fails.

    If the payload has no b, the Betti numbers of Sigma are solved from a
    and printed first (under "solved_b" in JSON); a non-symmetric a then
    exits with 2.
    """
    parser = utils.command_parser(
        'polarization-check', 'Relations for a subcritical polarization'
    )
    args = parser.parse_args(args)
    data, solved = _polarization(args.input)

    report = check_relations(data)
    if args.format == 'json':
        obj = report.to_dict()
        if solved:
            obj['solved_b'] = data.b
        utils.emit(render(None, 'json', obj=obj))
    else:
        chunks = [render(report.table(), args.format, report.title)]
        if solved:
            betti = Report(
                'Betti numbers of Sigma solved from a', ('degree', 'b'),
                list(enumerate(data.b))
            )
            chunks.insert(
                0, render(betti.table(), args.format, betti.title)
            )
        utils.emit(*chunks)
    return EXIT_OK if report.passed else EXIT_FAILED


#################################################################
#
# cross-check -- Stein against prequantization contact homology
#
#################################################################

def cross_check(args=None):
    """``cross-check --input file --cutoff N [--format fmt]``

    Computes HC^cyl from the Betti numbers a of M \\ Sigma and from the
    prequantization of Sigma (Betti numbers b) and compares them degree by
    degree. If c is missing from the payload it is derived from the degree
    relation and must be an integer. A missing b is solved from a. Exits with
    1 at the first disagreement.
    """
    parser = utils.command_parser(
        'cross-check', 'Compare the two computations of HC^cyl', cutoff=True
    )
    args = parser.parse_args(args)
    data, _ = _polarization(args.input)
    data.check()

    c = data.c
    if c is None:
        c = derive_chern(data.n, data.D, data.k)
        if c.denominator != 1:
            raise SteinhcError(
                'derived Chern pairing c = {:s} is not an integer; give c'
                ' explicitly'.format(rational_str(c))
            )
        c = int(c)

    prequant = PrequantSpec(2*data.n-2, data.b, c, data.k)
    report = cross_check_hc(data.a, prequant, args.cutoff)
    utils.emit(render(report.table(), args.format, report.title,
                      report.to_dict()))
    return EXIT_OK if report.passed else EXIT_FAILED
