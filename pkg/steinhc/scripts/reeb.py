"""
The reeb-verify command
"""

import math

import numpy as np

from .. import utils
from ..core import *
from ..handle_dynamics import HandleSpec, verify_index_formula, \
    enumerate_orbits, integrate_reeb, distinguished_orbit_start, \
    first_return_time, transversality_margin
from ..tables import Report, render

__all__ = ['reeb_verify']


#################################################################
#
# reeb-verify -- numerical CZ index of the handle orbits
#
#################################################################

def reeb_verify(args=None):
    """``reeb-verify --input file [--m-max M] [--max-cz N | --trajectory T |
    --return-time] [--dt h] [--plane j] [--format fmt]``

    Computes the Conley-Zehnder index of the first M covers of the
    distinguished orbit of a handle from its linearised flow and compares it
    with 2m + n - k - 1. Exits with 1 on any mismatch, and with 2 if the
    thin-handle condition m a_j < a_n fails.

    With --max-cz, lists the closed orbits in every elliptic plane with
    multiplicity <= M and index <= N instead.

    With --trajectory, integrates the Reeb flow over time T with steps of
    at most h from the simple orbit of plane j (default n) and prints the
    samples t, x_1, y_1, ..., x_n, y_n, phi. With --return-time, measures
    the time the same orbit takes to close and compares it with c pi/a_j;
    exits with 1 if the relative error exceeds RETURN_RTOL. Neither needs
    --m-max.
    """
    parser = utils.command_parser(
        'reeb-verify', 'Numerical Conley-Zehnder indices of a standard handle'
    )
    parser.add_argument(
        '--m-max', type=int, default=None, dest='m_max',
        help='highest multiplicity; needed unless --trajectory or'
        ' --return-time is given'
    )
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument(
        '--max-cz', type=int, default=None, dest='max_cz',
        help='list orbits with index <= max-cz instead of the index check'
    )
    mode.add_argument(
        '--trajectory', type=float, default=None, metavar='T',
        help='print a Reeb trajectory over time T'
    )
    mode.add_argument(
        '--return-time', action='store_true', dest='return_time',
        help='measure the period of the simple orbit'
    )
    parser.add_argument(
        '--dt', type=float, default=1e-3,
        help='largest integration step (default 1e-3)'
    )
    parser.add_argument(
        '--plane', type=int, default=None,
        help='elliptic plane of the orbit (default n)'
    )
    args = parser.parse_args(args)
    spec = HandleSpec.from_dict(utils.read_payload(args.input, 'handle'))
    spec.check()
    plane = spec.n if args.plane is None else args.plane

    if args.trajectory is not None:
        return _trajectory(spec, plane, args)
    if args.return_time:
        return _return_time(spec, plane, args)

    if args.m_max is None:
        raise SteinhcError(
            '--m-max is needed for the index check and the orbit listing'
        )
    if args.max_cz is None:
        report = verify_index_formula(spec, args.m_max)
    else:
        orbits = enumerate_orbits(spec, args.m_max, args.max_cz)
        report = Report(
            'Closed Reeb orbits, m <= {:d}, cz <= {:d}'.format(
                args.m_max, args.max_cz),
            ('plane', 'm', 'period', 'action', 'cz', 'good'),
            [
                (o.plane, o.multiplicity, o.period, o.action, o.cz, o.good)
                for o in orbits
            ],
            all(o.good for o in orbits),
            {'resonances': [list(r) for r in orbits.warnings]}
        )

    utils.emit(render(report.table(), args.format, report.title,
                      report.to_dict()))
    return EXIT_OK if report.passed else EXIT_FAILED


def _trajectory(spec, plane, args):
    traj = integrate_reeb(
        spec, distinguished_orbit_start(spec, plane), args.trajectory, args.dt
    )
    margin = float(min(transversality_margin(spec, z) for z in traj.states))
    title = 'Reeb trajectory from plane {:d} over time {:.6g}'.format(
        plane, args.trajectory)

    if args.format == 'csv':
        utils.emit(traj.to_csv())
    elif args.format == 'json':
        utils.emit(render(None, 'json', obj={
            'title': title, 'plane': plane, 'T': args.trajectory,
            'dt': args.dt, 'max_drift': traj.max_drift,
            'min_margin': margin,
            'columns': traj.to_table().colnames,
            'rows': np.column_stack(
                (traj.times, traj.states, traj.phi)).tolist(),
        }))
    else:
        summary = Report(
            'Conservation along the trajectory',
            ('quantity', 'value'),
            [('max |phi - c|', traj.max_drift),
             ('min Liouville margin', margin)]
        )
        utils.emit(
            render(traj.to_table(), 'table', title),
            render(summary.table(), 'table', summary.title)
        )
    return EXIT_OK


def _return_time(spec, plane, args):
    expected = spec.c*math.pi/spec.elliptic(plane)
    found = first_return_time(spec, plane, args.dt)
    error = abs(found - expected)/expected
    report = Report(
        'First return time of the simple orbit in plane {:d}'.format(plane),
        ('plane', 'expected', 'measured', 'rel_error', 'ok'),
        [(plane, expected, found, error, error <= RETURN_RTOL)],
        error <= RETURN_RTOL
    )
    utils.emit(render(report.table(), args.format, report.title,
                      report.to_dict()))
    return EXIT_OK if report.passed else EXIT_FAILED
