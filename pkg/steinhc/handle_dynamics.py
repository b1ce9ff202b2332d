# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Numerical model of the standard subcritical contact handle.

The handle lives in C^n with coordinates z_i = x_i + i y_i. Planes 1..k are
hyperbolic, planes k+1..n elliptic, and the handle boundary V is the level
set {phi = c} of

   phi = sum_{i<=k} (b_i x_i^2 - b'_i y_i^2) + sum_{j>k} a_j (x_j^2 + y_j^2)

Points are numpy arrays (x_1, y_1, ..., x_n, y_n). The elliptic
coefficients are stored in plane order, so a[0] belongs to plane k+1 and
a[-1] to plane n; plane n carries the distinguished orbit.

Along V the Reeb field of the standard form is R = X/f, X the Hamiltonian
field of phi and f = sum (3b_i x_i^2 + 3b'_i y_i^2) + c. The only closed
orbits are the circles in the elliptic planes. The simple orbit in plane j
has Hamiltonian period pi/a_j and action (Reeb period) c pi/a_j.

Integration is a fixed-step 4th-order Runge-Kutta scheme compiled with
numba; the drift of phi along the trajectory is monitored and the step
rejected as too large when it exceeds DRIFT_RTOL*c.

The linearised Hamiltonian flow is block diagonal: cosh/sinh blocks in the
hyperbolic planes and rotations by 2 a_j t in the elliptic planes. The
rotation block is [[cos, -sin], [sin, cos]], the time-t map of
x' = -2a y, y' = 2a x.
"""

from fractions import Fraction
import io
import logging
import math
import warnings

import numpy as np
from numba import jit
from astropy.io import ascii
from astropy.table import Table

from .core import *
from .tables import Report
from .stein_hc import cz_index

__all__ = (
    'HandleSpec', 'OrbitRecord', 'Orbits', 'HyperbolicBlock',
    'EllipticBlock', 'Trajectory', 'phi', 'hamiltonian_field',
    'contact_form', 'reeb_field', 'transversality_margin',
    'enumerate_orbits', 'orbit_blocks', 'linearized_flow',
    'cz_index_numeric', 'verify_index_formula', 'integrate_reeb',
    'distinguished_orbit_start', 'first_return_time', 'orbit_goodness',
)

LOGGER = logging.getLogger(__name__)


class HandleSpec:
    """Parameters of a standard handle.

    Arguments::

      n : int
         complex dimension, >= 3

      k : int
         handle index, 0 <= k < n

      b, b_prime : sequences of k floats
         hyperbolic coefficients, all > 0

      a : sequence of n-k floats
         elliptic coefficients for planes k+1..n, all > 0

      c : float
         level of V, > 0
    """

    def __init__(self, n, k, b, b_prime, a, c):
        self.n = n
        self.k = k
        self.b = np.asarray(b, dtype=np.float64).ravel()
        self.b_prime = np.asarray(b_prime, dtype=np.float64).ravel()
        self.a = np.asarray(a, dtype=np.float64).ravel()
        self.c = float(c)

    def __repr__(self):
        return 'HandleSpec(n={!r}, k={!r}, b={!r}, b_prime={!r}, a={!r},'\
            ' c={!r})'.format(
                self.n, self.k, self.b.tolist(), self.b_prime.tolist(),
                self.a.tolist(), self.c
            )

    def check(self):
        """Raises SteinhcError (SubcriticalityViolation for k >= n) if the
        parameters are out of range"""
        for name in ('n', 'k'):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise SteinhcError(
                    '{:s} = {!r} is not an integer'.format(name, value)
                )
        if self.n < 3:
            raise SteinhcError('n = {:d} must be at least 3'.format(self.n))
        if self.k < 0:
            raise SteinhcError('k = {:d} must be >= 0'.format(self.k))
        if self.k >= self.n:
            raise SubcriticalityViolation(self.n, self.k)

        if len(self.b) != self.k or len(self.b_prime) != self.k:
            raise SteinhcError(
                'b and b_prime need k = {:d} values each, got {:d} and'
                ' {:d}'.format(self.k, len(self.b), len(self.b_prime))
            )
        if len(self.a) != self.n - self.k:
            raise SteinhcError(
                'a needs n-k = {:d} values, got {:d}'.format(
                    self.n-self.k, len(self.a))
            )
        for name in ('b', 'b_prime', 'a'):
            values = getattr(self, name)
            if not np.all(np.isfinite(values)) or np.any(values <= 0):
                raise SteinhcError(
                    '{:s} = {!r} must be finite and > 0'.format(
                        name, values.tolist())
                )
        if not math.isfinite(self.c) or self.c <= 0:
            raise SteinhcError('c = {!r} must be > 0'.format(self.c))

    def elliptic(self, plane):
        """Elliptic coefficient a_j of plane j (k < j <= n)"""
        self._check_plane(plane)
        return float(self.a[plane-self.k-1])

    def _check_plane(self, plane):
        if isinstance(plane, bool) or int(plane) != plane or \
           plane <= self.k or plane > self.n:
            raise SteinhcError(
                'plane = {!r} is not an elliptic plane; need {:d} < j <='
                ' {:d}'.format(plane, self.k, self.n)
            )

    def to_dict(self):
        return {
            'n': self.n, 'k': self.k, 'b': self.b.tolist(),
            'b_prime': self.b_prime.tolist(), 'a': self.a.tolist(), 'c': self.c,
        }

    @classmethod
    def from_dict(cls, obj):
        return cls(
            obj['n'], obj['k'], obj.get('b', []), obj.get('b_prime', []),
            obj['a'], obj['c']
        )


class OrbitRecord:
    """The m-fold cover of the simple closed orbit in elliptic plane j.

    `period` is Hamiltonian time m pi/a_j, `action` = c * period, which is
    also the Reeb return time.
    """

    __slots__ = ('plane', 'multiplicity', 'period', 'action', 'cz', 'good')

    def __init__(self, plane, multiplicity, period, action, cz, good):
        self.plane = plane
        self.multiplicity = multiplicity
        self.period = period
        self.action = action
        self.cz = cz
        self.good = good

    def __repr__(self):
        return 'OrbitRecord(plane={:d}, multiplicity={:d}, period={!r},'\
            ' action={!r}, cz={:d}, good={!r})'.format(
                self.plane, self.multiplicity, self.period, self.action,
                self.cz, self.good
            )

    def to_dict(self):
        return {name: getattr(self, name) for name in self.__slots__}


class Orbits(list):
    """List of :class:`OrbitRecord` with the resonance warnings that were
    raised while enumerating them. `warnings` holds (j1, j2, p/q) triples."""

    def __init__(self, records=(), resonances=()):
        super().__init__(records)
        self.warnings = list(resonances)


class HyperbolicBlock:
    """A hyperbolic 2x2 block; contributes 0 to the index"""

    def __repr__(self):
        return 'HyperbolicBlock()'

    def __eq__(self, other):
        return isinstance(other, HyperbolicBlock)

    def __hash__(self):
        return hash('hyperbolic')


class EllipticBlock:
    """A rotation block of total angle `angle` > 0 (radians)"""

    def __init__(self, angle):
        self.angle = float(angle)

    def __repr__(self):
        return 'EllipticBlock(angle={!r})'.format(self.angle)

    def __eq__(self, other):
        return isinstance(other, EllipticBlock) and self.angle == other.angle

    def __hash__(self):
        return hash(('elliptic', self.angle))


class Trajectory:
    """Sampled Reeb trajectory.

    Attributes::

      times : 1D array
         sample times, from 0 to T

      states : 2D array
         one row (x_1, y_1, ..., x_n, y_n) per sample

      phi : 1D array
         phi at each sample

      max_drift : float
         max |phi - c| along the trajectory
    """

    def __init__(self, spec, times, states, phi, max_drift):
        self.spec = spec
        self.times = times
        self.states = states
        self.phi = phi
        self.max_drift = max_drift

    def __len__(self):
        return len(self.times)

    @property
    def end(self):
        return self.states[-1]

    def plane_energies(self):
        """Array of shape (samples, n) of the per-plane quantities
        b x^2 - b' y^2 (hyperbolic) and a (x^2 + y^2) (elliptic). The flow
        conserves every column."""
        spec = self.spec
        x = self.states[:, 0::2]
        y = self.states[:, 1::2]
        coef_x = np.concatenate((spec.b, spec.a))
        coef_y = np.concatenate((-spec.b_prime, spec.a))
        return coef_x*x**2 + coef_y*y**2

    def to_table(self):
        names = ['t']
        for i in range(1, self.spec.n+1):
            names += ['x_{:d}'.format(i), 'y_{:d}'.format(i)]
        names.append('phi')
        data = np.column_stack((self.times, self.states, self.phi))
        return Table(data, names=names)

    def to_csv(self):
        """CSV text with columns t, x_1, y_1, ..., x_n, y_n, phi"""
        buff = io.StringIO()
        ascii.write(self.to_table(), buff, format='csv', fast_writer=False)
        return buff.getvalue().replace('\r\n', '\n')


def _point(spec, point):
    point = np.asarray(point, dtype=np.float64).ravel()
    if len(point) != 2*spec.n:
        raise SteinhcError(
            'point has {:d} coordinates; expected 2n = {:d}'.format(
                len(point), 2*spec.n)
        )
    return point


def _coefficients(spec):
    """Per-plane coefficients of x^2 and y^2 in phi"""
    return (
        np.concatenate((spec.b, spec.a)),
        np.concatenate((-spec.b_prime, spec.a)),
    )


def phi(spec, point):
    """The defining function of V at a point"""
    point = _point(spec, point)
    cx, cy = _coefficients(spec)
    return float(np.sum(cx*point[0::2]**2 + cy*point[1::2]**2))


def hamiltonian_field(spec, point):
    """The Hamiltonian field X of phi: (2b' y, 2b x) in hyperbolic planes,
    (-2a y, 2a x) in elliptic ones"""
    point = _point(spec, point)
    return _hamiltonian(point, spec.k, spec.b, spec.b_prime, spec.a)


def contact_form(spec, point):
    """Covector of the standard contact form
    sum_{i<=k} (2x dy + y dx) + sum_{j>k} (x dy - y dx)/2 at a point,
    ordered as (dx_1, dy_1, ..., dx_n, dy_n)"""
    point = _point(spec, point)
    x, y = point[0::2], point[1::2]
    form = np.empty_like(point)
    k = spec.k
    form[0:2*k:2] = y[:k]
    form[1:2*k:2] = 2*x[:k]
    form[2*k::2] = -y[k:]/2
    form[2*k+1::2] = x[k:]/2
    return form


def transversality_margin(spec, point):
    """The derivative of phi along the Liouville field,
    sum (4b x^2 + 2b' y^2) + sum a (x^2 + y^2). Positive away from 0."""
    point = _point(spec, point)
    k = spec.k
    x, y = point[0::2], point[1::2]
    return float(
        np.sum(4*spec.b*x[:k]**2 + 2*spec.b_prime*y[:k]**2) +
        np.sum(spec.a*(x[k:]**2 + y[k:]**2))
    )


def _check_on_surface(spec, point):
    value = phi(spec, point)
    if abs(value - spec.c) > ON_SURFACE_RTOL*spec.c:
        raise OffHypersurface(value, spec.c)


def reeb_field(spec, point):
    """Reeb field X / (sum (3b x^2 + 3b' y^2) + c) at a point of V.

    Raises :class:`OffHypersurface` if |phi - c| > ON_SURFACE_RTOL*c.
    """
    spec.check()
    point = _point(spec, point)
    _check_on_surface(spec, point)
    return _reeb(point, spec.k, spec.b, spec.b_prime, spec.a, spec.c)


@jit(nopython=True,cache=True)
def _hamiltonian(z, k, b, bp, a):
    out = np.empty_like(z)
    n = len(z) // 2
    for i in range(n):
        x = z[2*i]
        y = z[2*i+1]
        if i < k:
            out[2*i] = 2*bp[i]*y
            out[2*i+1] = 2*b[i]*x
        else:
            out[2*i] = -2*a[i-k]*y
            out[2*i+1] = 2*a[i-k]*x
    return out


@jit(nopython=True,cache=True)
def _reeb(z, k, b, bp, a, c):
    denom = c
    for i in range(k):
        denom += 3*b[i]*z[2*i]**2 + 3*bp[i]*z[2*i+1]**2
    return _hamiltonian(z, k, b, bp, a) / denom


@jit(nopython=True,cache=True)
def _rk4(z0, k, b, bp, a, c, h, nstep):
    """Fixed-step RK4 of the Reeb field; returns all nstep+1 states"""
    states = np.empty((nstep+1, len(z0)))
    states[0] = z0
    z = z0.copy()
    for i in range(nstep):
        k1 = h*_reeb(z, k, b, bp, a, c)
        k2 = h*_reeb(z + k1/2, k, b, bp, a, c)
        k3 = h*_reeb(z + k2/2, k, b, bp, a, c)
        k4 = h*_reeb(z + k3, k, b, bp, a, c)
        z = z + (k1 + 2*k2 + 2*k3 + k4)/6
        states[i+1] = z
    return states


def integrate_reeb(spec, start, T, dt):
    """Integrates the Reeb flow from `start` over Reeb time T.

    The step is the largest h <= dt dividing T into a whole number of steps.

    Arguments::

      spec : HandleSpec
         the handle

      start : array
         starting point, on V within ON_SURFACE_RTOL

      T : float
         total time, >= 0

      dt : float
         maximum step, > 0

    Returns:: :class:`Trajectory`

    Raises :class:`OffHypersurface` for a bad start and :class:`StepTooLarge`
    if phi drifts by more than DRIFT_RTOL*c.
    """
    spec.check()
    start = _point(spec, start)
    _check_on_surface(spec, start)
    if not dt > 0:
        raise SteinhcError('dt = {!r} must be > 0'.format(dt))
    if not T >= 0:
        raise SteinhcError('T = {!r} must be >= 0'.format(T))

    nstep = max(1, int(math.ceil(T/dt))) if T > 0 else 0
    h = T/nstep if nstep else 0.
    states = _rk4(
        start, spec.k, spec.b, spec.b_prime, spec.a, spec.c, h, nstep
    )
    times = h*np.arange(nstep+1)

    cx, cy = _coefficients(spec)
    phis = np.sum(cx*states[:, 0::2]**2 + cy*states[:, 1::2]**2, axis=1)
    drift = float(np.max(np.abs(phis - spec.c)))
    limit = DRIFT_RTOL*spec.c
    LOGGER.debug(
        'integrated %d steps of %.6g; max phi drift %.3g', nstep, h, drift
    )
    if drift > limit:
        raise StepTooLarge(drift, limit)

    return Trajectory(spec, times, states, phis, drift)


def distinguished_orbit_start(spec, plane=None):
    """The point with x_j = sqrt(c/a_j), all else 0, on the simple orbit in
    elliptic plane j (default n)"""
    spec.check()
    plane = spec.n if plane is None else plane
    point = np.zeros(2*spec.n)
    point[2*(plane-1)] = math.sqrt(spec.c/spec.elliptic(plane))
    return point


def first_return_time(spec, plane, dt):
    """Reeb time for the simple orbit of plane j to close up, measured as
    the first upward zero crossing of y_j after leaving the start,
    linearly interpolated between samples. Integrates over twice the
    expected time c pi/a_j."""
    start = distinguished_orbit_start(spec, plane)
    horizon = 2*spec.c*math.pi/spec.elliptic(plane)
    traj = integrate_reeb(spec, start, horizon, dt)
    y = traj.states[:, 2*plane-1]
    up = np.nonzero((y[:-1] < 0) & (y[1:] >= 0))[0]
    if len(up) == 0:
        raise SteinhcError(
            'no return within Reeb time {:.6g}'.format(horizon)
        )
    i = up[0]
    t0, t1 = traj.times[i], traj.times[i+1]
    return float(t0 + (t1-t0)*(-y[i])/(y[i+1]-y[i]))


def linearized_flow(spec, plane, t):
    """Time-t map of the linearised Hamiltonian flow along the orbit in
    elliptic plane j, a 2n x 2n block-diagonal array.

    Hyperbolic blocks::

      [[cosh w t, sqrt(b'/b) sinh w t], [sqrt(b/b') sinh w t, cosh w t]]

    with w = 2 sqrt(b b'); elliptic blocks are rotations by 2 a t.
    """
    spec.check()
    spec._check_plane(plane)
    if t < 0:
        raise SteinhcError('t = {!r} must be >= 0'.format(t))

    mat = np.zeros((2*spec.n, 2*spec.n))
    for i in range(spec.k):
        b, bp = spec.b[i], spec.b_prime[i]
        w = 2*math.sqrt(b*bp)*t
        ch, sh = math.cosh(w), math.sinh(w)
        mat[2*i:2*i+2, 2*i:2*i+2] = (
            (ch, math.sqrt(bp/b)*sh), (math.sqrt(b/bp)*sh, ch)
        )
    for j, a in enumerate(spec.a, spec.k):
        co, si = math.cos(2*a*t), math.sin(2*a*t)
        mat[2*j:2*j+2, 2*j:2*j+2] = ((co, -si), (si, co))
    return mat


def cz_index_numeric(blocks):
    """Conley-Zehnder index of a split symplectic path from its blocks.

    Hyperbolic blocks give 0. An elliptic block of angle theta gives 2l if
    theta is 2 pi l within ROTATION_ATOL, otherwise 2 floor(theta/2pi) + 1.
    The index is additive over blocks.

    Raises :class:`InvalidRotation` for theta <= 0.
    """
    total = 0
    for block in blocks:
        if isinstance(block, HyperbolicBlock):
            continue
        elif isinstance(block, EllipticBlock):
            theta = block.angle
            if not theta > 0:
                raise InvalidRotation(theta)
            turns = round(theta/(2*math.pi))
            if turns >= 1 and abs(theta - 2*math.pi*turns) <= ROTATION_ATOL:
                total += 2*turns
            else:
                total += 2*math.floor(theta/(2*math.pi)) + 1
        else:
            raise SteinhcError('unrecognised block {!r}'.format(block))
    return total


def orbit_blocks(spec, plane, m):
    """Blocks of the linearised flow over the m-fold cover of the orbit in
    plane j. The own plane turns exactly 2 pi m; plane j' turns
    2 a_j' m pi / a_j."""
    spec._check_plane(plane)
    if m < 1:
        raise InvalidMultiplicity(m)
    aj = spec.elliptic(plane)
    blocks = [HyperbolicBlock() for i in range(spec.k)]
    for j in range(spec.k+1, spec.n+1):
        if j == plane:
            blocks.append(EllipticBlock(2*math.pi*m))
        else:
            blocks.append(EllipticBlock(2*spec.elliptic(j)*m*math.pi/aj))
    return blocks


def _resonances(spec):
    """Pairs of elliptic planes j < j' for which a_j/a_j' or its inverse is
    within RESONANCE_ATOL of p/q with q <= RESONANCE_QMAX. The ratio is
    reported as a_j/a_j' in either case."""
    found = []
    planes = range(spec.k+1, spec.n+1)
    for j1 in planes:
        for j2 in planes:
            if j2 <= j1:
                continue
            a1, a2 = spec.elliptic(j1), spec.elliptic(j2)
            if a1 == a2:
                raise DegenerateOrbitTorus(j1, j2, a1)
            # the small denominator may sit on either side of the ratio
            for ratio, invert in ((a1/a2, False), (a2/a1, True)):
                approx = Fraction(ratio).limit_denominator(RESONANCE_QMAX)
                if approx and abs(ratio - float(approx)) <= RESONANCE_ATOL:
                    found.append(
                        (j1, j2, rational_str(1/approx if invert else approx))
                    )
                    break
    return found


def enumerate_orbits(spec, m_max, max_cz):
    """Closed Reeb orbits of the handle up to multiplicity m_max and index
    max_cz.

    Every elliptic plane j carries one simple orbit, of Hamiltonian period
    pi/a_j and action c pi/a_j; its covers multiply both by m. The index
    comes from :func:`cz_index_numeric` over one m-fold period.

    Equal a_j raise :class:`DegenerateOrbitTorus`. A ratio a_j/a_j' close to
    a small-denominator rational raises a :class:`ResonanceWarning`; the
    triples are kept in the `warnings` attribute of the result.

    Returns:: :class:`Orbits`, sorted by plane then multiplicity
    """
    spec.check()
    if m_max < 1:
        raise InvalidMultiplicity(m_max)

    resonances = _resonances(spec)
    for j1, j2, ratio in resonances:
        warnings.warn(
            'RESONANT: a_{:d}/a_{:d} is within {:g} of {:s}'.format(
                j1, j2, RESONANCE_ATOL, ratio),
            ResonanceWarning
        )

    records = []
    for j in range(spec.k+1, spec.n+1):
        aj = spec.elliptic(j)
        for m in range(1, m_max+1):
            cz = cz_index_numeric(orbit_blocks(spec, j, m))
            if cz > max_cz:
                continue
            period = m*math.pi/aj
            records.append(OrbitRecord(
                j, m, period, spec.c*period, cz, _good(spec, j, m)
            ))

    LOGGER.info('%d closed orbits with m <= %d, cz <= %d',
                len(records), m_max, max_cz)
    return Orbits(records, resonances)


def verify_index_formula(spec, m_max):
    """Checks the numerical index of the covers of the distinguished orbit
    (plane n) against 2m + n - k - 1 for m = 1..m_max.

    The comparison is only meaningful while the other elliptic planes turn
    less than a full revolution, i.e. m a_j < a_n for every other j; the
    first violation raises :class:`ConditionNotMet`.

    Returns:: :class:`Report`
    """
    spec.check()
    if m_max < 1:
        raise InvalidMultiplicity(m_max)
    an = spec.elliptic(spec.n)
    for m in range(1, m_max+1):
        for j in range(spec.k+1, spec.n):
            if not m*spec.elliptic(j) < an:
                raise ConditionNotMet(m, j)

    rows = []
    for m in range(1, m_max+1):
        numeric = cz_index_numeric(orbit_blocks(spec, spec.n, m))
        formula = cz_index(spec.n, spec.k, m)
        rows.append((m, numeric, formula, numeric == formula))

    return Report(
        'Numerical CZ index of the distinguished orbit, n = {:d}, k = {:d}'.format(
            spec.n, spec.k),
        ('m', 'cz_numeric', 'cz_formula', 'ok'),
        rows, all(row[3] for row in rows)
    )


def _good(spec, plane, m):
    if m % 2:
        return True
    # transverse blocks of the return map of the simple orbit
    flow = linearized_flow(spec, plane, math.pi/spec.elliptic(plane))
    keep = [i for i in range(2*spec.n) if i // 2 != plane-1]
    eigs = np.linalg.eigvals(flow[np.ix_(keep, keep)])
    negative = np.sum(
        (np.abs(eigs.imag) <= SYMPLECTIC_ATOL) &
        (eigs.real > -1) & (eigs.real < 0)
    )
    return negative % 2 == 0


def orbit_goodness(spec, orbit):
    """True unless the orbit is an even cover of a simple orbit whose
    transverse return map has an odd number of real eigenvalues in (-1, 0).
    For standard handles every orbit is good."""
    spec.check()
    return _good(spec, orbit.plane, orbit.multiplicity)
