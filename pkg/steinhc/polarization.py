# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Constraints on subcritical polarizations.

Let Sigma be a Kahler hypersurface of degree k in a closed Kahler manifold M
of complex dimension n with M \\ Sigma subcritical Stein, of homological
dimension D. The boundary of a neighbourhood of Sigma is the prequantization
of Sigma, so its contact homology can be computed both from the Stein side
and from the prequantization. Equating the two gives

  - the degree relation 2n - 2 - D = 2c/k - 2, hence c = k(2n-D)/2;
  - a_i = a_(D-i) for the Betti numbers a of M \\ Sigma;
  - b_d = sum of a_j over j <= d, j = d mod 2, for d < n, where b are the
    Betti numbers of Sigma (a_j = 0 for D < j < n).

:func:`check_relations` evaluates these on given data; :func:`solve_betti`
constructs b from a; :func:`cross_check_hc` compares the two computations of
the contact homology directly.
"""

from fractions import Fraction
import logging
import warnings

from .core import *
from .stein_hc import SteinDomainSpec, cyl_hc
from .prequant import PrequantSpec, prequant_cyl_hc
from .tables import Report

__all__ = (
    'PolarizationData', 'derive_chern', 'check_relations', 'solve_betti',
    'cross_check_hc',
)

LOGGER = logging.getLogger(__name__)


def _naturals(name, values):
    values = list(values)
    for v in values:
        if isinstance(v, bool) or int(v) != v or v < 0:
            raise SteinhcError(
                '{:s} = {!r} must hold non-negative integers'.format(name, values)
            )
    return [int(v) for v in values]


class PolarizationData:
    """Betti numbers of M \\ Sigma and of Sigma with the polarization data.

    Arguments::

      n : int
         complex dimension of M, >= 3

      a : sequence of int
         a_0..a_D, Betti numbers of M \\ Sigma; a_D > 0 and D < n

      b : sequence of int
         b_0..b_(2n-2), Betti numbers of Sigma

      k : int
         degree of the polarization, >= 1

      c : int | None
         the Chern pairing; the degree relation is only checked when given
    """

    def __init__(self, n, a, b, k=1, c=None):
        self.n = n
        self.a = _naturals('a', a)
        self.b = _naturals('b', b)
        self.k = k
        self.c = c

    @property
    def D(self):
        """Homological dimension of M \\ Sigma"""
        return len(self.a) - 1

    def __repr__(self):
        return 'PolarizationData(n={!r}, a={!r}, b={!r}, k={!r}, c={!r})'.format(
            self.n, self.a, self.b, self.k, self.c
        )

    def check(self):
        """Raises on malformed data; warns with :class:`NonIntegerChernWarning`
        when c is given, k divides 2c and D is odd."""
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 3:
            raise SteinhcError('n = {!r} must be an integer >= 3'.format(self.n))
        if not self.a or self.a[-1] == 0:
            raise SteinhcError(
                'a = {!r} must end with a positive a_D'.format(self.a)
            )
        if self.D >= self.n:
            raise NotSubcritical(self.n, self.D)
        if len(self.b) != 2*self.n - 1:
            raise SteinhcError(
                'b needs 2n-1 = {:d} values, got {:d}'.format(
                    2*self.n-1, len(self.b))
            )
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise SteinhcError('k = {!r} must be an integer >= 1'.format(self.k))
        if self.c is not None and (
                isinstance(self.c, bool) or int(self.c) != self.c):
            raise SteinhcError('c = {!r} must be an integer'.format(self.c))
        if self.c is not None and (2*self.c) % self.k == 0 and self.D % 2:
            warnings.warn(
                'OddDimension: D = {:d} is odd although k = {:d} divides'
                ' 2c = {:d}'.format(self.D, self.k, 2*int(self.c)),
                NonIntegerChernWarning
            )

    def to_dict(self):
        obj = {'n': self.n, 'a': self.a, 'b': self.b, 'k': self.k}
        if self.c is not None:
            obj['c'] = self.c
        return obj

    @classmethod
    def from_dict(cls, obj):
        return cls(obj['n'], obj['a'], obj['b'], obj.get('k', 1), obj.get('c'))


def derive_chern(n, D, k):
    """The Chern pairing c = k(2n-D)/2 forced by the degree relation, as a
    Fraction. A non-integer value raises a :class:`NonIntegerChernWarning`;
    for k = 1 it means D is odd, which cannot happen.

    Raises :class:`NotSubcritical` for D >= n.
    """
    if D < 0:
        raise SteinhcError('D = {:d} must be >= 0'.format(D))
    if D >= n:
        raise NotSubcritical(n, D)
    if k < 1:
        raise SteinhcError('k = {:d} must be >= 1'.format(k))
    c = Fraction(k*(2*n-D), 2)
    if c.denominator != 1:
        warnings.warn(
            'NonInteger: c = {:s} for n = {:d}, D = {:d}, k = {:d}'.format(
                rational_str(c), n, D, k),
            NonIntegerChernWarning
        )
    return c


def _accumulated(a, d):
    """sum of a_j over j <= d with j = d mod 2"""
    return sum(a[j] for j in range(d % 2, d+1, 2) if j < len(a))


def check_relations(data):
    """Evaluates the relations on polarization data.

    Sections, one row per relation instance:

      symmetry      a_i = a_(D-i)
      accumulation  b_d = sum_{j <= d, j = d mod 2} a_j for d < n
      duality       b_i = b_(2n-2-i)
      monotonicity  b_d <= b_(d+2) for d+2 < n
      chern         D = 2n - 2c/k, only if c is set
      lowest        a_D = b_0, the rank of the lowest piece of HC

    A degree k > 1 raises a :class:`PolarizationDegreeWarning`; the
    relations are evaluated anyway.

    Returns:: :class:`Report`; extras 'sections' maps section name to bool
    """
    data.check()
    n, a, b, D = data.n, data.a, data.b, data.D
    if data.k > 1:
        warnings.warn(
            'polarization degree k = {:d} > 1'.format(data.k),
            PolarizationDegreeWarning
        )

    rows = []
    for i in range(D//2 + 1):
        rows.append((
            'symmetry', 'a_{:d} = a_{:d}'.format(i, D-i), a[D-i], a[i],
            a[i] == a[D-i]
        ))

    for d in range(n):
        expected = _accumulated(a, d)
        rows.append((
            'accumulation', 'b_{:d} = sum a_j, j <= {:d}'.format(d, d),
            expected, b[d], b[d] == expected
        ))

    for i in range(n-1):
        rows.append((
            'duality', 'b_{:d} = b_{:d}'.format(i, 2*n-2-i), b[2*n-2-i], b[i],
            b[i] == b[2*n-2-i]
        ))

    for d in range(n-2):
        rows.append((
            'monotonicity', 'b_{:d} <= b_{:d}'.format(d, d+2), b[d+2], b[d],
            b[d] <= b[d+2]
        ))

    if data.c is not None:
        expected = 2*n - Fraction(2*data.c, data.k)
        rows.append((
            'chern', 'D = 2n - 2c/k', expected, D, expected == D
        ))

    rows.append(('lowest', 'a_D = b_0', b[0], a[D], a[D] == b[0]))

    sections = {}
    for row in rows:
        sections[row[0]] = sections.get(row[0], True) and row[4]

    report = Report(
        'Polarization relations, n = {:d}, D = {:d}, k = {:d}'.format(
            n, D, data.k),
        ('section', 'relation', 'expected', 'actual', 'ok'),
        rows, all(sections.values()), {'sections': sections}
    )
    for row in rows:
        if not row[4]:
            LOGGER.info('%s fails: %s (expected %s, got %s)', *row[:4])
    return report


def solve_betti(n, a):
    """The Betti numbers b_0..b_(2n-2) of Sigma implied by those of M \\ Sigma.

    b_d for d < n comes from the accumulation relations, b_d for d >= n from
    duality. The result is re-checked for duality; a conflict raises
    :class:`Inconsistent`.

    Raises :class:`Unsolvable` if a is not symmetric.
    """
    a = _naturals('a', a)
    if not a or a[-1] == 0:
        raise SteinhcError('a = {!r} must end with a positive a_D'.format(a))
    D = len(a) - 1
    if D >= n:
        raise NotSubcritical(n, D)
    for i in range(D//2 + 1):
        if a[i] != a[D-i]:
            raise Unsolvable(i, a)

    b = [_accumulated(a, d) for d in range(n)]
    b += [b[2*n-2-d] for d in range(n, 2*n-1)]

    for i in range(2*n-1):
        if b[i] != b[2*n-2-i]:
            raise Inconsistent(i, (b[i], b[2*n-2-i]))
    return b


def cross_check_hc(stein, prequant, cutoff):
    """Compares HC^cyl computed from the Stein side with the Morse-Bott
    computation from the prequantization, degree by degree up to `cutoff`.

    Arguments::

      stein : SteinDomainSpec | sequence of int
         the Stein side; a Betti vector a is read as homology ranks with
         zero differential and n = sigma_real_dim/2 + 1

      prequant : PrequantSpec
         the prequantization side

      cutoff : int
         highest degree compared

    Returns:: :class:`Report` with extras 'first_disagreement' (a degree
    string or None)
    """
    if not isinstance(stein, SteinDomainSpec):
        stein = SteinDomainSpec.from_betti(prequant.n, _naturals('a', stein))
    if stein.n != prequant.n:
        raise SteinhcError(
            'Stein side has n = {:d}, prequantization n = {:d}'.format(
                stein.n, prequant.n)
        )

    left = cyl_hc(stein, cutoff)
    right = prequant_cyl_hc(prequant, cutoff)
    degrees = sorted(set(left.degrees()) | set(right.degrees()))
    rows = [
        (rational_str(d), left[d], right[d], left[d] == right[d])
        for d in degrees
    ]
    bad = [row[0] for row in rows if not row[3]]
    first = bad[0] if bad else None
    if first is not None:
        LOGGER.info('Stein and prequantization ranks first differ in degree %s',
                    first)

    return Report(
        'Stein versus prequantization HC^cyl to degree {!s}'.format(cutoff),
        ('degree', 'stein', 'prequant', 'ok'),
        rows, first is None, {'first_disagreement': first}
    )
