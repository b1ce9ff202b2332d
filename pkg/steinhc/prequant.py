# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Morse-Bott cylindrical contact homology of a prequantization circle bundle.

The Reeb orbits of the prequantization of a closed Kahler manifold Sigma of
real dimension 2n-2 are the circle fibres, one Sigma-family per
multiplicity l >= 1. With 2(c_1(T Sigma), beta) = 2c and polarization
degree k, the class of degree i in H_*(Sigma) at level l has degree

   i - 2 + 2cl/k

and each level contributes a copy of H_*(Sigma). Only Betti numbers of
Sigma are needed. Degrees can be fractional when k does not divide 2cl; they
are kept as exact rationals.
"""

from fractions import Fraction
import logging

from .core import *
from .graded_algebra import GradedDims

__all__ = ('PrequantSpec', 'mb_grading', 'level_contribution', 'prequant_cyl_hc')

LOGGER = logging.getLogger(__name__)


def _integer(name, value):
    if isinstance(value, bool) or int(value) != value:
        raise SteinhcError('{:s} = {!r} is not an integer'.format(name, value))
    return int(value)


class PrequantSpec:
    """Betti numbers of Sigma with the Chern pairing c and polarization
    degree k. The data are checked on construction: a Betti vector that
    breaks Poincare duality raises :class:`SteinhcError`.

    Arguments::

      sigma_real_dim : int
         real dimension 2n-2 of Sigma, even and >= 4

      betti : sequence of int
         b_0..b_(2n-2)

      c : int
         the Chern pairing, with (omega, beta) = 1

      k : int
         polarization degree, >= 1
    """

    def __init__(self, sigma_real_dim, betti, c, k):
        self.sigma_real_dim = _integer('sigma_real_dim', sigma_real_dim)
        self.betti = tuple(_integer('betti', b) for b in betti)
        self.c = _integer('c', c)
        self.k = _integer('k', k)
        self.check()

    @property
    def n(self):
        """Complex dimension of the filling, sigma_real_dim/2 + 1"""
        return self.sigma_real_dim // 2 + 1

    def __repr__(self):
        return 'PrequantSpec(sigma_real_dim={:d}, betti={!r}, c={:d},'\
            ' k={:d})'.format(
                self.sigma_real_dim, list(self.betti), self.c, self.k
            )

    def check(self):
        if self.sigma_real_dim < 4 or self.sigma_real_dim % 2:
            raise SteinhcError(
                'sigma_real_dim = {:d} must be even and >= 4'.format(
                    self.sigma_real_dim)
            )
        if len(self.betti) != self.sigma_real_dim + 1:
            raise SteinhcError(
                'expected {:d} Betti numbers, got {:d}'.format(
                    self.sigma_real_dim+1, len(self.betti))
            )
        if any(b < 0 for b in self.betti):
            raise SteinhcError(
                'negative Betti number in {!r}'.format(list(self.betti))
            )
        top = self.sigma_real_dim
        for i in range(top // 2):
            if self.betti[i] != self.betti[top-i]:
                raise SteinhcError(
                    'Betti numbers violate Poincare duality: b_{:d} = {:d},'
                    ' b_{:d} = {:d}'.format(
                        i, self.betti[i], top-i, self.betti[top-i])
                )
        if self.k < 1:
            raise SteinhcError('k = {:d} must be >= 1'.format(self.k))

    def to_dict(self):
        return {
            'sigma_real_dim': self.sigma_real_dim, 'betti': list(self.betti),
            'c': self.c, 'k': self.k,
        }

    @classmethod
    def from_dict(cls, obj):
        return cls(obj['sigma_real_dim'], obj['betti'], obj['c'], obj['k'])


def mb_grading(i, l, c, k, n):
    """Degree i - 2 + 2cl/k of the class of degree i at level l, as a
    Fraction.

    Raises :class:`DivisionByZero` for k = 0 and :class:`InvalidMultiplicity`
    for l < 1.
    """
    if k == 0:
        raise DivisionByZero('polarization degree k = 0')
    if k < 0:
        raise SteinhcError('k = {:d} must be >= 1'.format(k))
    if l < 1:
        raise InvalidMultiplicity(l)
    if i < 0 or i > 2*n-2:
        raise SteinhcError(
            'degree i = {:d} outside 0..2n-2 = {:d}'.format(i, 2*n-2)
        )
    return i - 2 + Fraction(2*c*l, k)


def level_contribution(spec, l):
    """The copy of H_*(Sigma) at level l, placed in Morse-Bott degrees"""
    n = spec.n
    return GradedDims(
        (mb_grading(i, l, spec.c, spec.k, n), b)
        for i, b in enumerate(spec.betti)
    )


def prequant_cyl_hc(spec, cutoff):
    """Ranks of the Morse-Bott cylindrical contact homology up to `cutoff`.

    Levels are added while their lowest degree 2cl/k - 2 is <= cutoff.

    Arguments::

      spec : PrequantSpec
         the prequantization data

      cutoff : int | Fraction | str
         highest degree kept

    Returns:: :class:`GradedDims`, possibly with fractional degrees

    Raises :class:`NonPositiveChernPairing` if c <= 0: the degrees would be
    unbounded below.
    """
    spec.check()
    if spec.c <= 0:
        raise NonPositiveChernPairing(spec.c)
    cutoff = to_rational(cutoff)

    ranks = []
    l = 1
    while mb_grading(0, l, spec.c, spec.k, spec.n) <= cutoff:
        ranks.extend(level_contribution(spec, l).truncate(cutoff).items())
        l += 1

    LOGGER.debug('prequantization HC to degree %s from %d levels',
                 rational_str(cutoff), l-1)
    return GradedDims(ranks)
