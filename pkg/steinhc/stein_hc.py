# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Contact homology of the boundary V of a subcritical Stein domain.

The domain is split, M = M' x C, and is described by the Morse data of M'
(a :class:`MorseComplex` of real dimension 2n-2 whose indices are all below
n). Once the handles are thin enough, each critical point p of index k
carries one distinguished simple Reeb orbit, and its m-fold cover has
Conley-Zehnder index

   cz = 2m + n - k - 1

and SFT degree cz + (n-3). The cylindrical differential is the Morse
differential, so HC^cyl(V) is one copy of H_*(M') per multiplicity m >= 1,
with a class of degree k placed in degree 2m + 2n - k - 4. The full contact
homology is the free graded-commutative algebra on HC^cyl(V).

Note on the index constant: the handle computation gives 2m+(n-k-1) while
the stabilised statement is sometimes quoted as 2m+n-k+1. The two differ by
2; only the former makes the grading agree with the shift [2i-4] of
H_*(M, dM), so it is the one used throughout.
"""

from fractions import Fraction
import logging
import math
import warnings

import sympy

from .core import *
from .graded_algebra import GradedDims, PoincareSeries, shift, direct_sum, \
    free_gca_series
from .morse import CritPoint, MorseComplex, homology, relative_homology_dual
from .tables import Report

__all__ = (
    'SteinDomainSpec', 'HCGenerator', 'cz_index', 'sft_grading', 'cyl_hc',
    'verify_yau_isomorphism', 'full_hc_series', 'expected_dimension',
    'well_definedness_check', 'gw_pairing', 'two_point_correlator',
    'generators', 'pairing_matrix', 'rank_sequence', 'lowest_degree',
)

LOGGER = logging.getLogger(__name__)


class SteinDomainSpec:
    """Complex dimension n of M plus the Morse data of M'.

    Arguments::

      n : int
         complex dimension of M = M' x C, at least 3

      morse : MorseComplex
         Morse data of M', real dimension 2n-2, every index below n, with at
         least one minimum.
    """

    def __init__(self, n, morse):
        if isinstance(n, bool) or int(n) != n:
            raise SteinhcError('n = {!r} is not an integer'.format(n))
        self.n = int(n)
        self.morse = morse

    def __repr__(self):
        return 'SteinDomainSpec(n={:d}, morse={!r})'.format(self.n, self.morse)

    def check(self):
        """Validates the spec. Raises :class:`SubcriticalityViolation` for an
        index k >= n and :class:`SteinhcError` for other problems. A spec
        whose degree-0 homology vanishes is accepted with a
        :class:`DegenerateDomainWarning`: it cannot come from a connected
        domain but remains a valid chain complex."""
        if self.n < 3:
            raise SteinhcError('n = {:d} must be at least 3'.format(self.n))

        if self.morse.real_dimension != 2*self.n-2:
            raise SteinhcError(
                'Morse data of M\' must have real dimension 2n-2 = {:d}, not'
                ' {:d}'.format(2*self.n-2, self.morse.real_dimension)
            )

        for point in self.morse.points.values():
            if point.index >= self.n:
                raise SubcriticalityViolation(self.n, point.index, point.id)

        self.morse.check()

        if not self.morse.labels(0):
            raise SteinhcError(
                'no index 0 critical point: the exhausting function has no'
                ' minimum'
            )

        if homology(self.morse)[0] < 1:
            warnings.warn(
                'degree 0 homology of M\' vanishes; the data do not describe a'
                ' connected Stein domain', DegenerateDomainWarning
            )

    def to_dict(self):
        return {'n': self.n, 'morse': self.morse.to_dict()}

    @classmethod
    def from_dict(cls, obj):
        return cls(obj['n'], MorseComplex.from_dict(obj['morse']))

    @classmethod
    def from_betti(cls, n, a):
        """Spec with a_d critical points of index d and zero differential,
        for when only the Betti numbers of M are known. Points are labelled
        'e<d>.<i>'."""
        points = [
            CritPoint('e{:d}.{:d}'.format(d, i), d)
            for d, count in enumerate(a) for i in range(count)
        ]
        return cls(n, MorseComplex(2*n-2, points))


class HCGenerator:
    """A chain-level generator of HC^cyl: the m-fold cover of the
    distinguished orbit over a critical point.

    Arguments::

      crit_id : string
         label of the critical point

      index : int
         its Morse index k

      multiplicity : int
         m >= 1

      n : int
         complex dimension of M

    The attributes `cz` and `degree` are derived: cz = 2m+n-k-1 and
    degree = cz + (n-3).
    """

    __slots__ = ('crit_id', 'index', 'multiplicity', 'cz', 'degree')

    def __init__(self, crit_id, index, multiplicity, n):
        self.crit_id = crit_id
        self.index = index
        self.multiplicity = multiplicity
        self.cz = cz_index(n, index, multiplicity)
        self.degree = self.cz + (n-3)

    @classmethod
    def of(cls, spec, crit_id, multiplicity):
        """The generator over the critical point `crit_id` of `spec`"""
        if crit_id not in spec.morse.points:
            raise SteinhcError(
                'no critical point {!r} in the Stein domain'.format(crit_id)
            )
        return cls(
            crit_id, spec.morse.points[crit_id].index, multiplicity, spec.n
        )

    def __eq__(self, other):
        if not isinstance(other, HCGenerator):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.crit_id, self.index, self.multiplicity, self.cz, self.degree)

    def __repr__(self):
        return 'HCGenerator(crit_id={!r}, index={:d}, multiplicity={:d},'\
            ' cz={:d}, degree={:d})'.format(*self._key())


def cz_index(n, k, m):
    """Conley-Zehnder index 2m + n - k - 1 of the m-fold cover of the
    distinguished orbit over an index-k critical point.

    Raises :class:`SubcriticalityViolation` if k >= n and
    :class:`InvalidMultiplicity` if m < 1.
    """
    if n < 3:
        raise SteinhcError('n = {:d} must be at least 3'.format(n))
    if k < 0:
        raise SteinhcError('Morse index k = {:d} is negative'.format(k))
    if k >= n:
        raise SubcriticalityViolation(n, k)
    if m < 1:
        raise InvalidMultiplicity(m)
    return 2*m + n - k - 1


def sft_grading(n, k, m):
    """Contact homology degree cz + (n-3) = 2m + 2n - k - 4"""
    return cz_index(n, k, m) + (n-3)


def _cutoff(cutoff):
    if isinstance(cutoff, bool) or int(cutoff) != cutoff:
        raise SteinhcError('cutoff = {!r} must be an integer'.format(cutoff))
    return int(cutoff)


def cyl_hc(spec, degree_cutoff):
    """Ranks of the cylindrical contact homology of V up to a degree.

    Each multiplicity m >= 1 contributes a copy of H_*(M'), a class of degree
    k going to degree 2m+2n-k-4. Copies are added until their lowest degree
    passes the cutoff.

    Arguments::

      spec : SteinDomainSpec
         the domain

      degree_cutoff : int
         highest degree kept

    Returns:: :class:`GradedDims`
    """
    spec.check()
    cutoff = _cutoff(degree_cutoff)
    betti = homology(spec.morse)
    if not betti:
        return GradedDims()

    n = spec.n
    kmax = int(betti.max_degree())
    ranks = {}
    m = 1
    while sft_grading(n, kmax, m) <= cutoff:
        for degree, rank in betti.items():
            grading = sft_grading(n, int(degree), m)
            if grading <= cutoff:
                ranks[grading] = ranks.get(grading, 0) + rank
        m += 1

    LOGGER.debug('HC^cyl to degree %d from %d multiplicities', cutoff, m-1)
    return GradedDims(ranks)


def verify_yau_isomorphism(spec, cutoff, dual=relative_homology_dual):
    """Checks HC^cyl(V) against the direct sum over i >= 1 of
    H_*(M, dM)[2i-4], truncated at `cutoff`.

    The right-hand side is built from the Poincare-Lefschetz dual ranks with
    :func:`shift` and :func:`direct_sum`, independently of :func:`cyl_hc`.

    Arguments::

      spec : SteinDomainSpec
         the domain

      cutoff : int
         highest degree compared

      dual : callable
         the relative-homology routine, dual(morse, 2n); replaceable so
         tests can check that a wrong routine is detected.

    Returns:: bool
    """
    cutoff = _cutoff(cutoff)
    left = cyl_hc(spec, cutoff)

    relative = dual(spec.morse, 2*spec.n)
    copies = []
    if relative:
        i = 1
        while relative.min_degree() + 2*i - 4 <= cutoff:
            copies.append(shift(relative, 2*i-4))
            i += 1
    right = direct_sum(copies).truncate(cutoff)

    if left != right:
        LOGGER.info('HC^cyl %r differs from shifted relative homology %r',
                    left, right)
    return left == right


def full_hc_series(spec, cutoff):
    """Poincare series of the full contact homology algebra
    HC(V) = Lambda(HC^cyl(V)), truncated at `cutoff`. The lowest degree of
    HC^cyl(V) is at least n-1 >= 2, so the free algebra is well defined."""
    cutoff = _cutoff(cutoff)
    return free_gca_series(cyl_hc(spec, cutoff), cutoff)


def expected_dimension(g, mu_plus, mu_minus, n, m):
    """Expected dimension of a moduli space of genus g curves with positive
    punctures at orbits of CZ indices mu_plus, negative punctures at mu_minus
    and m interior marked points:

       sum(mu_plus) - sum(mu_minus) + (n-3)(2-2g-a-b) + 2m

    with a, b the numbers of positive and negative punctures.
    """
    if g < 0:
        raise SteinhcError('genus = {:d} must be >= 0'.format(g))
    if m < 0:
        raise SteinhcError(
            'number of marked points = {:d} must be >= 0'.format(m)
        )
    a, b = len(mu_plus), len(mu_minus)
    return sum(mu_plus) - sum(mu_minus) + (n-3)*(2-2*g-a-b) + 2*m


def well_definedness_check(spec):
    """Checks that no holomorphic plane has index -1, 0 or 1.

    A plane asymptotic to the generator over an index-k point with
    multiplicity m has index cz + (n-3). The minimum over m is at m = 1, so
    one row per critical point is enough.

    Returns:: :class:`Report` with extras 'min_index'
    """
    spec.check()
    n = spec.n
    rows = []
    for point in spec.morse.points.values():
        cz = cz_index(n, point.index, 1)
        plane = expected_dimension(0, [cz], [], n, 0)
        rows.append((point.id, point.index, 1, cz, plane, plane not in (-1, 0, 1)))

    min_index = min(row[4] for row in rows)
    passed = all(row[5] for row in rows)
    return Report(
        'Plane indices of the simple distinguished orbits, n = {:d}'.format(n),
        ('crit_id', 'k', 'm', 'cz', 'plane_index', 'ok'),
        rows, passed, {'min_index': min_index}
    )


def generators(spec, cutoff):
    """Chain-level generators of HC^cyl with degree <= cutoff, sorted by
    degree, multiplicity and label."""
    spec.check()
    cutoff = _cutoff(cutoff)
    gens = []
    for point in spec.morse.points.values():
        m = 1
        while sft_grading(spec.n, point.index, m) <= cutoff:
            gens.append(HCGenerator(point.id, point.index, m, spec.n))
            m += 1
    gens.sort(key=lambda g: (g.degree, g.multiplicity, g.crit_id))
    return gens


def gw_pairing(spec, generator, cochain):
    """Chain-level pairing of a generator of HC^cyl against a Morse cochain.

    The pairing is the coefficient of generator.crit_id in the cochain (the
    Kronecker pairing against the stable manifold of the point). The
    one-point descendant is the pairing divided by (m-1)!, the factor coming
    from the Euler class (m-1)! psi^(m-1) of the jet bundle.

    Arguments::

      spec : SteinDomainSpec
         the domain

      generator : HCGenerator
         generator over a critical point of `spec`

      cochain : dict
         label -> rational coefficient. Its support must lie in Morse index
         generator.index, otherwise :class:`DegreeMismatch` is raised.

    Returns:: (pairing, correlator) as Fractions
    """
    spec.check()
    if generator.crit_id not in spec.morse.points:
        raise SteinhcError(
            'generator {!r} is not over a critical point of the'
            ' domain'.format(generator)
        )
    point = spec.morse.points[generator.crit_id]
    if point.index != generator.index or \
       generator.cz != cz_index(spec.n, point.index, generator.multiplicity):
        raise SteinhcError(
            'generator {!r} is inconsistent with the domain'.format(generator)
        )

    values = {}
    for label, coeff in cochain.items():
        if label not in spec.morse.points:
            raise SteinhcError(
                'cochain refers to unknown critical point {!r}'.format(label)
            )
        coeff = to_rational(coeff)
        if coeff == 0:
            continue
        index = spec.morse.points[label].index
        if index != generator.index:
            raise DegreeMismatch(
                'cochain has support on {:s} of index {:d}, the generator'
                ' has index {:d}'.format(label, index, generator.index)
            )
        values[label] = coeff

    pairing = values.get(generator.crit_id, Fraction(0))
    correlator = pairing / math.factorial(generator.multiplicity-1)
    return pairing, correlator


def pairing_matrix(spec, multiplicity, index):
    """Descendant values of the generators of one multiplicity over the
    index-`index` points against the canonical dual cochains (the cochain
    that is 1 on one point and 0 elsewhere).

    Returns:: (labels, sympy.Matrix) where entry (i, j) pairs the generator
    over labels[i] with the dual of labels[j]. For a nondegenerate pairing
    this is 1/(m-1)! times the identity.
    """
    labels = spec.morse.labels(index)
    rows = []
    for source in labels:
        gen = HCGenerator.of(spec, source, multiplicity)
        row = []
        for target in labels:
            pairing, correlator = gw_pairing(spec, gen, {target: 1})
            row.append(sympy.Rational(correlator.numerator, correlator.denominator))
        rows.append(row)
    return labels, sympy.Matrix(len(labels), len(labels), lambda i, j: rows[i][j])


def two_point_correlator(spec, cup_value, sigma_is_simple_minimum, deg1, deg2,
                         num_marked):
    """Genus-0 correlator with `num_marked` marked points over a class of
    HC^cyl.

    Three or more marked points give 0. With two, the only nonzero value is
    for sigma the simple orbit over the minimum, with the Poincare dual
    cycles of dimension n-1, where it equals the intersection number of the
    two forms on M'. That number is input data (no cup products are computed
    here). When M' has several components the simple-minimum class is the
    sum over components and `cup_value` should be given per component.

    Arguments::

      spec : SteinDomainSpec
         the domain

      cup_value : rational
         integral over M' of theta'_1 theta'_2

      sigma_is_simple_minimum : bool
         whether sigma is the simple orbit over the index 0 point

      deg1, deg2 : int
         dimensions of the cycles dual to theta_1, theta_2 in M'

      num_marked : int
         number of marked points, >= 2 (one point is :func:`gw_pairing`)

    Returns:: Fraction
    """
    if num_marked < 2:
        raise SteinhcError(
            'num_marked = {:d}: one-point values come from gw_pairing'.format(
                num_marked)
        )
    cup_value = to_rational(cup_value)
    if num_marked >= 3:
        return Fraction(0)
    if not sigma_is_simple_minimum or max(deg1, deg2) < spec.n-1:
        return Fraction(0)
    return cup_value


def lowest_degree(spec):
    """Lowest degree 2n-2-D of HC^cyl(V), D being the top degree of
    homology, with its rank. Returns (None, 0) if the homology vanishes."""
    spec.check()
    betti = homology(spec.morse)
    if not betti:
        return None, 0
    D = int(betti.max_degree())
    return 2*spec.n - 2 - D, betti[D]


def rank_sequence(spec, count):
    """Ranks of HC^cyl(V) in the `count` degrees starting from the lowest,
    i.e. a_D, a_(D-1), a_(D-2)+a_D, a_(D-3)+a_(D-1), ... for Betti numbers a."""
    low, rank = lowest_degree(spec)
    if low is None:
        return [0]*count
    hc = cyl_hc(spec, low + count - 1)
    return [hc[low + i] for i in range(count)]
