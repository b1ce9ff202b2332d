# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Morse chain complexes over the rationals.

A :class:`MorseComplex` is a set of labelled critical points with Morse
indices together with a sparse differential whose coefficients are exact
rationals supplied by the user (signed counts of gradient trajectories;
steinhc never computes them). Homology ranks come from exact elimination
over QQ, so torsion plays no role.

The convention for a differential entry (q, p, c) is that the boundary of
the index-k point q contains c times the index-(k-1) point p.
"""

from fractions import Fraction
import logging

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .core import *
from .group import Group
from .graded_algebra import GradedDims

__all__ = (
    'CritPoint', 'MorseComplex', 'homology', 'cohomology',
    'relative_homology_dual', 'euler_characteristic',
)

LOGGER = logging.getLogger(__name__)


class CritPoint:
    """A critical point: a string label and a Morse index"""

    __slots__ = ('_label', '_index')

    def __init__(self, label, index):
        if not isinstance(label, str) or not label:
            raise SteinhcError(
                'critical point label must be a non-empty string, got'
                ' {!r}'.format(label)
            )
        if isinstance(index, bool) or int(index) != index or index < 0:
            raise SteinhcError(
                'critical point {:s}: Morse index = {!r} must be a non-negative'
                ' integer'.format(label, index)
            )
        self._label = label
        self._index = int(index)

    @property
    def id(self):
        return self._label

    @property
    def index(self):
        return self._index

    def __eq__(self, other):
        if not isinstance(other, CritPoint):
            return NotImplemented
        return (self._label, self._index) == (other._label, other._index)

    def __hash__(self):
        return hash((self._label, self._index))

    def __repr__(self):
        return 'CritPoint(id={!r}, index={:d})'.format(self._label, self._index)


class MorseComplex:

    """Critical points plus a rational differential.

    Construct with::

      >> mc = MorseComplex(
      >>     4, [CritPoint('p', 0), CritPoint('q', 1)], [('q', 'p', 1)]
      >> )
      >> homology(mc)
      GradedDims({})

    The constructor records the data; :meth:`check` validates it (index
    drops, d o d = 0, indices within the dimension) and is called by every
    computation.
    """

    def __init__(self, real_dimension, points, differential=()):
        """
        Arguments::

          real_dimension : int
             even positive dimension of the manifold

          points : iterable of CritPoint
             labels must be unique

          differential : iterable of (from_id, to_id, coefficient)
             coefficients are ints, Fractions or "p/q" strings. Entries
             repeated for the same pair are summed; zero entries dropped.
        """
        if isinstance(real_dimension, bool) or \
           int(real_dimension) != real_dimension:
            raise SteinhcError(
                'real dimension = {!r} is not an integer'.format(real_dimension)
            )
        self.real_dimension = int(real_dimension)

        self.points = Group(CritPoint)
        for point in points:
            if point.id in self.points:
                raise SteinhcError(
                    'critical point label {:s} is used twice'.format(point.id)
                )
            self.points[point.id] = point

        coeffs = {}
        for entry in differential:
            try:
                source, target, coeff = entry
            except (TypeError, ValueError):
                raise MalformedDifferential(
                    'differential entry {!r} is not a (from, to, coefficient)'
                    ' triple'.format(entry)
                )
            try:
                coeff = to_rational(coeff)
            except ValueError as err:
                raise MalformedDifferential(
                    'differential entry {!s} -> {!s}: {!s}'.format(
                        source, target, err)
                )
            key = (source, target)
            coeffs[key] = coeffs.get(key, Fraction(0)) + coeff
        self._coeffs = {key: val for key, val in coeffs.items() if val != 0}

    @property
    def differential(self):
        """Sorted tuple of the nonzero (from_id, to_id, coefficient) entries"""
        return tuple(
            (source, target, coeff)
            for (source, target), coeff in sorted(self._coeffs.items())
        )

    def __repr__(self):
        return 'MorseComplex(real_dimension={:d}, points={!r}, differential={!r})'.format(
            self.real_dimension, list(self.points.values()), self.differential
        )

    def labels(self, index):
        """Labels of the critical points of a given index, in input order"""
        return [
            label for label, point in self.points.items() if point.index == index
        ]

    def counts(self):
        """GradedDims of the number of critical points per index"""
        counts = {}
        for point in self.points.values():
            counts[point.index] = counts.get(point.index, 0) + 1
        return GradedDims(counts)

    def max_index(self):
        """Largest Morse index, or -1 for an empty complex"""
        return max((point.index for point in self.points.values()), default=-1)

    def boundary(self, label):
        """Boundary of a critical point as a dict label -> coefficient"""
        return {
            target: coeff for (source, target), coeff in self._coeffs.items()
            if source == label
        }

    def check(self):
        """Validates the complex, raising a :class:`SteinhcError` subclass:

          - :class:`MalformedDifferential` if an entry names an unknown point
            or does not lower the index by exactly one;
          - :class:`NotAComplex` if d o d != 0;
          - :class:`SteinhcError` for an odd or non-positive dimension or an
            index above it.
        """
        if self.real_dimension <= 0 or self.real_dimension % 2:
            raise SteinhcError(
                'real dimension = {:d} must be even and positive'.format(
                    self.real_dimension)
            )

        for point in self.points.values():
            if point.index > self.real_dimension:
                raise SteinhcError(
                    'critical point {:s} has index {:d} above the dimension'
                    ' {:d}'.format(point.id, point.index, self.real_dimension)
                )

        for (source, target), coeff in self._coeffs.items():
            if source not in self.points or target not in self.points:
                raise MalformedDifferential(
                    'differential entry {:s} -> {:s} refers to an unknown'
                    ' critical point'.format(source, target)
                )
            ksource = self.points[source].index
            ktarget = self.points[target].index
            if ktarget != ksource - 1:
                raise MalformedDifferential(
                    'differential entry {:s} -> {:s} goes from index {:d} to'
                    ' {:d}; it must drop the index by one'.format(
                        source, target, ksource, ktarget)
                )

        # d o d on each point, summed through the intermediate points
        for source, point in self.points.items():
            image = {}
            for middle, c1 in self.boundary(source).items():
                for target, c2 in self.boundary(middle).items():
                    image[target] = image.get(target, Fraction(0)) + c1*c2
            bad = sorted(
                (target, rational_str(val)) for target, val in image.items()
                if val != 0
            )
            if bad:
                raise NotAComplex(point.index, [(source,) + b for b in bad])

    def stabilize(self):
        """Morse data of the product with C: same critical points and
        differential, real dimension raised by 2. The function
        f + kappa |z|^2 has the same critical points with the same indices.
        """
        return MorseComplex(
            self.real_dimension + 2, self.points.values(), self.differential
        )

    def to_dict(self):
        """JSON-ready dictionary; coefficients as "p/q" strings"""
        return {
            'real_dimension': self.real_dimension,
            'points': [
                {'id': point.id, 'index': point.index}
                for point in self.points.values()
            ],
            'differential': [
                {'from': source, 'to': target, 'coefficient': rational_str(coeff)}
                for source, target, coeff in self.differential
            ],
        }

    @classmethod
    def from_dict(cls, obj):
        """Builds from the JSON form written by :meth:`to_dict`"""
        return cls(
            obj['real_dimension'],
            [CritPoint(p['id'], p['index']) for p in obj['points']],
            [
                (e['from'], e['to'], e['coefficient'])
                for e in obj.get('differential', [])
            ],
        )

    def matrix(self, index):
        """The boundary map from index `index` to index-1 as a sympy
        :class:`DomainMatrix` over QQ: rows are the index-1 points, columns
        the index points, both in input order."""
        cols = self.labels(index)
        rows = self.labels(index-1)
        rpos = {label: i for i, label in enumerate(rows)}
        elements = {}
        for j, source in enumerate(cols):
            for target, coeff in self.boundary(source).items():
                elements.setdefault(rpos[target], {})[j] = \
                    QQ(coeff.numerator, coeff.denominator)
        return DomainMatrix(elements, (len(rows), len(cols)), QQ)


def _rank(mat):
    """Rank of a DomainMatrix, allowing for empty shapes"""
    nrows, ncols = mat.shape
    if nrows == 0 or ncols == 0:
        return 0
    return mat.rank()


def homology(c):
    """Betti ranks of a Morse complex over QQ.

    b_k = (number of index-k points) - rank d_k - rank d_(k+1), with ranks
    from exact elimination.

    Arguments::

      c : MorseComplex
         validated first with :meth:`MorseComplex.check`

    Returns:: :class:`GradedDims` keyed by Morse index
    """
    c.check()
    top = c.max_index()
    ranks = [_rank(c.matrix(k)) for k in range(top+2)]
    betti = {}
    for k in range(top+1):
        betti[k] = len(c.labels(k)) - ranks[k] - ranks[k+1]
    LOGGER.debug('homology ranks %s', betti)
    return GradedDims(betti)


def cohomology(c):
    """Betti ranks of the dual cochain complex over QQ.

    The coboundary from degree k to k+1 is the transpose of the boundary
    d_(k+1); ranks are taken of the transposed matrices. Over a field the
    result equals :func:`homology`.
    """
    c.check()
    top = c.max_index()
    ranks = [0] + [_rank(c.matrix(k+1).transpose()) for k in range(top+1)]
    betti = {}
    for k in range(top+1):
        # ranks[k+1] is delta^k, ranks[k] is delta^(k-1)
        betti[k] = len(c.labels(k)) - ranks[k+1] - ranks[k]
    return GradedDims(betti)


def relative_homology_dual(c, ambient_real_dim):
    """Ranks of H_*(M, dM) by Poincare-Lefschetz duality.

    A class of degree k in H_*(c) (equivalently H^k over a field) lands in
    degree ambient_real_dim - k.

    Arguments::

      c : MorseComplex
         Morse data of the manifold

      ambient_real_dim : int
         real dimension 2n of M, at least that of c
    """
    if ambient_real_dim < c.real_dimension:
        raise SteinhcError(
            'ambient dimension {:d} is below the complex dimension'
            ' {:d}'.format(ambient_real_dim, c.real_dimension)
        )
    return GradedDims(
        (ambient_real_dim - degree, rank) for degree, rank in homology(c).items()
    )


def euler_characteristic(c):
    """Alternating count of critical points, sum (-1)^k #index-k"""
    return c.counts().euler_characteristic()
