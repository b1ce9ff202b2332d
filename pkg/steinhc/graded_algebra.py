# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Graded dimension vectors and truncated Poincare series.

:class:`GradedDims` is the carrier for every homology computed in steinhc: a
finitely supported map from degree to rank. Degrees are exact rationals
(:class:`fractions.Fraction`) because Morse-Bott gradings of a
prequantization can be fractional; everything on the Stein side is integral.

:class:`PoincareSeries` holds the coefficients c_0..c_N of a series
truncated at degree N. :func:`free_gca_series` builds the series of the free
graded-commutative algebra on a set of generators: polynomial on even
generators, exterior on odd ones.

No floating point is used anywhere in this module.
"""

from fractions import Fraction
import logging

from .core import *

__all__ = (
    'GradedDims', 'PoincareSeries', 'shift', 'direct_sum', 'free_gca_series',
)

LOGGER = logging.getLogger(__name__)


class GradedDims:
    """Ranks of a graded vector space, keyed by exact rational degree.

    Instances are immutable and kept in canonical form: zero ranks are
    dropped and degrees sorted, so two :class:`GradedDims` are equal if and
    only if they have the same nonzero ranks. Missing degrees read as rank 0::

      >> w = GradedDims({4: 1, 6: 2})
      >> w[6], w[5]
      (2, 0)

    """

    __slots__ = ('_entries',)

    def __init__(self, entries=None):
        """
        Arguments::

          entries : dict | iterable of (degree, rank) pairs
             degrees may be ints, Fractions or "p/q" strings; ranks must be
             non-negative integers. Repeated degrees are summed.
        """
        ranks = {}
        if entries is not None:
            items = entries.items() if hasattr(entries, 'items') else entries
            for degree, rank in items:
                degree = to_rational(degree)
                if isinstance(rank, bool) or int(rank) != rank or rank < 0:
                    raise ValueError(
                        'rank = {!r} in degree {!s} is not a non-negative'
                        ' integer'.format(rank, degree)
                    )
                ranks[degree] = ranks.get(degree, 0) + int(rank)

        self._entries = tuple(
            (degree, ranks[degree]) for degree in sorted(ranks)
            if ranks[degree] != 0
        )

    def __getitem__(self, degree):
        degree = to_rational(degree)
        for deg, rank in self._entries:
            if deg == degree:
                return rank
        return 0

    def __iter__(self):
        return (degree for degree, rank in self._entries)

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return len(self._entries) > 0

    def __eq__(self, other):
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return 'GradedDims({{{}}})'.format(
            ', '.join(
                '{:s}: {:d}'.format(rational_str(d), r) for d, r in self._entries
            )
        )

    def items(self):
        """(degree, rank) pairs in increasing degree"""
        return self._entries

    def degrees(self):
        """Sorted tuple of the degrees with nonzero rank"""
        return tuple(degree for degree, rank in self._entries)

    def is_integral(self):
        """True if every degree is an integer"""
        return all(degree.denominator == 1 for degree, rank in self._entries)

    def min_degree(self):
        """Lowest degree of nonzero rank, or None for the zero space"""
        return self._entries[0][0] if self._entries else None

    def max_degree(self):
        """Highest degree of nonzero rank, or None for the zero space"""
        return self._entries[-1][0] if self._entries else None

    def total_rank(self):
        return sum(rank for degree, rank in self._entries)

    def euler_characteristic(self):
        """Alternating sum of ranks. Only defined for integral degrees."""
        if not self.is_integral():
            raise ValueError(
                'Euler characteristic needs integer degrees: {!r}'.format(self)
            )
        return sum(
            rank if degree.numerator % 2 == 0 else -rank
            for degree, rank in self._entries
        )

    def truncate(self, cutoff):
        """Returns the part of degree <= cutoff"""
        cutoff = to_rational(cutoff)
        return GradedDims(
            (degree, rank) for degree, rank in self._entries if degree <= cutoff
        )

    def to_dict(self):
        """Dictionary keyed by degree strings ("4", "7/2"), for JSON output"""
        return {rational_str(degree): rank for degree, rank in self._entries}

    @classmethod
    def from_dict(cls, obj):
        """Inverse of :meth:`to_dict`"""
        return cls(obj)


class PoincareSeries:
    """Coefficients c_0..c_N of a Poincare series truncated at degree N.

    Arguments::

      cutoff : int
         the truncation degree N >= 0

      coefficients : sequence of int
         exactly N+1 non-negative integers
    """

    __slots__ = ('cutoff', 'coefficients')

    def __init__(self, cutoff, coefficients):
        if isinstance(cutoff, bool) or int(cutoff) != cutoff or cutoff < 0:
            raise ValueError(
                'cutoff = {!r} must be a non-negative integer'.format(cutoff)
            )
        coefficients = tuple(int(c) for c in coefficients)
        if len(coefficients) != cutoff + 1:
            raise ValueError(
                'expected {:d} coefficients, got {:d}'.format(
                    cutoff+1, len(coefficients))
            )
        if any(c < 0 for c in coefficients):
            raise ValueError('negative coefficient in {!r}'.format(coefficients))
        self.cutoff = int(cutoff)
        self.coefficients = coefficients

    def __getitem__(self, degree):
        return self.coefficients[degree]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, PoincareSeries):
            return (self.cutoff, self.coefficients) == \
                (other.cutoff, other.coefficients)
        if isinstance(other, (list, tuple)):
            return self.coefficients == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.cutoff, self.coefficients))

    def __repr__(self):
        return 'PoincareSeries(cutoff={:d}, coefficients={!r})'.format(
            self.cutoff, list(self.coefficients)
        )

    def to_list(self):
        return list(self.coefficients)

    @classmethod
    def from_graded_dims(cls, w, cutoff):
        """The additive series sum_d rank_d t^d of an integrally graded
        space, truncated at cutoff. Negative degrees are not allowed."""
        if not w.is_integral():
            raise ValueError('series need integer degrees: {!r}'.format(w))
        coeffs = [0]*(cutoff+1)
        for degree, rank in w.items():
            if degree < 0:
                raise ValueError(
                    'negative degree {!s} has no place in a series'.format(degree)
                )
            if degree <= cutoff:
                coeffs[int(degree)] = rank
        return cls(cutoff, coeffs)


def shift(w, s):
    """Moves every rank of w up by s degrees (down if s < 0).

    Arguments::

      w : GradedDims
         the space to shift

      s : int | Fraction | str
         the shift; "p/q" strings are accepted

    Returns:: the shifted :class:`GradedDims`
    """
    s = to_rational(s)
    return GradedDims((degree + s, rank) for degree, rank in w.items())


def direct_sum(ws):
    """Degree-wise sum of the ranks of a list of :class:`GradedDims`"""
    return GradedDims(
        (degree, rank) for w in ws for degree, rank in w.items()
    )


def free_gca_series(generators, cutoff):
    """Poincare series of the free graded-commutative algebra on a graded
    set of generators, truncated at degree `cutoff`.

    The result is the expansion of

       prod_{d even} (1-t^d)^(-g_d) * prod_{d odd} (1+t^d)^(g_d)

    where g_d is the rank of the generators in degree d, i.e. the number of
    monomials of each total degree when odd generators may appear at most
    once.

    Arguments::

      generators : GradedDims
         ranks of the generating space. All degrees must be positive
         integers, otherwise :class:`InvalidGenerator` is raised.

      cutoff : int
         truncation degree >= 0

    Returns:: :class:`PoincareSeries` with cutoff+1 coefficients

    """
    if isinstance(cutoff, bool) or int(cutoff) != cutoff or cutoff < 0:
        raise ValueError(
            'cutoff = {!r} must be a non-negative integer'.format(cutoff)
        )
    cutoff = int(cutoff)

    for degree, rank in generators.items():
        if degree.denominator != 1 or degree <= 0:
            raise InvalidGenerator(degree)

    coeffs = [0]*(cutoff+1)
    coeffs[0] = 1
    for degree, rank in generators.items():
        d = int(degree)
        if d > cutoff:
            # generators beyond the cutoff cannot contribute
            continue
        for _ in range(rank):
            if d % 2 == 0:
                # multiply by 1/(1-t^d): running sums in steps of d
                for i in range(d, cutoff+1):
                    coeffs[i] += coeffs[i-d]
            else:
                # multiply by (1+t^d); descending so each term is used once
                for i in range(cutoff, d-1, -1):
                    coeffs[i] += coeffs[i-d]

    LOGGER.debug(
        'free graded-commutative series on %d generators to degree %d',
        generators.total_rank(), cutoff
    )
    return PoincareSeries(cutoff, coeffs)
