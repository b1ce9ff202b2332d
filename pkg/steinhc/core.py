# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Core constants, exceptions and warnings for the steinhc package
"""

from fractions import Fraction
import re

from astropy.utils.exceptions import AstropyUserWarning

__all__ = (
    'ON_SURFACE_RTOL', 'ROTATION_ATOL', 'DRIFT_RTOL', 'RESONANCE_QMAX',
    'RESONANCE_ATOL', 'SYMPLECTIC_ATOL', 'RETURN_RTOL', 'EXIT_OK',
    'EXIT_FAILED', 'EXIT_INVALID', 'LOG_ENV', 'version', 'to_rational',
    'rational_str',

    'SteinhcError', 'InvalidGenerator', 'NotAComplex',
    'MalformedDifferential', 'SubcriticalityViolation',
    'InvalidMultiplicity', 'DegreeMismatch', 'OffHypersurface',
    'DegenerateOrbitTorus', 'InvalidRotation', 'ConditionNotMet',
    'StepTooLarge', 'NonPositiveChernPairing', 'NotSubcritical',
    'Unsolvable', 'Inconsistent', 'SchemaError', 'DivisionByZero',

    'SteinhcWarning', 'ResonanceWarning', 'NonIntegerChernWarning',
    'PolarizationDegreeWarning', 'DegenerateDomainWarning',
)

# Tolerances for the numerical handle model

# relative distance |phi-c|/c allowed for a point to count as on V
ON_SURFACE_RTOL = 1e-9

# absolute slack when deciding that a rotation angle is a multiple of 2 pi
ROTATION_ATOL = 1e-9

# maximum relative drift of phi along an integrated Reeb trajectory
DRIFT_RTOL = 1e-6

# small-denominator resonance test on ratios a_j / a_j'
RESONANCE_QMAX = 64
RESONANCE_ATOL = 1e-9

# slack on determinants of symplectic 2x2 blocks
SYMPLECTIC_ATOL = 1e-12

# relative error allowed on a measured first return time
RETURN_RTOL = 1e-6

# exit codes of the command-line front end
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

# environment variable controlling log verbosity of the scripts
LOG_ENV = 'STEINHC_LOG'

_RATIONAL = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')


def version():
    """Returns version number of installed steinhc package"""
    from importlib.metadata import version as _version
    return _version("steinhc")


def to_rational(value):
    """Converts value to an exact :class:`fractions.Fraction`.

    Accepts ints, Fractions and strings of the form "p" or "p/q". Floats (and
    bools) are refused since they would silently corrupt exact data. Raises
    a ValueError if the value cannot be interpreted.
    """
    if isinstance(value, bool):
        raise ValueError('{!r} is not a rational number'.format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if match:
            num, den = match.groups()
            if den is not None and int(den) == 0:
                raise ValueError('zero denominator in {!r}'.format(value))
            return Fraction(int(num), int(den) if den else 1)
    raise ValueError('{!r} is not a rational number'.format(value))


def rational_str(value):
    """Writes a rational as "p" or "p/q" (the JSON convention for exact data)"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{:d}/{:d}'.format(value.numerator, value.denominator)


class SteinhcError(Exception):
    """
    Class for the steinhc package errors
    """


class InvalidGenerator(SteinhcError):
    """A generator of a free graded-commutative algebra has degree <= 0"""

    def __init__(self, degree):
        super().__init__(
            'generator degree {!s} is not a positive integer'.format(degree)
        )
        self.degree = degree


class NotAComplex(SteinhcError):
    """The differential of a Morse complex does not square to zero"""

    def __init__(self, index, entries):
        super().__init__(
            'd o d != 0 from index {:d} to index {:d}; first nonzero'
            ' entries: {!s}'.format(index, index-2, entries)
        )
        self.index = index
        self.entries = entries


class MalformedDifferential(SteinhcError):
    """A differential entry does not lower the Morse index by one, or
    refers to an unknown critical point"""


class SubcriticalityViolation(SteinhcError):
    """A Morse index k >= n where k < n is required"""

    def __init__(self, n, k, label=None):
        where = '' if label is None else ' (critical point {:s})'.format(label)
        super().__init__(
            'Morse index k = {:d} is not below n = {:d}{:s}'.format(k, n, where)
        )
        self.n = n
        self.k = k
        self.label = label


class InvalidMultiplicity(SteinhcError):
    """An orbit multiplicity below 1"""

    def __init__(self, m):
        super().__init__('multiplicity = {!s} must be >= 1'.format(m))
        self.m = m


class DegreeMismatch(SteinhcError):
    """A cochain is not concentrated in the Morse index of the generator
    it is paired with"""


class OffHypersurface(SteinhcError):
    """A point does not lie on the level set {phi = c}"""

    def __init__(self, phi, c):
        super().__init__(
            'point is off the hypersurface: phi = {:.12g}, c = {:.12g}'.format(
                phi, c)
        )
        self.phi = phi
        self.c = c


class DegenerateOrbitTorus(SteinhcError):
    """Two elliptic coefficients a_j coincide so closed orbits come in
    families"""

    def __init__(self, j1, j2, value):
        super().__init__(
            'a_{:d} = a_{:d} = {:.12g}: closed orbits are not isolated'.format(
                j1, j2, value)
        )
        self.planes = (j1, j2)
        self.value = value


class InvalidRotation(SteinhcError):
    """An elliptic block with non-positive total rotation angle"""

    def __init__(self, angle):
        super().__init__(
            'elliptic rotation angle = {:.12g} must be > 0'.format(angle)
        )
        self.angle = angle


class ConditionNotMet(SteinhcError):
    """The thin-handle condition m/a_n < 1/a_j fails"""

    def __init__(self, m, j):
        super().__init__(
            'condition m/a_n < 1/a_j fails for m = {:d}, j = {:d}'.format(m, j)
        )
        self.m = m
        self.j = j


class StepTooLarge(SteinhcError):
    """Integration drifted off the level set by more than DRIFT_RTOL*c"""

    def __init__(self, drift, limit):
        super().__init__(
            'phi drifted by {:.3g} > {:.3g}; reduce the step size'.format(
                drift, limit)
        )
        self.drift = drift
        self.limit = limit


class NonPositiveChernPairing(SteinhcError):
    """Prequantization gradings are unbounded below when c <= 0"""

    def __init__(self, c):
        super().__init__(
            'Chern pairing c = {!s} must be positive'.format(c)
        )
        self.c = c


class NotSubcritical(SteinhcError):
    """A homological dimension D >= n"""

    def __init__(self, n, D):
        super().__init__(
            'homological dimension D = {:d} is not below n = {:d}'.format(D, n)
        )
        self.n = n
        self.D = D


class Unsolvable(SteinhcError):
    """The Betti sequence a is not symmetric, so no b solves the relations"""

    def __init__(self, index, a):
        super().__init__(
            'a is not symmetric: a_{:d} = {:d} but a_{:d} = {:d}'.format(
                index, a[index], len(a)-1-index, a[len(a)-1-index])
        )
        self.index = index


class Inconsistent(SteinhcError):
    """The accumulation relations and Poincare duality disagree"""

    def __init__(self, degree, values):
        super().__init__(
            'b_{:d} is determined inconsistently: {!s}'.format(degree, values)
        )
        self.degree = degree
        self.values = values


class DivisionByZero(SteinhcError, ZeroDivisionError):
    """A polarization degree k = 0 in a grading formula"""


class SchemaError(SteinhcError):
    """An input file does not match its JSON schema"""

    def __init__(self, path, message):
        super().__init__('{:s}: {:s}'.format(path, message))
        self.path = path


class SteinhcWarning(AstropyUserWarning):
    """
    Class for steinhc package warnings. Use with warnings.warn
    """


class ResonanceWarning(SteinhcWarning):
    """RESONANT: a ratio a_j/a_j' is close to a small-denominator rational"""


class NonIntegerChernWarning(SteinhcWarning):
    """The Chern pairing implied by the degree relation is not an integer, or
    a given c leaves an odd D although k divides 2c"""


class PolarizationDegreeWarning(SteinhcWarning):
    """A polarization of degree k > 1; the grading formulas still apply"""


class DegenerateDomainWarning(SteinhcWarning):
    """Stein data whose degree-0 homology vanishes"""
