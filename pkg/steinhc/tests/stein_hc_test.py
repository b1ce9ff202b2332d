import unittest
import itertools
from fractions import Fraction

import numpy as np
import sympy

from steinhc import CritPoint, MorseComplex, SteinDomainSpec, HCGenerator, \
    GradedDims, cz_index, sft_grading, cyl_hc, verify_yau_isomorphism, \
    full_hc_series, expected_dimension, well_definedness_check, gw_pairing, \
    two_point_correlator, generators, pairing_matrix, rank_sequence, \
    lowest_degree, relative_homology_dual, SubcriticalityViolation, \
    InvalidMultiplicity, DegreeMismatch, DegenerateDomainWarning, SteinhcError
from steinhc.tests.random_complexes import random_stein


def ball(n):
    """M = C^n: a single minimum"""
    return SteinDomainSpec(n, MorseComplex(2*n-2, [CritPoint('p', 0)]))


def pair(n, coefficient):
    """M' with a minimum p and an index-1 point q, dq = coefficient p"""
    return SteinDomainSpec(
        n, MorseComplex(2*n-2, [CritPoint('p', 0), CritPoint('q', 1)],
                        [('q', 'p', coefficient)])
    )


class TestGradings(unittest.TestCase):

    def test_cz_index(self):
        self.assertEqual(cz_index(3, 0, 1), 4)
        self.assertEqual(cz_index(3, 2, 1), 2)
        self.assertEqual(cz_index(4, 1, 3), 8)

    def test_cz_errors(self):
        self.assertRaises(SubcriticalityViolation, cz_index, 3, 3, 1)
        self.assertRaises(InvalidMultiplicity, cz_index, 3, 0, 0)

    def test_sft_grading(self):
        self.assertEqual(sft_grading(3, 0, 1), 4)
        self.assertEqual(sft_grading(3, 0, 2), 6)
        self.assertEqual(sft_grading(5, 4, 1), 4)

    def test_grading_shift(self):
        for n in range(3, 8):
            for k in range(n):
                for m in range(1, 6):
                    self.assertEqual(sft_grading(n, k, m) - (2*n-k), 2*m-4)

    def test_generator(self):
        gen = HCGenerator('q', 1, 2, 4)
        self.assertEqual((gen.cz, gen.degree), (6, 7))
        self.assertEqual(HCGenerator.of(pair(4, 0), 'q', 2), gen)


class TestSteinSpec(unittest.TestCase):

    def test_subcritical(self):
        spec = SteinDomainSpec(3, MorseComplex(
            4, [CritPoint('p', 0), CritPoint('s', 3)]
        ))
        with self.assertRaises(SubcriticalityViolation) as cm:
            spec.check()
        self.assertEqual(cm.exception.label, 's')

    def test_needs_minimum(self):
        spec = SteinDomainSpec(3, MorseComplex(4, [CritPoint('q', 1)]))
        self.assertRaises(SteinhcError, spec.check)

    def test_dimension(self):
        spec = SteinDomainSpec(3, MorseComplex(6, [CritPoint('p', 0)]))
        self.assertRaises(SteinhcError, spec.check)
        self.assertRaises(SteinhcError, SteinDomainSpec(2, MorseComplex(
            2, [CritPoint('p', 0)])).check)

    def test_degenerate_warns(self):
        with self.assertWarns(DegenerateDomainWarning):
            pair(3, 1).check()

    def test_from_betti(self):
        spec = SteinDomainSpec.from_betti(4, [1, 0, 2])
        self.assertEqual(spec.morse.labels(2), ['e2.0', 'e2.1'])
        self.assertEqual(spec.morse.real_dimension, 6)

    def test_dict(self):
        spec = pair(3, '1/2')
        again = SteinDomainSpec.from_dict(spec.to_dict())
        self.assertEqual(again.n, 3)
        self.assertEqual(again.morse.differential, spec.morse.differential)


class TestCylindrical(unittest.TestCase):
    """
    Cylindrical contact homology and the shifted relative homology
    """

    def test_sphere(self):
        self.assertEqual(cyl_hc(ball(3), 10),
                         GradedDims({4: 1, 6: 1, 8: 1, 10: 1}))

    def test_spheres_to_40(self):
        for n in range(3, 7):
            expected = GradedDims(
                (2*m+2*n-4, 1) for m in range(1, 40) if 2*m+2*n-4 <= 40
            )
            self.assertEqual(cyl_hc(ball(n), 40), expected,
                             'n = {:d}'.format(n))

    def test_zero_differential(self):
        self.assertEqual(cyl_hc(pair(3, 0), 6),
                         GradedDims({3: 1, 4: 1, 5: 1, 6: 1}))

    def test_vanishing_homology(self):
        with self.assertWarns(DegenerateDomainWarning):
            self.assertEqual(cyl_hc(pair(3, 1), 10), GradedDims())

    def test_low_cutoff(self):
        self.assertEqual(cyl_hc(ball(3), 3), GradedDims())

    def test_yau_sphere(self):
        self.assertTrue(verify_yau_isomorphism(ball(3), 40))

    def test_yau_random(self):
        rng = np.random.default_rng(31415)
        for trial in range(200):
            spec = random_stein(rng)
            self.assertTrue(verify_yau_isomorphism(spec, 40),
                            'shift check failed on {!r}'.format(spec))

    def test_yau_mutation(self):
        def wrong_dual(morse, ambient):
            return relative_homology_dual(morse, ambient+2)
        self.assertFalse(verify_yau_isomorphism(ball(3), 20, dual=wrong_dual))

    def test_rank_sequence(self):
        spec = SteinDomainSpec.from_betti(4, [1, 0, 1])
        self.assertEqual(lowest_degree(spec), (4, 1))
        # a_D, a_(D-1), a_(D-2)+a_D, ...
        self.assertEqual(rank_sequence(spec, 5), [1, 0, 2, 0, 2])

    def test_generators(self):
        gens = generators(pair(3, 0), 6)
        self.assertEqual(
            [(g.crit_id, g.multiplicity, g.degree) for g in gens],
            [('q', 1, 3), ('p', 1, 4), ('q', 2, 5), ('p', 2, 6)]
        )


class TestFullSeries(unittest.TestCase):

    def test_sphere(self):
        self.assertEqual(full_hc_series(ball(3), 8),
                         [1, 0, 0, 0, 1, 0, 1, 0, 2])

    def test_empty(self):
        with self.assertWarns(DegenerateDomainWarning):
            self.assertEqual(full_hc_series(pair(3, 1), 5), [1, 0, 0, 0, 0, 0])

    def test_odd_generator(self):
        self.assertEqual(full_hc_series(pair(3, 0), 4), [1, 0, 0, 1, 1])

    def test_prefix_stable(self):
        # coefficient d only depends on HC^cyl in degrees <= d
        long = full_hc_series(pair(4, 0), 20).to_list()
        short = full_hc_series(pair(4, 0), 12).to_list()
        self.assertEqual(long[:13], short)


class TestModuli(unittest.TestCase):

    def test_expected_dimension(self):
        self.assertEqual(expected_dimension(0, [4], [], 3, 0), 4)
        self.assertEqual(expected_dimension(0, [5], [5], 6, 0), 0)
        self.assertEqual(expected_dimension(0, [4], [], 5, 1), 8)

    def test_expected_dimension_errors(self):
        self.assertRaises(SteinhcError, expected_dimension, -1, [4], [], 3, 0)
        self.assertRaises(SteinhcError, expected_dimension, 0, [4], [], 3, -1)

    def test_well_definedness(self):
        report = well_definedness_check(ball(3))
        self.assertTrue(report.passed)
        self.assertEqual(report.extras['min_index'], 4)

        spec = SteinDomainSpec(3, MorseComplex(
            4, [CritPoint('p', 0), CritPoint('s', 2)]
        ))
        report = well_definedness_check(spec)
        self.assertTrue(report.passed)
        self.assertEqual(report.extras['min_index'], 2)

    def test_well_definedness_random(self):
        rng = np.random.default_rng(99)
        for trial in range(40):
            report = well_definedness_check(random_stein(rng))
            self.assertTrue(report.passed)
            self.assertGreaterEqual(report.extras['min_index'], 2)


class TestPairing(unittest.TestCase):
    """
    One-point descendants and two-point correlators
    """

    def setUp(self):
        self.spec = SteinDomainSpec(3, MorseComplex(
            4, [CritPoint('p', 0), CritPoint('p2', 0), CritPoint('q', 1)]
        ))

    def test_simple(self):
        gen = HCGenerator.of(self.spec, 'p', 1)
        self.assertEqual(gw_pairing(self.spec, gen, {'p': 1}), (1, 1))

    def test_descendant(self):
        gen = HCGenerator.of(self.spec, 'p', 3)
        self.assertEqual(gw_pairing(self.spec, gen, {'p': 1}),
                         (1, Fraction(1, 2)))

    def test_disjoint(self):
        gen = HCGenerator.of(self.spec, 'p', 2)
        self.assertEqual(gw_pairing(self.spec, gen, {'p2': 5}), (0, 0))

    def test_mixed_degree(self):
        gen = HCGenerator.of(self.spec, 'p', 1)
        self.assertRaises(DegreeMismatch, gw_pairing, self.spec, gen,
                          {'p': 1, 'q': 1})

    def test_unknown_label(self):
        gen = HCGenerator.of(self.spec, 'p', 1)
        self.assertRaises(SteinhcError, gw_pairing, self.spec, gen, {'z': 1})
        self.assertRaises(SteinhcError, HCGenerator.of, self.spec, 'z', 1)

    def test_matrix_diagonal(self):
        rng = np.random.default_rng(31415)
        for trial in range(20):
            spec = random_stein(rng)
            indices = {p.index for p in spec.morse.points.values()}
            for m in range(1, 4):
                scale = Fraction(1, [1, 1, 2][m-1])
                for index in indices:
                    labels, mat = pairing_matrix(spec, m, index)
                    self.assertTrue(mat.is_diagonal())
                    for i in range(len(labels)):
                        self.assertEqual(
                            mat[i, i],
                            sympy.Rational(scale.numerator, scale.denominator)
                        )
                    self.assertNotEqual(mat.det(), 0)

    def test_correlator_examples(self):
        self.assertEqual(
            two_point_correlator(self.spec, 7, True, 2, 2, 3), 0
        )
        self.assertEqual(
            two_point_correlator(self.spec, 7, False, 2, 2, 2), 0
        )
        self.assertEqual(
            two_point_correlator(self.spec, 7, True, 2, 2, 2), 7
        )
        self.assertRaises(SteinhcError, two_point_correlator, self.spec, 7,
                          True, 2, 2, 1)

    def test_correlator_grid(self):
        cups = [0, 7, '-3/4', 2, '5/3']
        count = 0
        for cup, simple, deg1, deg2, marked in itertools.product(
                cups, (True, False), range(5), range(5), range(2, 6)):
            value = two_point_correlator(self.spec, cup, simple, deg1, deg2,
                                         marked)
            count += 1
            if marked >= 3 or not simple or max(deg1, deg2) < 2:
                self.assertEqual(value, 0)
            else:
                self.assertEqual(value, Fraction(cup))
        self.assertEqual(count, 1000)


if __name__ == '__main__':
    unittest.main()
