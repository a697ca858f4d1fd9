import unittest
import numpy as np
import os
import sys
os.environ.setdefault("TENSORBOARD_LOGGING", "0")
os.environ.setdefault("VISDOM_LOGGING", "0")
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
from venngram.errors import DomainError
from venngram.probmodel import *

FIVE_TRIALS = [(0, 1, 1), (1, 0, 1), (0, 0, 1), (1, 1, 0), (1, 0, 0)]


class TestJoint(unittest.TestCase):
    def test_random_joint(self):
        dist = random_joint(0)
        self.assertTrue(np.all(dist.probs >= 0))
        self.assertAlmostEqual(float(dist.probs.sum()), 1.0, 12)
        self.assertNotEqual(random_joint(1), random_joint(2))
        self.assertEqual(random_joint(5), random_joint(5))
        self.assertRaises(DomainError, random_joint, -1)

    def test_random_joint_symmetry(self):
        mean = np.mean([random_joint(seed).probs for seed in range(20000)], axis=0)
        for value in mean:
            self.assertLess(abs(value - 0.125), 0.005)

    def test_joint_validation(self):
        self.assertRaises(DomainError, JointDist8, [0.5] * 8)
        self.assertRaises(DomainError, JointDist8, [-0.1, 0.3, 0.2, 0.2, 0.1, 0.1, 0.1, 0.1])
        self.assertRaises(DomainError, JointDist8, [0.5, 0.5])

    def test_sample_counts(self):
        counts = sample_counts(JointDist8.point_mass((1, 1, 1)), 100, 0)
        self.assertEqual(counts[(1, 1, 1)], 100)
        self.assertEqual(counts.total, 100)

        n = 10 ** 6
        counts = sample_counts(JointDist8.uniform(), n, 3)
        self.assertEqual(counts.total, n)
        sigma = np.sqrt(n * 0.125 * 0.875)
        for cell in CELLS:
            self.assertLess(abs(counts[cell] - n / 8), 4 * sigma)

        for seed in range(20):
            self.assertEqual(sample_counts(random_joint(seed), 12345, [seed, 1]).total, 12345)
        self.assertRaises(DomainError, sample_counts, JointDist8.uniform(), 0, 0)

    def test_estimate_from_counts(self):
        stats = estimate_from_counts(counts_from_outcomes(FIVE_TRIALS))
        expected = {'pA': 0.6, 'pB': 0.4, 'pC': 0.6, 'pAB': 0.2, 'pAC': 0.2, 'pBC': 0.2, 'pABC': 0.0,
                    'pUnion': 1.0}
        for name, value in expected.items():
            self.assertAlmostEqual(getattr(stats, name), value, 15)

        stats = estimate_from_counts(CellCounts({(1, 1, 1): 7}))
        for value in stats.to_dict().values():
            self.assertEqual(value, 1.0)
        stats = estimate_from_counts(CellCounts({(0, 0, 0): 7}))
        for value in stats.to_dict().values():
            self.assertEqual(value, 0.0)
        self.assertRaises(DomainError, estimate_from_counts, CellCounts([0] * 8))

    def test_joint_to_marginals(self):
        stats = joint_to_marginals(JointDist8.uniform())
        self.assertEqual((stats.pA, stats.pB, stats.pC), (0.5, 0.5, 0.5))
        self.assertEqual((stats.pAB, stats.pAC, stats.pBC), (0.25, 0.25, 0.25))
        self.assertEqual(stats.pABC, 0.125)

        stats = joint_to_marginals(JointDist8.point_mass((1, 1, 1)))
        for value in stats.to_dict().values():
            self.assertEqual(value, 1.0)

        stats = joint_to_marginals(JointDist8({(1, 1, 1): 0.2, (0, 0, 0): 0.8}))
        for name in ('pA', 'pB', 'pC', 'pAB', 'pAC', 'pBC', 'pABC'):
            self.assertAlmostEqual(getattr(stats, name), 0.2, 15)

    def test_inclusion_exclusion(self):
        for seed in range(10 ** 5):
            dist = random_joint(seed)
            self.assertLess(abs(inclusion_exclusion_check(joint_to_marginals(dist))), 1e-12)
            if seed % 1000 == 0:
                counts = sample_counts(dist, 10 ** 5, [seed, 1])
                self.assertLess(abs(inclusion_exclusion_check(estimate_from_counts(counts))), 1e-12)
        stats = joint_to_marginals(random_joint(0))
        perturbed = EstimatedStats(stats.marginals, stats.pABC + 0.01, stats.pUnion)
        self.assertAlmostEqual(inclusion_exclusion_check(perturbed), 0.01, 12)
        self.assertAlmostEqual(union_probability(stats), stats.pUnion, 12)
        self.assertAlmostEqual(pairwise_union(0.5, 0.4, 0.2), 0.7, 15)

    def test_estimates_converge(self):
        errors = {}
        for n in (10 ** 3, 10 ** 5):
            worst = []
            for seed in range(50):
                dist = random_joint(seed)
                exact = joint_to_marginals(dist).to_dict()
                estimated = estimate_from_counts(sample_counts(dist, n, [seed, 1])).to_dict()
                worst.append(max(abs(exact[name] - estimated[name]) for name in exact))
            errors[n] = np.mean(worst)
        self.assertLess(errors[10 ** 5], 2 * errors[10 ** 3] / 10)


class TestFeasibility(unittest.TestCase):
    def test_check_pair(self):
        violations, clamped = check_pair(0.5, 0.5, 0.6, 'pAB')
        self.assertEqual([v.kind for v in violations], ['upper'])
        self.assertIn('Fréchet upper bound', str(violations[0]))
        self.assertAlmostEqual(clamped, 0.5, 15)

        violations, clamped = check_pair(0.9, 0.9, 0.7, 'pAB')
        self.assertEqual([v.kind for v in violations], ['lower'])
        self.assertAlmostEqual(clamped, 0.8, 12)

        self.assertEqual(check_pair(0.5, 0.5, 0.3), ([], 0.3))

    def test_feasibility_check(self):
        m = joint_to_marginals(JointDist8.uniform()).marginals
        violations, clamped = feasibility_check(m)
        self.assertEqual(violations, [])
        self.assertEqual(clamped, m)

        violations, clamped = feasibility_check(TripleMarginals(0.5, 0.5, 1.2, 0.6, 0.5, 0.5))
        self.assertEqual(sorted(v.term for v in violations), ['pAB', 'pC'])
        self.assertEqual(clamped.pC, 1.0)
        self.assertEqual(clamped.pAB, 0.5)

    def test_triple_bounds(self):
        stats = estimate_from_counts(counts_from_outcomes(FIVE_TRIALS))
        lower, upper = triple_bounds(stats.marginals)
        self.assertAlmostEqual(lower, 0.0, 12)
        self.assertAlmostEqual(upper, 0.0, 12)
        for seed in range(200):
            stats = joint_to_marginals(random_joint(seed))
            lower, upper = triple_bounds(stats.marginals)
            self.assertLessEqual(lower, stats.pABC + 1e-12)
            self.assertLessEqual(stats.pABC, upper + 1e-12)


if __name__ == '__main__':
    unittest.main()
