import unittest
import math
import numpy as np
import os
import sys
os.environ.setdefault("TENSORBOARD_LOGGING", "0")
os.environ.setdefault("VISDOM_LOGGING", "0")
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
from venngram.errors import *
from venngram.geometry import *
from venngram.probmodel import TripleMarginals, joint_to_marginals, random_joint

REULEAUX = (math.pi - math.sqrt(3)) / 2
UNIT_LENS = 2 * math.pi / 3 - math.sqrt(3) / 2


def random_generic_configs(count, seed):
    rng = np.random.default_rng(seed)
    configs = []
    while len(configs) < count:
        a, b, c = rng.uniform(0.5, 1.0, size=3)
        r = rng.uniform(abs(a - b), a + b)
        s = rng.uniform(abs(a - c), a + c)
        t = rng.uniform(abs(b - c), b + c)
        try:
            config = TripleConfig.from_distances(a, b, c, r, s, t)
        except ConfigurationInfeasible:
            continue
        if classify_config(config)[0] == GENERIC:
            configs.append(config)
    return configs


class TestCircles(unittest.TestCase):
    def test_radius_from_prob(self):
        self.assertEqual(radius_from_prob(0), 0.0)
        self.assertAlmostEqual(radius_from_prob(math.pi / 4), 0.5, 15)
        self.assertAlmostEqual(radius_from_prob(1), 0.564190, 6)
        self.assertRaises(DomainError, radius_from_prob, -0.1)

    def test_lens_area(self):
        self.assertEqual(lens_area(1, 1, 2.5), 0.0)
        self.assertAlmostEqual(lens_area(1, 0.5, 0.1), math.pi * 0.25, 12)
        self.assertAlmostEqual(lens_area(1, 1, 1), UNIT_LENS, 12)
        self.assertAlmostEqual(lens_area(1, 1, 1), 1.228370, 6)
        self.assertRaises(DomainError, lens_area, 1, 1, -1)

    def test_solve_center_distance(self):
        self.assertEqual(solve_center_distance(1, 1, 0, 1e-12), 2.0)
        self.assertEqual(solve_center_distance(1, 0.5, math.pi * 0.25, 1e-12), 0.5)
        self.assertAlmostEqual(solve_center_distance(1, 1, 1.228370, 1e-9), 1.0, 5)
        with self.assertRaises(InfeasibleLens) as ctx:
            solve_center_distance(1, 0.5, 1.0)
        self.assertEqual((ctx.exception.r1, ctx.exception.r2, ctx.exception.target), (1, 0.5, 1.0))
        self.assertIn(str(math.pi * 0.25), str(ctx.exception))
        self.assertRaises(DomainError, solve_center_distance, 1, 1, 0.5, 0)

    def test_lens_round_trip(self):
        for seed in range(1000):
            stats = joint_to_marginals(random_joint(seed))
            a, b, c = (radius_from_prob(p) for p in (stats.pA, stats.pB, stats.pC))
            for r1, r2, target in ((a, b, stats.pAB), (a, c, stats.pAC), (b, c, stats.pBC)):
                d = solve_center_distance(r1, r2, target)
                self.assertLess(abs(lens_area(r1, r2, d) - target), 1e-9)

    def test_place_centers(self):
        A, B, C = place_centers(1, 1, 1)
        self.assertEqual(A, (0.0, 0.0))
        self.assertEqual(B, (1.0, 0.0))
        self.assertAlmostEqual(C[0], 0.5, 15)
        self.assertAlmostEqual(C[1], math.sqrt(3) / 2, 15)
        A, B, C = place_centers(2, 1, 1)
        self.assertEqual(B, (2.0, 0.0))
        self.assertEqual(C, (1.0, 0.0))
        with self.assertRaises(ConfigurationInfeasible) as ctx:
            place_centers(1, 3, 1)
        self.assertEqual(ctx.exception.sides, (1, 3, 1))

    def test_build_config(self):
        p = 0.3
        config = build_config(TripleMarginals(p, p, p, p, p, p))
        for radius in config.circles:
            self.assertAlmostEqual(radius, math.sqrt(p / math.pi), 15)
        self.assertEqual((config.r, config.s, config.t), (0.0, 0.0, 0.0))

        config = build_config(TripleMarginals(0.2, 0.3, 0.4, 0, 0, 0))
        a, b, c = config.circles
        self.assertAlmostEqual(config.r, a + b, 12)
        self.assertAlmostEqual(config.s, a + c, 12)
        self.assertAlmostEqual(config.t, b + c, 12)

        config = build_config(TripleMarginals(math.pi, math.pi, math.pi, 1.228370, 1.228370, 1.228370),
                              tol=1e-9)
        for radius in config.circles:
            self.assertAlmostEqual(radius, 1.0, 12)
        for dist in (config.r, config.s, config.t):
            self.assertAlmostEqual(dist, 1.0, 5)

        self.assertRaises(InfeasibleLens, build_config, TripleMarginals(0.2, 0.3, 0.4, 0.25, 0.1, 0.1))

    def test_tiny_discs(self):
        r = radius_from_prob(1e-14)
        d = solve_center_distance(r, r, 1e-16)
        self.assertGreater(d, 0.0)
        self.assertLess(abs(lens_area(r, r, d) - 1e-16), 1e-24)
        self.assertEqual(solve_center_distance(r, r, 1e-14), 0.0)
        self.assertRaises(InfeasibleLens, solve_center_distance, r, r, 2e-14)

    def test_small_probabilities(self):
        for base in ((0.6, 0.4, 0.6, 0.2, 0.2, 0.2), (0.5, 0.5, 0.5, 0.005, 0.005, 0.005)):
            reference = triple_intersection_area(build_config(TripleMarginals(*base))).total
            for scale in (1e-6, 2e-14, 1e-20):
                m = TripleMarginals(*(p * scale for p in base))
                config = build_config(m)
                self.assertGreater(config.r, 0.0)
                total = triple_intersection_area(config).total
                self.assertGreaterEqual(total, 0.0)
                self.assertLessEqual(total, min(m.pAB, m.pAC, m.pBC) * (1 + 1e-9))
                self.assertAlmostEqual(total / scale, reference, 8)


class TestCentralArea(unittest.TestCase):
    def test_central_angles(self):
        for theta in central_angles(1, 1, 1, 1, 1, 1):
            self.assertAlmostEqual(theta, math.pi / 3, 12)
        for theta in central_angles(1, 1, 1, 1.9, 1.9, 1.9):
            self.assertLess(theta, 0)
        theta1, theta2, _ = central_angles(1, 1, 1, 1, 1.2, 1.2)
        self.assertAlmostEqual(theta1, theta2, 12)
        self.assertRaises(DegenerateDistance, central_angles, 1, 1, 1, 0, 1, 1)

    def test_segment_area(self):
        self.assertEqual(segment_area(0, 1), 0.0)
        self.assertAlmostEqual(segment_area(math.pi, 1), math.pi / 2, 12)
        self.assertAlmostEqual(segment_area(math.pi / 3, 1), math.pi / 6 - math.sqrt(3) / 4, 12)
        self.assertRaises(DomainError, segment_area, -0.1, 1)
        self.assertRaises(DomainError, segment_area, 7, 1)

    def test_chord_triangle_area(self):
        third = math.pi / 3
        self.assertAlmostEqual(chord_triangle_area(third, third, third, 1, 1, 1), math.sqrt(3) / 4, 12)
        self.assertAlmostEqual(chord_triangle_area(0, third, third, 1, 1, 1), 0.0, 12)
        self.assertAlmostEqual(chord_triangle_area(math.pi / 2, math.pi / 2, third, 1, 1, 1),
                               math.sqrt(7) / 4, 12)
        self.assertRaises(ConfigurationInfeasible, chord_triangle_area, math.pi, 0.1, 0.1, 1, 1, 1)

    def test_central_area_generic(self):
        breakdown = central_area_generic(TripleConfig.from_distances(1, 1, 1, 1, 1, 1))
        self.assertEqual(breakdown.config_class, GENERIC)
        self.assertAlmostEqual(breakdown.total, REULEAUX, 9)
        self.assertAlmostEqual(breakdown.chord_triangle, math.sqrt(3) / 4, 12)
        self.assertAlmostEqual(breakdown.total, sum(breakdown.segments) + breakdown.chord_triangle, 15)

        with self.assertRaises(NotGenericConfiguration) as ctx:
            central_area_generic(TripleConfig.from_distances(1, 1, 1, 1.99, 1.99, 1.99))
        self.assertEqual(ctx.exception.config_class, EMPTY)
        with self.assertRaises(NotGenericConfiguration) as ctx:
            central_area_generic(TripleConfig.from_distances(0.5, 0.5, 0.5, 0, 0, 0))
        self.assertEqual(ctx.exception.config_class, DEGENERATE)

    def test_classify_config(self):
        self.assertEqual(classify_config(TripleConfig.from_distances(1, 1, 1, 1, 1, 1))[0], GENERIC)
        for config in random_generic_configs(5, seed=1) + [TripleConfig.from_distances(1, 1, 1, 1.5, 1, 1)]:
            self.assertIn(classify_config(config)[0], CONFIG_CLASSES)
        self.assertEqual(classify_config(TripleConfig.from_distances(1, 1, 1, 3, 3, 3))[0], EMPTY)
        self.assertEqual(classify_config(TripleConfig.from_distances(1, 1, 1, 0, 0, 0)),
                         (DEGENERATE, "identical discs"))
        # A small disc in the middle of two large overlapping ones.
        self.assertEqual(classify_config(TripleConfig.from_distances(1, 1, 0.1, 0.2, 0.1, 0.1))[0],
                         CONTAINED)


class TestTripleIntersection(unittest.TestCase):
    def test_analytic_anchors(self):
        rho = 0.7
        breakdown = triple_intersection_area(TripleConfig.from_distances(rho, rho, rho, 0, 0, 0))
        self.assertAlmostEqual(breakdown.total, math.pi * rho ** 2, 12)
        self.assertEqual(breakdown.config_class, DEGENERATE)
        self.assertEqual(triple_intersection_area(TripleConfig.from_distances(1, 1, 1, 3, 3, 3)).total, 0.0)
        self.assertAlmostEqual(triple_intersection_area(TripleConfig.from_distances(1, 1, 1, 1, 1, 1)).total,
                               REULEAUX, 9)

    def test_identical_events(self):
        for p in (0.05, 0.3, 0.5, 0.9):
            breakdown = triple_intersection_area(build_config(TripleMarginals(p, p, p, p, p, p)))
            self.assertAlmostEqual(breakdown.total, p, 12)

    def test_contained(self):
        config = TripleConfig.from_distances(1, 1, 0.1, 0.2, 0.1, 0.1)
        breakdown = triple_intersection_area(config)
        self.assertEqual(breakdown.config_class, CONTAINED)
        self.assertAlmostEqual(breakdown.total, math.pi * 0.01, 12)

    def test_agrees_with_arc_polygon(self):
        for config in random_generic_configs(200, seed=3):
            generic = central_area_generic(config).total
            self.assertAlmostEqual(generic, triple_intersection_area(config).total, 9)
            self.assertAlmostEqual(generic, arc_polygon_area(config.discs()), 9)

    def test_mirror_invariance(self):
        for config in random_generic_configs(20, seed=5):
            self.assertAlmostEqual(triple_intersection_area(config).total,
                                   triple_intersection_area(config.reflected()).total, 12)

    def test_scaling(self):
        config = TripleConfig.from_distances(1, 1, 1, 1, 1, 1)
        self.assertAlmostEqual(triple_intersection_area(config.scaled(2.0)).total, 4 * REULEAUX, 9)


if __name__ == '__main__':
    unittest.main()
