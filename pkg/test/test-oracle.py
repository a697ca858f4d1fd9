import unittest
import math
import numpy as np
import os
import sys
os.environ.setdefault("TENSORBOARD_LOGGING", "0")
os.environ.setdefault("VISDOM_LOGGING", "0")
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
from venngram.errors import DomainError
from venngram.geometry import (GENERIC, ConfigurationInfeasible, TripleConfig, classify_config,
                               triple_intersection_area)
from venngram.oracle import *


class TestMonteCarlo(unittest.TestCase):
    def assertWithin(self, estimate, expected, sigmas):
        self.assertLessEqual(abs(estimate.mean - expected), sigmas * estimate.std_error + 1e-12)

    def test_lens_area_numeric(self):
        self.assertEqual(lens_area_numeric(1, 1, 2.5, 10 ** 4, 0).mean, 0.0)
        self.assertWithin(lens_area_numeric(1, 0.5, 0.1, 10 ** 6, 1), math.pi * 0.25, 4)
        self.assertWithin(lens_area_numeric(1, 1, 1, 10 ** 6, 2), 2 * math.pi / 3 - math.sqrt(3) / 2, 4)

    def test_triple_area_numeric(self):
        identical = TripleConfig.from_distances(1, 1, 1, 0, 0, 0)
        self.assertWithin(triple_area_numeric(identical, 10 ** 6, 0), math.pi, 4)
        disjoint = TripleConfig.from_distances(1, 1, 1, 3, 3, 3)
        self.assertEqual(triple_area_numeric(disjoint, 10 ** 4, 0).mean, 0.0)
        reuleaux = TripleConfig.from_distances(1, 1, 1, 1, 1, 1)
        self.assertWithin(triple_area_numeric(reuleaux, 4 * 10 ** 6, 7), (math.pi - math.sqrt(3)) / 2, 4)

    def test_deterministic(self):
        config = TripleConfig.from_distances(1, 0.8, 0.9, 1, 1.1, 0.9)
        self.assertEqual(triple_area_numeric(config, 10 ** 5, 11), triple_area_numeric(config, 10 ** 5, 11))

    def test_invalid_samples(self):
        config = TripleConfig.from_distances(1, 1, 1, 1, 1, 1)
        self.assertRaises(DomainError, triple_area_numeric, config, 0, 0)

    def test_std_error_scaling(self):
        config = TripleConfig.from_distances(1, 0.8, 0.9, 1, 1.1, 0.9)
        for samples in (10 ** 4, 10 ** 5):
            coarse = triple_area_numeric(config, samples, 5).std_error
            fine = triple_area_numeric(config, 100 * samples, 6).std_error
            self.assertGreater(coarse / fine, 5.0)
            self.assertLess(coarse / fine, 20.0)
        lens = [lens_area_numeric(1, 1, 1, samples, 3).std_error for samples in (10 ** 4, 10 ** 6)]
        self.assertGreater(lens[0] / lens[1], 5.0)
        self.assertLess(lens[0] / lens[1], 20.0)

    def test_closed_form_agreement(self):
        rng = np.random.default_rng(17)
        checked = 0
        while checked < 200:
            a, b, c = rng.uniform(0.5, 1.0, size=3)
            try:
                config = TripleConfig.from_distances(a, b, c, rng.uniform(abs(a - b), a + b),
                                                     rng.uniform(abs(a - c), a + c),
                                                     rng.uniform(abs(b - c), b + c))
            except ConfigurationInfeasible:
                continue
            if classify_config(config)[0] != GENERIC:
                continue
            breakdown, estimate, z = compare_with_closed_form(config, 10 ** 7, checked)
            self.assertEqual(breakdown.total, triple_intersection_area(config).total)
            self.assertLessEqual(abs(breakdown.total - estimate.mean), 4 * estimate.std_error + 1e-9)
            checked += 1


if __name__ == '__main__':
    unittest.main()
