import unittest
import math
import numpy as np
import os
import sys
import tempfile
os.environ.setdefault("TENSORBOARD_LOGGING", "0")
os.environ.setdefault("VISDOM_LOGGING", "0")
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
from venngram.errors import DomainError, InsufficientData
from venngram.experiment import *
from venngram.logging import Logger, enabled_backends
from venngram.probmodel import EstimatedStats, TripleMarginals, joint_to_marginals, random_joint

MARGINALS = TripleMarginals(0.5, 0.5, 0.5, 0.25, 0.25, 0.25)


def synthetic_table(areas, pabcs, errors=0):
    records = [CopyRecord(i, EstimatedStats(MARGINALS, p, 1.0), central_area=s, config_class='Generic')
               for i, (s, p) in enumerate(zip(areas, pabcs))]
    for j in range(errors):
        records.append(CopyRecord(len(records), EstimatedStats(MARGINALS, 0.1, 1.0),
                                  error_note='ConfigurationInfeasible: synthetic'))
    return ExperimentTable(records, None, len(records), None)


class TestSweep(unittest.TestCase):
    def test_deterministic(self):
        self.assertEqual(run_experiment(3, 10 ** 4, 42), run_experiment(3, 10 ** 4, 42))
        self.assertNotEqual(run_experiment(3, 10 ** 4, 42), run_experiment(3, 10 ** 4, 43))

    def test_parallel_matches_serial(self):
        self.assertEqual(run_experiment(40, 10 ** 4, 9, workers=1), run_experiment(40, 10 ** 4, 9, workers=3))

    def test_same_distributions_across_trials(self):
        coarse = run_experiment(100, 10 ** 4, 7)
        fine = run_experiment(100, 10 ** 8, 7)
        for low, high in zip(coarse.records, fine.records):
            self.assertEqual(low.copy_index, high.copy_index)
            exact = joint_to_marginals(random_joint(7 + high.copy_index))
            self.assertLess(abs(high.stats.pA - exact.pA), 1e-3)
            self.assertLess(abs(low.stats.pA - high.stats.pA), 0.05)

    def test_infeasible_copies_are_recorded(self):
        table = run_experiment(1000, 10 ** 4, 0)
        self.assertEqual(len(table), 1000)
        solved = table.solved_records()
        # About 5% of the random joints give pairwise distances that cannot form a triangle.
        self.assertAlmostEqual(len(solved) / 1000.0, 0.948, delta=0.005)
        for record in table.records:
            self.assertTrue((record.central_area is None) != (record.error_note is None))
            if record.solved:
                self.assertGreaterEqual(record.central_area, 0.0)

    def test_invalid_arguments(self):
        self.assertRaises(DomainError, run_experiment, 0, 10, 0)
        self.assertRaises(DomainError, run_experiment, 1, 0, 0)
        self.assertRaises(DomainError, run_experiment, 1, 10, -3)

    def test_sort_by_pabc(self):
        table = synthetic_table([0.3, 0.2, 0.1], [0.3, 0.2, 0.1])
        ordered = sort_by_pabc(table)
        self.assertTrue(ordered.sorted)
        self.assertFalse(table.sorted)
        self.assertEqual([r.copy_index for r in ordered.records], [2, 1, 0])
        self.assertEqual(sort_by_pabc(ordered).records, ordered.records)

        ties = sort_by_pabc(synthetic_table([0.1, 0.2, 0.3, 0.4], [0.2, 0.1, 0.2, 0.1]))
        self.assertEqual([r.copy_index for r in ties.records], [1, 3, 0, 2])

    def test_logger_receives_every_copy(self):
        self.assertNotIn('tensorboard', enabled_backends())
        logger = Logger(interval=4)
        table = run_experiment(10, 10 ** 3, 1, logger=logger)
        solved = len(table.solved_records())
        self.assertEqual(logger.sweep.logs["Solved Copies"][-1], solved)
        self.assertEqual(logger.sweep.logs["Infeasible Copies"][-1], 10 - solved)
        self.assertEqual(len(logger.sweep.logs["Mean S"]), 10)
        summary = summarize_sweep(table)
        logger.run_end_sweep(summary.fit, summary.profile or None)
        self.assertEqual(logger.copies_seen, 0)
        logger.close()


class TestFit(unittest.TestCase):
    def test_exact_recovery(self):
        areas = np.linspace(0.01, 0.5, 50)
        table = synthetic_table(areas, REFERENCE_K * (areas + areas ** 2), errors=3)
        fit = fit_k(table)
        self.assertAlmostEqual(fit.k, 0.63, 12)
        self.assertLessEqual(fit.rss, 1e-20)
        self.assertEqual(fit.skipped_copies, 3)
        self.assertAlmostEqual(fit.pearson_r, 1.0, 3)
        self.assertAlmostEqual(fit.spearman_rho, 1.0, 12)
        self.assertEqual(fit.model, 'shared')
        self.assertAlmostEqual(fit.predict(0.2), REFERENCE_K * 0.24, 12)

    def test_closed_form(self):
        self.assertAlmostEqual(fit_k(synthetic_table([1.0, 0.0], [2.0, 0.0])).k, 1.0, 15)

    def test_scale(self):
        areas = np.linspace(0.05, 0.4, 30)
        pabcs = 0.5 * areas + np.sin(7 * areas) * 0.01
        k = fit_k(synthetic_table(areas, pabcs)).k
        self.assertAlmostEqual(fit_k(synthetic_table(areas, 3 * pabcs)).k, 3 * k, 12)

    def test_two_coefficients(self):
        areas = np.linspace(0.01, 0.5, 40)
        fit = fit_k(synthetic_table(areas, 0.4 * areas + 0.9 * areas ** 2), shared=False)
        self.assertAlmostEqual(fit.k, 0.4, 9)
        self.assertAlmostEqual(fit.k2, 0.9, 9)
        self.assertEqual(fit.model, 'two-coefficient')

    def test_insufficient_data(self):
        self.assertRaises(InsufficientData, fit_k, synthetic_table([], [], errors=4))
        self.assertRaises(InsufficientData, fit_k, synthetic_table([0.0, 0.0, 0.0], [0.1, 0.2, 0.3]))
        self.assertRaises(InsufficientData, fit_k, synthetic_table([0.2], [0.1]))

    def test_fluctuation_profile(self):
        table = synthetic_table([0.2] * 30, np.linspace(0, 0.3, 30))
        self.assertRaises(DomainError, fluctuation_profile, table, 5)
        ordered = sort_by_pabc(table)
        for _, std in fluctuation_profile(ordered, 5):
            self.assertAlmostEqual(std, 0.0, 15)
        self.assertEqual(len(fluctuation_profile(ordered, 5)), 26)

        areas = np.linspace(0.1, 0.2, 10) ** 2
        ordered = sort_by_pabc(synthetic_table(areas, np.linspace(0, 0.1, 10)))
        profile = fluctuation_profile(ordered, 10)
        self.assertEqual(len(profile), 1)
        self.assertAlmostEqual(profile[0][1], float(np.std(areas)), 15)
        self.assertAlmostEqual(profile[0][0], 0.1 * 5 / 9, 15)
        self.assertRaises(DomainError, fluctuation_profile, ordered, 1)
        self.assertRaises(DomainError, fluctuation_profile, ordered, 11)

    def test_default_window(self):
        self.assertEqual(default_window(10), 25)
        self.assertEqual(default_window(1000), 25)
        self.assertEqual(default_window(32000), 800)

    def test_sampling_fluctuation(self):
        table = synthetic_table([0.2, 0.3, 0.4], [0.1, 0.2, 0.3], errors=1)
        self.assertAlmostEqual(sampling_fluctuation(table, [0.1, None, 0.4, 0.5]), math.sqrt(0.005), 15)
        self.assertRaises(InsufficientData, sampling_fluctuation, table, [None] * 4)
        summary = summarize_sweep(table, 2, exact=[0.2, 0.3, 0.4, None])
        self.assertEqual(summary.sampling_std, 0.0)
        self.assertIsNone(summarize_sweep(table, 2).sampling_std)

    def test_exact_area_is_the_limit(self):
        exact = exact_areas(50, 7)
        self.assertEqual(exact, [exact_area(index, 7) for index in range(50)])
        compared = 0
        for record in run_experiment(50, 10 ** 8, 7).records:
            if record.solved and exact[record.copy_index] is not None:
                self.assertLess(abs(record.central_area - exact[record.copy_index]), 1e-3)
                compared += 1
        self.assertGreater(compared, 35)

    def test_narrowing(self):
        points = narrowing_sweep(1000, master_seed=0, window=25)
        self.assertEqual([point.n_trials for point in points], [10 ** 4, 10 ** 6, 10 ** 8])
        sampling = [point.sampling_std for point in points]
        self.assertLess(sampling[1], sampling[0] / 3)
        self.assertLess(sampling[2], sampling[1] / 3)
        # Pinned. The spread of S among the distributions themselves dominates these widths.
        widths = [point.mean_rolling_std for point in points]
        for width, measured in zip(widths, (0.0289597, 0.0291363, 0.0291545)):
            self.assertAlmostEqual(width, measured, delta=1e-6)
        for point in points:
            self.assertGreater(point.spearman_rho, 0.87)
            self.assertGreater(point.k, 0.0)


class TestCsv(unittest.TestCase):
    def test_round_trip(self):
        table = run_experiment(25, 10 ** 4, 5)
        with tempfile.TemporaryDirectory() as root:
            path = os.path.join(root, 'sweep.csv')
            write_csv(table, path)
            with open(path) as handle:
                self.assertEqual(handle.readline().strip(), ','.join(CSV_COLUMNS))
            loaded = read_csv(path)
        self.assertEqual(loaded.records, table.records)
        self.assertIsNone(loaded.n_trials)
        self.assertFalse(loaded.sorted)

    def test_byte_identical(self):
        with tempfile.TemporaryDirectory() as root:
            contents = []
            for name in ('first.csv', 'second.csv'):
                path = os.path.join(root, name)
                write_csv(run_experiment(30, 10 ** 4, 8), path)
                with open(path, 'rb') as handle:
                    contents.append(handle.read())
        self.assertEqual(contents[0], contents[1])

    def test_bad_header(self):
        with tempfile.TemporaryDirectory() as root:
            path = os.path.join(root, 'bad.csv')
            with open(path, 'w') as handle:
                handle.write("a,b,c\n1,2,3\n")
            self.assertRaises(DomainError, read_csv, path)


if __name__ == '__main__':
    unittest.main()
