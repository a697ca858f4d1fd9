from collections import namedtuple
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy import stats as scistats
from ..errors import DomainError, InsufficientData
from ..geometry import DEFAULT_TOL
from ..utils import reduce
from .sweep import NARROWING_TRIALS, exact_areas, run_experiment, sort_by_pabc

__all__ = ['REFERENCE_K', 'FitResult', 'SweepSummary', 'NarrowingPoint', 'calibrate', 'fit_k',
           'fluctuation_profile', 'mean_rolling_std', 'default_window', 'summarize_sweep',
           'sampling_fluctuation', 'narrowing_sweep']

REFERENCE_K = 0.63

SweepSummary = namedtuple('SweepSummary', ['n_trials', 'copies', 'fit', 'fit_error', 'window',
                                           'mean_rolling_std', 'profile', 'sampling_std'])

NarrowingPoint = namedtuple('NarrowingPoint', ['n_trials', 'mean_rolling_std', 'sampling_std',
                                               'spearman_rho', 'k', 'skipped_copies'])


class FitResult(object):
    r"""Calibration of the central area against the empirical triple probability.

    Args:
        k (float): Coefficient of :math:`S` (and of :math:`S^2` for the shared model).
        rss (float): Residual sum of squares.
        pearson_r (float): Pearson correlation between :math:`S` and :math:`P(ABC)`.
        spearman_rho (float): Spearman correlation between :math:`S` and :math:`P(ABC)`.
        residual_std (float): Standard deviation of the residuals.
        skipped_copies (int): Records without a central area.
        k2 (float, optional): Coefficient of :math:`S^2` of the two-coefficient model.
        samples (int, optional): Number of records the fit used.
    """
    def __init__(self, k, rss, pearson_r, spearman_rho, residual_std, skipped_copies, k2=None,
                 samples=None):
        self.k = float(k)
        self.rss = max(float(rss), 0.0)
        self.pearson_r = float(np.clip(pearson_r, -1.0, 1.0))
        self.spearman_rho = float(np.clip(spearman_rho, -1.0, 1.0))
        self.residual_std = float(residual_std)
        self.skipped_copies = int(skipped_copies)
        self.k2 = None if k2 is None else float(k2)
        self.samples = samples

    @property
    def model(self):
        return 'shared' if self.k2 is None else 'two-coefficient'

    def predict(self, area):
        r"""The calibrated probability of a central area under the fitted model."""
        if self.k2 is None:
            return calibrate(area, self.k)
        return self.k * area + self.k2 * area * area

    def to_dict(self):
        return {'k': self.k, 'k2': self.k2, 'rss': self.rss, 'pearson_r': self.pearson_r,
                'spearman_rho': self.spearman_rho, 'residual_std': self.residual_std,
                'skipped_copies': self.skipped_copies, 'samples': self.samples,
                'model': self.model, 'reference_k': REFERENCE_K}

    def __repr__(self):
        return "FitResult(k={!r}, rss={!r}, spearman_rho={!r}, model={!r})".format(
            self.k, self.rss, self.spearman_rho, self.model)


def calibrate(area, k=REFERENCE_K):
    r""":math:`kS + kS^2`, strictly increasing in :math:`S \ge 0` for :math:`k > 0`."""
    return k * area + k * area * area


def _correlation(method, x, y):
    # Both correlations are undefined on a constant sample.
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        return 0.0
    value = method(x, y)[0]
    return 0.0 if np.isnan(value) else float(value)


def fit_k(table, shared=True):
    r"""Least squares fit of :math:`P(ABC) \approx kS + kS^2` over the solved records.

    The shared model has the closed form

    .. math:: k = \frac{\sum_i p_i (S_i + S_i^2)}{\sum_i (S_i + S_i^2)^2}

    With ``shared=False`` the two coefficients of :math:`k_1 S + k_2 S^2` are fitted
    independently; that variant is exploratory.

    Args:
        table (ExperimentTable): The sweep, sorted or not.
        shared (bool, optional): Fit a single coefficient shared by both terms.

    Returns:
        A :class:`FitResult`.

    :raises InsufficientData: If fewer than 2 records carry an area or every area is 0.
    """
    solved = table.solved_records()
    skipped = len(table.records) - len(solved)
    if len(solved) < 2:
        raise InsufficientData("Need at least 2 records with a central area, got {} ({} skipped)"
                               .format(len(solved), skipped))
    area = np.array([record.central_area for record in solved], dtype=np.float64)
    pabc = np.array([record.stats.pABC for record in solved], dtype=np.float64)
    if not np.any(area > 0):
        raise InsufficientData("Every central area is 0, k is undetermined")
    k2 = None
    if shared:
        basis = area + area * area
        k = reduce(pabc * basis, "sum") / reduce(basis * basis, "sum")
        predicted = k * basis
    else:
        design = np.stack([area, area * area], axis=1)
        (k, k2), _, _, _ = np.linalg.lstsq(design, pabc, rcond=None)
        predicted = design @ np.array([k, k2])
    residuals = pabc - predicted
    return FitResult(k, reduce(residuals * residuals, "sum"),
                     _correlation(scistats.pearsonr, area, pabc),
                     _correlation(scistats.spearmanr, area, pabc),
                     np.std(residuals), skipped, k2=k2, samples=len(solved))


def default_window(copies):
    r"""``max(25, copies // 40)``."""
    return max(25, int(copies) // 40)


def fluctuation_profile(table, window=None):
    r"""Rolling standard deviation of :math:`S` along the records sorted by :math:`P(ABC)`.

    This is the width of the :math:`S` against :math:`P(ABC)` curve. It mixes two spreads: the
    sampling noise of each copy, and the spread of :math:`S` among distributions whose
    :math:`P(ABC)` is about the same. Only the first shrinks with more trials, see
    :func:`sampling_fluctuation`.

    Each window of consecutive solved records contributes one point: the :math:`P(ABC)` of its
    centre record and the population standard deviation of its areas.

    Args:
        table (ExperimentTable): A table returned by :func:`sort_by_pabc`.
        window (int, optional): Window length, between 2 and the number of solved records.
            Defaults to :func:`default_window` of the copy count, capped at the record count.

    Returns:
        A list of ``(window_center_pABC, rolling_std_of_S)`` tuples.
    """
    if not table.sorted:
        raise DomainError("Fluctuation profile needs a table sorted by P(ABC), call sort_by_pabc first")
    solved = table.solved_records()
    if window is None:
        window = min(default_window(table.copies), len(solved))
    if window < 2 or window > len(solved):
        raise DomainError("Window must lie in [2, {}], got {}".format(len(solved), window))
    area = np.array([record.central_area for record in solved], dtype=np.float64)
    pabc = np.array([record.stats.pABC for record in solved], dtype=np.float64)
    stds = sliding_window_view(area, window).std(axis=1)
    centres = pabc[window // 2:window // 2 + len(stds)]
    return [(float(centre), float(std)) for centre, std in zip(centres, stds)]


def mean_rolling_std(profile):
    r"""Average of the rolling standard deviations of a fluctuation profile."""
    if not profile:
        raise DomainError("Empty fluctuation profile")
    return reduce(np.array([std for _, std in profile]), "mean")


def sampling_fluctuation(table, exact):
    r"""Root mean square deviation of each copy's :math:`S` from the :math:`S` of its exact
    distribution,

    .. math:: \sqrt{\frac{1}{m} \sum_i (S_i - S_i^\infty)^2}

    over the ``m`` copies solved both ways. This is the part of the curve width caused by the
    finite number of trials; it falls like :math:`1 / \sqrt{n}`.

    Args:
        table (ExperimentTable): A sweep, sorted or not.
        exact (sequence): Exact areas indexed by ``copy_index``, as returned by
            :func:`venngram.experiment.exact_areas` for the same copies and seed.

    Returns:
        The deviation.

    :raises InsufficientData: If no copy carries both areas.
    """
    deviations = [record.central_area - exact[record.copy_index] for record in table.records
                  if record.solved and exact[record.copy_index] is not None]
    if not deviations:
        raise InsufficientData("No copy has both a sampled and an exact central area")
    return float(np.sqrt(reduce(np.square(deviations), "mean")))


def summarize_sweep(table, window=None, shared=True, exact=None):
    r"""Fit and fluctuation summary of a sweep, the numbers printed after an experiment.

    A fit that cannot be computed is reported in ``fit_error`` instead of raised. The returned
    ``profile`` is empty when fewer than 2 records carry an area. ``sampling_std`` is only
    computed when the ``exact`` areas of the copies are given.

    Returns:
        A :class:`SweepSummary`.
    """
    try:
        fit = fit_k(table, shared=shared)
        fit_error = None
    except InsufficientData as err:
        fit, fit_error = None, str(err)
    ordered = table if table.sorted else sort_by_pabc(table)
    solved = len(ordered.solved_records())
    if window is None:
        window = min(default_window(table.copies), solved)
    if solved >= 2:
        profile = fluctuation_profile(ordered, window)
        rolling = mean_rolling_std(profile)
    else:
        profile, rolling, window = [], None, None
    sampling = None
    if exact is not None:
        try:
            sampling = sampling_fluctuation(table, exact)
        except InsufficientData:
            pass
    return SweepSummary(table.n_trials, table.copies, fit, fit_error, window, rolling, profile, sampling)


def narrowing_sweep(copies, n_values=NARROWING_TRIALS, master_seed=0, window=25, tol=DEFAULT_TOL,
                    workers=1, logger=None):
    r"""Runs the same sweep at several trial counts and summarizes each.

    Every sweep draws the same joint distributions, only the number of trials per copy changes.
    ``sampling_std`` shrinks as ``n`` grows. ``mean_rolling_std`` only does so while the sampling
    noise dominates the spread of :math:`S` among the distributions themselves.

    Args:
        copies (int): Copies per sweep.
        n_values (sequence, optional): The trial counts.
        master_seed (int, optional): Seed shared by all sweeps.
        window (int, optional): Window of the fluctuation profile.
        tol (float, optional): Area tolerance of the distance solves.
        workers (int, optional): Worker processes per sweep.
        logger (venngram.logging.Logger, optional): Receives every sweep.

    Returns:
        A list of :class:`NarrowingPoint`, one per entry of ``n_values``.
    """
    exact = exact_areas(copies, master_seed, tol=tol, workers=workers)
    points = []
    for n_trials in n_values:
        table = run_experiment(copies, n_trials, master_seed, tol=tol, workers=workers, logger=logger)
        summary = summarize_sweep(table, window, exact=exact)
        if logger is not None:
            logger.run_end_sweep(summary.fit, summary.profile)
        fit = summary.fit
        points.append(NarrowingPoint(n_trials, summary.mean_rolling_std, summary.sampling_std,
                                     None if fit is None else fit.spearman_rho,
                                     None if fit is None else fit.k,
                                     copies - len(table.solved_records())))
    return points
