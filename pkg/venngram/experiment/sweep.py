from concurrent.futures import ProcessPoolExecutor
from functools import partial
from ..errors import DomainError, GeometryError
from ..geometry import DEFAULT_TOL, build_config, triple_intersection_area
from ..probmodel import check_seed, estimate_from_counts, joint_to_marginals, random_joint, sample_counts

__all__ = ['CopyRecord', 'ExperimentTable', 'run_copy', 'run_experiment', 'sort_by_pabc', 'exact_area',
           'exact_areas',
           'DEFAULT_COPIES', 'FULL_SCALE_COPIES', 'NARROWING_TRIALS']

DEFAULT_COPIES = 1000
FULL_SCALE_COPIES = 32000
NARROWING_TRIALS = (10 ** 4, 10 ** 6, 10 ** 8)


class CopyRecord(object):
    r"""Outcome of one copy of the sweep.

    Exactly one of ``central_area`` and ``error_note`` is set: copies whose geometry could not be
    built keep their estimated probabilities but carry the reason instead of an area.

    Args:
        copy_index (int): Position of the copy in the sweep.
        stats (venngram.probmodel.EstimatedStats): Probabilities estimated from the sampled counts.
        central_area (float, optional): The central area :math:`S`.
        config_class (str, optional): Configuration class of the solved discs.
        error_note (str, optional): Why no area could be computed.
    """
    def __init__(self, copy_index, stats, central_area=None, config_class=None, error_note=None):
        if (central_area is None) == (error_note is None):
            raise DomainError("A record carries either a central area or an error note")
        if central_area is not None and central_area < 0:
            raise DomainError("Central area must be nonnegative, got {}".format(central_area))
        self.copy_index = int(copy_index)
        self.stats = stats
        self.central_area = None if central_area is None else float(central_area)
        self.config_class = config_class
        self.error_note = error_note

    @property
    def solved(self):
        return self.central_area is not None

    def __eq__(self, other):
        return (isinstance(other, CopyRecord) and self.copy_index == other.copy_index and
                self.stats == other.stats and self.central_area == other.central_area and
                self.config_class == other.config_class and self.error_note == other.error_note)

    def __repr__(self):
        return "CopyRecord(copy_index={!r}, pABC={!r}, S={!r}, config_class={!r})".format(
            self.copy_index, self.stats.pABC, self.central_area, self.config_class)


class ExperimentTable(object):
    r"""The records of a sweep together with the parameters that produced them.

    Args:
        records (list): The :class:`CopyRecord` objects.
        n_trials (int): Trials per copy. ``None`` for tables read back from CSV.
        copies (int): Number of copies.
        master_seed (int): The seed all per-copy seeds derive from. ``None`` when unknown.
        sorted (bool, optional): Set by :func:`sort_by_pabc` only.
    """
    def __init__(self, records, n_trials, copies, master_seed, sorted=False):
        records = list(records)
        if len(records) != copies:
            raise DomainError("Table of {} copies holds {} records".format(copies, len(records)))
        self.records = records
        self.n_trials = n_trials
        self.copies = copies
        self.master_seed = master_seed
        self.sorted = sorted

    def solved_records(self):
        return [record for record in self.records if record.solved]

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __eq__(self, other):
        return (isinstance(other, ExperimentTable) and self.records == other.records and
                self.n_trials == other.n_trials and self.master_seed == other.master_seed and
                self.sorted == other.sorted)

    def __repr__(self):
        return "ExperimentTable(copies={!r}, n_trials={!r}, master_seed={!r}, sorted={!r})".format(
            self.copies, self.n_trials, self.master_seed, self.sorted)


def run_copy(copy_index, n_trials, master_seed, tol=DEFAULT_TOL):
    r"""Runs one copy: draw a joint distribution, sample ``n_trials`` outcomes, estimate the six
    probabilities and measure the central area of their discs.

    The joint distribution is seeded by ``master_seed + copy_index`` alone, so sweeps that only
    differ in ``n_trials`` draw the same distributions. The trials use the derived seed
    ``[master_seed + copy_index, 1]``.

    Args:
        copy_index (int): Index of the copy.
        n_trials (int): Number of trials.
        master_seed (int): Seed of the sweep.
        tol (float, optional): Area tolerance of the distance solves.

    Returns:
        A :class:`CopyRecord`.
    """
    copy_seed = master_seed + copy_index
    dist = random_joint(copy_seed)
    counts = sample_counts(dist, n_trials, [copy_seed, 1])
    stats = estimate_from_counts(counts)
    try:
        config = build_config(stats.marginals, tol)
        breakdown = triple_intersection_area(config)
    except (GeometryError, DomainError) as err:
        return CopyRecord(copy_index, stats, error_note="{}: {}".format(type(err).__name__, err))
    return CopyRecord(copy_index, stats, central_area=breakdown.total,
                      config_class=breakdown.config_class)


def run_experiment(copies, n_trials, master_seed=0, tol=DEFAULT_TOL, workers=1, logger=None):
    r"""Sweeps ``copies`` random joint distributions.

    Every copy is a pure function of ``(copy_index, n_trials, master_seed)`` and records are
    ordered by ``copy_index`` before they are returned or logged, so the table is the same for
    any number of ``workers``. Geometry failures never stop the sweep, they are kept as records
    with an ``error_note``.

    Args:
        copies (int): Number of copies, at least 1.
        n_trials (int): Trials per copy, at least 1.
        master_seed (int, optional): Nonnegative seed of the sweep.
        tol (float, optional): Area tolerance of the distance solves.
        workers (int, optional): Number of worker processes. ``1`` runs in this process.
        logger (venngram.logging.Logger, optional): Receives every record in order.

    Returns:
        An unsorted :class:`ExperimentTable`.
    """
    if copies < 1:
        raise DomainError("Number of copies must be positive, got {}".format(copies))
    if n_trials < 1:
        raise DomainError("Number of trials must be positive, got {}".format(n_trials))
    if workers < 1:
        raise DomainError("Number of workers must be positive, got {}".format(workers))
    check_seed(master_seed)
    job = partial(run_copy, n_trials=n_trials, master_seed=master_seed, tol=tol)
    if workers == 1:
        records = [job(index) for index in range(copies)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(job, range(copies), chunksize=max(1, copies // (4 * workers))))
    records.sort(key=lambda record: record.copy_index)
    if logger is not None:
        for record in records:
            logger.run_copy(record)
    return ExperimentTable(records, n_trials, copies, master_seed)


def sort_by_pabc(table):
    r"""Orders the records by their empirical :math:`P(ABC)`, ties by ``copy_index``.

    Returns:
        A new :class:`ExperimentTable` flagged as sorted.
    """
    records = sorted(table.records, key=lambda record: (record.stats.pABC, record.copy_index))
    return ExperimentTable(records, table.n_trials, table.copies, table.master_seed, sorted=True)


def exact_area(copy_index, master_seed, tol=DEFAULT_TOL):
    r"""Central area of the joint distribution a copy draws, computed from its exact probabilities
    instead of sampled ones. This is the value :func:`run_copy` tends to as the number of trials
    grows.

    Returns:
        The area, or ``None`` if the geometry of the exact probabilities cannot be built.
    """
    marginals = joint_to_marginals(random_joint(master_seed + copy_index)).marginals
    try:
        return triple_intersection_area(build_config(marginals, tol)).total
    except (GeometryError, DomainError):
        return None


def exact_areas(copies, master_seed=0, tol=DEFAULT_TOL, workers=1):
    r"""Runs :func:`exact_area` for every copy of a sweep.

    Returns:
        A list indexed by ``copy_index``.
    """
    if copies < 1:
        raise DomainError("Number of copies must be positive, got {}".format(copies))
    check_seed(master_seed)
    job = partial(exact_area, master_seed=master_seed, tol=tol)
    if workers == 1:
        return [job(index) for index in range(copies)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(job, range(copies), chunksize=max(1, copies // (4 * workers))))
