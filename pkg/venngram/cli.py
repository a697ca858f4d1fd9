r"""Command line entry point of ``venngram``.

Exit codes are stable for scripting: 0 success, 2 infeasible or malformed input, 3 I/O failure,
4 unknown word.
"""
import argparse
import json
import math
import sys
from .errors import DomainError, InsufficientData, UnknownWord, VenngramError
from .experiment import (DEFAULT_COPIES, FULL_SCALE_COPIES, REFERENCE_K, calibrate, exact_areas, read_csv,
                         run_experiment, summarize_sweep, write_csv)
from .geometry import DEFAULT_TOL, build_config, triple_intersection_area
from .logging import Logger
from .ngram import load_counts, markov_score, rank_sentences, score_sentence
from .oracle import compare_with_closed_form
from .probmodel import TripleMarginals, feasibility_check, triple_bounds
from . import __version__

__all__ = ['RunConfig', 'build_parser', 'main', 'EXIT_OK', 'EXIT_INFEASIBLE', 'EXIT_IO',
           'EXIT_UNKNOWN_WORD']

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_IO = 3
EXIT_UNKNOWN_WORD = 4

DEFAULT_TRIALS = 10 ** 4
DEFAULT_ORACLE_SAMPLES = 10 ** 6

_PROB_FLAGS = (('pa', 'pA'), ('pb', 'pB'), ('pc', 'pC'), ('pab', 'pAB'), ('pac', 'pAC'), ('pbc', 'pBC'))


class RunConfig(object):
    r"""Validated parameters of one command.

    Args:
        command (str): The subcommand.
        **params: Its parameters, as parsed from the flags.
    """
    _POSITIVE = ('copies', 'n_trials', 'workers', 'samples', 'tol')
    _NONNEGATIVE = ('seed', 'k')

    def __init__(self, command, **params):
        self.command = command
        self.params = params

    @classmethod
    def from_args(cls, args):
        params = dict(vars(args))
        command = params.pop('command')
        params.pop('handler', None)
        if params.get('full_scale'):
            params['copies'] = FULL_SCALE_COPIES
        return cls(command, **params)

    def __getattr__(self, name):
        try:
            return self.__dict__['params'][name]
        except KeyError:
            raise AttributeError(name)

    def marginals(self):
        return TripleMarginals(*(self.params[flag] for flag, _ in _PROB_FLAGS))

    def validate(self):
        r"""Checks every parameter against its domain.

        :raises DomainError: Naming the first offending parameter.
        """
        for name in self._POSITIVE:
            value = self.params.get(name)
            if value is not None and not value > 0:
                raise DomainError("--{} must be positive, got {}".format(name.replace('_', '-'), value))
        for name in self._NONNEGATIVE:
            value = self.params.get(name)
            if value is not None and not value >= 0:
                raise DomainError("--{} must be nonnegative, got {}".format(name, value))
        window = self.params.get('window')
        if window is not None and window < 2:
            raise DomainError("--window must be at least 2, got {}".format(window))
        for flag, _ in _PROB_FLAGS:
            value = self.params.get(flag)
            if value is not None and not (0.0 <= value <= 1.0 and math.isfinite(value)):
                raise DomainError("--{} must be a probability in [0, 1], got {}".format(flag, value))
        return self

    def __repr__(self):
        return "RunConfig({!r}, {!r})".format(self.command, self.params)


def _emit(payload, text_lines, fmt, stream=None):
    stream = sys.stdout if stream is None else stream
    if fmt == 'json':
        print(json.dumps(payload, indent=2), file=stream)
    else:
        for line in text_lines:
            print(line, file=stream)


def _check_marginals(config):
    m = config.marginals()
    violations, _ = feasibility_check(m)
    if violations:
        raise DomainError("; ".join(str(violation) for violation in violations))
    return m


def cmd_solve(config):
    m = _check_marginals(config)
    geometry = build_config(m, config.tol)
    breakdown = triple_intersection_area(geometry)
    lower, upper = triple_bounds(m)
    payload = {'marginals': m.to_dict(), 'config': geometry.to_dict(), 'breakdown': breakdown.to_dict(),
               'pabc_bounds': [lower, upper], 'calibrated': calibrate(breakdown.total, config.k),
               'k': config.k}
    lines = ["radii : a = {:.12g}, b = {:.12g}, c = {:.12g}".format(*geometry.circles),
             "distances : r = {:.12g}, s = {:.12g}, t = {:.12g}".format(geometry.r, geometry.s, geometry.t)]
    if breakdown.theta1 is not None:
        lines.append("angles : {:.12g}, {:.12g}, {:.12g}".format(*breakdown.thetas))
        lines.append("segments : {:.12g}, {:.12g}, {:.12g}".format(*breakdown.segments))
        lines.append("chord triangle : {:.12g}".format(breakdown.chord_triangle))
    lines.append("class : {}{}".format(breakdown.config_class,
                                       " ({})".format(breakdown.note) if breakdown.note else ""))
    lines.append("S : {:.17g}".format(breakdown.total))
    lines.append("calibrated (k = {}) : {:.17g}".format(config.k, payload['calibrated']))
    lines.append("P(ABC) bounds : [{:.12g}, {:.12g}]".format(lower, upper))
    _emit(payload, lines, config.format)
    return EXIT_OK


def cmd_oracle(config):
    m = _check_marginals(config)
    breakdown, estimate, z = compare_with_closed_form(build_config(m, config.tol), config.samples,
                                                      config.seed)
    payload = {'S': breakdown.total, 'config_class': breakdown.config_class, 'estimate': estimate.mean,
               'std_error': estimate.std_error, 'samples': estimate.samples, 'z': z}
    lines = ["S : {:.17g} ({})".format(breakdown.total, breakdown.config_class),
             "Monte Carlo : {:.17g} +- {:.3g} ({} samples)".format(estimate.mean, estimate.std_error,
                                                                 estimate.samples),
             "z : {:.3f}".format(z)]
    _emit(payload, lines, config.format)
    return EXIT_OK


def _summary_payload(summary, source):
    payload = {'source': source, 'copies': summary.copies, 'n_trials': summary.n_trials,
               'window': summary.window, 'mean_rolling_std': summary.mean_rolling_std,
               'sampling_std': summary.sampling_std,
               'reference_k': REFERENCE_K, 'fit': None if summary.fit is None else summary.fit.to_dict(),
               'fit_error': summary.fit_error}
    parts = ["{} : copies = {}".format(source, summary.copies)]
    if summary.n_trials is not None:
        parts.append("n = {}".format(summary.n_trials))
    fit = summary.fit
    if fit is None:
        parts.append("fit : {}".format(summary.fit_error))
    else:
        parts.append("k = {:.6g} (reference k = {})".format(fit.k, REFERENCE_K))
        if fit.k2 is not None:
            parts.append("k2 = {:.6g}".format(fit.k2))
        parts.append("pearson = {:.6g}".format(fit.pearson_r))
        parts.append("spearman = {:.6g}".format(fit.spearman_rho))
        parts.append("skipped = {}".format(fit.skipped_copies))
    if summary.mean_rolling_std is not None:
        parts.append("mean rolling std = {:.6g} (window {})".format(summary.mean_rolling_std, summary.window))
    if summary.sampling_std is not None:
        parts.append("sampling std = {:.6g}".format(summary.sampling_std))
    return payload, [" | ".join(parts)]


def cmd_experiment(config):
    logger = Logger(log_dir=config.log_dir)
    try:
        table = run_experiment(config.copies, config.n_trials, config.seed, tol=config.tol,
                               workers=config.workers, logger=logger)
        write_csv(table, config.out)
        exact = exact_areas(config.copies, config.seed, tol=config.tol, workers=config.workers)
        summary = summarize_sweep(table, config.window, shared=not config.two_coefficient, exact=exact)
        logger.run_end_sweep(summary.fit, summary.profile or None)
    finally:
        logger.close()
    payload, lines = _summary_payload(summary, config.out)
    _emit(payload, lines, config.format)
    return EXIT_OK


def cmd_fit(config):
    table = read_csv(config.csv)
    summary = summarize_sweep(table, config.window, shared=not config.two_coefficient)
    if summary.fit is None:
        raise InsufficientData(summary.fit_error)
    payload, lines = _summary_payload(summary, config.csv)
    _emit(payload, lines, config.format)
    return EXIT_OK


def cmd_score(config):
    stats = load_counts(config.counts, smoothing=config.smoothing)
    score = score_sentence(config.words, stats, config.k, tol=config.tol)
    payload = {'sentence': ' '.join(config.words), 'raw_area': score.raw_area,
               'calibrated': score.calibrated, 'k': score.k_used}
    lines = ["raw : {:.17g}".format(score.raw_area),
             "calibrated (k = {}) : {:.17g}".format(score.k_used, score.calibrated)]
    if config.baseline:
        payload['markov'] = markov_score(config.words, stats)
        lines.append("markov : {:.17g}".format(payload['markov']))
    if config.trace:
        payload['reduction_trace'] = score.to_dict()['reduction_trace']
        lines.extend("  {} : {:.17g}".format(' '.join(events), value) for events, value in score.reduction_trace)
    _emit(payload, lines, config.format)
    return EXIT_OK


def _read_sentences(config):
    sentences = [sentence.split() for sentence in (config.sentence or [])]
    if config.file:
        with open(config.file, encoding='utf-8') as handle:
            sentences.extend(line.split() for line in handle if line.strip())
    if not sentences:
        raise DomainError("Give at least one --sentence or a --file")
    return sentences


def cmd_rank(config):
    stats = load_counts(config.counts, smoothing=config.smoothing)
    rows = rank_sentences(_read_sentences(config), stats, config.k, baseline=config.baseline,
                          tol=config.tol)
    lines = []
    for row in rows:
        sentence = ' '.join(row.words)
        if row.rank is None:
            lines.append("- : {} [{}]".format(sentence, row.error))
            continue
        line = "{} : {} | calibrated = {:.6g} | raw = {:.6g}".format(
            row.rank, sentence, row.score.calibrated, row.score.raw_area)
        if row.markov is not None:
            line += " | markov = {:.6g}".format(row.markov)
        lines.append(line)
    _emit({'k': config.k, 'ranking': [row.to_dict() for row in rows]}, lines, config.format)
    return EXIT_OK


def _add_probabilities(parser):
    for flag, name in _PROB_FLAGS:
        parser.add_argument('--{}'.format(flag), type=float, required=True, help="{}".format(name))
    parser.add_argument('--tol', type=float, default=DEFAULT_TOL,
                        help="area tolerance of the distance solves (default: %(default)s)")


def _add_format(parser):
    parser.add_argument('--format', choices=('text', 'json'), default='text',
                        help="output format (default: %(default)s)")


def _add_ngram(parser):
    parser.add_argument('--counts', required=True, help="count file")
    parser.add_argument('--k', type=float, default=REFERENCE_K,
                        help="calibration coefficient (default: %(default)s)")
    parser.add_argument('--baseline', action='store_true', help="also print the Markov score")
    parser.add_argument('--smoothing', action='store_true', help="add-one smoothing of bigrams")
    parser.add_argument('--tol', type=float, default=DEFAULT_TOL,
                        help="area tolerance of the distance solves (default: %(default)s)")


def build_parser():
    parser = argparse.ArgumentParser(prog='venngram',
                                     description="Estimate triple joint probabilities from single and "
                                                 "pairwise probabilities with area-proportional circles.")
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    solve = subparsers.add_parser('solve', help="solve the circles and the central area S")
    _add_probabilities(solve)
    solve.add_argument('--k', type=float, default=REFERENCE_K,
                       help="calibration coefficient (default: %(default)s)")
    _add_format(solve)
    solve.set_defaults(handler=cmd_solve)

    oracle = subparsers.add_parser('oracle', help="compare S with a Monte Carlo estimate")
    _add_probabilities(oracle)
    oracle.add_argument('--samples', type=int, default=DEFAULT_ORACLE_SAMPLES,
                        help="Monte Carlo points (default: %(default)s)")
    oracle.add_argument('--seed', type=int, default=0, help="sampler seed (default: %(default)s)")
    _add_format(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    experiment = subparsers.add_parser('experiment', help="sweep random joint distributions")
    experiment.add_argument('--copies', type=int, default=DEFAULT_COPIES,
                            help="number of copies (default: %(default)s)")
    experiment.add_argument('--n', dest='n_trials', type=int, default=DEFAULT_TRIALS,
                            help="trials per copy (default: %(default)s)")
    experiment.add_argument('--seed', type=int, default=0, help="master seed (default: %(default)s)")
    experiment.add_argument('--out', default='experiment.csv', help="CSV output (default: %(default)s)")
    experiment.add_argument('--window', type=int, default=None,
                            help="fluctuation window (default: max(25, copies // 40))")
    experiment.add_argument('--workers', type=int, default=1,
                            help="worker processes (default: %(default)s)")
    experiment.add_argument('--full-scale', action='store_true',
                            help="use {} copies".format(FULL_SCALE_COPIES))
    experiment.add_argument('--two-coefficient', action='store_true',
                            help="fit k1 S + k2 S^2 instead of k S + k S^2")
    experiment.add_argument('--tol', type=float, default=DEFAULT_TOL,
                            help="area tolerance of the distance solves (default: %(default)s)")
    experiment.add_argument('--log-dir', default=None, help="tensorboard log directory")
    _add_format(experiment)
    experiment.set_defaults(handler=cmd_experiment)

    fit = subparsers.add_parser('fit', help="fit k on an existing experiment CSV")
    fit.add_argument('--csv', required=True, help="CSV written by the experiment command")
    fit.add_argument('--window', type=int, default=None,
                     help="fluctuation window (default: max(25, copies // 40))")
    fit.add_argument('--two-coefficient', action='store_true',
                     help="fit k1 S + k2 S^2 instead of k S + k S^2")
    _add_format(fit)
    fit.set_defaults(handler=cmd_fit)

    score = subparsers.add_parser('score', help="score one sentence")
    _add_ngram(score)
    score.add_argument('--trace', action='store_true', help="print the reduction trace")
    score.add_argument('words', nargs='+', help="the words of the sentence")
    _add_format(score)
    score.set_defaults(handler=cmd_score)

    rank = subparsers.add_parser('rank', help="rank sentences by their geometric score")
    _add_ngram(rank)
    rank.add_argument('--sentence', action='append', help="a whitespace separated sentence, repeatable")
    rank.add_argument('--file', default=None, help="file with one sentence per line")
    _add_format(rank)
    rank.set_defaults(handler=cmd_rank)
    return parser


def main(argv=None):
    r"""Runs the command line.

    Args:
        argv (list, optional): Arguments without the program name. Defaults to ``sys.argv[1:]``.

    Returns:
        The exit code.
    """
    args = build_parser().parse_args(argv)
    handler = args.handler
    try:
        return handler(RunConfig.from_args(args).validate())
    except UnknownWord as err:
        print("venngram: {}".format(err), file=sys.stderr)
        return EXIT_UNKNOWN_WORD
    except VenngramError as err:
        print("venngram: {}".format(err), file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as err:
        print("venngram: {}".format(err), file=sys.stderr)
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())
