"""
Naive oracles for the analytic machinery.

Each oracle recomputes a quantity the slow way: a Riemann grid for measures,
exhaustive enumeration for the best map, sampling for pushforwards.
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from core.exceptions import CoverageError, DomainError, \
    EnumerationLimitError
from source.distances import variational_distance
from source.mapping import DeterministicMap, check_mapping_bound, pushforward
from spectrum.pmf import Pmf
from spectrum.spectra import build_spectrum, deficiency_measure, \
    shifted_gap


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleReport:
    """Oracle value next to the analytic value it checks"""
    oracle: str
    value: float
    exact: float
    config: dict = field(default_factory=dict)

    @property
    def abs_err(self):
        return abs(self.value - self.exact)


def _full(*spectra):
    for spectrum in spectra:
        if not spectrum.is_full:
            raise CoverageError('oracles need fully covered inputs')


def _untruncated(*pmfs):
    for pmf in pmfs:
        if pmf.is_truncated:
            raise CoverageError('oracles need untruncated pmfs')


def grid_measure(sx, sy, gamma, shift=0.0, grid_size=10 ** 6):
    """Midpoint-rule count of the deficiency set

    With shift = 0 the set is {δ in [0, 1) : c^x(δ) - c^y(δ) < γ}; with
    shift > 0 it is {δ in [0, 1 - shift) : c^x(δ + shift) - c^y(δ) < -γ}.
    """
    _full(sx, sy)
    if not 0 <= shift < 1:
        raise DomainError(f'shift must lie in [0, 1), got {shift}')
    length = 1.0 - shift
    threshold = gamma if shift == 0 else -gamma
    points = (np.arange(grid_size) + 0.5) * (length / grid_size)
    below = sx(points + shift) - sy(points) < threshold
    return length * int(np.count_nonzero(below)) / grid_size


def exact_measure(sx, sy, gamma, shift=0.0):
    """Analytic counterpart of grid_measure"""
    if shift == 0:
        return deficiency_measure(sx, sy, gamma)
    return shifted_gap(sx, sy, shift).sublevel_measure(-gamma)


def brute_force_optimal_map(coin, target, cap):
    """Best total map from the coin support onto the target support

    Returns (map, d*). Coin symbols of zero mass go to the first target
    symbol.
    """
    _untruncated(coin, target)
    xs = coin.support
    ys = target.support
    required = len(ys) ** len(xs)
    if required > cap:
        raise EnumerationLimitError(required, cap)

    px = np.array([coin.prob(x) for x in xs])
    py = np.array([target.prob(y) for y in ys])
    codes = np.arange(required)
    images = np.empty((required, len(xs)), dtype=int)
    for i in range(len(xs)):
        images[:, i] = (codes // len(ys) ** (len(xs) - 1 - i)) % len(ys)
    masses = np.zeros((required, len(ys)))
    for i in range(len(xs)):
        masses[codes, images[:, i]] += px[i]
    best = int(np.argmin(np.abs(masses - py).sum(axis=1)))

    assignment = {x: ys[0] for x in coin.labels}
    assignment.update(
        (x, ys[j]) for x, j in zip(xs, images[best])
    )
    phi = DeterministicMap(coin.labels, target.labels, assignment)
    d_star = variational_distance(target, pushforward(phi, coin))
    logger.debug('Enumerated %d maps, best distance %r', required, d_star)
    return phi, d_star


def mc_empirical_distance(coin, phi, target, samples, seed=0):
    """d(target, empirical law of φ(X)) over i.i.d. draws of X"""
    _untruncated(coin, target)
    if samples < 1:
        raise DomainError('at least one sample is required')
    rng = np.random.Generator(np.random.PCG64(seed))
    probs = coin.as_array()
    draws = rng.choice(len(coin), size=samples, p=probs / probs.sum())
    counts = np.bincount(draws, minlength=len(coin))

    totals = dict.fromkeys(phi.codomain_labels, 0)
    for x, count in zip(coin.labels, counts):
        totals[phi(x)] += int(count)
    empirical = Pmf(tuple(totals),
                    tuple(count / samples for count in totals.values()))
    return variational_distance(target, empirical)


def grid_report(coin, target, gamma, shift, config):
    sx = build_spectrum(coin)
    sy = build_spectrum(target)
    return OracleReport(
        'grid',
        grid_measure(sx, sy, gamma, shift, config.grid_size),
        exact_measure(sx, sy, gamma, shift),
        dict(config.as_dict(), gamma=gamma, shift=shift),
    )


def optimal_report(coin, target, eps, gamma, config):
    """d* against the distance of the constructed map"""
    _, d_star = brute_force_optimal_map(coin, target, config.max_enum_maps)
    constructed = check_mapping_bound(coin, target, eps, gamma)
    return OracleReport(
        'optimal', d_star, constructed.d,
        dict(config.as_dict(), eps=eps, gamma=gamma),
    )


def mc_report(coin, target, phi, config):
    return OracleReport(
        'mc',
        mc_empirical_distance(coin, phi, target, config.mc_samples,
                              config.rng_seed),
        variational_distance(target, pushforward(phi, coin)),
        config.as_dict(),
    )


def sampling_tolerance(support_size, samples):
    """3 √(|support| / samples)"""
    return 3 * math.sqrt(support_size / samples)
