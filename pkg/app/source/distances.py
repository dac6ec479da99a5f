"""Distances between distributions and the entropy-spectrum CDF"""
import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import CoverageError, DomainError
from spectrum.pmf import MASS_TOLERANCE


LEVY_TOLERANCE = 1e-9


def variational_distance(p, q):
    """Sum of |p(a) - q(a)| over the union of both supports, in [0, 2]"""
    if p.is_truncated or q.is_truncated:
        raise CoverageError('distance is undefined on truncated pmfs')
    p_probs = p.as_dict()
    q_probs = q.as_dict()
    labels = dict.fromkeys(list(p.labels) + list(q.labels))
    return math.fsum(
        abs(p_probs.get(a, 0.0) - q_probs.get(a, 0.0)) for a in labels
    )


def self_information(p):
    """log 1/p(x) for every listed symbol with positive mass"""
    probs = p.as_array()
    positive = probs > 0
    return 0.0 - np.log(probs[positive]), probs[positive]


def spectrum_cdf(p, c):
    """Pr{log 1/p(X) < c}"""
    if p.is_truncated:
        raise CoverageError('spectrum CDF needs a fully listed pmf')
    info, probs = self_information(p)
    return math.fsum(probs[info < c])


@dataclass(frozen=True, eq=False)
class RealRvDist:
    """Finite distribution of a real-valued random variable"""
    values: np.ndarray
    probs: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        probs = np.asarray(self.probs, dtype=float)
        if values.shape != probs.shape or values.ndim != 1:
            raise DomainError('values and probs must be matching 1-d arrays')
        if not np.all(np.isfinite(values)):
            raise DomainError('values must be finite')
        if np.any(probs < 0):
            raise DomainError('probabilities must be >= 0')
        if abs(math.fsum(probs) - 1.0) > MASS_TOLERANCE:
            raise DomainError('probabilities must sum to 1')

        # Merge repeated values and keep them sorted
        keep = probs > 0
        support, inverse = np.unique(values[keep], return_inverse=True)
        merged = np.zeros(len(support))
        np.add.at(merged, inverse, probs[keep])
        for name, array in (('values', support), ('probs', merged)):
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @classmethod
    def point_mass(cls, value):
        return cls(np.array([float(value)]), np.array([1.0]))

    @property
    def cumulative(self):
        return np.minimum(np.cumsum(self.probs), 1.0)

    def cdf(self, x):
        """Pr{U <= x}, vectorized over x"""
        index = np.searchsorted(self.values, x, side='right')
        cumulative = np.concatenate(([0.0], self.cumulative))
        return cumulative[index]

    def quantile(self, t):
        """Smallest value v with Pr{U <= v} > t"""
        index = int(np.searchsorted(self.cumulative, t, side='right'))
        return float(self.values[min(index, len(self.values) - 1)])


def self_information_dist(p):
    """Distribution of log 1/P(X)"""
    if p.is_truncated:
        raise CoverageError('self-information needs a fully listed pmf')
    info, probs = self_information(p)
    return RealRvDist(info, probs)


def _padded(dist):
    return np.concatenate(([0.0], dist.cumulative))


def _dominated(u, v, mu):
    """F_U(x - μ) - μ <= F_V(x) for every real x"""
    # The left side only rises at a + μ; there F_V counts b with b - a <= μ
    reached = np.count_nonzero(
        np.subtract.outer(v.values, u.values) <= mu, axis=0
    )
    return not np.any(u.cumulative - mu > _padded(v)[reached] + 1e-15)


def _levy_holds(u, v, mu):
    """F_U(x - μ) - μ <= F_V(x) <= F_U(x + μ) + μ for every real x"""
    return _dominated(u, v, mu) and _dominated(v, u, mu)


def levy_distance(u, v, tolerance=LEVY_TOLERANCE):
    """Lévy distance between two finite real distributions

    The feasible set of μ is an up-set of [0, 1]. Candidates come from value
    differences and CDF levels; the infimum between the last infeasible and
    the first feasible candidate is refined by bisection.
    """
    if _levy_holds(u, v, 0.0):
        return 0.0
    shifts = np.abs(np.subtract.outer(u.values, v.values)).ravel()
    levels = np.abs(np.subtract.outer(_padded(u), _padded(v))).ravel()
    candidates = np.unique(np.concatenate((shifts, levels, [1.0])))
    candidates = candidates[(candidates > 0) & (candidates <= 1.0)]

    lo_index, hi_index = -1, len(candidates) - 1
    while hi_index - lo_index > 1:
        middle = (lo_index + hi_index) // 2
        if _levy_holds(u, v, candidates[middle]):
            hi_index = middle
        else:
            lo_index = middle
    hi = float(candidates[hi_index])
    lo = 0.0 if lo_index < 0 else float(candidates[lo_index])

    while hi - lo > tolerance:
        middle = (lo + hi) / 2
        if _levy_holds(u, v, middle):
            hi = middle
        else:
            lo = middle
    return hi


def cdf_dominance_gap(x, y, mu):
    """inf over c of Pr{log 1/P_Y(Y) < c + μ} - Pr{log 1/P_X(X) < c}"""
    if mu < 0:
        raise DomainError('mu must be non-negative')
    x_dist = self_information_dist(x)
    y_dist = self_information_dist(y)

    # Left-continuous steps: each piece (p, q] takes its value at q, and
    # the breakpoints are the x values a and the shifted y values b - μ
    gaps = np.subtract.outer(y_dist.values, x_dist.values)
    y_cdf, x_cdf = _padded(y_dist), _padded(x_dist)
    at_x = y_cdf[np.count_nonzero(gaps < mu, axis=0)] - x_cdf[:-1]
    at_y = y_cdf[:-1] - x_cdf[np.count_nonzero(gaps > mu, axis=1)]
    return float(min(0.0, np.min(at_x), np.min(at_y)))
