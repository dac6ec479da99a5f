"""
Spectrum functions c(δ) and the measure algebra built on them.

A spectrum lists the support of a pmf from most to least probable and lays
the probabilities end to end on [0, 1): interval k is [δ_{k-1}, δ_k) and
carries the value log 1/p_k. Weight-class sources merge runs of equally
probable symbols into one interval with a multiplicity.
"""
import logging
import math
from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np

from core.exceptions import CoverageError, DegenerateInputError, DomainError
from spectrum.pmf import MASS_TOLERANCE


logger = logging.getLogger(__name__)

EQUALITY_TOLERANCE = 1e-12

MeasureBounds = namedtuple('MeasureBounds', ['lower', 'upper'])


def compensated_cumsum(values):
    """Running sums accumulated with Neumaier compensation"""
    out = np.empty(len(values), dtype=float)
    total = 0.0
    carry = 0.0
    for i, value in enumerate(values):
        value = float(value)
        t = total + value
        if abs(total) >= abs(value):
            carry += (total - t) + value
        else:
            carry += (value - t) + total
        total = t
        out[i] = total + carry
    return out


def _frozen(array):
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Right-continuous non-decreasing step function on [0, covered_mass)

    breakpoints are the right ends δ_1 <= ... <= δ_m of the intervals and
    values the levels v_1 <= ... <= v_m. An interval of zero width only
    appears when a probability is below the resolution of its cumulative
    sum; it is never selected by evaluation.
    """
    breakpoints: np.ndarray
    values: np.ndarray
    log_multiplicities: np.ndarray = None
    labels: tuple = ()
    masses: np.ndarray = None
    scale: float = 1.0
    degenerate: bool = field(default=False, compare=False)

    def __post_init__(self):
        breakpoints = _frozen(self.breakpoints)
        values = _frozen(self.values)
        if self.log_multiplicities is None:
            log_mult = _frozen(np.zeros(len(values)))
        else:
            log_mult = _frozen(self.log_multiplicities)
        object.__setattr__(self, 'breakpoints', breakpoints)
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'log_multiplicities', log_mult)
        object.__setattr__(self, 'labels', tuple(self.labels))
        if self.masses is None:
            masses = _frozen(np.diff(np.concatenate(([0.0], breakpoints))))
        else:
            masses = _frozen(self.masses)
        object.__setattr__(self, 'masses', masses)

        if breakpoints.ndim != 1 or len(breakpoints) == 0:
            raise DomainError('a spectrum needs at least one interval')
        if not len(breakpoints) == len(values) == len(log_mult) \
                == len(masses):
            raise DomainError('breakpoints and values differ in length')
        if self.labels and len(self.labels) != len(values):
            raise DomainError('one label per interval is required')
        if breakpoints[0] <= 0 or np.any(np.diff(breakpoints) < 0):
            raise DomainError('breakpoints must increase from above 0')
        if breakpoints[-1] > 1 + MASS_TOLERANCE:
            raise DomainError('breakpoints must not exceed 1')
        slack = EQUALITY_TOLERANCE * max(1.0, float(np.max(np.abs(values))))
        if np.any(np.diff(values) < -slack):
            raise DomainError('spectrum values must be non-decreasing')

    def __len__(self):
        return len(self.values)

    @property
    def covered_mass(self):
        return float(self.breakpoints[-1])

    @property
    def is_full(self):
        return self.covered_mass >= 1.0 - MASS_TOLERANCE

    @property
    def lower_breakpoints(self):
        """Left ends δ_0 = 0, δ_1, ..., δ_{m-1}"""
        return np.concatenate(([0.0], self.breakpoints[:-1]))

    @property
    def gaps(self):
        return self.breakpoints - self.lower_breakpoints

    def interval_index(self, delta):
        """Index k (0-based) of the interval holding each delta"""
        return np.searchsorted(self.breakpoints, delta, side='right')

    def __call__(self, delta):
        """Evaluate c at delta (scalar or array)"""
        delta = np.asarray(delta, dtype=float)
        if np.any(delta < 0):
            raise DomainError('c is defined on [0, covered_mass)')
        if np.any(delta >= self.covered_mass):
            raise CoverageError(
                f'c is undefined at or past covered mass {self.covered_mass}'
            )
        result = self.values[self.interval_index(delta)]
        return float(result) if result.ndim == 0 else result

    def scaled(self, factor):
        """Spectrum with every value multiplied by factor > 0"""
        if factor <= 0:
            raise DomainError('scale factor must be positive')
        return Spectrum(
            self.breakpoints,
            self.values * factor,
            self.log_multiplicities,
            self.labels,
            self.masses,
            self.scale * factor,
            self.degenerate,
        )

    def entropy(self):
        """Integral of c over [0, 1): the entropy in nats, times scale"""
        if not self.is_full:
            raise CoverageError('entropy needs a fully covered spectrum')
        return math.fsum(self.gaps * self.values)

    def support_size(self):
        """Number of symbols: sum of gap_k * exp(v_k) over the intervals"""
        gaps = self.gaps
        positive = gaps > 0
        terms = np.exp(
            np.log(gaps[positive]) + self.values[positive] / self.scale
        )
        return math.fsum(terms)

    def isclose(self, other, tolerance=EQUALITY_TOLERANCE):
        """Same breakpoints and values within an absolute tolerance"""
        return (
            len(self) == len(other)
            and np.allclose(self.breakpoints, other.breakpoints,
                            rtol=0, atol=tolerance)
            and np.allclose(self.values, other.values,
                            rtol=0, atol=tolerance)
        )

    def to_rows(self):
        """(delta_lo, delta_hi, c_value) rows for a step plot"""
        return [
            (float(lo), float(hi), float(v))
            for lo, hi, v in zip(self.lower_breakpoints, self.breakpoints,
                                 self.values)
        ]


@dataclass(frozen=True, eq=False)
class StepDiff:
    """Piecewise-constant function on [0, length) given by right ends"""
    breakpoints: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'breakpoints', _frozen(self.breakpoints))
        object.__setattr__(self, 'values', _frozen(self.values))
        if len(self.breakpoints) == 0:
            raise DomainError('a step function needs at least one piece')
        if len(self.breakpoints) != len(self.values):
            raise DomainError('breakpoints and values differ in length')
        if self.breakpoints[0] <= 0 or np.any(np.diff(self.breakpoints) <= 0):
            raise DomainError('breakpoints must be strictly increasing')

    @property
    def length(self):
        return float(self.breakpoints[-1])

    @property
    def widths(self):
        return np.diff(np.concatenate(([0.0], self.breakpoints)))

    def __call__(self, delta):
        delta = np.asarray(delta, dtype=float)
        if np.any(delta < 0) or np.any(delta >= self.length):
            raise DomainError(f'defined on [0, {self.length})')
        result = self.values[np.searchsorted(self.breakpoints, delta,
                                             side='right')]
        return float(result) if result.ndim == 0 else result

    def inf(self):
        return float(np.min(self.values))

    def sup(self):
        return float(np.max(self.values))

    def sublevel_measure(self, threshold):
        """Lebesgue measure of {δ : f(δ) < threshold}"""
        below = self.values < threshold
        if below.all():
            return self.length
        return math.fsum(self.widths[below])

    def inf_over(self, intervals):
        """Infimum over the union of the given (lo, hi) sub-intervals"""
        lows = np.concatenate(([0.0], self.breakpoints[:-1]))
        best = math.inf
        for lo, hi in intervals:
            lo, hi = max(lo, 0.0), min(hi, self.length)
            if hi <= lo:
                continue
            hit = (self.breakpoints > lo) & (lows < hi)
            best = min(best, float(np.min(self.values[hit])))
        if math.isinf(best):
            raise DomainError('no interval intersects the domain')
        return best

    def scaled(self, factor):
        return StepDiff(self.breakpoints, self.values * factor)

    def to_rows(self):
        lows = np.concatenate(([0.0], self.breakpoints[:-1]))
        return [
            (float(lo), float(hi), float(v))
            for lo, hi, v in zip(lows, self.breakpoints, self.values)
        ]


def build_spectrum(p):
    """Spectrum of a pmf: support sorted by (probability desc, label asc)"""
    ranked = sorted(
        (-prob, label) for label, prob in zip(p.labels, p.probs) if prob > 0
    )
    if not ranked:
        raise DegenerateInputError('pmf has no symbol with positive mass')

    probs = np.array([-neg for neg, _ in ranked])
    labels = tuple(label for _, label in ranked)
    breakpoints = compensated_cumsum(probs)
    covered = 1.0 - p.tail_mass
    if abs(breakpoints[-1] - covered) > 1e-9:
        raise DomainError(
            f'listed mass {breakpoints[-1]!r} disagrees with 1 - tail_mass'
        )
    breakpoints = np.minimum(breakpoints, covered)
    breakpoints[-1] = covered
    logger.debug('Built spectrum over %d symbols, covered mass %r',
                 len(probs), covered)
    return Spectrum(
        breakpoints, 0.0 - np.log(probs), labels=labels, masses=probs
    )


def eval_c(s, delta):
    """c(δ) = v_k for the unique k with δ in [δ_{k-1}, δ_k)"""
    return s(float(delta))


def gap_function(sx, sy, shift=0.0):
    """StepDiff of δ -> c^x(δ + shift) - c^y(δ) on its covered domain"""
    length = min(sy.covered_mass, sx.covered_mass - shift)
    if length <= 0:
        raise DomainError('shift leaves an empty domain')
    points = np.concatenate((sy.breakpoints, sx.breakpoints - shift))
    points = points[(points > 0) & (points < length)]
    points = np.unique(np.concatenate((points, [length])))
    lows = np.concatenate(([0.0], points[:-1]))
    mids = (lows + points) / 2
    x_index = np.minimum(sx.interval_index(mids + shift), len(sx) - 1)
    y_index = np.minimum(sy.interval_index(mids), len(sy) - 1)
    return StepDiff(points, sx.values[x_index] - sy.values[y_index])


def deficiency_measure(sx, sy, gamma):
    """μ{δ in [0,1) : c^x(δ) - c^y(δ) < γ}

    Exact for fully covered spectra. When either side is truncated the
    region past the common coverage is undetermined and a MeasureBounds
    pair counting it both ways is returned.
    """
    diff = gap_function(sx, sy)
    measure = diff.sublevel_measure(gamma)
    if sx.is_full and sy.is_full:
        return min(max(measure, 0.0), 1.0)
    return MeasureBounds(measure, measure + (1.0 - diff.length))


def shifted_gap(sx, sy, eps):
    """δ -> c^x(δ + ε) - c^y(δ) on [0, 1 - ε)"""
    if not 0 < eps < 1:
        raise DomainError(f'eps must lie in (0, 1), got {eps}')
    if not (sx.is_full and sy.is_full):
        raise CoverageError('shifted gap needs fully covered spectra')
    return gap_function(sx, sy, eps)
