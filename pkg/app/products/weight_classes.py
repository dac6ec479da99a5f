"""
Exchangeable binary sources stored one Hamming weight at a time.

Every sequence of weight k in {0,1}^n has the same probability exp(l_k), so
a source over 2^n sequences is kept as n + 1 classes and its spectrum has
at most n + 1 levels.
"""
import itertools
import logging
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import gammaln, logsumexp, xlogy
from scipy.stats import norm

from core.exceptions import DomainError
from spectrum.pmf import Pmf
from spectrum.spectra import EQUALITY_TOLERANCE, Spectrum, \
    compensated_cumsum


logger = logging.getLogger(__name__)

CLASS_MASS_TOLERANCE = 1e-9
MAX_EXPAND_LENGTH = 16


def check_length(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f'sequence length must be a positive integer, '
                          f'got {n!r}')
    return int(n)


def check_probability(name, p, lo=0.0, hi=1.0, open_ends=False):
    inside = lo < p < hi if open_ends else lo <= p <= hi
    if not inside:
        brackets = '({}, {})' if open_ends else '[{}, {}]'
        raise DomainError(
            f'{name} must lie in {brackets.format(lo, hi)}, got {p!r}'
        )
    return float(p)


def log_binomial(n):
    """log C(n, k) for k = 0..n"""
    k = np.arange(n + 1)
    return gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)


def binary_entropy(p):
    """H(p) in nats, with 0 log 0 = 0"""
    p = check_probability('p', p)
    return float(-xlogy(p, p) - xlogy(1 - p, 1 - p))


@dataclass(frozen=True, eq=False)
class WeightClassPmf:
    """Pmf over {0,1}^n whose sequence probability depends on weight only

    log_probs[k] is the log-probability of one sequence of weight k; it is
    -inf for weights the source never emits.
    """
    n: int
    log_probs: np.ndarray

    def __post_init__(self):
        n = check_length(self.n)
        log_probs = np.array(self.log_probs, dtype=float)
        log_probs.setflags(write=False)
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'log_probs', log_probs)

        if log_probs.shape != (n + 1,):
            raise DomainError(f'expected {n + 1} class log-probabilities')
        if np.any(np.isnan(log_probs)) or np.any(log_probs > 0):
            raise DomainError('class log-probabilities must be <= 0')
        total = math.fsum(self.masses)
        if abs(total - 1.0) > CLASS_MASS_TOLERANCE:
            raise DomainError(f'class masses sum to {total!r}, expected 1')

    @property
    def weights(self):
        return np.arange(self.n + 1)

    @property
    def log_counts(self):
        return log_binomial(self.n)

    @property
    def masses(self):
        """Probability of each weight class, C(n, k) exp(l_k)"""
        return np.exp(self.log_counts + self.log_probs)

    def sequence_prob(self, bits):
        """Probability of one bit string"""
        if len(bits) != self.n or set(bits) - {'0', '1'}:
            raise DomainError(f'{bits!r} is not a binary string of length '
                              f'{self.n}')
        return float(np.exp(self.log_probs[bits.count('1')]))

    def entropy(self):
        """Shannon entropy of the whole sequence in nats"""
        masses = self.masses
        positive = masses > 0
        return -math.fsum(masses[positive] * self.log_probs[positive])

    def to_spectrum(self):
        """Spectrum with one interval per distinct sequence probability

        Classes are ranked by value, then by weight; classes whose mass
        underflows are dropped and equal levels are merged.
        """
        masses = self.masses
        keep = masses > 0
        values = 0.0 - self.log_probs[keep]
        weights = self.weights[keep]
        log_counts = self.log_counts[keep]
        masses = masses[keep]

        levels, counts, level_masses = [], [], []
        for i in np.lexsort((weights, values)):
            value = float(values[i])
            if levels and abs(value - levels[-1]) <= \
                    EQUALITY_TOLERANCE * max(1.0, abs(value)):
                counts[-1].append(log_counts[i])
                level_masses[-1].append(masses[i])
                continue
            levels.append(value)
            counts.append([log_counts[i]])
            level_masses.append([masses[i]])

        level_masses = np.array([math.fsum(group) for group in level_masses])
        breakpoints = np.minimum(compensated_cumsum(level_masses), 1.0)
        breakpoints[-1] = 1.0
        logger.debug('Weight-class spectrum: n=%d, %d levels from %d classes',
                     self.n, len(levels), self.n + 1)
        return Spectrum(
            breakpoints,
            levels,
            log_multiplicities=[logsumexp(group) for group in counts],
            masses=level_masses,
        )

    def sample_normalized_information(self, samples, rng):
        """Draws of -(1/n) log P(X^n) for X^n from this source"""
        if samples < 1:
            raise DomainError('at least one sample is required')
        masses = self.masses
        k = rng.choice(self.n + 1, size=samples, p=masses / masses.sum())
        return -self.log_probs[k] / self.n


def bernoulli_classes(p, n):
    """i.i.d. Bernoulli(p) over {0,1}^n"""
    p = check_probability('p', p)
    n = check_length(n)
    k = np.arange(n + 1)
    return WeightClassPmf(n, xlogy(k, p) + xlogy(n - k, 1 - p))


def mixture_classes(p1, p2, alpha, n):
    """Bernoulli(p1) with probability alpha, Bernoulli(p2) otherwise"""
    p1 = check_probability('p1', p1, open_ends=True)
    p2 = check_probability('p2', p2, open_ends=True)
    alpha = check_probability('alpha', alpha, hi=0.5)
    if alpha == 0 or p1 == p2:
        return bernoulli_classes(p2, n)
    first = bernoulli_classes(p1, n).log_probs
    second = bernoulli_classes(p2, n).log_probs
    return WeightClassPmf(n, np.logaddexp(math.log(alpha) + first,
                                          math.log1p(-alpha) + second))


def bernoulli_power_spectrum(p, n):
    """Spectrum of Bernoulli(p)^n; p in {0, 1} gives a flagged point mass"""
    spectrum = bernoulli_classes(p, n).to_spectrum()
    if p in (0, 1):
        logger.warning('Bernoulli parameter %r is deterministic; spectrum is '
                       'a point mass', p)
        return replace(spectrum, degenerate=True)
    return spectrum


def mixture_spectrum(p1, p2, alpha, n):
    return mixture_classes(p1, p2, alpha, n).to_spectrum()


def uniform_spectrum(m):
    """Constant spectrum log m of the uniform pmf over m symbols"""
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise DomainError(f'uniform source needs m >= 1 symbols, got {m!r}')
    level = math.log(int(m))
    return Spectrum([1.0], [level], log_multiplicities=[level])


def expand(wc):
    """Explicit pmf over the 2^n bit strings, in lexicographic order"""
    if wc.n > MAX_EXPAND_LENGTH:
        raise DomainError(
            f'refusing to expand 2^{wc.n} sequences '
            f'(limit n <= {MAX_EXPAND_LENGTH})'
        )
    labels = [''.join(bits) for bits in itertools.product('01', repeat=wc.n)]
    weights = np.array([label.count('1') for label in labels])
    return Pmf(tuple(labels), tuple(np.exp(wc.log_probs[weights])))


def bernoulli_power_pmf(p, n):
    return expand(bernoulli_classes(p, n))


def mixture_pmf(p1, p2, alpha, n):
    return expand(mixture_classes(p1, p2, alpha, n))


def clt_margin(p, n, delta):
    """|z(δ)| σ(p) / √n + 2/n, the spread of c(δ)/n around H(p)"""
    p = check_probability('p', p, open_ends=True)
    delta = check_probability('delta', delta, open_ends=True)
    n = check_length(n)
    sigma = math.sqrt(p * (1 - p)) * abs(math.log((1 - p) / p))
    return abs(float(norm.ppf(delta))) * sigma / math.sqrt(n) + 2 / n
