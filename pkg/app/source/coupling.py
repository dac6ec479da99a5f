"""
Couplings of two sources and the log-ratio statistics taken under them.

The shifted coupling draws ω uniformly from [0, 1), reads the target symbol
off the target spectrum at ω and the coin symbol off the coin spectrum at
ω + ε taken cyclically modulo 1.
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from core.exceptions import CoverageError, DomainError
from source.distances import RealRvDist
from spectrum.pmf import MASS_TOLERANCE, Pmf
from spectrum.spectra import build_spectrum


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class JointPmf:
    """Sparse joint pmf of (X, Y) with both marginals

    entries holds (x_label, y_label, prob) triples with positive prob.
    """
    entries: tuple
    x_marginal: Pmf
    y_marginal: Pmf

    def __post_init__(self):
        entries = tuple(
            (str(x), str(y), float(prob)) for x, y, prob in self.entries
        )
        object.__setattr__(self, 'entries', entries)
        if any(not math.isfinite(prob) or prob < 0 for _, _, prob in entries):
            raise DomainError('joint probabilities must be finite and >= 0')
        total = math.fsum(prob for _, _, prob in entries)
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise DomainError(f'joint mass is {total!r}, expected 1')

        for axis, marginal in ((0, self.x_marginal), (1, self.y_marginal)):
            sums = marginal_sums(entries, axis)
            stray = set(sums) - set(marginal.labels)
            if stray:
                raise DomainError(
                    f'label {sorted(stray)[0]!r} has no marginal'
                )
            for label, prob in zip(marginal.labels, marginal.probs):
                if abs(sums.get(label, 0.0) - prob) > MASS_TOLERANCE:
                    raise DomainError(
                        f'marginal of {label!r} is off by '
                        f'{sums.get(label, 0.0) - prob!r}'
                    )

    @classmethod
    def from_entries(cls, entries, x_labels=None, y_labels=None):
        """Joint pmf whose marginals are summed from the entries"""
        entries = tuple(entries)
        marginals = []
        for axis, labels in ((0, x_labels), (1, y_labels)):
            sums = marginal_sums(entries, axis)
            labels = tuple(sums) if labels is None else tuple(labels)
            marginals.append(
                Pmf(labels, tuple(sums.get(label, 0.0) for label in labels))
            )
        return cls(entries, *marginals)

    def __len__(self):
        return len(self.entries)

    def prob(self, x, y):
        return math.fsum(
            prob for a, b, prob in self.entries if a == x and b == y
        )

    def to_rows(self):
        """(x_label, y_label, prob) rows"""
        return list(self.entries)


def marginal_sums(entries, axis):
    parts = defaultdict(list)
    for entry in entries:
        parts[entry[axis]].append(entry[2])
    return {label: math.fsum(values) for label, values in parts.items()}


def independent_coupling(x, y):
    """Product coupling P_X × P_Y"""
    entries = [
        (a, b, pa * pb)
        for a, pa in zip(x.labels, x.probs) if pa > 0
        for b, pb in zip(y.labels, y.probs) if pb > 0
    ]
    return JointPmf(tuple(entries), x, y)


def shifted_coupling(x, y, eps):
    """Coupling of x and y through ω and its cyclic ε-shift"""
    if not 0 < eps < 1:
        raise DomainError(f'eps must lie in (0, 1), got {eps}')
    sx = build_spectrum(x)
    sy = build_spectrum(y)
    if not (sx.is_full and sy.is_full):
        raise CoverageError('shifted coupling needs fully covered pmfs')

    shifted = np.mod(sx.breakpoints - eps, 1.0)
    points = np.concatenate((sy.breakpoints, shifted, [1.0 - eps, 1.0]))
    points = np.unique(points[(points > 0) & (points <= 1.0)])
    lows = np.concatenate(([0.0], points[:-1]))
    widths = points - lows
    mids = (lows + points) / 2

    omega_tilde = np.where(mids < 1.0 - eps, mids + eps, mids + eps - 1.0)
    i_index = np.minimum(sx.interval_index(omega_tilde), len(sx) - 1)
    j_index = np.minimum(sy.interval_index(mids), len(sy) - 1)

    pieces = defaultdict(list)
    for i, j, width in zip(i_index, j_index, widths):
        if width > 0:
            pieces[(sx.labels[i], sy.labels[j])].append(width)
    entries = tuple(
        (a, b, math.fsum(parts)) for (a, b), parts in pieces.items()
    )
    logger.debug('Shifted coupling at eps=%r has %d cells',
                 eps, len(entries))
    return JointPmf(entries, x, y)


def log_ratio_dist(joint, x=None, y=None, scale=1.0):
    """Distribution of scale·(log 1/P_X(X) - log 1/P_Y(Y)) under joint"""
    x = joint.x_marginal if x is None else x
    y = joint.y_marginal if y is None else y
    px = x.as_dict()
    py = y.as_dict()
    values, probs = [], []
    for a, b, prob in joint.entries:
        if prob <= 0:
            continue
        if px.get(a, 0.0) <= 0 or py.get(b, 0.0) <= 0:
            raise DomainError(f'pair ({a!r}, {b!r}) has a null marginal')
        values.append(scale * (math.log(py[b]) - math.log(px[a])))
        probs.append(prob)
    probs = np.asarray(probs)
    return RealRvDist(np.asarray(values), probs / math.fsum(probs))


def coupling_liminf_estimate(joint, x=None, y=None, scale=1.0,
                             tolerance=0.0):
    """Largest β with Pr{scaled log-ratio < β} <= tolerance"""
    if not 0 <= tolerance < 1:
        raise DomainError(f'tolerance must lie in [0, 1), got {tolerance}')
    return log_ratio_dist(joint, x, y, scale).quantile(tolerance)
