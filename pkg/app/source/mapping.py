"""
Deterministic maps from a coin source to a target source.

build_mapping lines the sorted coin probabilities up against the sorted
target probabilities on [0, 1): coin symbol x_i goes to the target symbol
whose interval holds the left end of x_i's interval. Only the top i1 coin
symbols are aligned this way; the rest go to y_{i2}.
"""
import logging
import math
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from core.exceptions import DegenerateInputError, DomainError, \
    PreconditionError
from source.distances import variational_distance
from spectrum.pmf import Pmf
from spectrum.spectra import MeasureBounds, build_spectrum, \
    compensated_cumsum, deficiency_measure


logger = logging.getLogger(__name__)

BOUND_SLACK = 1e-9
HYPOTHESIS_SLACK = 1e-12


@dataclass(frozen=True)
class MapMeta:
    """How a map was constructed"""
    eps: float
    gamma: float
    i1: int
    i2: int
    j2: int


@dataclass(frozen=True, eq=False)
class DeterministicMap:
    """Total function from coin labels to target labels"""
    domain_labels: tuple
    codomain_labels: tuple
    assignment: MappingProxyType
    meta: MapMeta = None

    def __post_init__(self):
        assignment = MappingProxyType(
            {str(k): str(v) for k, v in dict(self.assignment).items()}
        )
        object.__setattr__(self, 'assignment', assignment)
        object.__setattr__(self, 'domain_labels',
                           tuple(str(x) for x in self.domain_labels))
        object.__setattr__(self, 'codomain_labels',
                           tuple(str(y) for y in self.codomain_labels))

        missing = [x for x in self.domain_labels if x not in assignment]
        if missing:
            raise DomainError(f'map leaves {missing[0]!r} unassigned')
        codomain = set(self.codomain_labels)
        stray = [y for y in assignment.values() if y not in codomain]
        if stray:
            raise DomainError(f'image {stray[0]!r} outside the codomain')

    @classmethod
    def from_pairs(cls, pairs, codomain_labels=None):
        assignment = dict(pairs)
        if codomain_labels is None:
            codomain_labels = tuple(dict.fromkeys(assignment.values()))
        return cls(tuple(assignment), tuple(codomain_labels), assignment)

    def __call__(self, label):
        try:
            return self.assignment[str(label)]
        except KeyError:
            raise DomainError(f'symbol {label!r} is outside the map domain')

    def to_rows(self):
        """(from_label, to_label) rows in domain order"""
        return [(x, self.assignment[x]) for x in self.domain_labels]


def pushforward(phi, p):
    """Distribution of φ(X): q(y) = sum of p(x) over φ(x) = y"""
    masses = {y: [] for y in phi.codomain_labels}
    for label, prob in zip(p.labels, p.probs):
        masses[phi(label)].append(prob)
    return Pmf(
        tuple(masses),
        tuple(math.fsum(parts) for parts in masses.values()),
        p.tail_mass,
    )


def tail_index(sorted_probs, tail_mass, eps):
    """Smallest j >= 1 with sum_{i > j} p_i + tail_mass < eps"""
    suffix = compensated_cumsum(
        np.concatenate(([tail_mass], sorted_probs[::-1]))
    )
    # suffix[k] is tail_mass plus the k smallest probabilities
    m = len(sorted_probs)
    for j in range(1, m + 1):
        if suffix[m - j] < eps:
            return j
    raise PreconditionError(
        f'listed support never leaves a tail below eps={eps}'
    )


def check_hypothesis(eps, gamma):
    if not 0 < eps < 1:
        raise DomainError(f'eps must lie in (0, 1), got {eps}')
    if not gamma > 0:
        raise DomainError(f'gamma must be positive, got {gamma}')
    if math.exp(-gamma) > eps * (1 + HYPOTHESIS_SLACK):
        raise PreconditionError(
            f'exp(-gamma) = {math.exp(-gamma):.6g} exceeds eps = {eps}'
        )


def build_mapping(coin, target, eps, gamma):
    """Deterministic map whose output approximates the target"""
    check_hypothesis(eps, gamma)
    if not target.support:
        raise DegenerateInputError('target has empty support')

    sx = build_spectrum(coin)
    sy = build_spectrum(target)
    i1 = tail_index(sx.masses, coin.tail_mass, eps)
    i2 = tail_index(sy.masses, target.tail_mass, eps)

    x_lows = sx.lower_breakpoints[:i1]
    y_ends = sy.breakpoints[:i2]
    # j is the y-interval [δ^y_{j-1}, δ^y_j) holding δ^x_{i-1}
    js = np.minimum(np.searchsorted(y_ends, x_lows, side='right'), i2 - 1)

    assignment = {label: sy.labels[i2 - 1] for label in coin.labels}
    for x_label, j in zip(sx.labels[:i1], js):
        assignment[x_label] = sy.labels[j]
    j2 = int(js[-1]) + 1

    meta = MapMeta(eps=eps, gamma=gamma, i1=i1, i2=i2, j2=j2)
    logger.debug('Built mapping with i1=%d i2=%d j2=%d', i1, i2, j2)
    return DeterministicMap(coin.labels, target.labels, assignment, meta)


@dataclass(frozen=True)
class MappingReport:
    """Achieved distance of the constructed map against its bound"""
    d: float
    bound: float
    eps: float
    gamma: float
    deficiency: float
    passed: bool
    i1: int
    i2: int
    j2: int


def approximation_bound(eps, deficiency):
    """9ε + 10μ, the guarantee on the constructed map's distance"""
    return 9 * eps + 10 * deficiency


def check_mapping_bound(coin, target, eps, gamma, phi=None):
    """Build the map and compare its distance with 9ε + 10μ(E(γ))"""
    if phi is None:
        phi = build_mapping(coin, target, eps, gamma)
    d = variational_distance(target, pushforward(phi, coin))
    deficiency = deficiency_measure(
        build_spectrum(coin), build_spectrum(target), gamma
    )
    if isinstance(deficiency, MeasureBounds):
        deficiency = deficiency.upper
    bound = approximation_bound(eps, deficiency)
    passed = d <= bound + BOUND_SLACK
    if not passed:
        logger.error('Distance %r exceeds bound %r (eps=%r, gamma=%r)',
                     d, bound, eps, gamma)
    meta = phi.meta or MapMeta(eps, gamma, None, None, None)
    return MappingReport(
        d=d, bound=bound, eps=eps, gamma=gamma, deficiency=deficiency,
        passed=passed, i1=meta.i1, i2=meta.i2, j2=meta.j2,
    )
