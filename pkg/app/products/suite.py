"""
Finite-n runs of the four worked examples.

Each run builds the example's sources (and channel) at length n, evaluates
the quantity its case analysis turns on, and compares it with the
threshold that signals the predicted limit. The verdict only states a
trend at n, never the limit itself.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from channel.simulator import check_channel_bound, expected_deficiency, \
    expected_deficiency_from_spectra, expected_shifted_deficiency, \
    expected_shifted_deficiency_from_spectra
from channel.tables import Channel, CoinCoupling
from core.exceptions import DomainError, ExampleConstraintError
from products.weight_classes import binary_entropy, check_length, \
    clt_margin, expand, mixture_classes, mixture_spectrum, uniform_spectrum
from source.coupling import coupling_liminf_estimate, independent_coupling
from spectrum.pmf import Pmf
from spectrum.spectra import gap_function, shifted_gap


logger = logging.getLogger(__name__)

SUFFICIENT = 'sufficient-condition trend'
NECESSITY_VIOLATED = 'necessity violated'
SURROGATE_SPLIT = 'necessity violated; coupling surrogate non-negative'
NO_TREND = 'no trend at n'

EDGE = 0.02
CLT_INFLATION = 1.5
MEASURE_TREND_TOLERANCE = 0.01
MAX_TERNARY_LENGTH = 10
CASE1_EPS = 0.3
CASE2_EPS = 0.125
UNIFORM_EPS = 0.25

ORDERING = '0 < q1 < p1 < q2 < p2 < 1/2'

REQUIRED = {
    1: ('q1', 'p1', 'q2', 'p2', 'alpha', 'beta'),
    2: ('q1', 'p1', 'q2', 'p2', 'alpha', 'beta', 'r1', 'r2', 'theta'),
    3: ('q1', 'p1', 'q2', 'p2', 'alpha', 'beta'),
    4: ('x_size',),
}


@dataclass(frozen=True)
class ConditionReport:
    """Finite-n value of an example's condition and its verdict"""
    example: int
    case: str
    n: int
    quantity: float
    threshold: float
    margin: float
    predicted: str
    verdict: str
    eps: float = None
    gamma: float = None
    surrogate: float = None
    distance: float = None
    bound: float = None


def _require(example, params):
    missing = [name for name in REQUIRED[example] if params.get(name) is None]
    if missing:
        raise DomainError(f'example {example} needs {", ".join(missing)}')
    return [params[name] for name in REQUIRED[example]]


def _constraint(holds, text):
    if not holds:
        raise ExampleConstraintError(text)


def check_constraints(example, params):
    """Raise ExampleConstraintError naming the first violated ordering"""
    if example not in REQUIRED:
        raise DomainError(f'unknown example {example!r}')
    values = _require(example, params)
    if example == 4:
        _constraint(values[0] >= 1, 'x_size >= 1')
        return
    q1, p1, q2, p2, alpha, beta = values[:6]
    if example == 3:
        _constraint(0 < p1 < p2 < 0.5, '0 < p1 < p2 < 1/2')
        _constraint(0 < q1 < q2 < 0.5, '0 < q1 < q2 < 1/2')
        _constraint(0 <= alpha <= 0.5, '0 <= alpha <= 1/2')
        _constraint(0 < beta <= 0.5, '0 < beta <= 1/2')
        return
    _constraint(0 < q1 < p1 < q2 < p2 < 0.5, ORDERING)
    _constraint(0 <= alpha <= 0.5, '0 <= alpha <= 1/2')
    _constraint(0 <= beta <= 0.5, '0 <= beta <= 1/2')
    if example == 2:
        r1, r2, theta = values[6:]
        _constraint(0 < r1 < 1 and 0 < r2 < 1, '0 < r1, r2 < 1')
        _constraint(0 <= theta <= 0.5, '0 <= theta <= 1/2')


def excluded_window(points, width=EDGE):
    """[width, 1 - width] with a width-neighborhood of each point removed"""
    intervals = [(width, 1 - width)]
    for point in points:
        kept = []
        for lo, hi in intervals:
            if point - width > lo:
                kept.append((lo, min(hi, point - width)))
            if point + width < hi:
                kept.append((max(lo, point + width), hi))
        intervals = kept
    return intervals


def _clt_tolerance(n, params):
    return CLT_INFLATION * max(clt_margin(p, n, EDGE) for p in params)


def run_example1(params, n):
    """Mixture coin against mixture target"""
    q1, p1, q2, p2, alpha, beta = _require(1, params)
    sx = mixture_spectrum(p1, p2, alpha, n)
    sy = mixture_spectrum(q1, q2, beta, n)
    margin = _clt_tolerance(n, (q1, p1, q2, p2))

    if alpha <= beta:
        gap = gap_function(sx, sy).scaled(1 / n)
        quantity = gap.inf_over(excluded_window((alpha, beta)))
        threshold = 0.5 * min(
            binary_entropy(p1) - binary_entropy(q1),
            binary_entropy(p2) - binary_entropy(q2),
        )
        verdict = SUFFICIENT if quantity >= threshold else NO_TREND
        return ConditionReport(1, 'alpha<=beta', n, quantity, threshold,
                               margin, SUFFICIENT, verdict)

    eps = (alpha - beta) / 2
    quantity = shifted_gap(sx, sy, eps).inf()
    threshold = 0.5 * n * (binary_entropy(p1) - binary_entropy(q2))
    verdict = NECESSITY_VIOLATED if quantity <= threshold else NO_TREND
    return ConditionReport(1, 'alpha>beta', n, quantity, threshold, margin,
                           NECESSITY_VIOLATED, verdict, eps=eps)


def run_example2(params, n):
    """Mixture coin through a mixture of two binary symmetric channels

    The coin is independent of the input and every binary input sees the
    same noise spectrum, so one weight-1 spectrum pair stands for the whole
    input distribution; r1, r2 and theta never enter the condition.
    """
    q1, p1, q2, p2, alpha, beta = _require(2, params)[:6]
    coin = mixture_spectrum(p1, p2, alpha, n)
    noise = mixture_spectrum(q1, q2, beta, n)
    pairs = [(coin, noise)]
    margin = _clt_tolerance(n, (q1, p1, q2, p2))

    if alpha <= beta:
        gamma = 0.5 * n * min(
            binary_entropy(p1) - binary_entropy(q1),
            binary_entropy(p2) - binary_entropy(q2),
        )
        quantity = expected_deficiency_from_spectra([1.0], pairs, gamma)
        threshold = MEASURE_TREND_TOLERANCE
        verdict = SUFFICIENT if quantity <= threshold else NO_TREND
        return ConditionReport(2, 'alpha<=beta', n, quantity, threshold,
                               margin, SUFFICIENT, verdict, gamma=gamma)

    eps = (alpha - beta) / 2
    gamma = 0.5 * n * (binary_entropy(q2) - binary_entropy(p1))
    quantity = expected_shifted_deficiency_from_spectra(
        [1.0], pairs, eps, gamma
    )
    verdict = NECESSITY_VIOLATED if quantity > 0 else NO_TREND
    return ConditionReport(2, 'alpha>beta', n, quantity, 0.0, margin,
                           NECESSITY_VIOLATED, verdict, eps=eps, gamma=gamma)


def example3_instance(params, n):
    """(input pmf, channel, coupling) of the ternary-input example

    Inputs are the 2^n binary strings, each with probability beta / 2^n,
    and the all-2 string with probability 1 - beta. Binary inputs go
    through a BSC(q1)^n / BSC(q2)^n mixture; the all-2 string is passed
    through unchanged. The coin is independent of the input.
    """
    q1, p1, q2, p2, alpha, beta = _require(3, params)
    n = check_length(n)
    if n > MAX_TERNARY_LENGTH:
        raise ExampleConstraintError(f'n <= {MAX_TERNARY_LENGTH}')

    noise = mixture_classes(q1, q2, alpha, n)
    binary = expand(noise).labels
    codes = np.arange(2 ** n)
    popcount = np.array([label.count('1') for label in binary])
    twos = '2' * n

    rows = {}
    for x in codes:
        probs = np.exp(noise.log_probs[popcount[codes ^ x]])
        rows[binary[x]] = Pmf(binary, tuple(probs))
    rows[twos] = Pmf.point_mass(twos)

    input_pmf = Pmf(
        binary + (twos,), (beta / 2 ** n,) * 2 ** n + (1 - beta,)
    )
    chan = Channel(input_pmf.labels, binary + (twos,), rows)
    coupling = CoinCoupling.independent(
        input_pmf.labels, expand(mixture_classes(p1, p2, alpha, n))
    )
    return input_pmf, chan, coupling


def run_example3(params, n):
    """Ternary-input channel; case 1 checks sufficiency, case 2 necessity

    Case 1 also reports the joint distance of the per-input maps at
    CASE1_EPS next to its aggregate bound.
    """
    q1, p1, q2, p2, alpha, beta = _require(3, params)
    gaps = (binary_entropy(p1) - binary_entropy(q1),
            binary_entropy(p2) - binary_entropy(q2))
    if min(gaps) > 0:
        input_pmf, chan, coupling = example3_instance(params, n)
        gamma = 0.5 * n * min(gaps)
        quantity = expected_deficiency(input_pmf, chan, coupling, gamma)
        threshold = MEASURE_TREND_TOLERANCE
        verdict = SUFFICIENT if quantity <= threshold else NO_TREND
        check = check_channel_bound(input_pmf, chan, coupling, CASE1_EPS,
                                    -math.log(CASE1_EPS))
        return ConditionReport(3, 'entropies above noise', n, quantity,
                               threshold, 0.0, SUFFICIENT, verdict,
                               eps=CASE1_EPS, gamma=gamma,
                               distance=check.joint_distance,
                               bound=check.bound)
    if min(gaps) < 0:
        input_pmf, chan, coupling = example3_instance(params, n)
        eps = (alpha - beta) / 2 if alpha > beta else CASE2_EPS
        gamma = 0.5 * n * max(-g for g in gaps)
        quantity = expected_shifted_deficiency(input_pmf, chan, coupling,
                                               eps, gamma)
        verdict = NECESSITY_VIOLATED if quantity > 0 else NO_TREND
        return ConditionReport(3, 'entropy below noise', n, quantity, 0.0,
                               0.0, NECESSITY_VIOLATED, verdict, eps=eps,
                               gamma=gamma)
    raise ExampleConstraintError(
        'H(p1) != H(q1) or H(p2) != H(q2) (equal entropies are inconclusive)'
    )


def ceil_sqrt(n):
    root = math.isqrt(n)
    return root if root * root == n else root + 1


def run_example4(params, n):
    """Fixed uniform coin against a uniform target over ceil(sqrt(n))"""
    x_size = int(_require(4, params)[0])
    y_size = ceil_sqrt(n)
    quantity = shifted_gap(
        uniform_spectrum(x_size), uniform_spectrum(y_size), UNIFORM_EPS
    ).inf()
    joint = independent_coupling(Pmf.uniform(x_size, prefix='x'),
                                 Pmf.uniform(y_size, prefix='y'))
    surrogate = coupling_liminf_estimate(joint, scale=1 / n)
    margin = math.log(n) / n

    if quantity >= 0:
        verdict = NO_TREND
    elif surrogate >= -margin:
        verdict = SURROGATE_SPLIT
    else:
        verdict = NECESSITY_VIOLATED
    return ConditionReport(4, 'uniform sqrt(n) target', n, quantity, 0.0,
                           margin, SURROGATE_SPLIT, verdict, eps=UNIFORM_EPS,
                           surrogate=surrogate)


RUNNERS = {
    1: run_example1,
    2: run_example2,
    3: run_example3,
    4: run_example4,
}


def example_suite(example, params, n):
    """Report for one n, or one report per n when n is a list"""
    check_constraints(example, params)
    if isinstance(n, (list, tuple)):
        return [example_suite(example, params, size) for size in n]
    n = check_length(n)
    report = RUNNERS[example](params, n)
    logger.debug('Example %d at n=%d: %s (quantity %r, threshold %r)',
                 example, n, report.verdict, report.quantity,
                 report.threshold)
    return report
