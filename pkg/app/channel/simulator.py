"""
Channel simulation, one input symbol at a time.

For every input x with positive probability the coin row P(z|x) is mapped
onto the channel row W(·|x) as in source simulation. Expectations over the
input are summed in input-label order.
"""
import logging
import math
from dataclasses import dataclass

from channel.tables import ChannelMap
from core.exceptions import AlphabetMismatchError, CoverageError, \
    DomainError, SpecsimError
from source.distances import variational_distance
from source.mapping import BOUND_SLACK, approximation_bound, \
    build_mapping, pushforward
from spectrum.spectra import build_spectrum, deficiency_measure, \
    shifted_gap


logger = logging.getLogger(__name__)


def check_alphabets(input_pmf, chan, coupling=None):
    """Every input symbol with positive mass needs a channel and coin row"""
    if input_pmf.is_truncated:
        raise CoverageError('input pmf must be fully listed')
    tables = [('channel', chan)]
    if coupling is not None:
        tables.append(('coupling', coupling))
    for x in input_pmf.support:
        for name, table in tables:
            if x not in table.rows:
                raise AlphabetMismatchError(
                    f'input {x!r} has no {name} row', row=x
                )


def weighted_rows(input_pmf):
    """(x, P(x)) for the positive-mass inputs in label order"""
    return [
        (x, prob) for x, prob in zip(input_pmf.labels, input_pmf.probs)
        if prob > 0
    ]


def per_input_spectra(chan, coupling):
    """x -> (spectrum of P(z|x), spectrum of W(·|x))"""
    if set(chan.input_labels) != set(coupling.input_labels):
        missing = sorted(
            set(chan.input_labels) ^ set(coupling.input_labels)
        )[0]
        raise AlphabetMismatchError(
            f'channel and coupling disagree on input {missing!r}',
            row=missing,
        )
    return {
        x: (build_spectrum(coupling[x]), build_spectrum(chan[x]))
        for x in chan.input_labels
    }


def expected_deficiency_from_spectra(weights, pairs, gamma):
    """Σ w · μ{δ : c^{z|x}(δ) - c^w(δ) < γ} over (sx, sy) pairs"""
    terms = []
    for weight, (sx, sy) in zip(weights, pairs):
        if not (sx.is_full and sy.is_full):
            raise CoverageError('expected deficiency needs full coverage')
        terms.append(weight * deficiency_measure(sx, sy, gamma))
    return min(max(math.fsum(terms), 0.0), 1.0)


def expected_shifted_deficiency_from_spectra(weights, pairs, eps, gamma):
    """Σ w · μ{δ in [0, 1-ε) : c^{z|x}(δ+ε) - c^w(δ) < -γ}"""
    if not gamma > 0:
        raise DomainError(f'gamma must be positive, got {gamma}')
    terms = [
        weight * shifted_gap(sx, sy, eps).sublevel_measure(-gamma)
        for weight, (sx, sy) in zip(weights, pairs)
    ]
    return min(max(math.fsum(terms), 0.0), 1.0)


def _row_spectra(input_pmf, chan, coupling):
    check_alphabets(input_pmf, chan, coupling)
    rows = weighted_rows(input_pmf)
    pairs = [
        (build_spectrum(coupling[x]), build_spectrum(chan[x]))
        for x, _ in rows
    ]
    return [prob for _, prob in rows], pairs


def expected_deficiency(input_pmf, chan, coupling, gamma):
    weights, pairs = _row_spectra(input_pmf, chan, coupling)
    return expected_deficiency_from_spectra(weights, pairs, gamma)


def expected_shifted_deficiency(input_pmf, chan, coupling, eps, gamma):
    weights, pairs = _row_spectra(input_pmf, chan, coupling)
    return expected_shifted_deficiency_from_spectra(
        weights, pairs, eps, gamma
    )


def build_channel_map(input_pmf, chan, coupling, eps, gamma):
    """φˣ = build_mapping(P(z|x), W(·|x), ε, γ) for each x with P(x) > 0"""
    check_alphabets(input_pmf, chan, coupling)
    maps = {}
    for x, _ in weighted_rows(input_pmf):
        try:
            maps[x] = build_mapping(coupling[x], chan[x], eps, gamma)
        except SpecsimError as exc:
            if isinstance(exc, AlphabetMismatchError):
                raise
            raise type(exc)(f'input {x!r}: {exc}') from exc
    logger.debug('Built %d per-input maps', len(maps))
    return ChannelMap(maps)


def joint_distance(input_pmf, chan, coupling, cm):
    """Σ P(x) · d(W(·|x), φˣ pushed through P(z|x))"""
    check_alphabets(input_pmf, chan, coupling)
    terms = [
        prob * variational_distance(
            chan[x], pushforward(cm[x], coupling[x])
        )
        for x, prob in weighted_rows(input_pmf)
    ]
    return math.fsum(terms)


@dataclass(frozen=True)
class ChannelReport:
    """Joint distance of the per-input maps against 9ε + 10·E[μ]"""
    joint_distance: float
    expected_deficiency: float
    expected_shifted_deficiency: float
    bound: float
    eps: float
    gamma: float
    passed: bool
    rows: int


def check_channel_bound(input_pmf, chan, coupling, eps, gamma, cm=None):
    if cm is None:
        cm = build_channel_map(input_pmf, chan, coupling, eps, gamma)
    d = joint_distance(input_pmf, chan, coupling, cm)
    weights, pairs = _row_spectra(input_pmf, chan, coupling)
    deficiency = expected_deficiency_from_spectra(weights, pairs, gamma)
    shifted = expected_shifted_deficiency_from_spectra(
        weights, pairs, eps, gamma
    )
    bound = approximation_bound(eps, deficiency)
    passed = d <= bound + BOUND_SLACK
    if not passed:
        logger.error('Joint distance %r exceeds bound %r (eps=%r, gamma=%r)',
                     d, bound, eps, gamma)
    return ChannelReport(
        joint_distance=d,
        expected_deficiency=deficiency,
        expected_shifted_deficiency=shifted,
        bound=bound,
        eps=eps,
        gamma=gamma,
        passed=passed,
        rows=len(weights),
    )
