"""Seeded random instances for the oracle sweeps"""
import numpy as np

from source.mapping import DeterministicMap
from spectrum.pmf import Pmf


EPS_CHOICES = (0.05, 0.1, 0.3)


def random_pmf(rng, max_size, prefix='s', min_size=1):
    """Pmf with rational probabilities w_i / sum(w), w_i in 0..24"""
    size = int(rng.integers(min_size, max_size + 1))
    weights = rng.integers(0, 25, size=size)
    if weights.sum() == 0:
        weights[rng.integers(size)] = 1
    total = int(weights.sum())
    return Pmf(
        tuple(f'{prefix}{i}' for i in range(size)),
        tuple(int(w) / total for w in weights),
    )


def random_map(rng, pmf, max_codomain=4, prefix='t'):
    """Uniformly random total map from the labels of pmf onto t0, t1, ..."""
    size = int(rng.integers(1, max_codomain + 1))
    codomain = tuple(f'{prefix}{j}' for j in range(size))
    images = rng.integers(size, size=len(pmf))
    return DeterministicMap(
        pmf.labels, codomain,
        {x: codomain[j] for x, j in zip(pmf.labels, images)},
    )


def random_parameters(rng):
    """(eps, gamma) with gamma = -log(eps) + u, u uniform on [0, 2]"""
    eps = float(rng.choice(EPS_CHOICES))
    return eps, -float(np.log(eps)) + float(rng.uniform(0.0, 2.0))
