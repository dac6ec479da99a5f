from dataclasses import asdict, dataclass

import numpy as np
from django.conf import settings

from core.exceptions import DomainError


RNG_ALGORITHM = 'numpy.PCG64'
MIN_GRID_SIZE = 10


@dataclass(frozen=True)
class OracleConfig:
    """Knobs shared by the brute-force and sampling oracles"""
    grid_size: int
    mc_samples: int
    rng_seed: int
    max_enum_maps: int

    def __post_init__(self):
        if self.grid_size < MIN_GRID_SIZE:
            raise DomainError(
                f'grid size must be at least {MIN_GRID_SIZE}, '
                f'got {self.grid_size}'
            )
        if self.mc_samples < 1:
            raise DomainError('at least one Monte-Carlo sample is required')
        if not 0 <= self.rng_seed < 2 ** 64:
            raise DomainError(f'seed {self.rng_seed} is not a 64-bit value')
        if self.max_enum_maps < 1:
            raise DomainError('the enumeration cap must be positive')

    @classmethod
    def from_settings(cls, **overrides):
        """Defaults from settings.SPECSIM, then non-None overrides"""
        defaults = settings.SPECSIM
        values = {
            'grid_size': defaults['GRID_SIZE'],
            'mc_samples': defaults['MC_SAMPLES'],
            'rng_seed': defaults['SEED'],
            'max_enum_maps': defaults['MAX_ENUM_MAPS'],
        }
        values.update(
            (key, value) for key, value in overrides.items()
            if value is not None
        )
        return cls(**values)

    def generator(self):
        return np.random.Generator(np.random.PCG64(self.rng_seed))

    def as_dict(self):
        return dict(asdict(self), rng=RNG_ALGORITHM)
