import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import DomainError


MASS_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Pmf:
    """Finite labeled probability mass function

    tail_mass is the mass of unlisted symbols when a countable source has
    been truncated.
    """
    labels: tuple
    probs: tuple
    tail_mass: float = 0.0

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'probs', probs)
        object.__setattr__(self, 'tail_mass', float(self.tail_mass))

        if len(labels) != len(probs):
            raise DomainError(
                f'{len(labels)} labels but {len(probs)} probabilities'
            )
        if len(set(labels)) != len(labels):
            raise DomainError('labels must be pairwise distinct')
        if any(not math.isfinite(p) or p < 0 for p in probs):
            raise DomainError('probabilities must be finite and >= 0')
        if not math.isfinite(self.tail_mass) or self.tail_mass < 0:
            raise DomainError('tail_mass must be finite and >= 0')
        total = math.fsum(probs) + self.tail_mass
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise DomainError(f'total mass is {total!r}, expected 1')

    @classmethod
    def from_mapping(cls, mapping, tail_mass=0.0):
        """Build a pmf from a label -> probability mapping"""
        return cls(tuple(mapping), tuple(mapping.values()), tail_mass)

    @classmethod
    def uniform(cls, m, prefix='s'):
        """Uniform pmf over m symbols named prefix0 ... prefix{m-1}"""
        if m < 1:
            raise DomainError('uniform pmf needs at least one symbol')
        return cls(tuple(f'{prefix}{i}' for i in range(m)), (1.0 / m,) * m)

    @classmethod
    def point_mass(cls, label):
        return cls((label,), (1.0,))

    def __len__(self):
        return len(self.labels)

    @property
    def support(self):
        """Labels with positive probability, in stored order"""
        return tuple(
            label for label, p in zip(self.labels, self.probs) if p > 0
        )

    @property
    def is_truncated(self):
        return self.tail_mass > 0

    def as_dict(self):
        return dict(zip(self.labels, self.probs))

    def prob(self, label):
        """Probability of a label; unlisted labels have probability 0"""
        return self.as_dict().get(str(label), 0.0)

    def as_array(self):
        return np.asarray(self.probs, dtype=float)

    def relabel(self, mapping):
        """Rename labels through mapping; unmapped labels are kept"""
        return Pmf(
            tuple(mapping.get(label, label) for label in self.labels),
            self.probs,
            self.tail_mass,
        )
