"""Conditional pmf tables: channels W(y|x), coin couplings P(z|x) and maps"""
from dataclasses import dataclass
from types import MappingProxyType

from core.exceptions import AlphabetMismatchError


@dataclass(frozen=True, eq=False)
class ConditionalTable:
    """One pmf per input symbol over a shared output alphabet"""
    input_labels: tuple
    output_labels: tuple
    rows: MappingProxyType

    def __post_init__(self):
        object.__setattr__(self, 'input_labels',
                           tuple(str(x) for x in self.input_labels))
        object.__setattr__(self, 'output_labels',
                           tuple(str(y) for y in self.output_labels))
        object.__setattr__(self, 'rows', MappingProxyType(
            {str(x): row for x, row in dict(self.rows).items()}
        ))

        outputs = set(self.output_labels)
        for x in self.input_labels:
            if x not in self.rows:
                raise AlphabetMismatchError(f'input {x!r} has no row', row=x)
            row = self.rows[x]
            if row.is_truncated:
                raise AlphabetMismatchError(
                    f'row {x!r} is truncated', row=x
                )
            stray = [y for y in row.labels if y not in outputs]
            if stray:
                raise AlphabetMismatchError(
                    f'row {x!r} uses unknown symbol {stray[0]!r}', row=x
                )
        extra = [x for x in self.rows if x not in set(self.input_labels)]
        if extra:
            raise AlphabetMismatchError(
                f'row {extra[0]!r} is not an input symbol', row=extra[0]
            )

    @classmethod
    def from_rows(cls, rows):
        """Table whose alphabets are read off the rows in order"""
        rows = dict(rows)
        outputs = dict.fromkeys(
            label for row in rows.values() for label in row.labels
        )
        return cls(tuple(rows), tuple(outputs), rows)

    def __getitem__(self, x):
        try:
            return self.rows[str(x)]
        except KeyError:
            raise AlphabetMismatchError(f'input {x!r} has no row', row=x)

    def __len__(self):
        return len(self.input_labels)

    def to_rows(self):
        """(x_label, out_label, prob) rows grouped by input"""
        return [
            (x, label, prob)
            for x in self.input_labels
            for label, prob in zip(self[x].labels, self[x].probs)
        ]


class Channel(ConditionalTable):
    """W(y|x)"""


class CoinCoupling(ConditionalTable):
    """P(z|x); identical rows make the coin independent of the input"""

    @classmethod
    def independent(cls, input_labels, coin):
        return cls(tuple(input_labels), coin.labels,
                   {x: coin for x in input_labels})

    @property
    def coin_labels(self):
        return self.output_labels


@dataclass(frozen=True, eq=False)
class ChannelMap:
    """φ(x, z) = φˣ(z), one deterministic map per input symbol"""
    maps: MappingProxyType

    def __post_init__(self):
        object.__setattr__(self, 'maps', MappingProxyType(
            {str(x): phi for x, phi in dict(self.maps).items()}
        ))

    def __getitem__(self, x):
        try:
            return self.maps[str(x)]
        except KeyError:
            raise AlphabetMismatchError(f'input {x!r} has no map', row=x)

    def __call__(self, x, z):
        return self[x](z)

    def to_rows(self):
        """(x_label, z_label, y_label) rows"""
        return [
            (x, z, y)
            for x, phi in self.maps.items()
            for z, y in phi.to_rows()
        ]
