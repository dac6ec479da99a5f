"""Channel, coupling and channel-map files"""
import math
from collections import defaultdict

from channel.tables import Channel, ChannelMap, CoinCoupling
from core.exceptions import ParseError, SpecsimError
from source.mapping import DeterministicMap
from spectrum.fileio import parse_float, read_table, write_rows
from spectrum.pmf import MASS_TOLERANCE, Pmf


CHANNEL_COLUMNS = ('x_label', 'y_label', 'prob')
COUPLING_COLUMNS = ('x_label', 'z_label', 'prob')
CHANNEL_MAP_COLUMNS = ('x_label', 'z_label', 'y_label')


def _read_conditional(path, columns, table_class):
    _, rows = read_table(path, columns)
    groups = defaultdict(list)
    first_line = {}
    for number, (x, label, prob) in rows:
        first_line.setdefault(x, number)
        groups[x].append((label, parse_float(prob, number, 'prob')))

    table_rows = {}
    for x, entries in groups.items():
        total = math.fsum(prob for _, prob in entries)
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise ParseError(f'row {x!r} sums to {total!r}',
                             line=first_line[x])
        try:
            table_rows[x] = Pmf.from_mapping(dict(entries))
        except SpecsimError as exc:
            raise ParseError(f'row {x!r}: {exc}', line=first_line[x])
    return table_class.from_rows(table_rows)


def read_channel_csv(path):
    return _read_conditional(path, CHANNEL_COLUMNS, Channel)


def read_coupling_csv(path):
    return _read_conditional(path, COUPLING_COLUMNS, CoinCoupling)


def write_channel_csv(path_or_handle, chan):
    write_rows(path_or_handle, CHANNEL_COLUMNS, chan.to_rows())


def write_coupling_csv(path_or_handle, coupling):
    write_rows(path_or_handle, COUPLING_COLUMNS, coupling.to_rows())


def read_channel_map_csv(path):
    _, rows = read_table(path, CHANNEL_MAP_COLUMNS)
    pairs = defaultdict(dict)
    for number, (x, z, y) in rows:
        if z in pairs[x]:
            raise ParseError(f'({x!r}, {z!r}) mapped twice', line=number)
        pairs[x][z] = y
    return ChannelMap({
        x: DeterministicMap.from_pairs(assignment.items())
        for x, assignment in pairs.items()
    })


def write_channel_map_csv(path_or_handle, cm):
    write_rows(path_or_handle, CHANNEL_MAP_COLUMNS, cm.to_rows())
