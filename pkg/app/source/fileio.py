"""Map and joint pmf files"""
from core.exceptions import ParseError, SpecsimError
from source.coupling import JointPmf
from source.mapping import DeterministicMap
from spectrum.fileio import parse_float, read_table, write_rows


MAP_COLUMNS = ('from_label', 'to_label')
JOINT_COLUMNS = ('x_label', 'y_label', 'prob')


def read_map_csv(path, codomain_labels=None):
    _, rows = read_table(path, MAP_COLUMNS)
    seen = {}
    for number, (x, y) in rows:
        if x in seen:
            raise ParseError(f'symbol {x!r} mapped twice', line=number)
        seen[x] = y
    try:
        return DeterministicMap.from_pairs(seen.items(), codomain_labels)
    except SpecsimError as exc:
        raise ParseError(str(exc))


def write_map_csv(path_or_handle, phi):
    write_rows(path_or_handle, MAP_COLUMNS, phi.to_rows())


def read_joint_csv(path):
    _, rows = read_table(path, JOINT_COLUMNS)
    entries = [
        (x, y, parse_float(prob, number, 'prob'))
        for number, (x, y, prob) in rows
    ]
    try:
        return JointPmf.from_entries(entries)
    except SpecsimError as exc:
        raise ParseError(str(exc))


def write_joint_csv(path_or_handle, joint):
    write_rows(path_or_handle, JOINT_COLUMNS, joint.to_rows())
