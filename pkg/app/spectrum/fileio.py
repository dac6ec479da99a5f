"""Reading pmf files and writing spectrum dumps"""
import csv
import hashlib
import json
import os

from core.exceptions import ParseError, SpecsimError
from spectrum.serializers import PmfSerializer


PMF_COLUMNS = ('label', 'prob')
SPECTRUM_COLUMNS = ('delta_lo', 'delta_hi', 'c_value')


def file_digest(path):
    """sha256 hex digest of a file's bytes"""
    digest = hashlib.sha256()
    with open(path, 'rb') as handle:
        for chunk in iter(lambda: handle.read(65536), b''):
            digest.update(chunk)
    return digest.hexdigest()


def parse_float(text, line, name):
    try:
        return float(text)
    except (TypeError, ValueError):
        raise ParseError(f'{name} {text!r} is not a number', line=line)


def _read_header_keys(lines):
    """Collect '# key = value' comment lines, returning keys and the rest"""
    keys = {}
    body = []
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if stripped.startswith('#'):
            key, sep, value = stripped[1:].partition('=')
            if sep:
                keys[key.strip()] = (value.strip(), number)
            continue
        if stripped:
            body.append((number, line))
    return keys, body


def read_table(path, columns):
    """Read a CSV with the given header, skipping '#' comment lines

    Returns the '# key = value' header keys and the (line, fields) rows.
    """
    with open(path, newline='', encoding='utf-8') as handle:
        keys, body = _read_header_keys(handle.readlines())
    if not body:
        raise ParseError('no header row', line=1)

    numbers = [number for number, _ in body]
    reader = csv.reader(line for _, line in body)
    header = tuple(column.strip() for column in next(reader))
    if header != tuple(columns):
        raise ParseError(f'expected columns {",".join(columns)}',
                         line=numbers[0])

    rows = []
    for number, row in zip(numbers[1:], reader):
        if len(row) != len(columns):
            raise ParseError(f'expected {len(columns)} fields', line=number)
        rows.append((number, row))
    return keys, rows


def read_pmf_csv(path):
    """Read a CSV pmf with columns label,prob and an optional tail_mass key"""
    keys, rows = read_table(path, PMF_COLUMNS)
    labels = [row[0] for _, row in rows]
    probs = [parse_float(row[1], number, 'prob') for number, row in rows]

    tail_mass = 0.0
    if 'tail_mass' in keys:
        value, number = keys['tail_mass']
        tail_mass = parse_float(value, number, 'tail_mass')
    return _validated_pmf(
        {'labels': labels, 'probs': probs, 'tail_mass': tail_mass}
    )


def read_pmf_json(path):
    with open(path, encoding='utf-8') as handle:
        try:
            document = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno)
    return _validated_pmf(document)


def read_pmf(path):
    """Read a pmf file, choosing the format from the extension"""
    if os.path.splitext(path)[1].lower() == '.json':
        return read_pmf_json(path)
    return read_pmf_csv(path)


def _validated_pmf(document):
    serializer = PmfSerializer(data=document)
    if not serializer.is_valid():
        raise ParseError(json.dumps(serializer.errors))
    try:
        return serializer.save()
    except SpecsimError as exc:
        raise ParseError(str(exc))


def write_rows(path_or_handle, columns, rows):
    """Write CSV rows; floats keep their full repr"""
    def render(value):
        if value is None:
            return ''
        return repr(value) if isinstance(value, float) else str(value)

    def emit(handle):
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([render(value) for value in row])

    if hasattr(path_or_handle, 'write'):
        emit(path_or_handle)
    else:
        with open(path_or_handle, 'w', newline='', encoding='utf-8') as fh:
            emit(fh)


def write_spectrum_csv(path_or_handle, spectrum):
    write_rows(path_or_handle, SPECTRUM_COLUMNS, spectrum.to_rows())
