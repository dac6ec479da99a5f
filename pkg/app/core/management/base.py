"""
Base class of the specsim commands.

A command computes a report, embeds the run manifest in it, writes it to
--out (or stdout) as JSON or CSV and records the run. Options fall back to
SPECSIM_<OPTION> environment variables; flags given on the command line win.
"""
import json
import logging
import os
import time

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.db import DatabaseError
from django.utils import timezone

from core.exceptions import DomainError, ParseError, SpecsimError
from core.models import Run
from spectrum.fileio import file_digest, write_rows


logger = logging.getLogger(__name__)

ENV_PREFIX = 'SPECSIM_'
BOUND_VIOLATED = 1

DJANGO_OPTIONS = frozenset({
    'help', 'version', 'verbosity', 'settings', 'pythonpath', 'traceback',
    'no_color', 'force_color', 'skip_checks', 'stdout', 'stderr',
})


def _env_default(action, value):
    convert = action.type or str
    try:
        if action.nargs in ('+', '*'):
            return [convert(part) for part in value.replace(',', ' ').split()]
        return convert(value)
    except (TypeError, ValueError):
        raise CommandError(
            f'{ENV_PREFIX}{action.dest.upper()}={value!r} is not valid',
            returncode=ParseError.exit_code,
        )


class SpecsimCommand(BaseCommand):
    """Shared --seed/--out/--format flags, manifests and run records"""
    default_format = 'json'
    columns = ()

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        for action in parser._actions:
            if action.dest in DJANGO_OPTIONS or not action.option_strings:
                continue
            value = os.environ.get(ENV_PREFIX + action.dest.upper())
            if value is None:
                continue
            default = _env_default(action, value)
            if action.choices and default not in action.choices:
                raise CommandError(
                    f'{ENV_PREFIX}{action.dest.upper()} must be one of '
                    f'{", ".join(map(str, action.choices))}',
                    returncode=ParseError.exit_code,
                )
            action.default = default
            action.required = False
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, default=None,
                            help='64-bit seed (default SPECSIM["SEED"])')
        parser.add_argument('--out', default=None,
                            help='Report path; stdout when omitted')
        parser.add_argument('--format', choices=('csv', 'json'),
                            default=None, help='Report format')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def compute(self, **options):
        """Return (report dict, csv rows or None)"""
        raise NotImplementedError

    def read_input(self, reader, path, *args):
        """Read an input file, remembering its digest"""
        try:
            self.digests[path] = file_digest(path)
            return reader(path, *args)
        except OSError as exc:
            raise ParseError(f'cannot read {path}: {exc.strerror}')

    def handle(self, *args, **options):
        seed = options['seed']
        if seed is None:
            seed = options['seed'] = settings.SPECSIM['SEED']
        if not 0 <= seed < 2 ** 64:
            raise CommandError(f'seed {seed} is not a 64-bit value',
                               returncode=DomainError.exit_code)
        options['format'] = options['format'] or self.default_format
        self.digests = {}
        run = Run(
            command=self.command_name,
            parameters={
                key: value for key, value in options.items()
                if key not in DJANGO_OPTIONS
            },
            input_digests=self.digests,
            version=settings.SPECSIM['VERSION'],
            seed=str(seed),
            started_at=timezone.now(),
        )
        start = time.perf_counter()
        try:
            report, rows = self.compute(**options)
        except SpecsimError as exc:
            run.wall_clock = time.perf_counter() - start
            run.exit_status = exc.exit_code
            self.record(run)
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        run.wall_clock = time.perf_counter() - start

        passed = report.get('pass', True)
        run.exit_status = 0 if passed else BOUND_VIOLATED
        run.report = dict(report, manifest=run.manifest())
        self.emit(run.report, rows, options)
        self.record(run)
        if not passed:
            raise CommandError('computed distance exceeds its bound',
                               returncode=BOUND_VIOLATED)

    def emit(self, payload, rows, options):
        """Write the report to --out or stdout"""
        out = options['out']
        try:
            handle = (
                open(out, 'w', newline='', encoding='utf-8') if out
                else self.stdout
            )
        except OSError as exc:
            raise CommandError(f'cannot write {out}: {exc.strerror}',
                               returncode=ParseError.exit_code)
        try:
            if options['format'] == 'csv' and rows is not None:
                handle.write(
                    f'# manifest = {json.dumps(payload["manifest"])}\n'
                )
                write_rows(handle, self.columns,
                           [[row[c] for c in self.columns] for row in rows])
            else:
                document = dict(payload)
                if rows is not None:
                    document['rows'] = rows
                handle.write(json.dumps(document, indent=2) + '\n')
        finally:
            if out:
                handle.close()

    def record(self, run):
        if not settings.SPECSIM['RECORD_RUNS']:
            return
        try:
            run.save()
        except DatabaseError as exc:
            logger.warning('Run of %r not recorded: %s', run.command, exc)

    def write_side_file(self, path, writer, *args):
        """Write an extra artifact such as a map file"""
        try:
            writer(path, *args)
        except OSError as exc:
            raise CommandError(f'cannot write {path}: {exc.strerror}',
                               returncode=ParseError.exit_code)

