#!/usr/bin/env python
"""specsim entry point: spectrum, simulate, check_conditions, channel,
example and oracle, plus Django's migrate and test."""
import os
import sys


def main(argv=None):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            'Django is not importable; install requirements.txt first'
        ) from exc
    execute_from_command_line(sys.argv if argv is None else argv)


if __name__ == '__main__':
    main()
