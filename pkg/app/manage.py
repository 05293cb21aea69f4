#!/usr/bin/env python
"""Command-line entry point for the DHoGM quality-control pipeline."""
import os
import sys


def main():
    """Run pipeline subcommands (preprocess, features, train, predict, evaluate, simulate, experiment)."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    if os.getenv('MRIQC_DHOGM_NO_COLOR'):
        os.environ['DJANGO_COLORS'] = 'nocolor'
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
