""" Shared plumbing of the pipeline management commands """
import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from pandas.errors import EmptyDataError, ParserError
from rest_framework import serializers

from core.artifacts import artifact_header, write_json
from core.config import resolve_config
from core.exceptions import DhogmError
from core.labels import PathMode

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
TOTAL_FAILURE = 1


class PipelineCommand(BaseCommand):
    """
    Resolves the pipeline config from settings, --config and flags, then calls
    run(config, **options). Exit codes: 0 success (per-subject failures allowed),
    1 total failure, 2 usage error.
    """
    with_path = False

    def add_arguments(self, parser):
        parser.add_argument('--config', dest='config_file', help='JSON pipeline config merged over the defaults')
        parser.add_argument('--seed', type=int, help='MLP / simulation seed')
        parser.add_argument('--jobs', type=int, default=None,
                            help='Worker count (default: DHOGM_JOBS or the number of cores)')
        parser.add_argument('--out', required=True, help='Output directory')
        if self.with_path:
            parser.add_argument('--path', choices=PathMode.values, help='Decision path: 2d, 3d or fused')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, config, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            config = resolve_config(options['config_file'], options['seed'], options.get('path'))
        except (OSError, ValueError) as exc:
            raise CommandError(f'Cannot read config: {exc}', returncode=USAGE_ERROR)
        except serializers.ValidationError as exc:
            raise CommandError(f'Invalid config: {exc.detail}', returncode=USAGE_ERROR)

        self.out_dir = Path(options['out'])
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.jobs = options['jobs'] or settings.DHOGM_JOBS
        try:
            self.run(config, **options)
        except serializers.ValidationError as exc:
            raise CommandError(f'Invalid input: {exc.detail}', returncode=USAGE_ERROR)
        except (OSError, json.JSONDecodeError, EmptyDataError, ParserError) as exc:
            raise CommandError(f'Cannot read input: {exc}', returncode=USAGE_ERROR)
        except DhogmError as exc:
            raise CommandError(f'{type(exc).__name__}: {exc}', returncode=TOTAL_FAILURE)

    def check_failures(self, results, failures, total):
        """ Write failures.json; a run where every subject failed is a total failure """
        write_json(self.out_dir / 'failures.json', [failure.to_dict() for failure in failures])
        if failures:
            self.stderr.write(f'{len(failures)} of {total} subject(s) failed, see failures.json')
        if total and not results:
            raise CommandError('Every subject failed', returncode=TOTAL_FAILURE)

    def write_run(self, config, summary):
        """ run.json: artifact header plus the command's summary; no timestamps """
        payload = artifact_header(config)
        payload.update({'command': self.command_name, 'summary': summary})
        return write_json(self.out_dir / 'run.json', payload)

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def success(self, message):
        self.stdout.write(self.style.SUCCESS(message))
