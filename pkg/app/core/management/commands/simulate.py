""" Write a synthetic phantom cohort """
from django.core.management.base import CommandError

from core.management.base import USAGE_ERROR, PipelineCommand
from synth.cohort import simulate_cohort
from synth.specs import CorruptionKind, Structure


class Command(PipelineCommand):
    help = 'Generate phantoms, their corrupted variants, masks and a labeled manifest.'

    def add_command_arguments(self, parser):
        parser.add_argument('--subjects', type=int, default=20, help='Number of phantoms')
        parser.add_argument('--severities', type=float, nargs='+', default=[0, 8],
                            help='Corruption severities; 0 is the clean phantom')
        parser.add_argument('--cutoff', type=float, default=4, help='Severities at or above this are labeled poor')
        parser.add_argument('--kind', choices=CorruptionKind.values, default=CorruptionKind.GHOST_MOTION)
        parser.add_argument('--structure', choices=Structure.values, default=Structure.PERLIN_TEXTURE)
        parser.add_argument('--shape', type=int, nargs=3, default=None,
                            help='Phantom shape (default: the configured target shape)')

    def run(self, config, **options):
        if options['subjects'] < 1:
            raise CommandError('--subjects must be at least 1', returncode=USAGE_ERROR)
        seed = options['seed'] if options['seed'] is not None else 0
        shape = tuple(options['shape'] or config.target_shape)
        try:
            manifest = simulate_cohort(
                self.out_dir,
                n_subjects=options['subjects'],
                severities=tuple(options['severities']),
                cutoff=options['cutoff'],
                seed=seed,
                shape=shape,
                kind=options['kind'],
                structure=options['structure'],
            )
        except ValueError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        self.write_run(config, {
            'n_subjects': options['subjects'],
            'severities': list(options['severities']),
            'cutoff': options['cutoff'],
            'kind': options['kind'],
            'structure': options['structure'],
            'seed': seed,
            'shape': list(shape),
        })
        self.success(f'Cohort manifest written to {manifest}')
