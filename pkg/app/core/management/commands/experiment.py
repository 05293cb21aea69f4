""" Train/test experiment or stratified cross-validation from a feature table """
from django.core.management.base import CommandError

from core.management.base import USAGE_ERROR, PipelineCommand
from evaluation.experiment import cross_validate, run_experiment
from evaluation.report import write_report
from hogm.features import read_feature_table
from volumes.manifest import labels_of, read_manifest

SCOPES = ('all', 'train')


def _subset(features, labels):
    return {s: features[s] for s in sorted(features) if s in labels}


class Command(PipelineCommand):
    help = (
        'Train on --train-manifest and test on --test-manifest, or run --folds K stratified '
        'cross-validation over every labeled subject (--scope all) or the training subjects only (--scope train).'
    )
    with_path = True

    def add_command_arguments(self, parser):
        parser.add_argument('--features', required=True, help='Feature table covering every subject')
        parser.add_argument('--train-manifest', help='Labeled training subjects')
        parser.add_argument('--test-manifest', help='Labeled test subjects')
        parser.add_argument('--folds', type=int, default=None, help='Run K-fold cross-validation instead')
        parser.add_argument('--scope', choices=SCOPES, default='all')

    def _labels(self, option):
        return labels_of(read_manifest(option, require_labels=True)) if option else {}

    def run(self, config, **options):
        features, _ = read_feature_table(options['features'])
        train_labels = self._labels(options['train_manifest'])
        test_labels = self._labels(options['test_manifest'])

        if options['folds'] is not None:
            labels = train_labels if options['scope'] == 'train' else {**train_labels, **test_labels}
            if not labels:
                raise CommandError('Cross-validation needs at least one labeled manifest', returncode=USAGE_ERROR)
            seed = options['seed'] if options['seed'] is not None else 0
            body = cross_validate(_subset(features, labels), labels, config, k=options['folds'], seed=seed)
            body['scope'] = options['scope']
            kind, metrics = 'cross_validation', body['mean_metrics']
        else:
            if not (train_labels and test_labels):
                raise CommandError('Pass --train-manifest and --test-manifest, or --folds K', returncode=USAGE_ERROR)
            body = run_experiment(
                _subset(features, train_labels), train_labels,
                _subset(features, test_labels), test_labels, config,
            )
            kind, metrics = 'experiment', body['test']['metrics']

        path = write_report(self.out_dir / 'report.json', config, kind, body)
        self.write_run(config, {'kind': kind, 'metrics': metrics})
        self.stdout.write(
            f"accuracy {metrics['accuracy']:.4f}  balanced {metrics['balanced_accuracy']:.4f}  "
            f"recall {metrics['recall']:.4f}  specificity {metrics['specificity']:.4f}"
        )
        self.success(f'{kind} report written to {path}')
