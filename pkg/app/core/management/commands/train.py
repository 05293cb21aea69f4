""" Train both decision paths from a feature table and a labeled manifest """
from classifiers.storage import save_model_file
from core.exceptions import InsufficientData
from core.management.base import PipelineCommand
from evaluation.experiment import train_models
from evaluation.plots import plot_threshold_histogram
from hogm.features import read_feature_table
from volumes.manifest import labels_of, read_manifest


class Command(PipelineCommand):
    help = 'Fit the slice MLP and the D_final threshold; writes model.json and a threshold histogram.'

    def add_command_arguments(self, parser):
        parser.add_argument('--features', required=True, help='Feature table from the features command')
        parser.add_argument('--manifest', required=True, help='Manifest with a label column')
        parser.add_argument('--no-plot', action='store_true', help='Skip the threshold histogram SVG')

    def run(self, config, **options):
        features, _ = read_feature_table(options['features'])
        labels = labels_of(read_manifest(options['manifest'], require_labels=True))
        labeled = {s: labels[s] for s in features if s in labels}
        if not labeled:
            raise InsufficientData('No subject of the feature table has a label in the manifest')

        mlp, threshold = train_models(features, labeled, config)
        save_model_file(self.out_dir / 'model.json', mlp, threshold, config)
        if not options['no_plot']:
            scored = sorted(s for s in labeled if features[s].cuboids is not None)
            plot_threshold_histogram(
                [features[s].d_final for s in scored], [labeled[s] for s in scored],
                threshold.t_star, self.out_dir / 'threshold_histogram.svg',
            )

        summary = {
            'n_train': len(labeled),
            'youden_j': threshold.youden_j,
            't_star': threshold.t_star,
            'final_loss': mlp.final_loss,
            'n_params': mlp.n_params,
        }
        self.write_run(config, summary)
        self.stdout.write(f'Youden J: {threshold.youden_j:.4f}')
        self.stdout.write(f't*: {threshold.t_star:.6g}')
        self.stdout.write(f'Final loss: {mlp.final_loss:.6g}')
        self.success(f'Model with {mlp.n_params} MLP parameters trained on {len(labeled)} subject(s)')
