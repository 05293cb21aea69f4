""" Score a decisions file against manifest labels """
from core.management.base import PipelineCommand
from evaluation.experiment import ablation_table, evaluate_decisions
from evaluation.report import write_report
from fusion.storage import read_decisions
from volumes.manifest import labels_of, read_manifest


class Command(PipelineCommand):
    help = 'Confusion matrix, metrics and the per-path ablation of a decisions file; writes report.json.'

    def add_command_arguments(self, parser):
        parser.add_argument('--decisions', required=True, help='decisions.jsonl from the predict command')
        parser.add_argument('--manifest', required=True, help='Manifest with a label column')

    def run(self, config, **options):
        decisions = read_decisions(options['decisions'])
        labels = labels_of(read_manifest(options['manifest'], require_labels=True))
        body = evaluate_decisions(decisions, labels)
        body['ablation'] = ablation_table(decisions, labels)
        path = write_report(self.out_dir / 'report.json', config, 'evaluate', body)
        self.write_run(config, {'n_subjects': body['n_subjects'], 'metrics': body['metrics']})

        metrics = body['metrics']
        self.stdout.write(
            f"accuracy {metrics['accuracy']:.4f}  balanced {metrics['balanced_accuracy']:.4f}  "
            f"precision {metrics['precision']:.4f}  recall {metrics['recall']:.4f}  f1 {metrics['f1']:.4f}"
        )
        self.success(f'Report on {body["n_subjects"]} subject(s) written to {path}')
