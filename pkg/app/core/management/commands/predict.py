""" Decide GoodQuality / PoorQuality for every subject """
from django.core.management.base import CommandError

from classifiers.storage import check_feature_config, load_model_file
from core.labels import PathMode, Quality
from core.management.base import USAGE_ERROR, PipelineCommand
from core.management.commands.features import extract_cohort
from fusion.predict import predict_subjects
from fusion.storage import write_decisions
from hogm.features import read_feature_table
from volumes.manifest import read_manifest


class Command(PipelineCommand):
    help = 'Apply a trained model to a feature table (or a manifest) and write decisions.jsonl.'
    with_path = True

    def add_command_arguments(self, parser):
        parser.add_argument('--model', required=True, help='model.json from the train command')
        source = parser.add_mutually_exclusive_group()
        source.add_argument('--features', help='Feature table from the features command')
        source.add_argument('--manifest', help='Manifest; features are extracted on the fly')
        parser.add_argument('--preprocess', action='store_true', help='With --manifest: standardize raw volumes first')

    def load_features(self, config, options):
        if options['features']:
            features, feature_config = read_feature_table(options['features'])
            return features, feature_config, []
        if options['manifest']:
            records = read_manifest(options['manifest'])
            features, failures = extract_cohort(records, config, options['preprocess'], self.jobs)
            return features, config.feature_config, failures
        raise CommandError('Pass --features or --manifest', returncode=USAGE_ERROR)

    def run(self, config, **options):
        model_file = load_model_file(options['model'])
        features, feature_config, extraction_failures = self.load_features(config, options)
        check_feature_config(model_file, feature_config)

        path_mode = PathMode(config.path_mode)
        decisions, failures = predict_subjects(model_file.mlp, model_file.threshold, features, path_mode)
        failures = sorted([*extraction_failures, *failures], key=lambda failure: failure.subject_id)
        self.check_failures(decisions, failures, len(features) + len(extraction_failures))

        write_decisions(decisions, self.out_dir / 'decisions.jsonl', config)
        poor = [decision.subject_id for decision in decisions if decision.c_final == Quality.POOR]
        degraded = [decision.subject_id for decision in decisions if decision.degraded_evidence]
        self.write_run(config, {
            'path_mode': path_mode.value,
            'n_decided': len(decisions),
            'n_failed': len(failures),
            'poor_subjects': poor,
            'degraded_evidence': degraded,
        })
        self.success(f'{len(decisions)} decision(s) ({len(poor)} poor quality) written in {path_mode.label} mode')

