""" Standardize every volume of a manifest """
from core.batch import run_batch
from core.management.base import PipelineCommand
from core.pipeline import preprocess_worker
from volumes.manifest import read_manifest, write_manifest


class Command(PipelineCommand):
    help = 'Mask, percentile-normalize and pad/crop every volume of a manifest to the target shape.'

    def add_command_arguments(self, parser):
        parser.add_argument('--manifest', required=True, help='CSV subject_id,volume_path,mask_path,label')

    def run(self, config, **options):
        records = read_manifest(options['manifest'])
        tasks = [(record.subject_id, (record, config, self.out_dir)) for record in records]
        results, failures = run_batch(preprocess_worker, tasks, jobs=self.jobs)
        self.check_failures(results, failures, len(records))

        manifest = write_manifest(results.values(), self.out_dir / 'manifest.csv')
        self.write_run(config, {'n_subjects': len(records), 'n_written': len(results), 'n_failed': len(failures)})
        self.success(f'Standardized {len(results)} of {len(records)} subject(s), manifest at {manifest}')
