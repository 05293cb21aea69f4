""" Extract DHoGM features for every subject of a manifest """
from core.batch import run_batch
from core.management.base import PipelineCommand
from core.pipeline import features_worker, split_jobs
from hogm.features import write_feature_table
from volumes.manifest import read_manifest


def extract_cohort(records, config, preprocess, jobs):
    """ ({subject_id: SubjectFeatures}, failures) for manifest records """
    subject_jobs, volume_jobs = split_jobs(jobs, len(records))
    tasks = [(record.subject_id, (record, config, preprocess, volume_jobs)) for record in records]
    return run_batch(features_worker, tasks, jobs=subject_jobs)


class Command(PipelineCommand):
    help = 'Write the feature table (D_final, 27 cuboid and 3 x window slice values per subject).'

    def add_command_arguments(self, parser):
        parser.add_argument('--manifest', required=True, help='Manifest of standardized volumes')
        parser.add_argument('--preprocess', action='store_true',
                            help='Standardize raw volumes first instead of expecting preprocess output')

    def run(self, config, **options):
        records = read_manifest(options['manifest'])
        results, failures = extract_cohort(records, config, options['preprocess'], self.jobs)
        self.check_failures(results, failures, len(records))

        path = write_feature_table(results.values(), self.out_dir / 'features.csv', config)
        degenerate = sorted(s for s, features in results.items() if features.cuboids is None)
        self.write_run(config, {
            'n_subjects': len(records),
            'n_written': len(results),
            'n_failed': len(failures),
            'all_cuboids_degenerate': degenerate,
        })
        self.success(f'Features of {len(results)} subject(s) written to {path}')
