""" Subject-level batch execution with per-subject failure collection """
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass

from core.exceptions import DhogmError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubjectFailure:
    subject_id: str
    error: str
    message: str

    def to_dict(self):
        return {'subject_id': self.subject_id, 'error': self.error, 'message': self.message}


def _failure(subject_id, exc):
    return SubjectFailure(subject_id, type(exc).__name__, str(exc))


def run_batch(worker, items, jobs=1):
    """
    Run worker(item) for every (subject_id, item) pair.

    Returns (results, failures), both ordered by subject_id regardless of
    completion order. Pipeline errors and I/O errors of one subject never abort
    the batch.
    """
    items = sorted(items, key=lambda pair: pair[0])
    results, failures = {}, []

    if jobs <= 1 or len(items) <= 1:
        for subject_id, item in items:
            try:
                results[subject_id] = worker(item)
            except (DhogmError, OSError, ValueError) as exc:
                logger.warning('Subject %s failed: %s', subject_id, exc)
                failures.append(_failure(subject_id, exc))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = {executor.submit(worker, item): subject_id for subject_id, item in items}
            for future in as_completed(futures):
                subject_id = futures[future]
                try:
                    results[subject_id] = future.result()
                except (DhogmError, OSError, ValueError) as exc:
                    logger.warning('Subject %s failed: %s', subject_id, exc)
                    failures.append(_failure(subject_id, exc))

    ordered = {subject_id: results[subject_id] for subject_id, _ in items if subject_id in results}
    failures.sort(key=lambda failure: failure.subject_id)
    logger.info('Batch complete: %d successful, %d failed', len(ordered), len(failures))
    return ordered, failures
