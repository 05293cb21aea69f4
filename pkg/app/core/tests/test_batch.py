""" Tests for subject-level batch execution """
from django.test import SimpleTestCase

from core.batch import run_batch
from core.exceptions import EmptyMask
from core.pipeline import split_jobs


def square_or_fail(value):
    """ Worker that fails on negative input """
    if value < 0:
        raise EmptyMask(f'value {value} is negative')
    return value * value


class RunBatchTests(SimpleTestCase):
    """ Test run_batch """

    def test_results_ordered_by_subject(self):
        """ Test results come back sorted by subject_id """
        results, failures = run_batch(square_or_fail, [('c', 3), ('a', 1), ('b', 2)])

        self.assertEqual(list(results.items()), [('a', 1), ('b', 4), ('c', 9)])
        self.assertEqual(failures, [])

    def test_failures_collected(self):
        """ Test a failing subject is reported and the others still run """
        results, failures = run_batch(square_or_fail, [('b', -1), ('a', 2), ('c', -5)])

        self.assertEqual(results, {'a': 4})
        self.assertEqual([failure.subject_id for failure in failures], ['b', 'c'])
        self.assertEqual(failures[0].to_dict()['error'], 'EmptyMask')

    def test_worker_processes(self):
        """ Test process workers give the same ordered output """
        items = [(f's{index:02d}', index - 3) for index in range(12)]
        serial = run_batch(square_or_fail, items, jobs=1)
        parallel = run_batch(square_or_fail, items[::-1], jobs=3)

        self.assertEqual(list(serial[0].items()), list(parallel[0].items()))
        self.assertEqual(serial[1], parallel[1])

    def test_split_jobs(self):
        """ Test workers are spread over subjects first, then threads per volume """
        self.assertEqual(split_jobs(8, 1), (1, 8))
        self.assertEqual(split_jobs(8, 20), (8, 1))
        self.assertEqual(split_jobs(8, 4), (4, 2))
        self.assertEqual(split_jobs(0, 3), (1, 1))
