""" Report artifacts """
import logging

from core.artifacts import artifact_header, write_json

logger = logging.getLogger(__name__)


def build_report(config, kind, body):
    """ Wrap a report body with the artifact header and its kind ('evaluate', 'experiment', 'cross_validation', ...) """
    return {**artifact_header(config), 'kind': kind, **body}


def write_report(path, config, kind, body):
    path = write_json(path, build_report(config, kind, body))
    logger.info('Wrote %s report to %s', kind, path)
    return path
