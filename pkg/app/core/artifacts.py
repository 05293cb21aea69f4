""" Helpers for writing reproducible output artifacts """
import json
from pathlib import Path

from app import __version__
from core.config import FORMAT_VERSION


def artifact_header(config):
    """ Fields every artifact embeds: format version, tool version, resolved config """
    return {
        'format_version': FORMAT_VERSION,
        'tool_version': __version__,
        'config': config.to_dict(),
    }


def dump_json(payload):
    return json.dumps(payload, sort_keys=True, indent=2)


def write_json(path, payload):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(payload) + '\n', encoding='utf-8')
    return path


def read_json(path):
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)
