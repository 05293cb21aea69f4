""" Decisions files: a JSON header line, then JSON lines, one subject per line """
import json
from pathlib import Path

from classifiers.decisions import PathDecision
from core.artifacts import artifact_header
from core.labels import PathLabel, Quality
from fusion.rules import QualityDecision
from fusion.serializers import QualityDecisionSerializer

HEADER_PREFIX = '# dhogm-decisions '


def write_decisions(decisions, path, config):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(HEADER_PREFIX + json.dumps(artifact_header(config), sort_keys=True) + '\n')
        for decision in sorted(decisions, key=lambda item: item.subject_id):
            handle.write(json.dumps(decision.to_dict(), sort_keys=True) + '\n')
    return path


def read_decisions_header(path):
    """ The artifact header of a decisions file, or None for a bare JSON-lines file """
    with open(path, encoding='utf-8') as handle:
        first = handle.readline()
    if not first.startswith(HEADER_PREFIX):
        return None
    return json.loads(first[len(HEADER_PREFIX):])


def _path_decision(data):
    if data['label'] is None:
        return PathDecision.unscorable()
    return PathDecision(PathLabel(int(data['label'])), data['p_c1'], data['p_c2'])


def read_decisions(path):
    decisions = []
    with open(path, encoding='utf-8') as handle:
        for line in handle:
            if not line.strip() or line.startswith('#'):
                continue
            serializer = QualityDecisionSerializer(data=json.loads(line))
            serializer.is_valid(raise_exception=True)
            data = serializer.validated_data
            decisions.append(QualityDecision(
                subject_id=data['subject_id'],
                c_2d=_path_decision(data['c_2d']),
                c_3d=_path_decision(data['c_3d']),
                c_final=Quality(int(data['c_final'])),
                confidence=data['confidence'],
                degraded_evidence=data['degraded_evidence'],
            ))
    return decisions
