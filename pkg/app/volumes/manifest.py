""" Cohort manifest CSV: subject_id,volume_path,mask_path,label """
import os
from pathlib import Path

import pandas as pd
from rest_framework import serializers

from volumes.serializers import ManifestSerializer

MANIFEST_COLUMNS = ['subject_id', 'volume_path', 'mask_path', 'label']


def read_manifest(path, require_labels=False):
    """ Read and validate a manifest; relative paths resolve against its directory """
    path = Path(path)
    table = pd.read_csv(path, dtype=str, keep_default_na=False)
    missing = [column for column in ('subject_id', 'volume_path') if column not in table.columns]
    if require_labels and 'label' not in table.columns:
        missing.append('label')
    if missing:
        raise serializers.ValidationError({'columns': f'Manifest {path} lacks column(s): {", ".join(missing)}'})

    rows = table.to_dict(orient='records')
    serializer = ManifestSerializer(data={'rows': rows}, context={'base_dir': path.parent})
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def labels_of(records):
    """ subject_id -> Quality for every labeled record """
    return {record.subject_id: record.label for record in records if record.label is not None}


def write_manifest(records, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    def relative(value):
        return os.path.relpath(value, path.parent) if value else ''

    table = pd.DataFrame(
        [
            {
                'subject_id': record.subject_id,
                'volume_path': relative(record.volume_path),
                'mask_path': relative(record.mask_path),
                'label': int(record.label) if record.label is not None else '',
            }
            for record in sorted(records, key=lambda record: record.subject_id)
        ],
        columns=MANIFEST_COLUMNS,
    )
    table.to_csv(path, index=False)
    return path
