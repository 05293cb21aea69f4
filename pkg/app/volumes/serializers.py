""" Serializers for cohort manifest rows """
from pathlib import Path

from rest_framework import serializers

from core.labels import Quality
from volumes.types import SubjectRecord


class SubjectRecordSerializer(serializers.Serializer):
    """ One manifest row: subject_id,volume_path,mask_path,label """
    subject_id = serializers.CharField(max_length=255)
    volume_path = serializers.CharField()
    mask_path = serializers.CharField(required=False, allow_blank=True, default='')
    label = serializers.ChoiceField(choices=[('1', 'Good quality'), ('2', 'Poor quality')],
                                    required=False, allow_blank=True, default='')

    def validate_subject_id(self, value):
        if ',' in value:
            raise serializers.ValidationError('subject_id cannot contain commas.')
        return value

    def create(self, validated_data):
        base_dir = Path(self.context.get('base_dir', '.'))

        def resolve(value):
            return base_dir / value if value else None

        label = validated_data.get('label')
        return SubjectRecord(
            subject_id=validated_data['subject_id'],
            volume_path=resolve(validated_data['volume_path']),
            mask_path=resolve(validated_data.get('mask_path')),
            label=Quality(int(label)) if label else None,
        )


class ManifestSerializer(serializers.Serializer):
    """ A whole cohort manifest: unique subject ids, at least one row """
    rows = SubjectRecordSerializer(many=True, allow_empty=False)

    def validate_rows(self, rows):
        seen = set()
        for row in rows:
            if row['subject_id'] in seen:
                raise serializers.ValidationError(f"Duplicate subject_id '{row['subject_id']}'.")
            seen.add(row['subject_id'])
        return rows

    def create(self, validated_data):
        child = SubjectRecordSerializer(context=self.context)
        return [child.create(row) for row in validated_data['rows']]
