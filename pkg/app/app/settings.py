"""
Django settings for the DHoGM quality-control project.

There is no database and no web surface: the project is a set of Django apps
driven through management commands (see core/management/commands).

For more information on this file, see
https://docs.djangoproject.com/en/4.0/topics/settings/
"""
import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only used by Django internals (signing); nothing in the pipeline depends on it
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'dhogm-qc-local-key')

DEBUG = os.getenv('DJANGO_DEBUG', '') == '1'

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'volumes',
    'hogm',
    'classifiers',
    'fusion',
    'synth',
    'evaluation',
]

# Results are files (NIfTI, CSV, JSON); nothing is stored in a database
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Logging
# https://docs.djangoproject.com/en/4.0/topics/logging/

LOG_LEVEL = os.getenv('DHOGM_LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'pipeline': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'pipeline',
        },
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in ('core', 'volumes', 'hogm', 'classifiers', 'fusion', 'synth', 'evaluation')
    },
}

# Pipeline defaults
# Every value can be overridden by a --config JSON file and by command flags.

DHOGM_PIPELINE = {
    'n_bins': 100,
    'slice_window': 60,
    'cuboid_shape': [96, 128, 128],
    'target_shape': [192, 256, 256],
    'percentiles': [1.0, 99.0],
    'path_mode': 'fused',
    'mlp': {
        'layer_sizes': [3, 10, 14, 1],
        'learning_rate': 0.05,
        'epochs': 2000,
        'init_scale': 0.5,
        'seed': 0,
    },
}

DHOGM_CONFIG_FILE = os.getenv('DHOGM_CONFIG')


def jobs_from_env(value):
    """ A positive DHOGM_JOBS wins; unset, zero or unparsable values fall back to the core count """
    try:
        jobs = int(value or 0)
    except ValueError:
        jobs = 0
    return jobs if jobs > 0 else os.cpu_count() or 1


DHOGM_JOBS = jobs_from_env(os.getenv('DHOGM_JOBS'))
