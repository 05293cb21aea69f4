"""Pytest wiring: configure Django (as manage.py does) before test collection."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
django.setup()
