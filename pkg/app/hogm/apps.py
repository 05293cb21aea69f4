from django.apps import AppConfig


class HogmConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hogm'
