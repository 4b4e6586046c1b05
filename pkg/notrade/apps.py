from django.apps import AppConfig


class NotradeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'notrade'
