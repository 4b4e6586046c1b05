from django.apps import AppConfig


class InvarianceConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'invariance'
