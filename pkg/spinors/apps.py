from django.apps import AppConfig


class SpinorsConfig(AppConfig):
    name = 'spinors'
    verbose_name = 'Relativistic spinor algebra'
