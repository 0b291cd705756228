"""Configure Django before pytest collects the spinors test modules."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'spinor_lab.settings')
django.setup()
