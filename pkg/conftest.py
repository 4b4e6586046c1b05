import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'barter.test_settings')
django.setup()
