"""
Django settings for the barter project.

The project has no web surface: Django provides settings, app discovery,
management commands and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv() # Load environment variables from .env file

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Not used for anything security sensitive; required by Django.
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'barter-local-only')

DEBUG = os.environ.get('DJANGO_DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'exchanges',
    'enumeration',
    'solvers',
    'invariance',
    'notrade',
    'lab',
    'cli', # Command-line front end and plot templates
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]


# Database
# Nothing is persisted; a local SQLite file keeps Django's checks quiet.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Barter configuration

# Maximum p + q enumerated without --force (2^20 is about a million exchanges)
BARTER_LIMIT = int(os.environ.get('BARTER_LIMIT', '20'))

# Default number of worker processes for enumeration and lab runs
BARTER_WORKERS = int(os.environ.get('BARTER_WORKERS', '1'))

# Seed used by the lab command when --seed is not given
BARTER_DEFAULT_SEED = int(os.environ.get('BARTER_DEFAULT_SEED', '0'))

BARTER_LOG_LEVEL = os.environ.get('BARTER_LOG_LEVEL', 'WARNING').upper()

BARTER_APPS = ['exchanges', 'enumeration', 'solvers', 'invariance', 'notrade', 'lab', 'cli']

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': BARTER_LOG_LEVEL,
            'propagate': False,
        }
        for app in BARTER_APPS
    },
}
