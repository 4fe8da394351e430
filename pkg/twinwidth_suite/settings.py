"""
Django settings for the twinwidth_suite project.

The project hosts a single app, ``solver``, driven entirely through
management commands (``manage.py tww ...`` and ``manage.py make_instances``).
There is no URL routing: the suite serves no requests.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only signing features would use it; the solver never does.
SECRET_KEY = os.getenv("SECRET_KEY", "twinwidth-suite-local")

DEBUG = os.getenv("DEBUG", "False") == "True"

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'solver.apps.SolverConfig',
]

# Database
# Bench runs are recorded here when `tww bench --record` is used.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv("TWW_DB_PATH", str(BASE_DIR / 'bench.sqlite3')),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

# Logging
# Standard output carries only solution payloads, so every record goes to stderr.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'solver': {
            'handlers': ['stderr'],
            'level': os.getenv("TWW_LOG_LEVEL", "WARNING"),
            'propagate': False,
        },
    },
}

# Solver configuration
# Keys not listed here fall back to the defaults in solver/conf.py.

TWINWIDTH = {
    'EXACT_TIME_LIMIT': 1800,      # seconds, exact track
    'HEURISTIC_TIME_LIMIT': 300,   # seconds, heuristic track
    'MEMORY_CAP': 8 * 1024 ** 3,   # bytes
    'DEFAULT_SEED': int(os.getenv("TWW_SEED", "0")),
}
