"""
Django settings for the legendre project.

The project has no web surface and no database: Django provides the
settings layer, logging configuration, the management-command CLI and the
test runner for the ``conjugates`` app.
"""

from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Required by Django; nothing in the project signs data.
SECRET_KEY = "legendre-offline-numerics-no-signing"

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Local apps
    "conjugates",
]

MIDDLEWARE = []

# No database: every service is a pure function of its arguments.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Logging
# Diagnostics go to stderr and stay quiet unless --verbosity 2 is passed;
# stdout carries command output only.

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        "conjugates": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
    },
}


# Overrides for the numerical defaults in conjugates/conf.py, e.g.
# LEGENDRE = {"QUADRATURE_TOL": 1e-10}

LEGENDRE = {}

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"
