from pathlib import Path

from decouple import config


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config("DJANGO_SECRET_KEY", default="fallback-key")

DEBUG = config("DEBUG", default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    "django.contrib.auth",
    "django.contrib.contenttypes",
    "rest_framework",
    "app",
]

REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": ("rest_framework.renderers.JSONRenderer",),
    "UNAUTHENTICATED_USER": None,
}

# One-shot command runs, nothing is persisted.
DATABASES = {}

# Group computations
GAMMA_MAX_Q = config("GAMMA_MAX_Q", default=64, cast=int)
GAMMA_STEP_CAP_FACTOR = config("GAMMA_STEP_CAP_FACTOR", default=10, cast=int)
GAMMA_DEFAULT_MAX_LEN = config("GAMMA_DEFAULT_MAX_LEN", default=8, cast=int)
GAMMA_DEFAULT_RADIUS = config("GAMMA_DEFAULT_RADIUS", default=4, cast=int)
GAMMA_JOBS = config("GAMMA_JOBS", default=1, cast=int)

# Logging goes to stderr so stdout carries only command results.
GAMMA_LOG_LEVEL = config("GAMMA_LOG_LEVEL", default="WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "compact": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "compact",
        },
    },
    "loggers": {
        "app": {
            "handlers": ["console"],
            "level": GAMMA_LOG_LEVEL,
            "propagate": False,
        },
    },
}

# Internationalization
# https://docs.djangoproject.com/en/5.1/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

# Default primary key field type
# https://docs.djangoproject.com/en/5.1/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"
