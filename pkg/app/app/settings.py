"""
Django settings for the specsim project.

Computations never touch the database; it only stores run records.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'SPECSIM_SECRET_KEY',
    'specsim-local-dev-key-n7ma3uz9rr%o*gu3)9ynh*exiys',
)

DEBUG = bool(int(os.environ.get('SPECSIM_DEBUG', 0)))

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'rest_framework',
    'core',
    'spectrum',
    'source',
    'channel',
    'products',
    'oracle',
]

MIDDLEWARE = []


# Database
# https://docs.djangoproject.com/en/4.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.environ.get(
            'SPECSIM_DB_PATH',
            os.path.join(BASE_DIR, 'db.sqlite3'),
        ),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Django REST framework is only used for (de)serialization

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'COERCE_DECIMAL_TO_STRING': False,
}


# Run defaults, each overridable through SPECSIM_<NAME>

SPECSIM = {
    'VERSION': '0.1.0',
    'SEED': int(os.environ.get('SPECSIM_SEED', 0)),
    'GRID_SIZE': int(os.environ.get('SPECSIM_GRID_SIZE', 1000000)),
    'MC_SAMPLES': int(os.environ.get('SPECSIM_MC_SAMPLES', 1000000)),
    'MAX_ENUM_MAPS': int(os.environ.get('SPECSIM_MAX_ENUM_MAPS', 100000)),
    'RECORD_RUNS': bool(int(os.environ.get('SPECSIM_RECORD_RUNS', 1))),
}


# Logging

LOG_LEVEL = os.environ.get('SPECSIM_LOG_LEVEL', 'WARNING').upper()

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
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app in ('core', 'spectrum', 'source', 'channel', 'products',
                    'oracle')
    },
}
