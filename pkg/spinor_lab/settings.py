
from pathlib import Path
from decouple import config
from .logging import LOGGING

# * ----------------------------------------------------------------------------------------------------------
# * variable setup
# * ----------------------------------------------------------------------------------------------------------
# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SPINOR_DEBUG = config('SPINOR_DEBUG', default=False, cast=bool)

DEBUG = SPINOR_DEBUG

# no web surface, the key only keeps django's own checks quiet
SECRET_KEY = config('DJANGO_SECRET_KEY', default='spinor-lab-offline-key', cast=str)

ALLOWED_HOSTS = []


# * ----------------------------------------------------------------------------------------------------------
# * app definitions
# * ----------------------------------------------------------------------------------------------------------
INSTALLED_APPS = [
    #local apps
    'spinors',
]

MIDDLEWARE = []


# * ----------------------------------------------------------------------------------------------------------
# * Database
# * ----------------------------------------------------------------------------------------------------------
# nothing is persisted, grids and reports are plain files
DATABASES = {}


# * ----------------------------------------------------------------------------------------------------------
# * Numerics
# * ----------------------------------------------------------------------------------------------------------
# absolute tolerance for identity residuals (c = 1 natural units everywhere)
SPINOR_TOLERANCE = config('SPINOR_TOLERANCE', default=1e-10, cast=float)

# property suites are reproducible: same seed, same report
SPINOR_SEED = config('SPINOR_SEED', default=42, cast=int)
SPINOR_SUITE_CASES = config('SPINOR_SUITE_CASES', default=1000, cast=int)


# * ----------------------------------------------------------------------------------------------------------
# * Reports
# * ----------------------------------------------------------------------------------------------------------
SPINOR_REPORT_INDENT = config('SPINOR_REPORT_INDENT', default=2, cast=int)


# * ----------------------------------------------------------------------------------------------------------
# * Internationalization
# * ----------------------------------------------------------------------------------------------------------
LANGUAGE_CODE = 'en'
USE_I18N = False
USE_TZ = True
TIME_ZONE = 'UTC'
