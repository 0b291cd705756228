"""
Settings access for the spinors library.

The numeric modules are plain python and must keep working when Django settings
were never configured (scripts, notebooks), so every knob has a module default.
"""
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

# ?----end imports----

DEFAULTS = {
    "SPINOR_TOLERANCE": 1e-10,
    "SPINOR_SEED": 42,
    "SPINOR_SUITE_CASES": 1000,
    "SPINOR_REPORT_INDENT": 2,
}


def get_setting(name):
    """
    Return a SPINOR_* setting, falling back to DEFAULTS.

    Reading the attribute is what loads lazy settings from DJANGO_SETTINGS_MODULE;
    only a process with no settings at all gets the defaults.

    Usage:
        tol = get_setting("SPINOR_TOLERANCE")
    """
    try:
        return getattr(settings, name, DEFAULTS[name])
    except ImproperlyConfigured:
        return DEFAULTS[name]


def resolve_tolerance(tol=None):
    """Explicit tolerance wins, otherwise the configured one."""
    return get_setting("SPINOR_TOLERANCE") if tol is None else float(tol)
