"""Solver settings, read from ``settings.TWINWIDTH`` over app defaults."""
from django.conf import settings

DEFAULTS = {
    'EXACT_TIME_LIMIT': 1800,
    'HEURISTIC_TIME_LIMIT': 300,
    'TIME_SAFETY_MARGIN': 0.05,
    'LB_BUDGET_FRACTION': 0.1,
    'LB_SIZE_CAP': 20,
    'LB_MAX_SAMPLES': 16,
    'UB_BUDGET_FRACTION': 0.1,
    'HILL_CLIMB_BATCH_SIZE': 32,
    'COMPONENT_HILL_CLIMB_BATCHES': 8,
    'MEMORY_CAP': 8 * 1024 ** 3,
    'STATE_BYTES_PER_VERTEX': 256,
    'UB_MAX_BATCHES': 50,
    'ORACLE_CAP': 8,
    'CHECK_INVARIANTS': False,
    'DEFAULT_SEED': 0,
}


def get(name):
    """Return the configured value for ``name``; unknown names raise KeyError."""
    overrides = getattr(settings, 'TWINWIDTH', {})
    if name in overrides:
        return overrides[name]
    return DEFAULTS[name]
