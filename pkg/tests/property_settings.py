"""
Hypothesis profiles shared by the property tests.

Numpy warms up lazily, so the first example of a run can be slow; deadlines
are disabled for every tier.
"""

from hypothesis import HealthCheck, settings

DETERMINISM_SETTINGS = settings(max_examples=50, deadline=None)
STANDARD_SETTINGS = settings(max_examples=100, deadline=None)
SLOW_SETTINGS = settings(
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
QUICK_SETTINGS = settings(max_examples=20, deadline=None)
