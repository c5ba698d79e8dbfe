"""Tests for settings and logging."""
import logging

from minorhost.core.config import settings
from minorhost.core.logging import RUN_FIELDS, RunContextFilter


def _record(**extra):
    record = logging.LogRecord("minorhost.test", logging.INFO, __file__, 1, "msg", None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_run_context_is_stamped():
    """Every record carries the active seed and budgets."""
    record = _record()
    assert RunContextFilter().filter(record)
    for name in RUN_FIELDS:
        assert getattr(record, name) == getattr(settings, name)


def test_call_site_extra_wins():
    """A budget passed in ``extra`` is not overwritten."""
    record = _record(search_budget=7)
    RunContextFilter().filter(record)
    assert record.search_budget == 7
    assert record.seed == settings.seed
