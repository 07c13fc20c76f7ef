"""Acceptance suite: every criterion at its stated bound, one line each."""

import pytest

from safecycle.selftest import CRITERIA


@pytest.mark.parametrize("number,name,fn", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, name, fn):
    ok, detail = fn()
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} ({detail})")
    assert ok, f"criterion {number} ({name}) failed: {detail}"
