"""Runs every numbered acceptance criterion at full scale and prints a
pass/fail line for each."""

import pytest

from ncmotzkin import acceptance


@pytest.mark.parametrize('num,name',
                         [(n, name) for n, name, _fn in acceptance.CRITERIA])
def test_criterion(num, name):
    ok, detail, dt = acceptance.run_criterion(num, 'full')
    status = 'PASS' if ok else 'FAIL'
    print(f'[{status}] criterion {num} ({name}): {detail} [{dt:.1f}s]')
    assert ok, f'criterion {num} ({name}): {detail}'
