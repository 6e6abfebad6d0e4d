"""One test per acceptance criterion; each prints a PASS/FAIL line (run with -s to see them)."""

from __future__ import annotations

import pytest

from ekrkit.claims import CLAIMS, run_claim


@pytest.mark.parametrize("number", [c[0] for c in CLAIMS], ids=[f"criterion_{c[0]:02d}" for c in CLAIMS])
def test_criterion(number):
    res = run_claim(number)
    print("\n" + res.line(timing=True))
    for d in res.detail[:25]:
        print(f"      {d}")
    assert res.passed, res.actual
    assert res.within_budget, f"{res.seconds:.1f}s over the {res.budget:.0f}s budget"
