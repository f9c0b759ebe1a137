from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from fusionkit.fixtures import build_pair, catalog

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CATALOG = catalog()
CATALOG_IDS = [key for key, _, _ in CATALOG]
GROUP_SPECS = ["Z1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "S3", "D4", "A4", "S4", "D6",
               "Z2xZ2xZ2", "semidirect(Z3,Z4,inv)", "A5"]


@pytest.fixture(params=CATALOG, ids=CATALOG_IDS)
def pair(request):
    _, group, gens = request.param
    return build_pair(group, gens)


# criterion number -> (title, passed, detail), filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        line = f"criterion {n:2d}  {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
