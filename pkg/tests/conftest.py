import pytest
from hypothesis import settings

from sepgraph.core import InvalidPresentation, Presentation

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, name, elapsed = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s)")


def make_presentation(r, s):
    try:
        return Presentation(tuple(r), tuple(s))
    except InvalidPresentation:
        return None


@pytest.fixture
def worked_relation():
    return Presentation((3, 2), (2, 4))
