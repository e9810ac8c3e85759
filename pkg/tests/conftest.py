import pytest

from chowseries.builtins import catalog
from chowseries.cohomology import build_presentation

CATALOG = catalog()
NAMES = [name for name, _ in CATALOG]
FANS = dict(CATALOG)

_presentations = {}


def presentation(name):
    if name not in _presentations:
        _presentations[name] = build_presentation(FANS[name])
    return _presentations[name]


@pytest.fixture(params=NAMES)
def builtin(request):
    """(name, fan, presentation) for every sample fan."""
    name = request.param
    return name, FANS[name], presentation(name)
