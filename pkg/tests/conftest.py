import pytest

from cellred.audit import get_context
from cellred.rootdata import CartanType

TYPE_NAMES = ("A1", "A2", "A3", "A4", "B2", "G2")
DATA_TYPE_NAMES = ("A1", "A2", "A3", "B2", "G2")  # types with shipped tables


@pytest.fixture(scope="session")
def ctx():
    """Shared per-type computation contexts (the A4 build is the heavy one)."""
    def build(name: str):
        return get_context(CartanType.parse(name))
    return build
