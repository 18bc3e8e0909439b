import pytest
from app.utils.words import GroupContext, parse_word


@pytest.fixture(scope="session")
def ctx1():
    """Γ1, the Klein bottle group."""
    return GroupContext.build(1)


@pytest.fixture(scope="session")
def ctx2():
    """Γ2 = B3."""
    return GroupContext.build(2)


@pytest.fixture(scope="session")
def ctx3():
    return GroupContext.build(3)


@pytest.fixture(scope="session", params=[1, 2, 3, 5], ids=lambda n: f"n{n}")
def ctx(request):
    """Each desk-scale n in turn."""
    return GroupContext.build(request.param)


@pytest.fixture
def w():
    """Parse a word written in the a, b grammar."""
    return parse_word
