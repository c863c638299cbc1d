import pytest

from sqfree.field import QQ, Field

FIELDS = [QQ, Field(101)]


@pytest.fixture(params=FIELDS, ids=lambda f: f.name())
def fld(request):
    return request.param
