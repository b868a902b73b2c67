from functools import lru_cache

import pytest

from hyparr.arrangement import compute_L2
from hyparr.files import family_arrangement

CORPUS_TAGS = [
    "pencil(3)", "pencil(4)", "pencil(5)", "pencil(6)",
    "braid3",
    "monomial(1)", "monomial(2)", "monomial(3)", "monomial(4)", "monomial(5)", "monomial(6)",
    "hessian",
]


@lru_cache(maxsize=None)
def incidence(tag: str):
    return compute_L2(family_arrangement(tag))


@pytest.fixture(scope="session")
def ceva():
    return incidence("monomial(3)")


@pytest.fixture(scope="session")
def braid3():
    return incidence("braid3")


@pytest.fixture(scope="session")
def hessian():
    return incidence("hessian")


@pytest.fixture(scope="session")
def pencil3():
    return incidence("pencil(3)")
