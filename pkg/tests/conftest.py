import os

import pytest

from config import get_data_dir
from utils.validation import parse_datum, parse_split_datum


def _read(name):
    with open(os.path.join(get_data_dir(), name), "r", encoding="utf-8") as f:
        return f.read()


@pytest.fixture(scope="session")
def datum_text():
    return _read


@pytest.fixture(scope="session")
def sl2r():
    return parse_datum(_read("sl2R.json"))


@pytest.fixture(scope="session")
def su2():
    return parse_datum(_read("su2.json"))


@pytest.fixture(scope="session")
def su3():
    return parse_datum(_read("su3.json"))


@pytest.fixture(scope="session")
def sp4r():
    return parse_datum(_read("sp4R.json"))


@pytest.fixture(scope="session")
def fixtures(sl2r, su2, su3, sp4r):
    return {"sl2R": sl2r, "su2": su2, "su3": su3, "sp4R": sp4r}


@pytest.fixture(scope="session")
def sl2r_split():
    return parse_split_datum(_read("sl2R_split.json"))
