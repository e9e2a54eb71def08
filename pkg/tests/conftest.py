import os

import pytest

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def data_path():
    def _p(name):
        return os.path.join(DATA, name)
    return _p


def load_algebra(name):
    with open(os.path.join(DATA, name), encoding="utf-8") as fh:
        text = fh.read()
    from colorlie.fileformat import parse_algebra_file
    return parse_algebra_file(text)
