import sys
from os.path import dirname as d
from os.path import abspath
root_dir = d(d(abspath(__file__)))
sys.path.append(root_dir)

import pytest

from tuttekit import env


@pytest.fixture(autouse=True)
def default_limits(monkeypatch):
    monkeypatch.delenv(env.ENV_VARIABLE, raising=False)
    monkeypatch.setattr(env, 'max_ground', None)
