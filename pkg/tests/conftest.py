"""
pytest Configuration
Defines test fixtures and global test configuration
"""
import os
import sys

import numpy as np
import pytest
from click.testing import CliRunner

# Add project root to Python path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from irregularity import create_app
from irregularity.models.graph import make_named_graph
from irregularity.views import cli


@pytest.fixture(scope='session')
def app():
    """Create test application instance"""
    return create_app('testing')


@pytest.fixture
def runner():
    """Create CLI test runner"""
    return CliRunner()


@pytest.fixture
def invoke(runner):
    """Invoke the CLI under the testing profile"""
    def _invoke(*args):
        return runner.invoke(cli, ['--profile', 'testing', *args])

    return _invoke


@pytest.fixture
def path3():
    """P_3 with centre 1 (graph6 'Bg')"""
    return make_named_graph('path', 3)


@pytest.fixture
def star5():
    """S_5 with centre 0"""
    return make_named_graph('star', 5)


@pytest.fixture
def k4():
    return make_named_graph('complete', 4)


@pytest.fixture
def prism3():
    """Triangular prism, the smallest cubic base"""
    return make_named_graph('prism', 3)


@pytest.fixture
def rng():
    """Seeded generator for randomized tests"""
    return np.random.default_rng(20190105)
