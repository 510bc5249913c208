import os
import json

import pytest
import yaml

from lefmod.cli import load_instance
from lefmod.exactlin import Mat
from lefmod.graded import make_algebra, regular_module

EX34 = 'y1,y3,y5,y7'
EX35 = 'y1,y3+y5,y2+y4+y6+y7'

@pytest.fixture
def testtmp(tmpdir_factory):

    return tmpdir_factory.mktemp('lefmod-tests')

@pytest.fixture
def settings_param():

    return {
        'samples': 7,
        'seed': 3,
        'sample_style': 'lattice',
    }


@pytest.fixture
def settings_config(testtmp, settings_param):

    path = os.path.join(testtmp, 'settings.yaml')

    with open(path, 'w') as fp:

        fp.write(yaml.dump(settings_param))

    return path


@pytest.fixture
def datadir():

    return os.path.join(os.path.dirname(__file__), 'data')


@pytest.fixture(scope = 'session')
def fano():

    return load_instance('fano')


@pytest.fixture(scope = 'session')
def fano_ex34():

    return load_instance('fano', subalgebra = EX34)


@pytest.fixture(scope = 'session')
def fano_ex35():

    return load_instance('fano', subalgebra = EX35)


@pytest.fixture(scope = 'session')
def u23():

    return load_instance('u23', subalgebra = 'y1')


@pytest.fixture
def dual_numbers():
    """
    ℚ[x]/(x³) with its degree pairing.
    """

    algebra = make_algebra({
        'dims': [1, 1, 1],
        'labels': ['1', 'x', 'x2'],
        'products': {'x*x': {'x2': 1}},
    })
    module, form = regular_module(algebra, [1])

    return algebra, module, form


@pytest.fixture
def instance_file(testtmp):

    spec = {
        'field': 'Q',
        'algebra': {
            'dims': [1, 2, 1],
            'labels': ['1', 'a', 'b', 't'],
            'products': {
                'a*a': {'t': '1'},
                'b*b': {'t': '-1'},
            },
        },
        'deg': [1],
        'module': 'regular',
        'form': 'deg',
        'cone': ['a', '2*a+b'],
        'samples': {'count': 3},
    }
    path = os.path.join(testtmp, 'instance.json')

    with open(path, 'w') as fp:

        json.dump(spec, fp)

    return path


@pytest.fixture
def vec():

    return lambda *values: Mat.vector(values)
