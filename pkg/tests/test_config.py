import pytest

from lefmod._config import Config
from lefmod._errors import ValidationError

@pytest.fixture(autouse = True)
def clean_env(monkeypatch):

    monkeypatch.delenv('LEFMOD_SEED', raising = False)
    monkeypatch.delenv('LEFMOD_SAMPLES', raising = False)


def test_param_yaml(settings_config, settings_param):

    config = Config(settings_config)

    assert config._param == settings_param
    assert config.samples == 7
    assert config.sample_style == 'lattice'


def test_param_dict(settings_param):

    config = Config(settings_param)

    assert config._param == settings_param
    assert config.seed == 3


def test_defaults():

    config = Config()

    assert config.samples == 5
    assert config.seed == 0
    assert config.relative_samples == 3
    assert config.sample_style == 'generator_sums'


def test_kwargs_override(settings_param):

    config = Config(settings_param, samples = 2, seed = None)

    assert config.samples == 2
    assert config.seed == 3


def test_env_override(monkeypatch, settings_param):

    monkeypatch.setenv('LEFMOD_SEED', '11')
    config = Config(settings_param, seed = 5)

    assert config.seed == 11
    assert config['seed'] == 11


def test_not_an_integer():

    with pytest.raises(ValidationError) as err:

        Config({'samples': 'many'})

    assert err.value.location == 'settings.samples'


def test_no_samples():

    with pytest.raises(ValidationError):

        Config(samples = 0)


def test_missing_file(testtmp):

    with pytest.raises(ValidationError):

        Config(str(testtmp.join('missing.yaml')))


def test_unknown_key():

    config = Config()

    assert config.get('nothing', 1) == 1

    with pytest.raises(AttributeError):

        config.nothing
