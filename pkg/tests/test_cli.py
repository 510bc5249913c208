import os
import json

import pytest

from lefmod.cli import (
    main,
    read_spec,
    load_instance,
    fixture_names,
    canonical_json,
    digest,
)
from lefmod._errors import InstanceError

EX34 = 'y1,y3,y5,y7'

def _report(testtmp, *argv):

    path = os.path.join(testtmp, 'report.json')
    code = main([*argv, '--json', path])

    with open(path) as fp:

        return code, json.load(fp)


def test_fixture_names():

    names = fixture_names()

    assert {'fano', 'u23', 'lorentz3', 'indefinite'} <= set(names)
    assert names == sorted(names)


def test_check_fano(capsys):

    assert main(['check', 'fano']) == 0
    assert 'result: PASS' in capsys.readouterr().out


def test_check_indefinite(capsys):

    assert main(['check', 'indefinite']) == 1
    assert 'result: FAIL' in capsys.readouterr().out


def test_check_instance_file(instance_file):

    assert main(['check', instance_file]) == 0


def test_report_keys(testtmp):

    code, data = _report(testtmp, 'check', 'u23', '--seed', '2')

    assert code == 0
    assert set(data) == {
        'command',
        'input_digest',
        'version',
        'seed',
        'results',
        'ok',
    }
    assert data['seed'] == 2
    assert data['input_digest'] == digest(read_spec('u23')[1])


def test_report_reproducible(testtmp):

    first = os.path.join(testtmp, 'first.json')
    second = os.path.join(testtmp, 'second.json')
    main(['decompose', 'fano', '--B', EX34, '--json', first])
    main(['decompose', 'fano', '--B', EX34, '--json', second])

    with open(first, 'rb') as fp1, open(second, 'rb') as fp2:

        assert fp1.read() == fp2.read()


def test_decompose_fano(testtmp):

    code, data = _report(testtmp, 'decompose', 'fano', '--B', EX34)

    assert code == 0
    assert data['results']['multiset'] == [
        [[1], 1, 1],
        [[1], 2, 1],
        [[1, 6, 6, 1], 0, 1],
    ]


def test_perverse_u23(testtmp):

    code, data = _report(testtmp, 'perverse', 'u23', '--B', 'y1')
    signature = data['results']['signature']

    assert code in (0, 1)
    assert signature['applicable']
    assert signature['gr_signature'] == -1
    assert signature['ok']


def test_perverse_fano(testtmp):

    code, data = _report(testtmp, 'perverse', 'fano', '--B', EX34)
    results = data['results']

    assert code == 0
    assert results['ell_independence']['equal']
    assert results['filtration_invariants'] == []
    assert results['splitting']['ok']
    assert results['descent']['ok']


def test_matroid_bases_file(datadir, capsys):

    assert main(['matroid', os.path.join(datadir, 'fano.bases')]) == 0
    assert 'result: PASS' in capsys.readouterr().out


def test_matroid_needs_matroid():

    assert main(['matroid', 'endC']) == 2


def test_apolar(testtmp):

    code, data = _report(testtmp, 'apolar', 'lorentz3')

    assert code == 0
    assert data['results']['hilbert_function'] == [1, 3, 3, 1]


def test_apolar_needs_form():

    assert main(['apolar', 'fano']) == 2


def test_unknown_source(capsys):

    assert main(['check', 'no-such-fixture']) == 2
    assert 'invalid input' in capsys.readouterr().err


def test_invalid_json(testtmp):

    path = os.path.join(testtmp, 'broken.json')

    with open(path, 'w') as fp:

        fp.write('{"field": "Q",\n')

    with pytest.raises(InstanceError) as err:

        read_spec(path)

    assert err.value.location.startswith('broken.json:')
    assert main(['check', path]) == 2


def test_wrong_field(testtmp):

    path = os.path.join(testtmp, 'field.json')

    with open(path, 'w') as fp:

        json.dump({'field': 'R', 'algebra': {'truncated': 2}}, fp)

    with pytest.raises(InstanceError):

        load_instance(path)


def test_truncated_instance(testtmp):

    path = os.path.join(testtmp, 'truncated.yaml')

    with open(path, 'w') as fp:

        fp.write('algebra:\n  truncated: 2\n')

    instance = load_instance(path)

    assert instance.module.dims == (1, 1, 1)
    assert main(['check', path]) == 0


def test_canonical_json():

    assert canonical_json({'b': 1, 'a': (1, 2)}) == (
        '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    )


def test_config_file(settings_config, testtmp):

    code, data = _report(testtmp, 'check', 'fano', '--config', settings_config)

    assert code == 0
    assert data['seed'] == 3
    assert len(data['results']['certificate']['points']) == 7
