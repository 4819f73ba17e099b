import json

import pytest

from modules.models import Quiver
from modules.quiver_core import make_quiver
from utils.exceptions import CycleError, QuiverFormatError
from utils.fixtures import QUIVER_FIXTURES, TORIC_FIXTURES, fixture_dimension_vector, fixture_names
from utils.quiver_io import dump_quiver, load_quiver, quiver_from_dict, quiver_to_dict


def test_dump_and_load(tmp_path, k3):
    path = tmp_path / 'k3.json'
    text = dump_quiver(k3, str(path))
    assert json.loads(text) == {'n': 2, 'arrows': [[0, 1, 3]]}
    assert load_quiver(str(path)) == k3


def test_quiver_to_dict_merges_parallel_arrows():
    Q = make_quiver(3, [(0, 2, 1), (0, 2, 1), (1, 2, 2)])
    assert quiver_to_dict(Q) == {'n': 3, 'arrows': [[0, 2, 2], [1, 2, 2]]}


@pytest.mark.parametrize("data", [
    [],
    {'n': 2},
    {'n': 0, 'arrows': []},
    {'n': True, 'arrows': []},
    {'n': 2, 'arrows': {}},
    {'n': 2, 'arrows': [[0, 1]]},
    {'n': 2, 'arrows': [[0, 1, 1.5]]},
    {'n': 2, 'arrows': [[0, 5, 1]]},
])
def test_schema_errors(data):
    with pytest.raises(QuiverFormatError):
        quiver_from_dict(data)


def test_matrix_form(tmp_path, k3):
    assert Quiver.from_matrix([[0, 3], [0, 0]]) == k3
    assert quiver_from_dict({'matrix': [[0, 3], [0, 0]]}) == k3
    assert quiver_from_dict({'n': 2, 'matrix': [[0, 3], [0, 0]]}) == k3

    path = tmp_path / 's3.json'
    path.write_text(json.dumps({'matrix': [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0]]}))
    assert load_quiver(str(path)) == make_quiver(4, [(i, 3, 1) for i in range(3)])


@pytest.mark.parametrize("data", [
    {'matrix': []},
    {'matrix': [[0, 1]]},
    {'matrix': [[0, -1], [0, 0]]},
    {'matrix': [[0, 'x'], [0, 0]]},
    {'n': 3, 'matrix': [[0, 1], [0, 0]]},
])
def test_matrix_schema_errors(data):
    with pytest.raises(QuiverFormatError):
        quiver_from_dict(data)


def test_matrix_cycle():
    with pytest.raises(CycleError):
        quiver_from_dict({'matrix': [[0, 1], [1, 0]]})


def test_cycles_keep_their_own_error():
    with pytest.raises(CycleError):
        quiver_from_dict({'n': 2, 'arrows': [[0, 1, 1], [1, 0, 1]]})


def test_missing_file(tmp_path):
    with pytest.raises(QuiverFormatError):
        load_quiver(str(tmp_path / 'missing.json'))


def test_fixture_sources():
    assert load_quiver('@k3') == make_quiver(2, [(0, 1, 3)])
    assert load_quiver('@p1xp1').num_arrows == 4
    with pytest.raises(QuiverFormatError):
        load_quiver('@unknown')


def test_fixture_dimension_vectors():
    assert fixture_dimension_vector('bl3p2') == (1, 1, 1, 1, 1)
    assert fixture_dimension_vector('s6') == (1, 1, 1, 1, 1, 1, 2)
    assert len(fixture_names()) == len(TORIC_FIXTURES) + len(QUIVER_FIXTURES)
    with pytest.raises(KeyError):
        fixture_dimension_vector('unknown')
