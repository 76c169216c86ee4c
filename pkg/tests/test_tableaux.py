from itertools import product

import pytest
from hypothesis import given, settings

from app.core.errors import TableauError
from app.schemas.shapes import Cell, Composition, Partition
from app.schemas.tableau import Tableau
from app.services.tableaux import content, enumerate_ssyt, level_set, p_index, parse_tableau, render_tableau
from app.services.shapes import partitions_of
from tests.conftest import partition_strategy


def test_tableau_init():
    t = Tableau(rows=((1, 1), (2,)))
    assert t.shape == Partition.of(2, 1)
    assert t.entry(Cell(2, 1)) == 2
    assert t.entries() == {Cell(1, 1): 1, Cell(1, 2): 1, Cell(2, 1): 2}


@pytest.mark.parametrize("rows", [
    ((2, 1),),          # row decreases
    ((1, 2), (1,)),     # column does not increase
    ((1,), (2, 3)),     # not a partition shape
    ((0,),),            # nonpositive entry
])
def test_tableau_rejects_invalid(rows):
    with pytest.raises(ValueError):
        Tableau(rows=rows)


def test_entry_outside_shape():
    with pytest.raises(TableauError):
        Tableau(rows=((1, 1),)).entry(Cell(2, 1))


def test_from_entries_requires_exact_domain():
    with pytest.raises(TableauError):
        Tableau.from_entries(Partition.of(2), {Cell(1, 1): 1})


def test_level_set():
    t = Tableau(rows=((1, 1, 2),))
    assert level_set(t, 1) == [Cell(1, 2), Cell(1, 1)]
    assert level_set(t, 3) == []
    assert level_set(Tableau(rows=((1, 1), (2,))), 2) == [Cell(2, 1)]


def test_p_index():
    t = Tableau(rows=((1, 1, 2),))
    assert p_index(t, Cell(1, 2)) == 1
    assert p_index(t, Cell(1, 1)) == 2
    assert p_index(t, Cell(1, 3)) == 1
    with pytest.raises(TableauError):
        p_index(t, Cell(2, 1))


def test_content():
    assert content(Tableau(rows=((1, 1, 3), (3,)))) == Composition.of(2, 0, 2)
    assert content(Tableau()) == Composition()


def test_enumerate_ssyt_counts():
    assert len(enumerate_ssyt(Partition.of(1), 2)) == 2
    assert [t.rows for t in enumerate_ssyt(Partition.of(2), 2)] == [((1, 1),), ((1, 2),), ((2, 2),)]
    assert len(enumerate_ssyt(Partition.of(2, 1), 3)) == 8
    assert len(enumerate_ssyt(Partition(), 3)) == 1
    assert enumerate_ssyt(Partition.of(1, 1, 1), 2) == []


@settings(max_examples=30, deadline=None)
@given(partition_strategy(max_n=5))
def test_enumerated_tableaux_are_distinct(lam):
    found = enumerate_ssyt(lam, 3)
    assert len(set(found)) == len(found)
    assert all(t.shape == lam for t in found)


def test_parse_and_render():
    t = parse_tableau("1 1 / 2")
    assert t.rows == ((1, 1), (2,))
    assert render_tableau(t) == "1 1 / 2"
    assert parse_tableau("") == Tableau()
    with pytest.raises(TableauError):
        parse_tableau("1 x")
    with pytest.raises(TableauError):
        parse_tableau("2 1")


def test_tableau_json():
    assert Tableau(rows=((1, 1), (2,))).model_dump(mode="json") == [[1, 1], [2]]


def _brute_force_ssyt(shape, max_entry):
    found = []
    cells = shape.cells()
    for values in product(range(1, max_entry + 1), repeat=len(cells)):
        try:
            found.append(Tableau.from_entries(shape, dict(zip(cells, values))))
        except ValueError:
            continue
    return found


@pytest.mark.parametrize("max_entry", [1, 2, 3])
def test_enumerate_ssyt_matches_brute_force(max_entry):
    for n in range(5):
        for lam in partitions_of(n):
            assert enumerate_ssyt(lam, max_entry) == _brute_force_ssyt(lam, max_entry)


@settings(max_examples=40, deadline=None)
@given(partition_strategy(max_n=6))
def test_level_sets(lam):
    for t in enumerate_ssyt(lam, 3):
        sets = [level_set(t, k) for k in range(1, 4)]
        assert sum(len(cells) for cells in sets) == lam.size
        for cells in sets:
            assert len({cell.col for cell in cells}) == len(cells)


@settings(max_examples=40, deadline=None)
@given(partition_strategy(max_n=6))
def test_entry_and_p_index_locate_the_cell(lam):
    for t in enumerate_ssyt(lam, 3):
        keys = [(value, p_index(t, cell)) for cell, value in t.items()]
        assert len(set(keys)) == len(keys)
