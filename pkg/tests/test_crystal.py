from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from app.core.errors import OrderError, ShapeError
from app.schemas.orders import TotalCellOrder
from app.schemas.shapes import Cell, Composition, Partition, SkewShape
from app.schemas.tableau import Tableau
from app.services.crystal import (
    add_letters, decompose_tensor, far_eastern_reading, lands_on, lr_coefficient_crystal, lr_crystal,
    middle_eastern_reading, read
)
from app.services.orders import enumerate_admissible_orders, order_from_comparator
from app.services.shapes import contains, is_horizontal_strip, partitions_of
from app.services.tableaux import enumerate_ssyt
from app.services.verification import triples
from tests.conftest import admissible_order_strategy, partition_strategy


def test_read_along_orders():
    t = Tableau(rows=((1, 2), (2,)))
    assert read(t, order_from_comparator(t.shape.cells(), "J")).letters == (2, 1, 2)
    assert read(t, order_from_comparator(t.shape.cells(), "F")).letters == (2, 1, 2)

    square = Tableau(rows=((1, 1), (2, 2)))
    reading = read(square, order_from_comparator(square.shape.cells(), "F"))
    assert reading.letters == (1, 2, 1, 2)
    assert reading.sources == (Cell(1, 2), Cell(2, 2), Cell(1, 1), Cell(2, 1))


def test_read_rejects_bad_orders():
    t = Tableau(rows=((1, 2),))
    with pytest.raises(OrderError):
        read(t, TotalCellOrder(sequence=(Cell(1, 1), Cell(1, 2))))
    with pytest.raises(OrderError):
        read(t, TotalCellOrder(sequence=(Cell(1, 2),)))


def test_named_readings():
    t = Tableau(rows=((1, 1, 2), (2, 3)))
    assert middle_eastern_reading(t) == [2, 1, 1, 3, 2]
    assert far_eastern_reading(t) == [2, 1, 3, 1, 2]
    assert list(read(t, order_from_comparator(t.shape.cells(), "J")).letters) == middle_eastern_reading(t)
    assert list(read(t, order_from_comparator(t.shape.cells(), "F")).letters) == far_eastern_reading(t)


def test_add_letters_example():
    trace = add_letters(Partition.of(2, 1), [3, 1, 2, 1, 2])
    assert [step.shape_after.parts for step in trace.steps] == [
        (2, 1, 1), (3, 1, 1), (3, 2, 1), (4, 2, 1), (4, 3, 1)
    ]
    assert trace.all_young
    assert trace.destinations == (Cell(3, 1), Cell(1, 3), Cell(2, 2), Cell(1, 4), Cell(2, 3))
    assert trace.final == Composition.of(4, 3, 1)


def test_add_letters_records_non_young_shapes():
    trace = add_letters(Partition.of(2, 1), [2, 2])
    assert trace.steps[1].shape_after == Composition.of(2, 3)
    assert not trace.all_young

    trace = add_letters(Partition.of(2, 1), [3, 3])
    assert [step.shape_after.parts for step in trace.steps] == [(2, 1, 1), (2, 1, 2)]
    assert not trace.all_young


def test_add_letters_pads_rows():
    trace = add_letters(Partition(), [1, 1])
    assert [step.shape_after.parts for step in trace.steps] == [(1,), (2,)]
    assert trace.all_young
    assert not add_letters(Partition(), [2]).all_young


def test_add_letters_rejects_zero():
    with pytest.raises(ShapeError):
        add_letters(Partition.of(1), [0])


def test_addition_trace_json():
    trace = add_letters(Partition.of(1), [2])
    assert trace.model_dump(mode="json", by_alias=True) == {
        "start": [1],
        "steps": [{"letter": 2, "destination": [2, 1], "shape": [1, 1]}],
        "all_young": True,
    }


def test_lands_on():
    assert lands_on(Partition.of(2, 1), [3, 1, 2, 1, 2], Partition.of(4, 3, 1))
    # (2,1) -> (2,2) -> (2,3): the second shape is not Young
    assert not lands_on(Partition.of(2, 1), [2, 2], Partition.of(3, 2))
    assert lands_on(Partition.of(1), [], Partition.of(1))


def test_lr_crystal_small():
    assert lr_crystal(Partition.of(1), Partition.of(1), Partition.of(2)) == [Tableau(rows=((1,),))]
    assert lr_crystal(Partition.of(1), Partition.of(1), Partition.of(1, 1)) == [Tableau(rows=((2,),))]
    assert len(lr_crystal(Partition.of(2, 1), Partition.of(2, 1), Partition.of(3, 2, 1))) == 2


def test_lr_crystal_rejects_incompatible_triples():
    with pytest.raises(ShapeError):
        lr_crystal(Partition.of(1), Partition.of(1), Partition.of(3))
    with pytest.raises(ShapeError):
        lr_crystal(Partition.of(2), Partition.of(1), Partition.of(1, 1, 1))


def test_lr_coefficient_crystal():
    assert lr_coefficient_crystal(Partition(), Partition.of(1), Partition.of(1)) == 1
    assert lr_coefficient_crystal(Partition.of(1), Partition.of(1), Partition.of(2)) == 1
    assert lr_coefficient_crystal(Partition.of(2, 1), Partition.of(2, 1), Partition.of(3, 2, 1)) == 2


def test_lr_crystal_is_order_independent_for_staircase():
    lam, mu, nu = Partition.of(2, 1), Partition.of(2, 1), Partition.of(3, 2, 1)
    reference = set(lr_crystal(lam, mu, nu))
    for order in enumerate_admissible_orders(mu.cells()):
        assert set(lr_crystal(lam, mu, nu, order)) == reference


@settings(max_examples=40, deadline=None)
@given(partition_strategy(max_n=4), st.integers(min_value=0, max_value=3), partition_strategy(max_n=7))
def test_pieri_rule(lam, k, nu):
    """A one-row mu adds a horizontal strip."""
    mu = Partition.of(k)
    if lam.size + k != nu.size or not contains(nu, lam):
        return
    expected = 1 if is_horizontal_strip(SkewShape(outer=nu, inner=lam)) else 0
    assert lr_coefficient_crystal(lam, mu, nu) == expected


@settings(max_examples=25, deadline=None)
@given(partition_strategy(max_n=3), partition_strategy(max_n=3))
def test_coefficient_symmetry(lam, mu):
    for nu in partitions_of(lam.size + mu.size):
        left = lr_coefficient_crystal(lam, mu, nu) if contains(nu, lam) else 0
        right = lr_coefficient_crystal(mu, lam, nu) if contains(nu, mu) else 0
        assert left == right


def test_decompose_tensor_small():
    assert decompose_tensor(Partition.of(1), Partition.of(1), 2) == Counter({Partition.of(2): 1, Partition.of(1, 1): 1})
    assert decompose_tensor(Partition.of(1), Partition.of(1), 3) == Counter({Partition.of(2): 1, Partition.of(1, 1): 1})
    assert decompose_tensor(Partition.of(1), Partition.of(1), 1) == Counter({Partition.of(2): 1})
    assert decompose_tensor(Partition.of(2, 1), Partition.of(2, 1), 3)[Partition.of(3, 2, 1)] == 2


def test_decompose_tensor_rejects_tall_shapes():
    with pytest.raises(ShapeError):
        decompose_tensor(Partition.of(1, 1, 1), Partition.of(1), 2)


@pytest.mark.parametrize("max_entry", [1, 2, 3])
def test_dimension_identity(max_entry):
    for a in range(4):
        for lam in partitions_of(a, max_rows=max_entry):
            for b in range(3):
                for mu in partitions_of(b, max_rows=max_entry):
                    components = decompose_tensor(lam, mu, max_entry)
                    left = len(enumerate_ssyt(lam, max_entry)) * len(enumerate_ssyt(mu, max_entry))
                    right = sum(m * len(enumerate_ssyt(nu, max_entry)) for nu, m in components.items())
                    assert left == right


def test_decompose_tensor_any_admissible_reading():
    lam, mu = Partition.of(2, 1), Partition.of(2, 2)
    reference = decompose_tensor(lam, mu, 3)
    for order in enumerate_admissible_orders(mu.cells()):
        assert decompose_tensor(lam, mu, 3, order) == reference


def test_young_final_shape_with_non_young_intermediate():
    trace = add_letters(Partition.of(2, 1), [2, 2, 1, 3, 3])
    assert trace.final == Composition.of(3, 3, 2)
    assert trace.final.is_partition
    assert not trace.all_young
    assert not lands_on(Partition.of(2, 1), [2, 2, 1, 3, 3], Partition.of(3, 3, 2))


def test_crystal_traces_fill_the_skew_shape():
    for lam, mu, nu in triples(6):
        order = order_from_comparator(mu.cells(), "F")
        for t in lr_crystal(lam, mu, nu, order):
            trace = add_letters(lam, read(t, order).letters)
            assert trace.all_young
            assert len(set(trace.destinations)) == len(trace.destinations)
            assert set(trace.destinations) == set(SkewShape(outer=nu, inner=lam).cells())


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_reading_is_a_rearrangement_of_the_entries(data):
    mu = data.draw(partition_strategy(max_n=6))
    order = data.draw(admissible_order_strategy(mu))
    for t in enumerate_ssyt(mu, 3):
        reading = read(t, order)
        assert sorted(reading.letters) == sorted(value for _, value in t.items())
        assert set(reading.sources) == set(mu.cells())
