"""Admissible readings, additions, and Littlewood-Richardson crystals"""

from collections import Counter
from typing import Iterator, List, Optional, Sequence, Tuple
import logging

from app.core.errors import OrderError, ShapeError
from app.schemas.crystal import AdditionStep, AdditionTrace, Reading
from app.schemas.orders import TotalCellOrder
from app.schemas.shapes import Cell, Composition, Partition
from app.schemas.tableau import Tableau
from app.services.orders import order_from_comparator, require_admissible
from app.services.shapes import contains
from app.services.tableaux import enumerate_ssyt

logger = logging.getLogger(__name__)


def _check_order_on(order: TotalCellOrder, shape: Partition, what: str) -> None:
    if order.domain != frozenset(shape.cells()):
        raise OrderError(f"{what} is not an order on the cells of ({shape})")
    require_admissible(order, what)


def read(t: Tableau, order: TotalCellOrder) -> Reading:
    """R_A: the entries of t listed along an admissible order on its shape."""
    _check_order_on(order, t.shape, "reading order")
    return Reading(
        letters=tuple(t.entry(cell) for cell in order.sequence),
        sources=order.sequence,
    )


def middle_eastern_reading(t: Tableau) -> List[int]:
    """Each row right to left, top row first."""
    return [value for row in t.rows for value in reversed(row)]


def far_eastern_reading(t: Tableau) -> List[int]:
    """Each column top to bottom, rightmost column first."""
    width = len(t.rows[0]) if t.rows else 0
    return [row[col] for col in reversed(range(width)) for row in t.rows if col < len(row)]


def _additions(start: Sequence[int], letters: Sequence[int]) -> Iterator[Tuple[int, int, Tuple[int, ...], bool]]:
    """Walk lambda[i1], lambda[i1,i2], ...; yields (letter, new row length, shape, shape is Young)."""
    shape = list(start)
    for letter in letters:
        if letter < 1:
            raise ShapeError(f"letter {letter} is not a positive row index")
        # rows past the end are padded with zero parts; a zero above a box breaks Young-ness
        shape.extend([0] * (letter - len(shape)))
        shape[letter - 1] += 1
        young = all(shape[k] >= shape[k + 1] for k in range(len(shape) - 1))
        yield letter, shape[letter - 1], tuple(shape), young


def add_letters(start: Partition, letters: Sequence[int]) -> AdditionTrace:
    """lambda[i1, ..., iN] with every intermediate shape; invalid shapes are recorded, never raised."""
    steps = []
    all_young = True
    for letter, length, shape, young in _additions(start.parts, letters):
        steps.append(AdditionStep(letter=letter, destination=Cell(letter, length), shape_after=Composition(parts=shape)))
        all_young = all_young and young
    return AdditionTrace(start=start, steps=tuple(steps), all_young=all_young)


def lands_on(start: Partition, letters: Sequence[int], target: Partition) -> bool:
    """True iff every partial addition is a Young diagram and the last one is `target`."""
    shape: Tuple[int, ...] = start.parts
    for _, _, shape, young in _additions(start.parts, letters):
        if not young:
            return False
    return _strip(shape) == target.parts


def _strip(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def _check_triple(lam: Partition, mu: Partition, nu: Partition) -> None:
    if lam.size + mu.size != nu.size:
        raise ShapeError(f"|lambda| + |mu| = {lam.size + mu.size} but |nu| = {nu.size}")
    if not contains(nu, lam):
        raise ShapeError(f"lambda ({lam}) is not contained in nu ({nu})")


def lr_crystal(lam: Partition, mu: Partition, nu: Partition, order: Optional[TotalCellOrder] = None) -> List[Tableau]:
    """B(mu)^nu_lambda[A]: tableaux of shape mu whose A-reading, added to lambda, stays Young and ends at nu.

    Entries are bounded by the number of rows of nu; a larger letter would add a
    box outside nu and the addition could never end there.
    """
    _check_triple(lam, mu, nu)
    if order is None:
        order = order_from_comparator(mu.cells(), "J")
    _check_order_on(order, mu, "reading order")

    crystal = []
    for t in enumerate_ssyt(mu, nu.length):
        letters = [t.entry(cell) for cell in order.sequence]
        if lands_on(lam, letters, nu):
            crystal.append(t)
    logger.debug(f"B({mu})^({nu})_({lam}) has {len(crystal)} elements")
    return crystal


def lr_coefficient_crystal(lam: Partition, mu: Partition, nu: Partition) -> int:
    return len(lr_crystal(lam, mu, nu))


def decompose_tensor(
    lam: Partition,
    mu: Partition,
    max_entry: int,
    order: Optional[TotalCellOrder] = None
) -> Counter:
    """The highest weights of B(lambda) (x) B(mu) for rank max_entry - 1, with multiplicity.

    Reads each tableau of B(mu) along `order` (far-eastern by default) and keeps
    the additions to lambda that stay Young throughout.
    """
    if lam.length > max_entry or mu.length > max_entry:
        raise ShapeError(f"lambda and mu need at most {max_entry} rows")
    if order is None:
        order = order_from_comparator(mu.cells(), "F")
    _check_order_on(order, mu, "reading order")

    components: Counter = Counter()
    for t in enumerate_ssyt(mu, max_entry):
        letters = [t.entry(cell) for cell in order.sequence]
        trace = add_letters(lam, letters)
        if not trace.all_young:
            continue
        final = Partition(parts=trace.final.parts)
        if final.length <= max_entry:
            components[final] += 1
    return components
