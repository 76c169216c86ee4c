"""Classical Littlewood-Richardson rule: ballot skew fillings.

Independent of the crystal and picture code; only the shapes layer is shared.
"""

from typing import Dict, Iterator, List, Optional, Sequence
import logging

from app.schemas.oracle import SkewFilling
from app.schemas.shapes import Cell, Partition, SkewShape
from app.services.shapes import contains, partitions_of

logger = logging.getLogger(__name__)


def is_ballot(word: Sequence[int]) -> bool:
    """Every prefix has at least as many k's as (k+1)'s."""
    counts: Dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


def reverse_reading_word(filling: SkewFilling) -> List[int]:
    """Rows top to bottom, each row right to left."""
    return [value for row in filling.rows for value in reversed(row)]


def skew_fillings(skew: SkewShape, weight: Partition, ballot_only: bool = False) -> Iterator[SkewFilling]:
    """Semistandard fillings of `skew` with exactly weight[k] entries equal to k.

    Cells are filled in reverse reading order, so the right neighbour and the cell
    above are always known, and the ballot condition can be checked on the prefix.
    """
    if skew.size != weight.size:
        return
    order = sorted(skew.cells(), key=lambda c: (c.row, -c.col))
    values: Dict[Cell, int] = {}
    remaining = {k: weight.part(k) for k in range(1, weight.length + 1)}
    used = {k: 0 for k in remaining}

    def fill(position: int) -> Iterator[SkewFilling]:
        if position == len(order):
            yield SkewFilling(shape=skew, rows=tuple(
                tuple(values[Cell(i, j)] for j in range(skew.inner.part(i) + 1, skew.outer.part(i) + 1))
                for i in range(1, skew.outer.length + 1)
            ))
            return
        cell = order[position]
        right = values.get(Cell(cell.row, cell.col + 1))
        above = values.get(Cell(cell.row - 1, cell.col))
        low = above + 1 if above is not None else 1
        high = right if right is not None else weight.length
        for value in range(low, high + 1):
            if remaining[value] == 0:
                continue
            if ballot_only and value > 1 and used[value] + 1 > used[value - 1]:
                continue
            values[cell] = value
            remaining[value] -= 1
            used[value] += 1
            yield from fill(position + 1)
            used[value] -= 1
            remaining[value] += 1
            del values[cell]

    yield from fill(0)


def lr_coefficient_ballot(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lambda,mu}: ballot fillings of nu/lambda with content mu; 0 for incompatible triples."""
    if lam.size + mu.size != nu.size or not contains(nu, lam):
        return 0
    skew = SkewShape(outer=nu, inner=lam)
    return sum(1 for _ in skew_fillings(skew, mu, ballot_only=True))


def lr_coefficients_ballot(lam: Partition, mu: Partition, max_rows: Optional[int] = None) -> Dict[Partition, int]:
    """Every nu with a nonzero coefficient, optionally limited to at most max_rows rows."""
    coefficients = {}
    for nu in partitions_of(lam.size + mu.size, max_rows=max_rows):
        if not contains(nu, lam):
            continue
        c = lr_coefficient_ballot(lam, mu, nu)
        if c:
            coefficients[nu] = c
    logger.debug(f"({lam}) x ({mu}): {len(coefficients)} components")
    return coefficients
