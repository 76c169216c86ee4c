"""Semistandard tableaux: level sets, the position function p(T;i,j), and enumeration of B(mu)"""

from collections import Counter
from typing import List
import logging

from pydantic import ValidationError

from app.core.errors import TableauError, domain_error
from app.schemas.shapes import Cell, Composition, Partition
from app.schemas.tableau import Tableau

logger = logging.getLogger(__name__)


def level_set(t: Tableau, k: int) -> List[Cell]:
    """The cells holding entry k, rightmost first."""
    found = [cell for cell, value in t.items() if value == k]
    return sorted(found, key=lambda cell: -cell.col)


def p_index(t: Tableau, c: Cell) -> int:
    """1-based rank of c among the cells holding the same entry, counted from the right."""
    value = t.entry(c)
    return level_set(t, value).index(Cell(*c)) + 1


def content(t: Tableau) -> Composition:
    """The weight of t: part k counts the entries equal to k."""
    counts = Counter(value for _, value in t.items())
    top = max(counts, default=0)
    return Composition(parts=tuple(counts.get(k, 0) for k in range(1, top + 1)))


def enumerate_ssyt(shape: Partition, max_entry: int) -> List[Tableau]:
    """Every semistandard tableau of `shape` with entries in 1..max_entry.

    Cells are filled in row-major order with values tried in increasing order, so
    the output is lexicographic on the row-major entry word.
    """
    cells = shape.cells()
    heights = {col: sum(1 for part in shape.parts if part >= col) for col in range(1, shape.part(1) + 1)}
    filling: List[List[int]] = [[0] * part for part in shape.parts]
    results: List[Tableau] = []

    def place(position: int) -> None:
        if position == len(cells):
            results.append(Tableau(rows=tuple(tuple(row) for row in filling)))
            return
        i, j = cells[position]
        low = max(
            filling[i - 1][j - 2] if j > 1 else 1,
            filling[i - 2][j - 1] + 1 if i > 1 else 1,
        )
        # leave room for the strictly larger entries still to come below in this column
        high = max_entry - (heights[j] - i)
        for value in range(low, high + 1):
            filling[i - 1][j - 1] = value
            place(position + 1)
        filling[i - 1][j - 1] = 0

    place(0)
    logger.debug(f"{len(results)} tableaux of shape ({shape}) with entries <= {max_entry}")
    return results


def parse_tableau(text: str) -> Tableau:
    """Read rows top to bottom separated by '/', entries separated by spaces: "1 1 / 2"."""
    rows = []
    for piece in text.split("/") if text.strip() else []:
        try:
            rows.append(tuple(int(value) for value in piece.split()))
        except ValueError:
            raise TableauError(f"cannot read tableau row {piece.strip()!r}")
    try:
        return Tableau(rows=tuple(rows))
    except ValidationError as e:
        raise domain_error(e, TableauError) from e


def render_tableau(t: Tableau) -> str:
    return str(t)
