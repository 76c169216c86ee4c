"""Partitions, cells and skew shapes: the coordinate substrate"""

from typing import Iterator, List, Optional, Union
import logging

from pydantic import ValidationError

from app.core.errors import ShapeError, domain_error
from app.schemas.shapes import Cell, Composition, Partition, SkewShape

logger = logging.getLogger(__name__)

Shape = Union[Partition, SkewShape]


def parse_partition(text: str) -> Partition:
    """Read "3,2,1"; the empty string and "0" are the empty partition."""
    try:
        return Partition.model_validate(text)
    except ValidationError as e:
        raise domain_error(e, ShapeError) from e


def render_partition(p: Partition) -> str:
    return str(p)


def parse_composition(text: str) -> Composition:
    try:
        return Composition.model_validate(text)
    except ValidationError as e:
        raise domain_error(e, ShapeError) from e


def render_composition(c: Composition) -> str:
    return str(c)


def parse_skew(text: str) -> SkewShape:
    """Read "outer/inner"; without a slash the inner shape is empty."""
    try:
        return SkewShape.model_validate(text)
    except ValidationError as e:
        raise domain_error(e, ShapeError) from e


def render_skew(s: SkewShape) -> str:
    return str(s)


def as_skew(shape: Shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(outer=shape)


def contains(p: Partition, q: Partition) -> bool:
    """True iff the diagram of q sits inside the diagram of p."""
    return all(q.part(k) <= p.part(k) for k in range(1, q.length + 1))


def size(p: Union[Partition, Composition, SkewShape]) -> int:
    return p.size


def cells(shape: Shape) -> List[Cell]:
    """Cells in row-major order (row ascending, then column ascending)."""
    return as_skew(shape).cells()


def is_young(c: Composition) -> bool:
    return c.is_partition


def partitions_of(n: int, max_rows: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n < 0:
        return

    def build(remaining: int, bound: int, rows_left: Optional[int]) -> Iterator[tuple]:
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in build(remaining - first, first, None if rows_left is None else rows_left - 1):
                yield (first,) + rest

    top = n if max_part is None else max_part
    for parts in build(n, top, max_rows):
        yield Partition(parts=parts)


def is_horizontal_strip(s: SkewShape) -> bool:
    """At most one cell in each column."""
    columns = [cell.col for cell in s.cells()]
    return len(columns) == len(set(columns))


def convexity_violation(s: SkewShape) -> Optional[tuple]:
    """First (a,b), (c,d) with a<c, b<d whose corner (a,d) is missing; None if the shape is convex."""
    shape_cells = s.cells()
    for first in shape_cells:
        for second in shape_cells:
            if first.row < second.row and first.col < second.col:
                if Cell(first.row, second.col) not in s:
                    return first, second
    return None


def skew_shape(outer: Partition, inner: Partition) -> SkewShape:
    """outer/inner, or ShapeError when inner does not fit inside outer."""
    try:
        return SkewShape(outer=outer, inner=inner)
    except ValidationError as e:
        raise domain_error(e, ShapeError) from e
