"""Cell orders: the product order, the J and F reading orders, and admissible total orders"""

from typing import Callable, Dict, Iterable, List, Optional, Set, Tuple
import logging
import os

from pydantic import ValidationError

from app.core.config import settings
from app.core.errors import BudgetExceeded, OrderError, ShapeError, domain_error
from app.schemas.orders import OrderKind, TotalCellOrder
from app.schemas.shapes import Cell

logger = logging.getLogger(__name__)

Pair = Tuple[Cell, Cell]


def leq_P(a: Cell, b: Cell) -> bool:
    return a.row <= b.row and a.col <= b.col


def leq_J(a: Cell, b: Cell) -> bool:
    return a.row < b.row or (a.row == b.row and a.col >= b.col)


def leq_F(a: Cell, b: Cell) -> bool:
    # reflexive closure of "larger column first, then top to bottom"
    return a.col > b.col or (a.col == b.col and a.row <= b.row)


_SORT_KEYS: Dict[str, Callable[[Cell], tuple]] = {
    "J": lambda c: (c.row, -c.col),
    "F": lambda c: (-c.col, c.row),
}


def order_from_comparator(domain: Iterable[Cell], kind: OrderKind) -> TotalCellOrder:
    """Sort a cell set by the J (row by row, right to left) or F (column by column, top to bottom) order."""
    if kind not in _SORT_KEYS:
        raise OrderError(f"unknown order kind {kind!r}; expected J or F")
    return TotalCellOrder(sequence=tuple(sorted(set(domain), key=_SORT_KEYS[kind])))


def _forced(a: Cell, b: Cell) -> bool:
    """a must precede b in every admissible order."""
    return a != b and a.row <= b.row and a.col >= b.col


def precedence_pairs(domain: Iterable[Cell]) -> List[Pair]:
    """The forced relation (a,b) -> (c,d) for a <= c and b >= d, in row-major order."""
    ordered = sorted(set(domain))
    return [(a, b) for a in ordered for b in ordered if _forced(a, b)]


def first_violation(order: TotalCellOrder) -> Optional[Pair]:
    """The first forced pair (in row-major order) that the order lists the wrong way round."""
    rank = order.ranks()
    for a, b in precedence_pairs(rank):
        if rank[a] > rank[b]:
            return a, b
    return None


def is_admissible(order: TotalCellOrder) -> bool:
    return first_violation(order) is None


def require_admissible(order: TotalCellOrder, what: str = "order") -> TotalCellOrder:
    violation = first_violation(order)
    if violation is not None:
        a, b = violation
        raise OrderError(f"{what} is not admissible: {a} must come before {b}", pair=violation)
    return order


def enumerate_admissible_orders(domain: Iterable[Cell], limit: Optional[int] = None) -> List[TotalCellOrder]:
    """All linear extensions of the forced relation on a finite cell set.

    Backtracks over minimal elements taken in row-major order, so the output is
    lexicographic in the row-major indices of the listed cells. Raises
    BudgetExceeded once more than `limit` orders (default MAX_ORDERS) exist.
    """
    limit = settings.MAX_ORDERS if limit is None else limit
    cells = sorted(set(domain))
    index = {cell: k for k, cell in enumerate(cells)}
    predecessors: List[Set[int]] = [set() for _ in cells]
    for a, b in precedence_pairs(cells):
        predecessors[index[b]].add(index[a])

    results: List[TotalCellOrder] = []
    placed: List[int] = []
    used = [False] * len(cells)

    def extend() -> None:
        if len(placed) == len(cells):
            if len(results) >= limit:
                raise BudgetExceeded(
                    f"more than {limit} admissible orders on {len(cells)} cells; raise MAX_ORDERS to continue"
                )
            results.append(TotalCellOrder(sequence=tuple(cells[k] for k in placed)))
            return
        for k in range(len(cells)):
            if used[k] or any(not used[p] for p in predecessors[k]):
                continue
            used[k] = True
            placed.append(k)
            extend()
            placed.pop()
            used[k] = False

    extend()
    logger.debug(f"{len(results)} admissible orders on {len(cells)} cells")
    return results


def parse_order(text: str, domain: Optional[Iterable[Cell]] = None, check_admissible: bool = True) -> TotalCellOrder:
    """Read one "row,col" per line, least cell first; blank lines and '#' comments are skipped."""
    sequence = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row, col = (int(piece) for piece in line.split(","))
        except ValueError:
            raise OrderError(f"line {number}: expected 'row,col', got {line!r}")
        try:
            sequence.append(Cell.of(row, col))
        except ShapeError as e:
            raise OrderError(f"line {number}: {e}")
    try:
        order = TotalCellOrder(sequence=tuple(sequence))
    except ValidationError as e:
        raise domain_error(e, OrderError) from e

    if domain is not None:
        expected = frozenset(domain)
        if order.domain != expected:
            missing = sorted(expected - order.domain)
            extra = sorted(order.domain - expected)
            raise OrderError(
                "order does not list the expected cells"
                + (f"; missing {', '.join(map(str, missing))}" if missing else "")
                + (f"; unexpected {', '.join(map(str, extra))}" if extra else "")
            )
    if check_admissible:
        require_admissible(order)
    return order


def render_order(order: TotalCellOrder) -> str:
    return "".join(f"{cell.row},{cell.col}\n" for cell in order.sequence)


def resolve_order(text: str, domain: Iterable[Cell]) -> TotalCellOrder:
    """Turn `J`, `F` or `@path` into an admissible order on `domain`."""
    domain = list(domain)
    name = text.strip()
    if name.upper() in _SORT_KEYS:
        return order_from_comparator(domain, name.upper())
    if name.startswith("@"):
        path = name[1:]
        if not os.path.isfile(path):
            raise OrderError(f"order file not found: {path}")
        with open(path, "r") as f:
            return parse_order(f.read(), domain=domain)
    raise OrderError(f"unknown order {text!r}; use J, F or @path")
