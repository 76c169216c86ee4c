"""Admissible pictures and the maps Phi and Psi between pictures and LR crystals"""

from typing import Dict, List, Mapping, Optional, Union
import logging

from pydantic import ValidationError

from app.core.config import settings
from app.core.errors import BudgetExceeded, ContractViolation, OrderError, PictureError, TableauError, domain_error
from app.schemas.orders import TotalCellOrder
from app.schemas.picture import PictureMap
from app.schemas.shapes import Cell, Partition, SkewShape
from app.schemas.tableau import Tableau
from app.services.crystal import add_letters, lands_on, lr_crystal, read
from app.services.orders import leq_P, order_from_comparator, require_admissible
from app.services.shapes import skew_shape
from app.services.tableaux import p_index

logger = logging.getLogger(__name__)

CellMap = Union[PictureMap, Mapping[Cell, Cell]]


def _as_mapping(f: CellMap) -> Dict[Cell, Cell]:
    return f.as_dict() if isinstance(f, PictureMap) else {Cell(*s): Cell(*t) for s, t in f.items()}


def _order_on(order: TotalCellOrder, cells: List[Cell], what: str) -> TotalCellOrder:
    if order.domain != frozenset(cells):
        raise OrderError(f"{what} does not order the expected cells")
    return require_admissible(order, what)


def is_PA_standard(f: CellMap, target_order: TotalCellOrder) -> bool:
    """Every pair u <=_P v of the domain keeps f(u) <=_A f(v) in the target order."""
    mapping = _as_mapping(f)
    if target_order.domain != frozenset(mapping.values()):
        raise OrderError("the target order is not an order on the image of the map")
    rank = target_order.ranks()
    for u, x in mapping.items():
        for v, y in mapping.items():
            if leq_P(u, v) and rank[x] > rank[y]:
                return False
    return True


def is_admissible_picture(f: PictureMap, A: TotalCellOrder, A_prime: TotalCellOrder) -> bool:
    """f is PA-standard for A on the skew shape, and f^-1 is PA'-standard for A' on mu."""
    return is_PA_standard(f, A) and is_PA_standard(f.inverse(), A_prime)


def is_picture(f: PictureMap) -> bool:
    """The classical notion: both f and f^-1 are PJ-standard."""
    return is_admissible_picture(
        f,
        order_from_comparator(f.codomain.cells(), "J"),
        order_from_comparator(f.domain_shape.cells(), "J"),
    )


def _picture_key(f: PictureMap) -> tuple:
    return tuple(target for _, target in f.mapping)


def enumerate_pictures(
    mu: Partition,
    skew: SkewShape,
    A: Optional[TotalCellOrder] = None,
    A_prime: Optional[TotalCellOrder] = None,
    fast: bool = False,
    cap: Optional[int] = None
) -> List[PictureMap]:
    """P(mu, nu/lambda; A, A'), by exhaustive search over bijections.

    Cells of mu are assigned in row-major order to cells of the skew shape in
    row-major order; a partial assignment is abandoned as soon as one pair breaks
    standardness, which only skips bijections that would fail the same check.
    With fast=True the pictures are the Psi-images of the LR crystal instead.
    Defaults to the (J, J) case, i.e. P(mu, nu/lambda).
    """
    if mu.size != skew.size:
        raise PictureError(f"|mu| = {mu.size} but the skew shape {skew} has {skew.size} cells")
    cap = settings.MAX_PICTURE_SIZE if cap is None else cap
    sources = mu.cells()
    targets = skew.cells()
    if A is None:
        A = order_from_comparator(targets, "J")
    if A_prime is None:
        A_prime = order_from_comparator(sources, "J")
    _order_on(A, targets, "order on the skew shape")
    _order_on(A_prime, sources, "order on mu")

    if fast:
        pictures = [psi(t, skew.inner, skew.outer) for t in lr_crystal(skew.inner, mu, skew.outer, A_prime)]
        return sorted(pictures, key=_picture_key)

    if mu.size > cap:
        raise BudgetExceeded(f"|mu| = {mu.size} is above the brute-force cap of {cap}; raise MAX_PICTURE_SIZE")

    rank_A = A.ranks()
    rank_A_prime = A_prime.ranks()
    images: List[Cell] = []
    used = [False] * len(targets)
    results: List[PictureMap] = []

    def compatible(v: Cell, y: Cell, u: Cell, x: Cell) -> bool:
        if leq_P(v, u) and rank_A[y] > rank_A[x]:
            return False
        if leq_P(u, v) and rank_A[x] > rank_A[y]:
            return False
        if leq_P(y, x) and rank_A_prime[v] > rank_A_prime[u]:
            return False
        if leq_P(x, y) and rank_A_prime[u] > rank_A_prime[v]:
            return False
        return True

    def assign(k: int) -> None:
        if k == len(sources):
            results.append(PictureMap(domain_shape=mu, codomain=skew, mapping=tuple(zip(sources, images))))
            return
        u = sources[k]
        for index, x in enumerate(targets):
            if used[index]:
                continue
            if all(compatible(sources[m], images[m], u, x) for m in range(k)):
                used[index] = True
                images.append(x)
                assign(k + 1)
                images.pop()
                used[index] = False

    assign(0)
    logger.debug(f"{len(results)} pictures ({mu}) -> {skew}")
    return results


def phi(f: PictureMap, A_prime: TotalCellOrder) -> Tableau:
    """Phi(f): the tableau of shape mu whose (i,j)-entry is the row of f(i,j)."""
    mu = f.domain_shape
    _order_on(A_prime, mu.cells(), "order on mu")
    try:
        t = Tableau.from_entries(mu, {cell: f(cell).row for cell in mu.cells()})
    except (ValidationError, TableauError) as e:
        raise ContractViolation(f"Phi({f}) is not semistandard: {domain_error(e, TableauError)}") from e

    letters = [t.entry(cell) for cell in A_prime.sequence]
    if not lands_on(f.codomain.inner, letters, f.codomain.outer):
        raise ContractViolation(f"Phi({f}) = [{t}] is not in the LR crystal for {f.codomain}")
    return t


def psi(t: Tableau, lam: Partition, nu: Partition) -> PictureMap:
    """Psi(T): (i,j) -> (T_ij, lambda_{T_ij} + p(T;i,j))."""
    skew = skew_shape(nu, lam)

    images: Dict[Cell, Cell] = {}
    for cell, value in t.items():
        image = Cell(value, lam.part(value) + p_index(t, cell))
        if image not in skew:
            raise ContractViolation(f"Psi([{t}]) sends {cell} to {image}, outside {skew}")
        images[cell] = image
    if len(set(images.values())) != len(images) or len(images) != skew.size:
        raise ContractViolation(f"Psi([{t}]) is not a bijection onto {skew}")
    return PictureMap.from_images(t.shape, skew, images)


def trace_agreement(t: Tableau, lam: Partition, nu: Partition, A_prime: TotalCellOrder) -> bool:
    """The box added for the j-th letter of R_A'(T) is Psi(T) of the j-th read cell."""
    reading = read(t, A_prime)
    trace = add_letters(lam, reading.letters)
    f = psi(t, lam, nu)
    return all(f(source) == destination for source, destination in zip(reading.sources, trace.destinations))


def render_picture(f: PictureMap) -> str:
    return str(f)
