"""Exhaustive verification sweeps over small triples (lambda, mu, nu)"""

from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Callable, Iterable, Iterator, List, Optional, Tuple
import logging
import time

from app.core.config import settings
from app.core.errors import BudgetExceeded, LRError
from app.schemas.orders import TotalCellOrder
from app.schemas.report import CheckResult, Suite, SweepBudget, VerificationReport
from app.schemas.shapes import Partition, SkewShape
from app.services.crystal import add_letters, decompose_tensor, lr_coefficient_crystal, lr_crystal
from app.services.oracle import lr_coefficient_ballot, lr_coefficients_ballot
from app.services.orders import enumerate_admissible_orders, order_from_comparator
from app.services.pictures import enumerate_pictures, phi, psi, trace_agreement
from app.services.shapes import contains, partitions_of
from app.services.tableaux import enumerate_ssyt

logger = logging.getLogger(__name__)

Triple = Tuple[Partition, Partition, Partition]

EXAMPLE_START = Partition.of(2, 1)
EXAMPLE_LETTERS = (3, 1, 2, 1, 2)
EXAMPLE_SHAPES = ((2, 1, 1), (3, 1, 1), (3, 2, 1), (4, 2, 1), (4, 3, 1))


def triples(max_nu: int, max_rows: Optional[int] = None, max_mu: Optional[int] = None) -> Iterator[Triple]:
    """Every (lambda, mu, nu) with |lambda| + |mu| = |nu| <= max_nu and lambda inside nu."""
    for n in range(max_nu + 1):
        for nu in partitions_of(n, max_rows=max_rows):
            for k in range(n + 1):
                if max_mu is not None and n - k > max_mu:
                    continue
                for lam in partitions_of(k):
                    if not contains(nu, lam):
                        continue
                    for mu in partitions_of(n - k):
                        yield lam, mu, nu


def _context(lam: Partition, mu: Partition, nu: Partition) -> str:
    return f"lambda=({lam}) mu=({mu}) nu=({nu})"


def _pair(A: TotalCellOrder, A_prime: TotalCellOrder) -> str:
    return f"A=[{A}] A'=[{A_prime}]"


def _order_pairs(mu: Partition, skew: SkewShape, all_pairs_size: int) -> List[Tuple[TotalCellOrder, TotalCellOrder]]:
    if mu.size <= all_pairs_size and skew.size <= all_pairs_size:
        return list(product(enumerate_admissible_orders(skew.cells()), enumerate_admissible_orders(mu.cells())))
    return [
        (order_from_comparator(skew.cells(), kind), order_from_comparator(mu.cells(), kind))
        for kind in ("J", "F")
    ]


def check_agreement(triple: Triple) -> List[CheckResult]:
    lam, mu, nu = triple
    context = _context(lam, mu, nu)
    try:
        pictures = len(enumerate_pictures(mu, SkewShape(outer=nu, inner=lam), cap=mu.size))
        crystal = lr_coefficient_crystal(lam, mu, nu)
        ballot = lr_coefficient_ballot(lam, mu, nu)
    except LRError as e:
        return [CheckResult(name="count_agreement", context=context, passed=False, detail=f"{type(e).__name__}: {e}")]
    return [CheckResult(
        name="count_agreement",
        context=context,
        passed=pictures == crystal == ballot,
        detail=f"pictures={pictures} crystal={crystal} ballot={ballot}",
    )]


def check_bijection(triple: Triple, all_pairs_size: int) -> List[CheckResult]:
    """Phi and Psi are mutually inverse, and Psi follows the addition trace, for each order pair."""
    lam, mu, nu = triple
    context = _context(lam, mu, nu)
    skew = SkewShape(outer=nu, inner=lam)
    failures = {"phi_psi_identity": "", "psi_phi_identity": "", "trace_agreement": ""}
    pairs = _order_pairs(mu, skew, all_pairs_size)
    try:
        for A, A_prime in pairs:
            crystal = lr_crystal(lam, mu, nu, A_prime)
            pictures = enumerate_pictures(mu, skew, A, A_prime, cap=mu.size)
            images = [psi(t, lam, nu) for t in crystal]
            if not failures["phi_psi_identity"]:
                bad = next((t for t, f in zip(crystal, images) if phi(f, A_prime) != t), None)
                if bad is not None:
                    failures["phi_psi_identity"] = f"{_pair(A, A_prime)} T=[{bad}]"
            if not failures["psi_phi_identity"]:
                bad_f = next((f for f in pictures if psi(phi(f, A_prime), lam, nu) != f), None)
                if bad_f is not None:
                    failures["psi_phi_identity"] = f"{_pair(A, A_prime)} f={bad_f}"
                elif set(images) != set(pictures):
                    failures["psi_phi_identity"] = f"{_pair(A, A_prime)} Psi-image differs from the pictures"
            if not failures["trace_agreement"]:
                bad = next((t for t in crystal if not trace_agreement(t, lam, nu, A_prime)), None)
                if bad is not None:
                    failures["trace_agreement"] = f"{_pair(A, A_prime)} T=[{bad}]"
    except LRError as e:
        return [CheckResult(name="bijection", context=context, passed=False, detail=f"{type(e).__name__}: {e}")]

    return [
        CheckResult(name=name, context=context, passed=not detail, detail=detail or f"{len(pairs)} order pairs")
        for name, detail in failures.items()
    ]


def check_order_independence(triple: Triple) -> List[CheckResult]:
    """The LR crystal and the picture set are the same for every admissible order (pair)."""
    lam, mu, nu = triple
    context = _context(lam, mu, nu)
    skew = SkewShape(outer=nu, inner=lam)
    try:
        mu_orders = enumerate_admissible_orders(mu.cells())
        skew_orders = enumerate_admissible_orders(skew.cells())
        reference_crystal = set(lr_crystal(lam, mu, nu))
        reference_pictures = set(enumerate_pictures(mu, skew, cap=mu.size))

        crystal_detail = ""
        for A_prime in mu_orders:
            if set(lr_crystal(lam, mu, nu, A_prime)) != reference_crystal:
                crystal_detail = f"A'=[{A_prime}] gives a different crystal"
                break

        picture_detail = ""
        for A, A_prime in product(skew_orders, mu_orders):
            if set(enumerate_pictures(mu, skew, A, A_prime, cap=mu.size)) != reference_pictures:
                picture_detail = f"{_pair(A, A_prime)} gives a different picture set"
                break
    except LRError as e:
        return [CheckResult(name="order_independence", context=context, passed=False, detail=f"{type(e).__name__}: {e}")]

    return [
        CheckResult(
            name="crystal_order_independence",
            context=context,
            passed=not crystal_detail,
            detail=crystal_detail or f"{len(mu_orders)} orders on mu, {len(reference_crystal)} elements",
        ),
        CheckResult(
            name="picture_order_independence",
            context=context,
            passed=not picture_detail,
            detail=picture_detail or f"{len(skew_orders) * len(mu_orders)} order pairs, {len(reference_pictures)} pictures",
        ),
    ]


def check_tensor_product(args: Tuple[Partition, Partition, int]) -> List[CheckResult]:
    """dim B(lambda) * dim B(mu) = sum of dim B(nu) over the decomposition, for any admissible reading."""
    lam, mu, max_entry = args
    context = f"lambda=({lam}) mu=({mu}) max_entry={max_entry}"
    try:
        components = decompose_tensor(lam, mu, max_entry)
        left = len(enumerate_ssyt(lam, max_entry)) * len(enumerate_ssyt(mu, max_entry))
        right = sum(multiplicity * len(enumerate_ssyt(nu, max_entry)) for nu, multiplicity in components.items())

        reading_detail = ""
        for order in enumerate_admissible_orders(mu.cells()):
            if decompose_tensor(lam, mu, max_entry, order) != components:
                reading_detail = f"reading along [{order}] decomposes differently"
                break

        expected = lr_coefficients_ballot(lam, mu, max_rows=max_entry)
    except LRError as e:
        return [CheckResult(name="tensor_product", context=context, passed=False, detail=f"{type(e).__name__}: {e}")]

    rendered = ", ".join(f"({nu})x{m}" for nu, m in sorted(components.items(), key=lambda item: item[0].parts, reverse=True))
    return [
        CheckResult(name="dimension_identity", context=context, passed=left == right, detail=f"{left} = {right}"),
        CheckResult(name="reading_independence", context=context, passed=not reading_detail, detail=reading_detail or rendered),
        CheckResult(
            name="oracle_decomposition",
            context=context,
            passed=dict(components) == expected,
            detail=rendered if dict(components) == expected else f"crystal {rendered}; ballot {expected}",
        ),
    ]


def check_fast_path(triple: Triple) -> List[CheckResult]:
    """Brute-force pictures coincide with the Psi-images of the crystal."""
    lam, mu, nu = triple
    context = _context(lam, mu, nu)
    skew = SkewShape(outer=nu, inner=lam)
    try:
        brute = enumerate_pictures(mu, skew, cap=mu.size)
        fast = enumerate_pictures(mu, skew, fast=True)
    except LRError as e:
        return [CheckResult(name="fast_path_equality", context=context, passed=False, detail=f"{type(e).__name__}: {e}")]
    return [CheckResult(
        name="fast_path_equality",
        context=context,
        passed=brute == fast,
        detail=f"{len(brute)} pictures" if brute == fast else f"brute force {len(brute)}, Psi-images {len(fast)}",
    )]


def check_addition_example() -> CheckResult:
    trace = add_letters(EXAMPLE_START, EXAMPLE_LETTERS)
    shapes = tuple(step.shape_after.parts for step in trace.steps)
    return CheckResult(
        name="addition_example",
        context=f"({EXAMPLE_START})[{','.join(map(str, EXAMPLE_LETTERS))}]",
        passed=shapes == EXAMPLE_SHAPES and trace.all_young,
        detail=" -> ".join(f"({','.join(map(str, s))})" for s in shapes),
    )


class _BijectionCheck:
    """Picklable partial of check_bijection for the process pool."""

    def __init__(self, all_pairs_size: int):
        self.all_pairs_size = all_pairs_size

    def __call__(self, triple: Triple) -> List[CheckResult]:
        return check_bijection(triple, self.all_pairs_size)


class VerificationService:

    def __init__(self, workers: int = 1):
        self.workers = max(1, workers)

    def _fan_out(self, check: Callable[..., List[CheckResult]], items: Iterable) -> List[CheckResult]:
        items = list(items)
        if self.workers == 1 or len(items) < 2:
            batches = [check(item) for item in items]
        else:
            chunksize = max(1, len(items) // (self.workers * 8))
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                batches = list(pool.map(check, items, chunksize=chunksize))
        return [result for batch in batches for result in batch]

    def agreement(self, budget: SweepBudget) -> List[CheckResult]:
        return self._fan_out(check_agreement, triples(budget.max_nu, max_rows=budget.max_rows))

    def bijection(self, budget: SweepBudget) -> List[CheckResult]:
        return self._fan_out(_BijectionCheck(budget.all_pairs_size), triples(budget.max_nu))

    def order_independence(self, budget: SweepBudget) -> List[CheckResult]:
        return self._fan_out(check_order_independence, triples(budget.max_nu, max_mu=budget.max_mu))

    def tensor_product(self, budget: SweepBudget) -> List[CheckResult]:
        items = [
            (lam, mu, m)
            for m in range(1, budget.max_entry + 1)
            for a in range(budget.max_size + 1)
            for lam in partitions_of(a, max_rows=m)
            for b in range(budget.max_size + 1)
            for mu in partitions_of(b, max_rows=m)
        ]
        return [check_addition_example()] + self._fan_out(check_tensor_product, items)

    def fast_path(self, budget: SweepBudget) -> List[CheckResult]:
        return self._fan_out(check_fast_path, triples(budget.max_nu, max_mu=budget.max_oracle_mu))

    def check_budget(self, budget: SweepBudget, force: bool = False) -> None:
        """Reject budgets above the configured caps unless forced."""
        limits = [
            ("max_nu", budget.max_nu, settings.MAX_NU_SIZE, "LRP_MAX_NU_SIZE"),
            ("max_rows", budget.max_rows, settings.MAX_NU_ROWS, "LRP_MAX_NU_ROWS"),
            ("max_mu", budget.max_mu, settings.MAX_ORDER_SWEEP_SIZE, "LRP_MAX_ORDER_SWEEP_SIZE"),
            ("all_pairs_size", budget.all_pairs_size, settings.MAX_ORDER_SWEEP_SIZE, "LRP_MAX_ORDER_SWEEP_SIZE"),
            ("max_oracle_mu", budget.max_oracle_mu, settings.MAX_PICTURE_SIZE, "LRP_MAX_PICTURE_SIZE"),
            ("max_size", budget.max_size, settings.MAX_NU_SIZE // 2, "LRP_MAX_NU_SIZE"),
            ("max_entry", budget.max_entry, settings.MAX_ENTRY, "LRP_MAX_ENTRY"),
        ]
        for name, value, cap, variable in limits:
            if value > cap:
                if force:
                    logger.warning(f"{name}={value} is above the cap {cap}; continuing because forced")
                    continue
                raise BudgetExceeded(f"{name}={value} is above the cap {cap}; raise {variable} or pass --force")

    def run(self, suite: Suite, budget: SweepBudget) -> VerificationReport:
        sweeps = {
            "agreement": self.agreement,
            "bijection": self.bijection,
            "order-independence": self.order_independence,
            "theorem36": self.tensor_product,
            "oracle": self.fast_path,
        }
        selected = list(sweeps) if suite == "all" else [suite]

        checks: List[CheckResult] = []
        for name in selected:
            start_time = time.time()
            logger.info(f"Running {name} sweep with {budget.model_dump()}")
            results = sweeps[name](budget)
            failed = sum(1 for result in results if not result.passed)
            elapsed = (time.time() - start_time) * 1000
            if failed:
                logger.warning(f"{name}: {failed} of {len(results)} checks failed")
            logger.info(f"{name}: {len(results)} checks in {elapsed:.0f} ms")
            checks.extend(results)

        return VerificationReport(suite=suite, scope=budget, checks=tuple(checks))
