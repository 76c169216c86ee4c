"""Acceptance sweeps at full budget

Run from the repository root:  python scripts/run_acceptance.py
Set LRP_WORKERS to fan the sweeps out over several processes.
"""

import json
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.cli.commands.coeff import METHODS, coefficient
from app.core.config import settings
from app.core.logging_config import setup_logging
from app.schemas.report import SweepBudget
from app.schemas.shapes import Partition
from app.services.verification import VerificationService, check_addition_example

SAMPLE_TRIPLES = "data/sample/triples.json"


def print_result(test_name: str, success: bool, details: str = ""):
    status = "✔" if success else "x"
    print(f"{status} {test_name}")
    if details:
        print(f"   {details}")


def header(title: str):
    print("\n" + "=" * 70)
    print(title)
    print("=" * 70)


def run_sweep(service: VerificationService, title: str, suite: str, budget: SweepBudget) -> bool:
    header(title)
    start_time = time.time()
    report = service.run(suite, budget)
    elapsed = time.time() - start_time
    summary = report.summary
    print_result(
        f"{suite}: {summary['passed']}/{summary['total']} checks",
        report.ok,
        f"{elapsed:.1f}s"
    )
    for check in report.failures()[:10]:
        print_result(f"{check.name} {check.context}", False, check.detail)
    return report.ok


def test_golden_triples() -> bool:
    header("Golden triples")
    with open(SAMPLE_TRIPLES, "r") as f:
        triples = json.load(f)

    ok = True
    for entry in triples:
        lam, mu, nu = (Partition(parts=tuple(entry[key])) for key in ("lambda", "mu", "nu"))
        values = {method: coefficient(method, lam, mu, nu) for method in METHODS}
        success = all(value == entry["coefficient"] for value in values.values())
        ok = ok and success
        print_result(f"c^({nu})_({lam}),({mu}) = {entry['coefficient']}", success, "" if success else str(values))
    return ok


def test_addition_example() -> bool:
    header("Addition of 3,1,2,1,2 to (2,1)")
    result = check_addition_example()
    print_result("shape sequence", result.passed, result.detail)
    return result.passed


def main():
    setup_logging()
    service = VerificationService(workers=settings.WORKERS)

    print("\n" + "=" * 70)
    print(f"{settings.APP_NAME} {settings.APP_VERSION}: acceptance sweeps")
    print(f"   workers: {service.workers}")
    print("=" * 70)

    results = [
        test_golden_triples(),
        run_sweep(service, "Picture, crystal and ballot counts agree (|nu| <= 8, l(nu) <= 4)",
                  "agreement", SweepBudget(max_nu=8, max_rows=4)),
        run_sweep(service, "Phi and Psi are inverse; addition trace agreement (|nu| <= 7)",
                  "bijection", SweepBudget(max_nu=7, all_pairs_size=4)),
        run_sweep(service, "Crystal and pictures do not depend on the orders (|mu| <= 5, |nu| <= 7)",
                  "order-independence", SweepBudget(max_nu=7, max_mu=5)),
        test_addition_example(),
        run_sweep(service, "Tensor product dimension identity (|lambda|, |mu| <= 4, max entry <= 3)",
                  "theorem36", SweepBudget(max_entry=3, max_size=4)),
        run_sweep(service, "Brute-force pictures equal the Psi-images (|mu| <= 6)",
                  "oracle", SweepBudget(max_nu=8, max_oracle_mu=6)),
    ]

    print("\n" + "=" * 70)
    if all(results):
        print(f"✔ ALL {len(results)} ACCEPTANCE GROUPS PASSED")
    else:
        print(f"x {results.count(False)} of {len(results)} acceptance groups failed")
    print("=" * 70 + "\n")
    sys.exit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
