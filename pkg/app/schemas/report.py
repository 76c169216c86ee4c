"""Verification report schemas"""

from typing import List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

Suite = Literal["agreement", "bijection", "order-independence", "theorem36", "oracle", "all"]


class SweepBudget(BaseModel):
    """Bounds of an exhaustive sweep."""

    model_config = ConfigDict(frozen=True)

    max_nu: int = Field(6, ge=0, description="Largest |nu| in triple sweeps")
    max_rows: int = Field(4, ge=1, description="Most rows of nu in the agreement sweep")
    max_mu: int = Field(4, ge=0, description="Largest |mu| in order-enumeration sweeps")
    all_pairs_size: int = Field(4, ge=0, description="Try every admissible pair when |mu| and |nu/lambda| are at most this")
    max_entry: int = Field(2, ge=1, description="Rank bound (largest entry) for the tensor-product sweep")
    max_size: int = Field(3, ge=0, description="Largest |lambda|, |mu| for the tensor-product sweep")
    max_oracle_mu: int = Field(5, ge=0, description="Largest |mu| when comparing brute force against the Psi fast path")


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    context: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str
    scope: SweepBudget
    checks: Tuple[CheckResult, ...] = ()

    @computed_field
    @property
    def summary(self) -> dict:
        passed = sum(1 for check in self.checks if check.passed)
        return {"total": len(self.checks), "passed": passed, "failed": len(self.checks) - passed}

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]
