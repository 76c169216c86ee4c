"""CLI dependencies"""

from typing import Optional

from app.core.config import settings
from app.services.verification import VerificationService

# Global instance (initialized on first use)
_verification_service: Optional[VerificationService] = None


def initialize_services(workers: Optional[int] = None) -> None:
    """Initialize services (called by commands that need them)"""
    global _verification_service
    _verification_service = VerificationService(workers=workers or settings.WORKERS)


def get_verification_service() -> VerificationService:
    """Get verification service"""
    if _verification_service is None:
        initialize_services()
    return _verification_service
