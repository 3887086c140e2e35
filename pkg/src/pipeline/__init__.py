# Verification pipeline
from .types import ExtremesReport, SampleOutcome, SampleReport, VerificationReport
from .orchestrator import VerificationPipeline, VerificationConfig, VerificationProgress

__all__ = [
    "ExtremesReport",
    "SampleOutcome",
    "SampleReport",
    "VerificationReport",
    "VerificationPipeline",
    "VerificationConfig",
    "VerificationProgress",
]
