"""
Core data types for the verification pipeline
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..lattice import LemmaReport, Shape
from ..synthesis import SynthesisReport
from ..weights import WeightFunction


@dataclass
class ExtremesReport:
    """
    Extremal weight functions against the closed forms gamma = 2^(n-1) and
    eta = 2^n - 2^(n-r). The synthesized maps at both ends witness
    gamma* <= gamma and eta <= eta*.
    """
    shape: Shape
    minimizer: WeightFunction
    maximizer: WeightFunction
    alpha_min: int
    alpha_max: int
    census_min: int
    census_max: int
    gamma_star_witness: bool
    eta_star_witness: bool

    @property
    def gamma(self) -> int:
        return self.shape.gamma

    @property
    def eta(self) -> int:
        return self.shape.eta

    @property
    def passed(self) -> bool:
        return (
            self.alpha_min == self.census_min == self.gamma
            and self.alpha_max == self.census_max == self.eta
            and self.gamma_star_witness
            and self.eta_star_witness
        )

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.shape.n,
            "r": self.shape.r,
            "passed": self.passed,
            "minimizer": {"weights": str(self.minimizer), "alpha": self.alpha_min,
                          "census": self.census_min, "bound": self.gamma},
            "maximizer": {"weights": str(self.maximizer), "alpha": self.alpha_max,
                          "census": self.census_max, "bound": self.eta},
            "boolean_map_witnesses": {"gamma_star": self.gamma_star_witness,
                                      "eta_star": self.eta_star_witness},
        }


@dataclass
class SampleOutcome:
    seed: int
    weights: str
    alpha: int
    census: int
    in_range: bool

    @property
    def passed(self) -> bool:
        return self.in_range and self.alpha == self.census


@dataclass
class SampleReport:
    """Random weight functions checked against [gamma, eta]"""
    shape: Shape
    seed: int
    outcomes: List[SampleOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def within(self) -> int:
        return sum(1 for o in self.outcomes if o.passed)

    def as_dict(self) -> Dict[str, Any]:
        alphas = [o.alpha for o in self.outcomes]
        return {
            "seed": self.seed,
            "samples": len(self.outcomes),
            "within": self.within,
            "alpha_min": min(alphas) if alphas else None,
            "alpha_max": max(alphas) if alphas else None,
            "failures": [
                {"seed": o.seed, "weights": o.weights, "alpha": o.alpha, "census": o.census}
                for o in self.outcomes if not o.passed
            ][:10],
        }


@dataclass
class VerificationReport:
    """Aggregated result of one verification run"""
    shape: Shape
    lemma: Optional[LemmaReport] = None
    extremes: Optional[ExtremesReport] = None
    q_sweep: Optional[List[SynthesisReport]] = None
    samples: Optional[SampleReport] = None

    @property
    def a_n(self) -> int:
        """A(n), the minimum of gamma(n,r) over r"""
        return 1 << (self.shape.n - 1)

    @property
    def passed(self) -> bool:
        parts = [self.lemma, self.extremes, self.samples]
        if any(p is not None and not p.passed for p in parts):
            return False
        return all(s.passed for s in self.q_sweep or [])

    def as_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "n": self.shape.n,
            "r": self.shape.r,
            "passed": self.passed,
            "A(n)": self.a_n,
        }
        if self.lemma is not None:
            result["lemma"] = self.lemma.as_dict()
        if self.extremes is not None:
            result["extremes"] = self.extremes.as_dict()
        if self.q_sweep is not None:
            result["q_sweep"] = {
                "total": len(self.q_sweep),
                "passed": sum(1 for s in self.q_sweep if s.passed),
                "failures": [s.as_dict() for s in self.q_sweep if not s.passed],
            }
        if self.samples is not None:
            result["samples"] = self.samples.as_dict()
        return result
