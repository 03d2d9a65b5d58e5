from enum import Enum


class Verdict(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"
    HYPOTHESES_NOT_MET = "HypothesesNotMet"


class PropertyReport(object):
    """Verdict of a yes/no question about finite data.

    Attributes
    ----------
    name : str
        name of the decided property
    verdict : Verdict
        outcome of the decision
    witness : dict or None
        counterexample on failure, certificate on success when one exists
    details : dict
        supplementary data such as cross-checks or budget usage
    """

    def __init__(
        self,
        name: str,
        verdict: Verdict,
        witness: dict = None,
        details: dict = None,
    ):
        assert isinstance(verdict, Verdict), verdict
        if verdict is Verdict.FAILS and witness is None:
            raise ValueError(f"failing report {name!r} needs a witness")
        self.name = name
        self.verdict = verdict
        self.witness = witness
        self.details = {} if details is None else dict(details)

    @classmethod
    def holds(cls, name: str, witness: dict = None, **details):
        return cls(name, Verdict.HOLDS, witness, details)

    @classmethod
    def fails(cls, name: str, witness: dict, **details):
        return cls(name, Verdict.FAILS, witness, details)

    @classmethod
    def unknown(cls, name: str, witness: dict = None, **details):
        return cls(name, Verdict.UNKNOWN, witness, details)

    @classmethod
    def exhausted(cls, name: str, error):
        """Unknown report for a search stopped by a ResourceLimit."""
        return cls(
            name,
            Verdict.UNKNOWN,
            {"budget": error.budget, "limit": error.limit},
        )

    @property
    def is_holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def is_fails(self) -> bool:
        return self.verdict is Verdict.FAILS

    def to_dict(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out

    def __repr__(self):
        return (
            f"PropertyReport({self.name!r}, {self.verdict.value}, "
            f"witness={self.witness!r})")
