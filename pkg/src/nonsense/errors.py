"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class NonsenseError(Exception):
    """Base class for all errors raised by this package."""


class FormulaSyntaxError(NonsenseError, ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class SignatureError(NonsenseError, ValueError):
    """A connective outside the admitted signature was used."""

    def __init__(self, connective, signature_name: str):
        super().__init__(f"connective {connective.symbol!r} is not in {signature_name}")
        self.connective = connective
        self.signature_name = signature_name


class MeaningfulConnectiveError(NonsenseError, ValueError):
    """Raised where #b/#h cannot be handled (expansion, classification, calculi)."""


class SequentError(NonsenseError, ValueError):
    pass


class EvaluationError(NonsenseError, ValueError):
    pass


class MissingAtomError(EvaluationError, KeyError):
    def __init__(self, atom: str):
        EvaluationError.__init__(self, f"valuation does not assign atom {atom!r}")
        self.atom = atom

    def __str__(self) -> str:
        return self.args[0]


class ConnectiveNotAdmittedError(EvaluationError):
    pass


class NonClassicalValuationError(EvaluationError):
    pass


class CapExceededError(NonsenseError, ValueError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} atoms exceed the enumeration cap of {cap}")
        self.count = count
        self.cap = cap


class RuleNotAdmittedError(NonsenseError, ValueError):
    pass


class ProofFormatError(NonsenseError, ValueError):
    pass


class PreconditionError(NonsenseError, ValueError):
    pass


class ElaborationError(NonsenseError):
    pass


class CompletenessViolation(NonsenseError, AssertionError):
    """Classical search failed on a sequent already validated semantically.

    This can only signal a bug in the prover pipeline.
    """
