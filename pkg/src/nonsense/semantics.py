"""Matrix semantics for CPL, Bochvar's B3 and Hallden's H3.

B3 and H3 share the truth tables of ``~ & | ->``: the value 1/2 is
infectious and the remaining entries are classical.  They differ only in the
designated set ({1} for B3, {1, 1/2} for H3).  Validity is decided by brute
force over all valuations of the atoms involved.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    CapExceededError,
    ConnectiveNotAdmittedError,
    MeaningfulConnectiveError,
    MissingAtomError,
    NonClassicalValuationError,
)
from .formula import (
    MEANINGFUL,
    SIGMA1,
    SIGMA2,
    Atom,
    Conn,
    Formula,
    Unary,
    connectives,
    render,
    variables,
    variables_of,
)
from .sequent import Sequent

CAP_ENV_VAR = "NONSENSE_MAX_ATOMS"
DEFAULT_CAP = 16


class TruthValue(enum.IntEnum):
    ZERO = 0
    HALF = 1
    ONE = 2

    def __str__(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> TruthValue:
        try:
            return _FROM_LABEL[label.strip()]
        except KeyError:
            raise ValueError(f"unknown truth value {label!r}") from None


_LABELS = {TruthValue.ZERO: "0", TruthValue.HALF: "1/2", TruthValue.ONE: "1"}
_FROM_LABEL = {
    "0": TruthValue.ZERO,
    "1/2": TruthValue.HALF,
    "½": TruthValue.HALF,
    "0.5": TruthValue.HALF,
    "1": TruthValue.ONE,
}

ZERO, HALF, ONE = TruthValue.ZERO, TruthValue.HALF, TruthValue.ONE


class LogicId(enum.Enum):
    CPL = "cpl"
    B3 = "b3"
    H3 = "h3"


@dataclass(frozen=True)
class Logic:
    id: LogicId
    values: tuple[TruthValue, ...]
    designated: frozenset[TruthValue]
    unary: Mapping[Conn, Mapping[TruthValue, TruthValue]]
    binary: Mapping[Conn, Mapping[tuple[TruthValue, TruthValue], TruthValue]]

    @property
    def name(self) -> str:
        return self.id.value

    @property
    def classical(self) -> bool:
        return self.id is LogicId.CPL

    def admits(self, op: Conn) -> bool:
        return op in self.unary or op in self.binary

    def __str__(self) -> str:
        return self.id.name


# Rows are indexed by the left operand, columns by the right one, both in the
# order 1, 1/2, 0.
def _table(rows: list[list[TruthValue]]) -> dict[tuple[TruthValue, TruthValue], TruthValue]:
    order = (ONE, HALF, ZERO)
    return {(x, y): rows[i][j] for i, x in enumerate(order) for j, y in enumerate(order)}


NOT_TABLE = {ONE: ZERO, HALF: HALF, ZERO: ONE}
AND_TABLE = _table([[ONE, HALF, ZERO], [HALF, HALF, HALF], [ZERO, HALF, ZERO]])
OR_TABLE = _table([[ONE, HALF, ONE], [HALF, HALF, HALF], [ONE, HALF, ZERO]])
IMP_TABLE = _table([[ONE, HALF, ZERO], [HALF, HALF, HALF], [ONE, HALF, ONE]])
SHARP_B_TABLE = {ONE: ONE, HALF: ZERO, ZERO: ZERO}
SHARP_H_TABLE = {ONE: ONE, HALF: ZERO, ZERO: ONE}

_BINARY_TABLES = {Conn.AND: AND_TABLE, Conn.OR: OR_TABLE, Conn.IMP: IMP_TABLE}


def _classical_restriction(table: dict) -> dict:
    return {k: v for k, v in table.items() if HALF not in (k if isinstance(k, tuple) else (k,))}


B3 = Logic(
    LogicId.B3,
    (ZERO, HALF, ONE),
    frozenset({ONE}),
    {Conn.NOT: NOT_TABLE, Conn.SHARP_B: SHARP_B_TABLE},
    _BINARY_TABLES,
)
H3 = Logic(
    LogicId.H3,
    (ZERO, HALF, ONE),
    frozenset({ONE, HALF}),
    {Conn.NOT: NOT_TABLE, Conn.SHARP_H: SHARP_H_TABLE},
    _BINARY_TABLES,
)
CPL = Logic(
    LogicId.CPL,
    (ZERO, ONE),
    frozenset({ONE}),
    {Conn.NOT: _classical_restriction(NOT_TABLE)},
    {op: _classical_restriction(t) for op, t in _BINARY_TABLES.items()},
)

LOGICS = {lg.name: lg for lg in (CPL, B3, H3)}


def get_logic(name: str | LogicId | Logic) -> Logic:
    if isinstance(name, Logic):
        return name
    if isinstance(name, LogicId):
        name = name.value
    try:
        return LOGICS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown logic {name!r}; expected one of {sorted(LOGICS)}") from None


@dataclass(frozen=True)
class Valuation:
    """Total assignment of truth values to finitely many atoms."""

    assignment: Mapping[str, TruthValue]
    classical: bool = False

    def __post_init__(self):
        object.__setattr__(self, "assignment", dict(self.assignment))
        if self.classical and HALF in self.assignment.values():
            raise NonClassicalValuationError("a classical valuation cannot assign 1/2")

    def __getitem__(self, atom: str) -> TruthValue:
        return self.assignment[atom]

    def __contains__(self, atom: str) -> bool:
        return atom in self.assignment

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self.assignment)

    def to_dict(self) -> dict[str, str]:
        return {k: str(self.assignment[k]) for k in sorted(self.assignment)}

    @classmethod
    def from_dict(cls, data: Mapping[str, str], classical: bool = False) -> Valuation:
        return cls({k: TruthValue.from_label(str(v)) for k, v in data.items()}, classical)

    def __str__(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.to_dict().items()) or "(empty)"


def valuation(logic: Logic | str = "h3", **values) -> Valuation:
    """Shorthand: ``valuation("b3", p=ONE, q="1/2")``."""
    lg = get_logic(logic)
    assignment = {
        k: v if isinstance(v, TruthValue) else TruthValue.from_label(str(v)) for k, v in values.items()
    }
    return Valuation(assignment, lg.classical)


@dataclass(frozen=True)
class Countermodel:
    valuation: Valuation
    sequent: Sequent
    logic: LogicId

    def to_dict(self) -> dict:
        return {
            "logic": self.logic.value,
            "valuation": self.valuation.to_dict(),
            "sequent": self.sequent.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> Countermodel:
        lg = get_logic(data["logic"])
        return cls(
            Valuation.from_dict(data["valuation"], lg.classical),
            Sequent.from_dict(data["sequent"], None),
            lg.id,
        )

    def __str__(self) -> str:
        return f"{self.logic.name} countermodel: {self.valuation}"


# -- evaluation --------------------------------------------------------------


def evaluate(f: Formula, v: Valuation | Mapping[str, TruthValue], logic: Logic | str) -> TruthValue:
    lg = get_logic(logic)
    assignment = v.assignment if isinstance(v, Valuation) else v
    if lg.classical and HALF in assignment.values():
        raise NonClassicalValuationError("CPL cannot evaluate under a valuation assigning 1/2")
    for op in connectives(f):
        if not lg.admits(op):
            raise ConnectiveNotAdmittedError(f"{op.symbol!r} has no truth table in {lg}")
    return _eval(f, assignment, lg)


def _eval(f: Formula, env: Mapping[str, TruthValue], lg: Logic) -> TruthValue:
    if isinstance(f, Atom):
        try:
            return env[f.name]
        except KeyError:
            raise MissingAtomError(f.name) from None
    if isinstance(f, Unary):
        return lg.unary[f.op][_eval(f.arg, env, lg)]
    return lg.binary[f.op][(_eval(f.left, env, lg), _eval(f.right, env, lg))]


def valuation_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{CAP_ENV_VAR} must be non-negative")
    return cap


def all_valuations(atoms: Iterable[str], logic: Logic | str, cap: int | None = None) -> Iterator[Valuation]:
    """Every valuation of ``atoms``: sorted atom order, values 0 < 1/2 < 1.

    The last atom varies fastest.
    """
    lg = get_logic(logic)
    names = sorted(set(atoms))
    limit = valuation_cap() if cap is None else cap
    if len(names) > limit:
        raise CapExceededError(len(names), limit)
    for combo in itertools.product(lg.values, repeat=len(names)):
        yield Valuation(dict(zip(names, combo)), lg.classical)


def holds(v: Valuation, s: Sequent, logic: Logic | str) -> bool:
    """True iff ``v`` is a model of ``s``."""
    lg = get_logic(logic)
    d = lg.designated
    if any(evaluate(f, v, lg) not in d for f in s.ant):
        return True
    return any(evaluate(f, v, lg) in d for f in s.suc)


def countermodel(s: Sequent, logic: Logic | str, cap: int | None = None) -> Countermodel | None:
    """First valuation (in enumeration order) falsifying ``s``, or None if valid."""
    lg = get_logic(logic)
    for f in s.formulas:
        for op in connectives(f):
            if not lg.admits(op):
                raise ConnectiveNotAdmittedError(f"{op.symbol!r} has no truth table in {lg}")
    d = lg.designated
    ant = sorted(s.ant, key=render)
    suc = sorted(s.suc, key=render)
    for v in all_valuations(s.variables(), lg, cap):
        env = v.assignment
        if all(_eval(f, env, lg) in d for f in ant) and not any(_eval(f, env, lg) in d for f in suc):
            return Countermodel(v, s, lg.id)
    return None


def is_valid(s: Sequent, logic: Logic | str, cap: int | None = None) -> bool:
    return countermodel(s, logic, cap) is None


def truth_table(f: Formula, logic: Logic | str, cap: int | None = None) -> list[tuple[Valuation, TruthValue]]:
    lg = get_logic(logic)
    return [(v, evaluate(f, v, lg)) for v in all_valuations(variables(f), lg, cap)]


# -- inference classification ------------------------------------------------


@dataclass(frozen=True)
class InferenceReport:
    premises: tuple[Formula, ...]
    conclusion: Formula
    cpl_valid: bool
    b3_valid: bool
    h3_valid: bool
    vars_conclusion_in_premises: bool
    premises_cpl_inconsistent: bool
    vars_premises_in_conclusion: bool
    conclusion_cpl_tautology: bool
    countermodels: Mapping[str, Countermodel]

    @property
    def b3_condition(self) -> bool:
        """Sufficient condition for a CPL-valid inference to hold in B3."""
        return self.vars_conclusion_in_premises or self.premises_cpl_inconsistent

    @property
    def h3_condition(self) -> bool:
        """Sufficient condition for a CPL-valid inference to hold in H3."""
        return self.vars_premises_in_conclusion or self.conclusion_cpl_tautology

    def to_dict(self) -> dict:
        return {
            "premises": [render(f) for f in self.premises],
            "conclusion": render(self.conclusion),
            "cpl_valid": self.cpl_valid,
            "b3_valid": self.b3_valid,
            "h3_valid": self.h3_valid,
            "b3_conditions": {
                "vars_conclusion_in_premises": self.vars_conclusion_in_premises,
                "premises_cpl_inconsistent": self.premises_cpl_inconsistent,
            },
            "h3_conditions": {
                "vars_premises_in_conclusion": self.vars_premises_in_conclusion,
                "conclusion_cpl_tautology": self.conclusion_cpl_tautology,
            },
            "countermodels": {k: cm.to_dict() for k, cm in self.countermodels.items()},
        }


def classify(premises: Iterable[Formula], conclusion: Formula, cap: int | None = None) -> InferenceReport:
    """Decide ``premises |= conclusion`` in CPL, B3 and H3 and report the
    variable-inclusion conditions that guarantee B3/H3 validity.

    The B3 check runs on the Sigma2 expansion and the H3 check on the Sigma1
    expansion, so each logic sees its own native fragment.
    """
    prem = tuple(sorted(set(premises), key=render))
    for f in (*prem, conclusion):
        if connectives(f) & MEANINGFUL:
            raise MeaningfulConnectiveError(f"cannot classify {render(f)!r}: contains #b/#h")
    seq = Sequent(prem, [conclusion])
    results = {
        "cpl": countermodel(seq, CPL, cap),
        "b3": countermodel(seq.expand(SIGMA2), B3, cap),
        "h3": countermodel(seq.expand(SIGMA1), H3, cap),
    }
    results = {
        k: None if cm is None else Countermodel(cm.valuation, seq, cm.logic) for k, cm in results.items()
    }
    prem_vars = variables_of(prem)
    concl_vars = variables(conclusion)
    inconsistent = bool(prem) and countermodel(Sequent(prem, ()), CPL, cap) is None
    tautology = countermodel(Sequent((), [conclusion]), CPL, cap) is None
    return InferenceReport(
        premises=prem,
        conclusion=conclusion,
        cpl_valid=results["cpl"] is None,
        b3_valid=results["b3"] is None,
        h3_valid=results["h3"] is None,
        vars_conclusion_in_premises=concl_vars <= prem_vars,
        premises_cpl_inconsistent=inconsistent,
        vars_premises_in_conclusion=prem_vars <= concl_vars,
        conclusion_cpl_tautology=tautology,
        countermodels={k: cm for k, cm in results.items() if cm is not None},
    )


def parse_valuation(text: str, logic: Logic | str = "h3") -> Valuation:
    """Parse ``"p=1, q=1/2"``."""
    lg = get_logic(logic)
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        name, _, value = part.partition("=")
        out[Atom(name.strip()).name] = TruthValue.from_label(value)
    return Valuation(out, lg.classical)
