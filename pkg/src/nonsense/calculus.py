"""Sequent calculi C, C1, C2, H and B, proof trees and the proof checker.

Every rule is described by a *shape* (which connective it introduces, on which
side) plus an optional variable-containment proviso.  H is the
{~, |}-fragment of C with ``~`` on the left restricted (NegL_H); B is
the {~, &}-fragment with ``~`` on the right restricted (NegR_B).  The derived
rules of H and B (``AndL_H``, ``OrR_B``, ...) are admitted as macros and
checked against their schema; :mod:`nonsense.derived` replaces them by
primitive derivations.

Sequents are sets, so a rule instance may keep its principal formula in the
context (``~a, Γ => Δ`` with ``~a ∈ Γ``).  The checker accepts both readings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ProofFormatError, RuleNotAdmittedError, SequentError
from .formula import (
    SIGMA0,
    SIGMA1,
    SIGMA2,
    Binary,
    Conn,
    Formula,
    Signature,
    Unary,
    parse,
    render,
    variables_of,
)
from .sequent import Sequent, parse_sequent, render_sequent

__all__ = [
    "Sequent",
    "parse_sequent",
    "render_sequent",
    "Shape",
    "Rule",
    "Calculus",
    "Principal",
    "ProofTree",
    "StepError",
    "CheckReport",
    "NotApplicable",
    "premises_for",
    "rule_instances",
    "check_proof",
    "is_cut_free",
]


class Shape(enum.Enum):
    AX = "ax"
    WL = "wl"
    WR = "wr"
    CUT = "cut"
    NOT_L = "not_l"
    NOT_R = "not_r"
    AND_L = "and_l"
    AND_R = "and_r"
    OR_L = "or_l"
    OR_R = "or_r"
    IMP_L = "imp_l"
    IMP_R = "imp_r"

    @property
    def side(self) -> str | None:
        if self in (Shape.AX, Shape.CUT):
            return None
        return "ant" if self.value.endswith("l") else "suc"

    @property
    def connective(self) -> Conn | None:
        return _SHAPE_CONN.get(self)


_SHAPE_CONN = {
    Shape.NOT_L: Conn.NOT,
    Shape.NOT_R: Conn.NOT,
    Shape.AND_L: Conn.AND,
    Shape.AND_R: Conn.AND,
    Shape.OR_L: Conn.OR,
    Shape.OR_R: Conn.OR,
    Shape.IMP_L: Conn.IMP,
    Shape.IMP_R: Conn.IMP,
}

_ARITY = {
    Shape.AX: 0,
    Shape.CUT: 2,
    Shape.AND_R: 2,
    Shape.OR_L: 2,
    Shape.IMP_L: 2,
}


class Rule(enum.Enum):
    """Rule identifiers; the values are the ids used in proof JSON."""

    AX = "Ax"
    WL = "WL"
    WR = "WR"
    CUT = "Cut"
    NEG_L = "NegL"
    NEG_R = "NegR"
    AND_L = "AndL"
    AND_R = "AndR"
    OR_L = "OrL"
    OR_R = "OrR"
    IMP_L = "ImpL"
    IMP_R = "ImpR"
    NEG_L_H = "NegL_H"
    NEG_R_B = "NegR_B"
    AND_L_H = "AndL_H"
    AND_R_HM = "AndR_Hm"
    IMP_L_H = "ImpL_H"
    IMP_R_HM = "ImpR_Hm"
    OR_L_BM = "OrL_Bm"
    OR_R_B = "OrR_B"
    IMP_L_BM = "ImpL_Bm"
    IMP_R_B = "ImpR_B"

    @property
    def shape(self) -> Shape:
        return _RULE_INFO[self][0]

    @property
    def proviso(self) -> str | None:
        """Side whose variables must cover the proviso formulas, if any."""
        return _RULE_INFO[self][1]

    @property
    def is_macro(self) -> bool:
        return _RULE_INFO[self][2]

    @property
    def arity(self) -> int:
        return _ARITY.get(self.shape, 1)

    @classmethod
    def parse(cls, text: str) -> Rule:
        try:
            return cls(text)
        except ValueError:
            raise ProofFormatError(f"unknown rule id {text!r}") from None


_RULE_INFO: dict[Rule, tuple[Shape, str | None, bool]] = {
    Rule.AX: (Shape.AX, None, False),
    Rule.WL: (Shape.WL, None, False),
    Rule.WR: (Shape.WR, None, False),
    Rule.CUT: (Shape.CUT, None, False),
    Rule.NEG_L: (Shape.NOT_L, None, False),
    Rule.NEG_R: (Shape.NOT_R, None, False),
    Rule.AND_L: (Shape.AND_L, None, False),
    Rule.AND_R: (Shape.AND_R, None, False),
    Rule.OR_L: (Shape.OR_L, None, False),
    Rule.OR_R: (Shape.OR_R, None, False),
    Rule.IMP_L: (Shape.IMP_L, None, False),
    Rule.IMP_R: (Shape.IMP_R, None, False),
    Rule.NEG_L_H: (Shape.NOT_L, "suc", False),
    Rule.NEG_R_B: (Shape.NOT_R, "ant", False),
    Rule.AND_L_H: (Shape.AND_L, "suc", True),
    Rule.AND_R_HM: (Shape.AND_R, None, True),
    Rule.IMP_L_H: (Shape.IMP_L, "suc", True),
    Rule.IMP_R_HM: (Shape.IMP_R, None, True),
    Rule.OR_L_BM: (Shape.OR_L, None, True),
    Rule.OR_R_B: (Shape.OR_R, "ant", True),
    Rule.IMP_L_BM: (Shape.IMP_L, None, True),
    Rule.IMP_R_B: (Shape.IMP_R, "ant", True),
}

_STRUCTURAL = frozenset({Rule.AX, Rule.WL, Rule.WR, Rule.CUT})


class Calculus(enum.Enum):
    C = "c"
    C1 = "c1"
    C2 = "c2"
    H = "h"
    B = "b"

    @property
    def rules(self) -> frozenset[Rule]:
        return _CALCULUS_RULES[self]

    @property
    def native_signature(self) -> Signature:
        """Signature of the primitive rules."""
        return {Calculus.C: SIGMA0, Calculus.C1: SIGMA1, Calculus.C2: SIGMA2, Calculus.H: SIGMA1, Calculus.B: SIGMA2}[
            self
        ]

    @property
    def signature(self) -> Signature:
        """Signature accepted by the checker.

        H and B also accept the derived connectives, which their macro rules
        introduce; :func:`nonsense.derived.elaborate` removes them.
        """
        return SIGMA0 if self in (Calculus.H, Calculus.B) else self.native_signature

    def rule_for(self, op: Conn, side: str) -> Rule:
        """The rule of this calculus introducing ``op`` on ``side``."""
        for rule in self.rules:
            if rule.shape.connective is op and rule.shape.side == side:
                return rule
        raise RuleNotAdmittedError(f"{self.name} has no rule for {op.symbol!r} on the {side} side")

    @classmethod
    def parse(cls, text: str) -> Calculus:
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown calculus {text!r}; expected one of c, c1, c2, h, b") from None

    def __str__(self) -> str:
        return self.name


_CALCULUS_RULES = {
    Calculus.C: _STRUCTURAL
    | {Rule.NEG_L, Rule.NEG_R, Rule.AND_L, Rule.AND_R, Rule.OR_L, Rule.OR_R, Rule.IMP_L, Rule.IMP_R},
    Calculus.C1: _STRUCTURAL | {Rule.NEG_L, Rule.NEG_R, Rule.OR_L, Rule.OR_R},
    Calculus.C2: _STRUCTURAL | {Rule.NEG_L, Rule.NEG_R, Rule.AND_L, Rule.AND_R},
    Calculus.H: _STRUCTURAL
    | {Rule.NEG_L_H, Rule.NEG_R, Rule.OR_L, Rule.OR_R, Rule.AND_L_H, Rule.AND_R_HM, Rule.IMP_L_H, Rule.IMP_R_HM},
    Calculus.B: _STRUCTURAL
    | {Rule.NEG_L, Rule.NEG_R_B, Rule.AND_L, Rule.AND_R, Rule.OR_L_BM, Rule.OR_R_B, Rule.IMP_L_BM, Rule.IMP_R_B},
}


@dataclass(frozen=True)
class Principal:
    side: str | None
    formula: Formula

    def to_dict(self) -> dict:
        return {"side": self.side, "formula": render(self.formula)}

    def __str__(self) -> str:
        return render(self.formula)


def left(f: Formula) -> Principal:
    return Principal("ant", f)


def right(f: Formula) -> Principal:
    return Principal("suc", f)


# -- rule schemas ------------------------------------------------------------


class NotApplicable(Exception):
    """A rule cannot be read backwards from a conclusion."""

    def __init__(self, kind: str, detail: str):
        super().__init__(detail)
        self.kind = kind
        self.detail = detail


def schema(shape: Shape, phi: Formula, ant: frozenset, suc: frozenset) -> tuple[Sequent, list[Sequent]]:
    """Instantiate ``shape`` with principal ``phi`` and contexts ``ant``/``suc``.

    Returns ``(conclusion, premises)``.
    """
    if shape is Shape.AX:
        return Sequent([phi], [phi]), []
    if shape is Shape.CUT:
        return Sequent(ant, suc), [Sequent(ant, suc | {phi}), Sequent(ant | {phi}, suc)]
    if shape is Shape.WL:
        return Sequent(ant | {phi}, suc), [Sequent(ant, suc)]
    if shape is Shape.WR:
        return Sequent(ant, suc | {phi}), [Sequent(ant, suc)]
    if shape.side == "ant":
        conclusion = Sequent(ant | {phi}, suc)
    else:
        conclusion = Sequent(ant, suc | {phi})
    if shape is Shape.NOT_L:
        return conclusion, [Sequent(ant, suc | {phi.arg})]
    if shape is Shape.NOT_R:
        return conclusion, [Sequent(ant | {phi.arg}, suc)]
    a, b = phi.left, phi.right
    if shape is Shape.AND_L:
        return conclusion, [Sequent(ant | {a, b}, suc)]
    if shape is Shape.AND_R:
        return conclusion, [Sequent(ant, suc | {a}), Sequent(ant, suc | {b})]
    if shape is Shape.OR_L:
        return conclusion, [Sequent(ant | {a}, suc), Sequent(ant | {b}, suc)]
    if shape is Shape.OR_R:
        return conclusion, [Sequent(ant, suc | {a, b})]
    if shape is Shape.IMP_L:
        return conclusion, [Sequent(ant, suc | {a}), Sequent(ant | {b}, suc)]
    if shape is Shape.IMP_R:
        return conclusion, [Sequent(ant | {a}, suc | {b})]
    raise AssertionError(shape)


def proviso_formulas(rule: Rule, phi: Formula) -> tuple[Formula, ...]:
    if rule.shape in (Shape.NOT_L, Shape.NOT_R):
        return (phi.arg,)
    return (phi.left, phi.right)


def _check_principal(rule: Rule, conclusion: Sequent, principal: Principal | None) -> Formula:
    shape = rule.shape
    if principal is None:
        raise NotApplicable("shape-mismatch", f"{rule.value} needs a principal formula")
    phi = principal.formula
    side = shape.side
    if side is not None:
        if principal.side is not None and principal.side != side:
            raise NotApplicable("shape-mismatch", f"{rule.value} acts on the {side} side, not {principal.side}")
        if phi not in conclusion.side(side):
            raise NotApplicable("shape-mismatch", f"principal {render(phi)} does not occur in the {side}")
    op = shape.connective
    if op is not None:
        expected = Unary if op is Conn.NOT else Binary
        if not isinstance(phi, expected) or phi.op is not op:
            raise NotApplicable("shape-mismatch", f"{rule.value} needs a principal formula built with {op.symbol!r}")
    return phi


def rule_instances(
    conclusion: Sequent, rule: Rule, principal: Principal | None, calculus: Calculus
) -> list[tuple[frozenset, frozenset, list[Sequent]]]:
    """All readings of ``rule`` backwards from ``conclusion``.

    Each reading is ``(ant_context, suc_context, premises)``; the first one
    removes the principal formula from its side, the second keeps it there.

    Raises :class:`RuleNotAdmittedError` if the calculus lacks the rule and
    :class:`NotApplicable` (kind ``shape-mismatch`` or ``proviso-violated``)
    if the rule does not fit the conclusion.
    """
    if rule not in calculus.rules:
        raise RuleNotAdmittedError(f"rule {rule.value} is not a rule of {calculus.name}")
    shape = rule.shape
    if shape is Shape.AX:
        if len(conclusion.ant) == 1 and conclusion.ant == conclusion.suc:
            phi = next(iter(conclusion.ant))
            if principal is not None and principal.formula != phi:
                raise NotApplicable("bad-leaf", "axiom principal differs from its formula")
            return [(frozenset(), frozenset(), [])]
        raise NotApplicable("bad-leaf", f"{render_sequent(conclusion)} is not of the form a => a")
    phi = _check_principal(rule, conclusion, principal)
    if rule.proviso is not None:
        covered = variables_of(conclusion.side(rule.proviso))
        needed = variables_of(proviso_formulas(rule, phi))
        if not needed <= covered:
            missing = ", ".join(sorted(needed - covered))
            other = "succedent" if rule.proviso == "suc" else "antecedent"
            raise NotApplicable("proviso-violated", f"{rule.value}: variables {missing} do not occur in the {other}")
    ant, suc = conclusion.ant, conclusion.suc
    if shape is Shape.CUT:
        contexts = [(ant, suc)]
    elif shape.side == "ant":
        contexts = [(ant - {phi}, suc), (ant, suc)]
    else:
        contexts = [(ant, suc - {phi}), (ant, suc)]
    out = []
    for ca, cs in contexts:
        try:
            _, premises = schema(shape, phi, ca, cs)
        except SequentError:
            continue
        out.append((ca, cs, premises))
    if not out:
        raise NotApplicable("shape-mismatch", f"{rule.value} would leave an empty premise sequent")
    return out


def premises_for(
    conclusion: Sequent, rule: Rule, principal: Principal | Formula | None, calculus: Calculus
) -> list[Sequent] | None:
    """Premises of ``rule`` read backwards, or None if it does not apply."""
    if principal is not None and not isinstance(principal, Principal):
        principal = Principal(rule.shape.side, principal)
    try:
        return rule_instances(conclusion, rule, principal, calculus)[0][2]
    except NotApplicable:
        return None


# -- proof trees ---------------------------------------------------------------


@dataclass(frozen=True)
class ProofTree:
    conclusion: Sequent
    rule: Rule
    principal: Principal | None = None
    premises: tuple[ProofTree, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    def nodes(self, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], ProofTree]]:
        """Pre-order traversal yielding ``(path, node)``."""
        stack = [(path, self)]
        while stack:
            p, node = stack.pop()
            yield p, node
            for i in reversed(range(len(node.premises))):
                stack.append((p + (i,), node.premises[i]))

    def at(self, path: Sequence[int]) -> ProofTree:
        node = self
        for i in path:
            node = node.premises[i]
        return node

    def replace(self, path: Sequence[int], new: ProofTree) -> ProofTree:
        if not path:
            return new
        i = path[0]
        kids = list(self.premises)
        kids[i] = kids[i].replace(path[1:], new)
        return ProofTree(self.conclusion, self.rule, self.principal, tuple(kids))

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)

    def rules_used(self) -> set[Rule]:
        return {node.rule for _, node in self.nodes()}

    def formulas(self) -> set[Formula]:
        out: set[Formula] = set()
        for _, node in self.nodes():
            out |= node.conclusion.formulas
        return out

    def variables(self) -> frozenset[str]:
        return variables_of(self.formulas())

    def to_dict(self) -> dict:
        return {
            "sequent": self.conclusion.to_dict(),
            "rule": self.rule.value,
            "principal": None if self.principal is None else self.principal.to_dict(),
            "premises": [p.to_dict() for p in self.premises],
        }

    @classmethod
    def from_dict(cls, data: dict) -> ProofTree:
        try:
            seq = Sequent.from_dict(data["sequent"], None)
            rule = Rule.parse(data["rule"])
            raw = data.get("principal")
            principal = None
            if raw is not None:
                side = raw.get("side")
                if side not in ("ant", "suc", None):
                    raise ProofFormatError(f"bad principal side {side!r}")
                principal = Principal(side, parse(raw["formula"], None))
            premises = tuple(cls.from_dict(p) for p in data.get("premises", []))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ProofFormatError(f"malformed proof node: {exc}") from exc
        return cls(seq, rule, principal, premises)


def is_cut_free(t: ProofTree) -> bool:
    return all(node.rule is not Rule.CUT for _, node in t.nodes())


# -- checking ------------------------------------------------------------------

ERROR_KINDS = (
    "shape-mismatch",
    "proviso-violated",
    "signature-violation",
    "cut-forbidden",
    "bad-leaf",
    "rule-not-admitted",
)


@dataclass(frozen=True)
class StepError:
    path: tuple[int, ...]
    kind: str
    detail: str

    def to_dict(self) -> dict:
        return {"path": list(self.path), "kind": self.kind, "detail": self.detail}

    def __str__(self) -> str:
        where = "root" if not self.path else "root/" + "/".join(map(str, self.path))
        return f"{where}: {self.kind}: {self.detail}"


@dataclass(frozen=True)
class CheckReport:
    errors: tuple[StepError, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> set[str]:
        return {e.kind for e in self.errors}

    def to_dict(self) -> dict:
        return {"status": "ok" if self.ok else "failed", "errors": [e.to_dict() for e in self.errors]}


def _premise_key(s: Sequent):
    return s.key()


def check_node(node: ProofTree, calculus: Calculus, require_cut_free: bool = False) -> list[tuple[str, str]]:
    """Errors ``(kind, detail)`` of a single inference step."""
    errors = []
    sig = calculus.signature
    for f in node.conclusion.formulas | ({node.principal.formula} if node.principal else set()):
        if not sig.admits(f):
            errors.append(("signature-violation", f"{render(f)} is not a {sig.name} formula"))
            break
    if node.rule not in calculus.rules:
        errors.append(("rule-not-admitted", f"rule {node.rule.value} is not a rule of {calculus.name}"))
        return errors
    if node.rule is Rule.CUT and require_cut_free:
        errors.append(("cut-forbidden", "cut-free proof required"))
    if len(node.premises) != node.rule.arity:
        kind = "bad-leaf" if node.rule is Rule.AX else "shape-mismatch"
        errors.append((kind, f"{node.rule.value} takes {node.rule.arity} premises, got {len(node.premises)}"))
        return errors
    try:
        readings = rule_instances(node.conclusion, node.rule, node.principal, calculus)
    except NotApplicable as exc:
        errors.append((exc.kind, exc.detail))
        return errors
    actual = sorted((p.conclusion for p in node.premises), key=_premise_key)
    for _, _, expected in readings:
        if sorted(expected, key=_premise_key) == actual:
            break
    else:
        want = " ; ".join(render_sequent(s) for s in readings[0][2])
        got = " ; ".join(render_sequent(s) for s in actual)
        errors.append(("shape-mismatch", f"{node.rule.value} expects premises [{want}], got [{got}]"))
    return errors


def check_proof(t: ProofTree, calculus: Calculus | str, require_cut_free: bool = False) -> CheckReport:
    if isinstance(calculus, str):
        calculus = Calculus.parse(calculus)
    errors = []
    for path, node in t.nodes():
        for kind, detail in check_node(node, calculus, require_cut_free):
            errors.append(StepError(path, kind, detail))
    return CheckReport(tuple(errors))


def matching_context(node: ProofTree, calculus: Calculus) -> tuple[frozenset, frozenset]:
    """Contexts ``(Γ, Δ)`` of the reading of ``node`` that its premises match."""
    actual = sorted((p.conclusion for p in node.premises), key=_premise_key)
    for ca, cs, expected in rule_instances(node.conclusion, node.rule, node.principal, calculus):
        if sorted(expected, key=_premise_key) == actual:
            return ca, cs
    raise NotApplicable("shape-mismatch", f"premises of {node.rule.value} do not match")


def step(rule: Rule, phi: Formula, ant: Iterable[Formula], suc: Iterable[Formula], premises: Sequence[ProofTree]) -> ProofTree:
    """Build a node forwards from explicit contexts, checking its premises."""
    conclusion, expected = schema(rule.shape, phi, frozenset(ant), frozenset(suc))
    got = [p.conclusion for p in premises]
    if sorted(expected, key=_premise_key) != sorted(got, key=_premise_key):
        raise ValueError(
            f"{rule.value}: premises [{' ; '.join(map(render_sequent, got))}] do not fit "
            f"[{' ; '.join(map(render_sequent, expected))}]"
        )
    side = rule.shape.side
    return ProofTree(conclusion, rule, Principal(side, phi), tuple(premises))


def axiom(phi: Formula) -> ProofTree:
    return ProofTree(Sequent([phi], [phi]), Rule.AX, None)

