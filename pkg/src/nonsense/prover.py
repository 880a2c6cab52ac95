"""Cut-free proof search for C, H and B.

Classical search reduces a sequent backwards with the invertible rules of
C (or one of its fragments) until only atoms remain.  Proofs in H and B
are obtained from classical ones as in the completeness argument:

1. decide validity in H3 (B3) by brute force, returning a countermodel if
   there is one;
2. drop the antecedent (succedent) formulas whose variables are not covered
   by the other side;
3. prove the pruned sequent classically;
4. if that proof is not already an H (B) proof, add the whole succedent
   (antecedent) to every node, which makes every restricted step legal;
5. weaken the dropped formulas back in at the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .calculus import Calculus, Principal, ProofTree, Rule, axiom, check_proof, premises_for, step
from .errors import CompletenessViolation, PreconditionError
from .formula import SIGMA0, Atom, Formula, canonical, render, variables, variables_of
from .semantics import B3, CPL, H3, ONE, ZERO, Countermodel, Valuation, countermodel
from .sequent import Sequent

_CLASSICAL = (Calculus.C, Calculus.C1, Calculus.C2)

_TO_H = {
    Rule.NEG_L: Rule.NEG_L_H,
    Rule.AND_L: Rule.AND_L_H,
    Rule.AND_R: Rule.AND_R_HM,
    Rule.IMP_L: Rule.IMP_L_H,
    Rule.IMP_R: Rule.IMP_R_HM,
}
_TO_B = {
    Rule.NEG_R: Rule.NEG_R_B,
    Rule.OR_L: Rule.OR_L_BM,
    Rule.OR_R: Rule.OR_R_B,
    Rule.IMP_L: Rule.IMP_L_BM,
    Rule.IMP_R: Rule.IMP_R_B,
}


@dataclass(frozen=True)
class Refutation:
    """Classical search stopped at an atomic sequent sharing no atom."""

    sequent: Sequent
    stuck: Sequent
    countermodel: Countermodel


def prove_classical(s: Sequent, fragment: Calculus = Calculus.C) -> ProofTree | Refutation:
    if fragment not in _CLASSICAL:
        raise ValueError(f"classical search runs in C, C1 or C2, not {fragment}")
    sig = fragment.native_signature
    for f in canonical(s.formulas):
        sig.require(f)
    result = _search(s, fragment)
    if isinstance(result, ProofTree):
        return result
    atoms = s.variables()
    true_atoms = {f.name for f in result.ant}
    v = Valuation({a: ONE if a in true_atoms else ZERO for a in atoms}, classical=True)
    return Refutation(s, result, Countermodel(v, s, CPL.id))


def _search(s: Sequent, calc: Calculus) -> ProofTree | Sequent:
    for side in ("ant", "suc"):
        for f in canonical(s.side(side)):
            if isinstance(f, Atom):
                continue
            rule = calc.rule_for(f.op, side)
            principal = Principal(side, f)
            kids = []
            for premise in premises_for(s, rule, principal, calc):
                sub = _search(premise, calc)
                if isinstance(sub, Sequent):
                    return sub
                kids.append(sub)
            return ProofTree(s, rule, principal, tuple(kids))
    shared = s.ant & s.suc
    if not shared:
        return s
    return weaken_to(axiom(min(shared, key=render)), s)


def weaken_to(t: ProofTree, target: Sequent) -> ProofTree:
    """Extend ``t`` downwards by WL then WR steps, in canonical order, to ``target``."""
    s = t.conclusion
    if not (s.ant <= target.ant and s.suc <= target.suc):
        raise PreconditionError("cannot weaken to a smaller sequent")
    for f in canonical(target.ant - s.ant):
        t = step(Rule.WL, f, t.conclusion.ant, t.conclusion.suc, [t])
    for f in canonical(target.suc - s.suc):
        t = step(Rule.WR, f, t.conclusion.ant, t.conclusion.suc, [t])
    return t


# -- pruning and widening ----------------------------------------------------


def prune_antecedent(gamma: Iterable[Formula], delta: Iterable[Formula]) -> frozenset[Formula]:
    """Antecedent formulas whose variables all occur in ``delta``."""
    covered = variables_of(delta)
    return frozenset(g for g in gamma if variables(g) <= covered)


def prune_succedent(gamma: Iterable[Formula], delta: Iterable[Formula]) -> frozenset[Formula]:
    """Succedent formulas whose variables all occur in ``gamma``."""
    covered = variables_of(gamma)
    return frozenset(d for d in delta if variables(d) <= covered)


def widen_succedent(t: ProofTree, delta: Iterable[Formula]) -> ProofTree:
    """Add ``delta`` to every succedent of a cut-free classical proof,
    turning it into an H proof."""
    delta = frozenset(delta)
    _require_covered(t, delta)
    return _widen(t, delta, "suc", _TO_H)


def widen_antecedent(t: ProofTree, gamma: Iterable[Formula]) -> ProofTree:
    """Add ``gamma`` to every antecedent of a cut-free classical proof,
    turning it into a B proof."""
    gamma = frozenset(gamma)
    _require_covered(t, gamma)
    return _widen(t, gamma, "ant", _TO_B)


def _require_covered(t: ProofTree, extra: frozenset[Formula]) -> None:
    stray = t.variables() - variables_of(extra)
    if stray:
        raise PreconditionError(f"atoms {sorted(stray)} of the proof do not occur in the added formulas")
    if any(node.rule is Rule.CUT for _, node in t.nodes()):
        raise PreconditionError("widening needs a cut-free proof")


def _widen(node: ProofTree, extra: frozenset, side: str, relabel: dict) -> ProofTree:
    weakening = Rule.WR if side == "suc" else Rule.WL
    if node.rule is Rule.AX:
        s = node.conclusion
        target = Sequent(s.ant, s.suc | extra) if side == "suc" else Sequent(s.ant | extra, s.suc)
        return weaken_to(node, target)
    if node.rule is weakening and node.principal.formula in extra:
        return _widen(node.premises[0], extra, side, relabel)
    s = node.conclusion
    conclusion = Sequent(s.ant, s.suc | extra) if side == "suc" else Sequent(s.ant | extra, s.suc)
    kids = tuple(_widen(p, extra, side, relabel) for p in node.premises)
    return ProofTree(conclusion, relabel.get(node.rule, node.rule), node.principal, kids)


def relabel(t: ProofTree, calculus: Calculus) -> ProofTree:
    """Rename classical rules to their H or B counterparts without changing sequents."""
    mapping = _TO_H if calculus is Calculus.H else _TO_B
    kids = tuple(relabel(p, calculus) for p in t.premises)
    return ProofTree(t.conclusion, mapping.get(t.rule, t.rule), t.principal, kids)


# -- H and B -------------------------------------------------------------------


def prove(
    s: Sequent, calculus: Calculus | str, *, derived: bool = False, cap: int | None = None
) -> ProofTree | Countermodel:
    """Cut-free proof of ``s`` in H or B, or a 3-valued countermodel.

    With ``derived=True`` the sequent may use all of ``~ & | ->`` and the
    proof uses the derived rules for the defined connectives.
    """
    if isinstance(calculus, str):
        calculus = Calculus.parse(calculus)
    if calculus not in (Calculus.H, Calculus.B):
        raise ValueError(f"prove works in H or B, not {calculus}")
    sig = SIGMA0 if derived else calculus.native_signature
    for f in canonical(s.formulas):
        sig.require(f)
    fragment = Calculus.C if derived else (Calculus.C1 if calculus is Calculus.H else Calculus.C2)

    if calculus is Calculus.H:
        cm = countermodel(s, H3, cap)
        if cm is not None:
            return cm
        core = Sequent(prune_antecedent(s.ant, s.suc), s.suc)
    else:
        cm = countermodel(s, B3, cap)
        if cm is not None:
            return cm
        core = Sequent(s.ant, prune_succedent(s.ant, s.suc))

    t = prove_classical(core, fragment)
    if isinstance(t, Refutation):
        raise CompletenessViolation(f"{s} is valid but its pruned core {core} has no classical proof")
    direct = relabel(t, calculus)
    if check_proof(direct, calculus).ok:
        t = direct
    elif calculus is Calculus.H:
        t = widen_succedent(t, core.suc)
    else:
        t = widen_antecedent(t, core.ant)
    return weaken_to(t, s)
