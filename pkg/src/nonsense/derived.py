"""Elaboration of derived rules into primitive derivations.

In H, conjunction and implication abbreviate ``~(~a | ~b)`` and ``~a | b``;
in B, disjunction and implication abbreviate ``~(~a & ~b)`` and
``~(a & ~b)``.  :func:`elaborate` rewrites every formula of a proof by these
definitions and replaces each macro step by a fixed derivation built from the
primitive rules of the calculus.
"""

from __future__ import annotations

from .calculus import Calculus, ProofTree, Rule, matching_context, step
from .errors import ElaborationError
from .formula import Formula, conj, disj, expand_to, neg


def elaborate(t: ProofTree, calculus: Calculus | str) -> ProofTree:
    """Replace macro steps by primitive ones; the root is expanded to the
    calculus's native signature."""
    if isinstance(calculus, str):
        calculus = Calculus.parse(calculus)
    if calculus not in (Calculus.H, Calculus.B):
        return t
    target = calculus.native_signature
    cache: dict[int, ProofTree] = {}

    def exp(f: Formula) -> Formula:
        return expand_to(f, target)

    def exp_set(fs) -> frozenset:
        return frozenset(exp(f) for f in fs)

    def go(node: ProofTree) -> ProofTree:
        key = id(node)
        if key in cache:
            return cache[key]
        kids = [go(p) for p in node.premises]
        if node.rule.is_macro:
            ctx_ant, ctx_suc = matching_context(node, calculus)
            phi = node.principal.formula
            a, b = exp(phi.left), exp(phi.right)
            builder = _BUILDERS[node.rule]
            try:
                out = builder(a, b, exp_set(ctx_ant), exp_set(ctx_suc), kids)
            except ValueError as exc:
                raise ElaborationError(f"cannot elaborate {node.rule.value}: {exc}") from exc
        elif node.rule is Rule.AX:
            out = ProofTree(node.conclusion.expand(target), Rule.AX, None)
        else:
            principal = node.principal
            if principal is not None:
                principal = type(principal)(principal.side, exp(principal.formula))
            out = ProofTree(node.conclusion.expand(target), node.rule, principal, tuple(kids))
        cache[key] = out
        return out

    return go(t)


# Each builder receives the expanded immediate subformulas ``a``, ``b``, the
# expanded contexts Γ (antecedent) and Δ (succedent) of the macro instance,
# and the already elaborated premises.


def _and_l_h(a, b, G, D, kids):
    # a, b, Γ => Δ  ~>  Γ => Δ, ~a, ~b  ~>  Γ => Δ, ~a | ~b  ~>  ~(~a | ~b), Γ => Δ
    (top,) = kids
    if a != b:
        top = step(Rule.NEG_R, neg(b), G | {a}, D, [top])
        top = step(Rule.NEG_R, neg(a), G, D | {neg(b)}, [top])
    else:
        top = step(Rule.NEG_R, neg(a), G, D, [top])
    inner = disj(neg(a), neg(b))
    top = step(Rule.OR_R, inner, G, D, [top])
    return step(Rule.NEG_L_H, neg(inner), G, D, [top])


def _and_r_h(a, b, G, D, kids):
    inner = disj(neg(a), neg(b))
    psi = neg(inner)
    d_psi = D | {psi}
    branches = []
    for x, kid in zip((a, b), kids):
        w = step(Rule.WR, psi, G, D | {x}, [kid])
        branches.append(step(Rule.NEG_L_H, neg(x), G, d_psi, [w]))
    o = step(Rule.OR_L, inner, G, d_psi, branches)
    return step(Rule.NEG_R, psi, G, d_psi, [o])


def _imp_l_h(a, b, G, D, kids):
    first, second = kids
    left_branch = step(Rule.NEG_L_H, neg(a), G, D, [first])
    return step(Rule.OR_L, disj(neg(a), b), G, D, [left_branch, second])


def _imp_r_h(a, b, G, D, kids):
    (top,) = kids
    n = step(Rule.NEG_R, neg(a), G, D | {b}, [top])
    return step(Rule.OR_R, disj(neg(a), b), G, D, [n])


def _or_l_b(a, b, G, D, kids):
    inner = conj(neg(a), neg(b))
    psi = neg(inner)
    g_psi = G | {psi}
    branches = []
    for x, kid in zip((a, b), kids):
        w = step(Rule.WL, psi, G | {x}, D, [kid])
        branches.append(step(Rule.NEG_R_B, neg(x), g_psi, D, [w]))
    c = step(Rule.AND_R, inner, g_psi, D, branches)
    return step(Rule.NEG_L, psi, g_psi, D, [c])


def _or_r_b(a, b, G, D, kids):
    (top,) = kids
    if a != b:
        top = step(Rule.NEG_L, neg(b), G, D | {a}, [top])
        top = step(Rule.NEG_L, neg(a), G | {neg(b)}, D, [top])
    else:
        top = step(Rule.NEG_L, neg(a), G, D, [top])
    inner = conj(neg(a), neg(b))
    top = step(Rule.AND_L, inner, G, D, [top])
    return step(Rule.NEG_R_B, neg(inner), G, D, [top])


def _imp_l_b(a, b, G, D, kids):
    first, second = kids
    inner = conj(a, neg(b))
    psi = neg(inner)
    g_psi = G | {psi}
    w1 = step(Rule.WL, psi, G, D | {a}, [first])
    w2 = step(Rule.WL, psi, G | {b}, D, [second])
    r = step(Rule.NEG_R_B, neg(b), g_psi, D, [w2])
    c = step(Rule.AND_R, inner, g_psi, D, [w1, r])
    return step(Rule.NEG_L, psi, g_psi, D, [c])


def _imp_r_b(a, b, G, D, kids):
    (top,) = kids
    inner = conj(a, neg(b))
    n1 = step(Rule.NEG_L, neg(b), G | {a}, D, [top])
    n2 = step(Rule.AND_L, inner, G, D, [n1])
    return step(Rule.NEG_R_B, neg(inner), G, D, [n2])


_BUILDERS = {
    Rule.AND_L_H: _and_l_h,
    Rule.AND_R_HM: _and_r_h,
    Rule.IMP_L_H: _imp_l_h,
    Rule.IMP_R_HM: _imp_r_h,
    Rule.OR_L_BM: _or_l_b,
    Rule.OR_R_B: _or_r_b,
    Rule.IMP_L_BM: _imp_l_b,
    Rule.IMP_R_B: _imp_r_b,
}


def has_macros(t: ProofTree) -> bool:
    return any(node.rule.is_macro for _, node in t.nodes())
