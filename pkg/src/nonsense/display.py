"""Human-readable renderings of proofs: an indented text tree and LaTeX."""

from __future__ import annotations

from .calculus import ProofTree
from .formula import Formula, render
from .sequent import Sequent

_LATEX = (
    ("->", r"\to "),
    ("~", r"\neg "),
    ("&", r"\land "),
    ("|", r"\lor "),
    ("#b ", r"\#_B "),
    ("#h ", r"\#_H "),
)


def proof_text(t: ProofTree, indent: str = "  ") -> str:
    """One line per node, premises indented under their conclusion."""
    lines: list[str] = []

    def go(node: ProofTree, depth: int) -> None:
        label = node.rule.value
        if node.principal is not None:
            label += f": {render(node.principal.formula)}"
        lines.append(f"{indent * depth}{node.conclusion}    [{label}]")
        for p in node.premises:
            go(p, depth + 1)

    go(t, 0)
    return "\n".join(lines)


def formula_latex(f: Formula) -> str:
    return _latex_text(render(f))


def sequent_latex(s: Sequent) -> str:
    ant, suc = s.key()
    left = ", ".join(_latex_text(x) for x in ant)
    right = ", ".join(_latex_text(x) for x in suc)
    return f"{left} \\Rightarrow {right}".strip()


def _latex_text(text: str) -> str:
    for plain, tex in _LATEX:
        text = text.replace(plain, tex)
    return " ".join(text.split())


def _rule_latex(node: ProofTree) -> str:
    name = node.rule.value.replace("_", r"\_")
    return rf"{{\scriptstyle \mathrm{{{name}}}}}"


def proof_latex(t: ProofTree) -> str:
    """Nested ``\\dfrac`` displays, premises side by side above each line."""

    def go(node: ProofTree) -> str:
        below = sequent_latex(node.conclusion)
        if node.premises:
            above = r" \qquad ".join(go(p) for p in node.premises)
        else:
            above = r"\vphantom{X}"
        return rf"\dfrac{{{above}}}{{{below}}}\,{_rule_latex(node)}"

    return rf"\[ {go(t)} \]"
