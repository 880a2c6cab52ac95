"""Sequents: pairs of finite formula sets, written ``Γ => Δ``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import SequentError
from .formula import Formula, Signature, canonical, expand_to, parse, render, variables_of


@dataclass(frozen=True)
class Sequent:
    ant: frozenset[Formula]
    suc: frozenset[Formula]
    _hash: int = field(init=False, repr=False, compare=False)

    def __init__(self, ant: Iterable[Formula] = (), suc: Iterable[Formula] = ()):
        object.__setattr__(self, "ant", frozenset(ant))
        object.__setattr__(self, "suc", frozenset(suc))
        if not self.ant and not self.suc:
            raise SequentError("a sequent cannot have both sides empty")
        object.__setattr__(self, "_hash", hash((self.ant, self.suc)))

    def __hash__(self) -> int:
        return self._hash

    def side(self, name: str) -> frozenset[Formula]:
        if name == "ant":
            return self.ant
        if name == "suc":
            return self.suc
        raise ValueError(f"unknown side {name!r}")

    @property
    def formulas(self) -> frozenset[Formula]:
        return self.ant | self.suc

    def variables(self) -> frozenset[str]:
        return variables_of(self.formulas)

    def admitted_by(self, sig: Signature) -> bool:
        return all(sig.admits(f) for f in self.formulas)

    def expand(self, target: Signature) -> Sequent:
        return Sequent(
            (expand_to(f, target) for f in self.ant),
            (expand_to(f, target) for f in self.suc),
        )

    def key(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """Canonical ordering key (sides sorted by rendered text)."""
        return (
            tuple(render(f) for f in canonical(self.ant)),
            tuple(render(f) for f in canonical(self.suc)),
        )

    def __str__(self) -> str:
        return render_sequent(self)

    def to_dict(self) -> dict:
        ant, suc = self.key()
        return {"ant": list(ant), "suc": list(suc)}

    @classmethod
    def from_dict(cls, data: dict, sig: Signature | None = None) -> Sequent:
        return cls(
            (parse(s, sig) for s in data.get("ant", [])),
            (parse(s, sig) for s in data.get("suc", [])),
        )


def render_sequent(s: Sequent) -> str:
    ant, suc = s.key()
    left = ", ".join(ant)
    right = ", ".join(suc)
    return f"{left} => {right}".strip()


def parse_sequent(text: str, sig: Signature | None = None) -> Sequent:
    """Parse ``"p, ~q => r | s"``; either side may be blank."""
    if text.count("=>") != 1:
        raise SequentError(f"expected exactly one '=>' in {text!r}")
    left, right = text.split("=>")
    return Sequent(_parse_side(left, sig), _parse_side(right, sig))


def _parse_side(text: str, sig: Signature | None) -> list[Formula]:
    if not text.strip():
        return []
    return [parse(part, sig) for part in text.split(",")]
