"""Propositional formulas: representation, signatures, parsing and rendering.

Formulas are immutable trees built from three node types (:class:`Atom`,
:class:`Unary`, :class:`Binary`).  Concrete ASCII syntax::

    ~  negation            &  conjunction
    |  disjunction         -> implication (right-associative)
    #b Bochvar "meaningful" #h Hallden "meaningful"

Precedence, tightest first: ``~ #b #h``, ``&``, ``|``, ``->``.  ``&`` and
``|`` associate to the left.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Union

from .errors import FormulaSyntaxError, MeaningfulConnectiveError, SignatureError


class Conn(enum.Enum):
    NOT = "~"
    AND = "&"
    OR = "|"
    IMP = "->"
    SHARP_B = "#b"
    SHARP_H = "#h"

    @property
    def symbol(self) -> str:
        return self.value

    @property
    def arity(self) -> int:
        return 2 if self in _BINARY else 1


_BINARY = frozenset({Conn.AND, Conn.OR, Conn.IMP})
MEANINGFUL = frozenset({Conn.SHARP_B, Conn.SHARP_H})


@dataclass(frozen=True)
class Signature:
    name: str
    connectives: frozenset[Conn]

    def admits(self, f: Formula) -> bool:
        return connectives(f) <= self.connectives

    def require(self, f: Formula) -> None:
        """Raise :class:`SignatureError` naming the first offending connective."""
        extra = connectives(f) - self.connectives
        if extra:
            raise SignatureError(min(extra, key=_CONN_ORDER.index), self.name)

    def __str__(self) -> str:
        return self.name


_CONN_ORDER = list(Conn)

SIGMA0 = Signature("Sigma0", frozenset({Conn.NOT, Conn.AND, Conn.OR, Conn.IMP}))
SIGMA1 = Signature("Sigma1", frozenset({Conn.NOT, Conn.OR}))
SIGMA2 = Signature("Sigma2", frozenset({Conn.NOT, Conn.AND}))
SIGMA1H = Signature("Sigma1H", SIGMA1.connectives | {Conn.SHARP_H})
SIGMA2B = Signature("Sigma2B", SIGMA2.connectives | {Conn.SHARP_B})

SIGNATURES = {s.name.lower(): s for s in (SIGMA0, SIGMA1, SIGMA2, SIGMA1H, SIGMA2B)}


# -- formula nodes -----------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not _ATOM_RE.fullmatch(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")
        object.__setattr__(self, "_hash", hash(("atom", self.name)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Unary:
    op: Conn
    arg: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.op.arity != 1:
            raise ValueError(f"{self.op} is not a unary connective")
        object.__setattr__(self, "_hash", hash((self.op, self.arg)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Binary:
    op: Conn
    left: Formula
    right: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.op.arity != 2:
            raise ValueError(f"{self.op} is not a binary connective")
        object.__setattr__(self, "_hash", hash((self.op, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return render(self)


Formula = Union[Atom, Unary, Binary]


def atom(name: str) -> Atom:
    return Atom(name)


def neg(a: Formula) -> Unary:
    return Unary(Conn.NOT, a)


def conj(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.AND, a, b)


def disj(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.OR, a, b)


def imp(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.IMP, a, b)


def sharp_b(a: Formula) -> Unary:
    return Unary(Conn.SHARP_B, a)


def sharp_h(a: Formula) -> Unary:
    return Unary(Conn.SHARP_H, a)


# -- structural queries ------------------------------------------------------


@lru_cache(maxsize=None)
def variables(f: Formula) -> frozenset[str]:
    """Names of the atoms occurring in ``f``."""
    if isinstance(f, Atom):
        return frozenset({f.name})
    if isinstance(f, Unary):
        return variables(f.arg)
    return variables(f.left) | variables(f.right)


def variables_of(formulas: Iterable[Formula]) -> frozenset[str]:
    out: frozenset[str] = frozenset()
    for f in formulas:
        out |= variables(f)
    return out


@lru_cache(maxsize=None)
def connectives(f: Formula) -> frozenset[Conn]:
    if isinstance(f, Atom):
        return frozenset()
    if isinstance(f, Unary):
        return connectives(f.arg) | {f.op}
    return connectives(f.left) | connectives(f.right) | {f.op}


def degree(f: Formula) -> int:
    """Number of connective occurrences."""
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Unary):
        return 1 + degree(f.arg)
    return 1 + degree(f.left) + degree(f.right)


def is_atomic(f: Formula) -> bool:
    return isinstance(f, Atom)


def subformulas(f: Formula) -> Iterable[Formula]:
    yield f
    if isinstance(f, Unary):
        yield from subformulas(f.arg)
    elif isinstance(f, Binary):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


# -- expansion of derived connectives ----------------------------------------


def expand_to(f: Formula, target: Signature) -> Formula:
    """Rewrite the connectives missing from ``target`` by their definitions.

    Over Sigma1 conjunction and implication are defined from ``~`` and ``|``;
    over Sigma2 disjunction and implication are defined from ``~`` and ``&``.
    """
    if target.name not in ("Sigma1", "Sigma2"):
        raise ValueError(f"can only expand to Sigma1 or Sigma2, not {target}")
    if connectives(f) & MEANINGFUL:
        raise MeaningfulConnectiveError(
            f"{render(f)!r} contains a meaningful connective and cannot be expanded"
        )
    return _expand(f, target.name == "Sigma1")


@lru_cache(maxsize=None)
def _expand(f: Formula, to_or: bool) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, Unary):
        return neg(_expand(f.arg, to_or))
    a, b = _expand(f.left, to_or), _expand(f.right, to_or)
    if to_or:
        if f.op is Conn.AND:
            return neg(disj(neg(a), neg(b)))
        if f.op is Conn.IMP:
            return disj(neg(a), b)
        return disj(a, b)
    if f.op is Conn.OR:
        return neg(conj(neg(a), neg(b)))
    if f.op is Conn.IMP:
        return neg(conj(a, neg(b)))
    return conj(a, b)


# -- rendering ---------------------------------------------------------------

_PREC = {Conn.IMP: 1, Conn.OR: 2, Conn.AND: 3}
_ATOM_PREC = 4


def _prec(f: Formula) -> int:
    return _PREC[f.op] if isinstance(f, Binary) else _ATOM_PREC


@lru_cache(maxsize=None)
def render(f: Formula) -> str:
    """Render with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Unary):
        inner = render(f.arg)
        if isinstance(f.arg, Binary):
            inner = f"({inner})"
        sep = " " if f.op in MEANINGFUL else ""
        return f"{f.op.symbol}{sep}{inner}"
    p = _PREC[f.op]
    left, right = render(f.left), render(f.right)
    if f.op is Conn.IMP:
        left_paren = _prec(f.left) <= p
        right_paren = _prec(f.right) < p
    else:
        left_paren = _prec(f.left) < p
        right_paren = _prec(f.right) <= p
    if left_paren:
        left = f"({left})"
    if right_paren:
        right = f"({right})"
    return f"{left} {f.op.symbol} {right}"


def sort_key(f: Formula) -> str:
    return render(f)


def canonical(formulas: Iterable[Formula]) -> list[Formula]:
    """Formulas sorted by their rendered text."""
    return sorted(formulas, key=render)


# -- parsing -----------------------------------------------------------------

_ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(->)|(#[bh])|([~&|()])|([a-z][a-zA-Z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("", len(text)))
    return tokens


_UNARY_TOKENS = {"~": Conn.NOT, "#b": Conn.SHARP_B, "#h": Conn.SHARP_H}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str) -> FormulaSyntaxError:
        tok, pos = self.tokens[self.i]
        what = repr(tok) if tok else "end of input"
        return FormulaSyntaxError(f"{message}, found {what}", pos, self.text)

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            return imp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "|":
            self.take()
            f = disj(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = conj(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok in _UNARY_TOKENS:
            self.take()
            return Unary(_UNARY_TOKENS[tok], self.unary())
        if tok == "(":
            self.take()
            f = self.formula()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.take()
            return f
        if tok and _ATOM_RE.fullmatch(tok):
            self.take()
            return Atom(tok)
        raise self.error("expected a formula")


def parse(text: str, sig: Signature | None = SIGMA0) -> Formula:
    """Parse ``text``; with ``sig=None`` every connective is accepted."""
    if not text.strip():
        raise FormulaSyntaxError("empty formula", 0, text)
    p = _Parser(text)
    f = p.formula()
    if p.peek():
        raise p.error("unexpected trailing input")
    if sig is not None:
        sig.require(f)
    return f
